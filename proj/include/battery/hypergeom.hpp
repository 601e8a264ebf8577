#pragma once

// Exact evaluation of terminating hypergeometric series and the nested
// (multiple) series built from them, plus the integer-parameter Gauss sum and
// the three-term contiguous relation used to reduce 3F2(a, b, -c; 1, -e; 1)
// to closed form.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "battery/exact_arith.hpp"

namespace battery {

class HypergeometricError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// No numerator is a non-positive integer, so the series does not stop.
class NonTerminatingSeries : public HypergeometricError {
public:
    using HypergeometricError::HypergeometricError;
};

// A denominator factor (b + n) vanished before the series terminated.
class ZeroDenominator : public HypergeometricError {
public:
    using HypergeometricError::HypergeometricError;
};

// pFq(numerators; denominators; z). Parameter order within each list is
// immaterial.
struct PFQParams {
    std::vector<Integer> numerators;
    std::vector<Integer> denominators;
    Rational z{1};

    std::string str() const;
};

// Smallest |a| over the non-positive integer numerators; empty if none.
std::optional<std::uint64_t> termination_index(std::span<const Integer> numerators);

// Sum of terms 0..N, with term(n+1) = term(n) * prod(a+n) / prod(b+n) * z / (n+1).
// Throws NonTerminatingSeries or ZeroDenominator.
Rational eval_pfq(const PFQParams& params);

// 2F1(-a, b; -c; 1) = C(c+b, a) / C(c, a) for b >= 1 and 0 <= a <= c.
Rational gauss_2f1_neg(std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct ContiguousDecomposition {
    Rational coefficient1;
    PFQParams params1;
    Rational coefficient2;
    PFQParams params2;

    // coefficient1 * value(params1) + coefficient2 * value(params2). A zero
    // coefficient contributes nothing and its series is not evaluated.
    Rational value() const;
};

// 3F2(a, b, -c; d, -e; 1)
//   = -c(e+a)/(de) 3F2(a, b+1, -c+1; d+1, -e+1; 1)
//     + (d+c)/d    3F2(a, b+1, -c;   d+1, -e;   1)
// for a >= 0, b >= -1, d >= 1, 0 <= c <= e. When c = 0 the first coefficient
// is zero and its (then non-terminating) series is carried but never summed.
ContiguousDecomposition contiguous_step(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                                        const Integer& e);

PFQParams make_3f2(const Integer& a, const Integer& b, const Integer& c, const Integer& d, const Integer& e);

// Closed evaluation of 3F2(a, b, -c; 1, -e; 1) for a >= 1, b >= 0,
// 0 <= c <= e: apply the contiguous relation until the lower parameter d
// reaches a, cancel a against d, and close each resulting 2F1 with the Gauss
// sum.
Rational reduce_3f2(const Integer& a, const Integer& b, const Integer& c, const Integer& e);

// constant + sum_j coefficients[j] * outer[j], where outer holds the
// summation indices of the enclosing levels.
struct AffineParam {
    Integer constant;
    std::vector<Integer> coefficients;

    AffineParam(Integer constant_ = 0, std::vector<Integer> coefficients_ = {})
        : constant(std::move(constant_)), coefficients(std::move(coefficients_)) {}

    Integer at(std::span<const std::uint64_t> outer) const;
};

struct SeriesLevel {
    std::vector<AffineParam> numerators;
    std::vector<AffineParam> denominators;
    Rational z{1};
};

// Nested sum over m0 >= m1 >= ... of
//   prod_i prod(a_i)_{m_i} / prod(b_i)_{m_i} * z_i^{m_i} / m_i!,
// where level i's parameters may depend on m0..m_{i-1}. Level 0 must
// terminate; every deeper level i runs over 0..m_{i-1}, stopping early at its
// own termination index.
struct MultiPFQSpec {
    std::vector<SeriesLevel> levels;
};

Rational eval_multi_pfq(const MultiPFQSpec& spec);

}  // namespace battery

#pragma once

// Counting standard Young tableaux of battery shapes [(m^n), a, k]: a column
// of a cells stacked above column k of an n-row rectangle of width m.
//
// Three independent routes are provided:
//   * hypergeometric: f^(m^n) times a (multiple) terminating series, k = 2..6;
//   * general: direct summation over the cells smaller than the pivot (the
//     lowest battery cell), valid for any 1 <= k <= m;
//   * closed forms: rational expressions for special parameter families.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "battery/exact_arith.hpp"
#include "battery/hypergeom.hpp"
#include "battery/shapes.hpp"

namespace battery {

// A count that should be an integer came out fractional.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Throws IntegralityError (naming `what`) unless x is a non-negative integer.
Natural to_natural_checked(const Rational& x, std::string_view what);

// Column heights t1 >= t2 >= ... of the rectangle cells smaller than the pivot.
struct BulletProfile {
    std::vector<unsigned> heights;

    unsigned total() const;
    // The bullet cells as a partition (the conjugate of the heights).
    Partition shape() const;
};

// All weakly decreasing height tuples of length `columns` with entries <= n.
std::vector<BulletProfile> bullet_profiles(unsigned n, unsigned columns);

// f^(m^n) * 3F2(a, m, -n; 1, -mn; 1). Requires m >= 2.
Natural count_k2(unsigned m, unsigned n, unsigned a);

// Level `level` (0-based) of the nested series for [(m^n), a, k]; the series
// for column k uses levels 0..k-2. Defined for level <= 4.
SeriesLevel battery_series_level(unsigned level, unsigned m, unsigned n, unsigned a);
MultiPFQSpec battery_series(unsigned k, unsigned m, unsigned n, unsigned a);

// f^(m^n) * eval_multi_pfq(battery_series(k, ...)). Require m >= k.
Natural count_k3(unsigned m, unsigned n, unsigned a);
Natural count_k4(unsigned m, unsigned n, unsigned a);
Natural count_k5(unsigned m, unsigned n, unsigned a);
Natural count_k6(unsigned m, unsigned n, unsigned a);

// Dispatches to count_k2..count_k6.
Natural count_hyper(unsigned m, unsigned n, unsigned a, unsigned k);

// sum over bullet profiles mu with at most k-1 columns of
//   C(a + |mu| - 1, |mu|) * f^mu * f^(rotated complement of mu in (m^n)).
// Requires 1 <= k <= m and n >= 1.
Natural count_general(unsigned m, unsigned n, unsigned a, unsigned k);

enum class ClosedFormCase {
    A1K2,  // [(m^n), 1, 2]
    A2K2,  // [(m^n), 2, 2]
    A3K2,  // [(m^n), 3, 2]
    M3K2,  // [(3^n), a, 2]
    M4K2,  // [(4^n), a, 2]
    N2K2,  // [(m^2), a, 2]
    N3K2,  // [(m^3), a, 2]
    N2K3,  // [(m^2), a, 3]
    N3K3,  // [(m^3), a, 3]
    N2K4,  // [(m^2), a, 4]
    N2K5,  // [(m^2), a, 5]
};

inline constexpr ClosedFormCase kAllClosedForms[] = {
    ClosedFormCase::A1K2, ClosedFormCase::A2K2, ClosedFormCase::A3K2, ClosedFormCase::M3K2,
    ClosedFormCase::M4K2, ClosedFormCase::N2K2, ClosedFormCase::N3K2, ClosedFormCase::N2K3,
    ClosedFormCase::N3K3, ClosedFormCase::N2K4, ClosedFormCase::N2K5,
};

std::string_view closed_form_name(ClosedFormCase c);
// Throws std::invalid_argument for an unknown name.
ClosedFormCase closed_form_from_name(std::string_view name);

// Whether the case's family contains [(m^n), a, k] and its formula is
// defined there.
bool closed_form_applies(ClosedFormCase c, unsigned m, unsigned n, unsigned a, unsigned k);

// First catalog case covering the shape, if any.
std::optional<ClosedFormCase> match_closed_form(unsigned m, unsigned n, unsigned a, unsigned k);

// Evaluates the case at [(m^n), a, k]. Parameters the family fixes must still
// be passed and must match; throws std::invalid_argument otherwise.
Natural closed_form(ClosedFormCase c, unsigned m, unsigned n, unsigned a, unsigned k);

}  // namespace battery

#pragma once

// Exact integers, rationals, and the combinatorial primitives used by every
// counting path: rising factorials, generalized binomials, factorials, and
// prime factorization of (large) counts.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace battery {

// Signed arbitrary-precision integer. Hypergeometric parameters live here.
using Integer = mpz_class;

// Arbitrary-precision integer that is never negative.
class Natural {
public:
    Natural() = default;
    Natural(unsigned long v) : value_(v) {}
    explicit Natural(Integer v);

    // Decimal digits only; throws std::invalid_argument otherwise.
    static Natural parse(std::string_view digits);

    const Integer& value() const { return value_; }
    std::string str() const { return value_.get_str(); }
    bool is_zero() const { return value_ == 0; }

    // Throws std::overflow_error when the value does not fit.
    std::uint64_t to_u64() const;

    friend Natural operator+(const Natural& x, const Natural& y) { return Natural(Integer(x.value_ + y.value_)); }
    friend Natural operator*(const Natural& x, const Natural& y) { return Natural(Integer(x.value_ * y.value_)); }
    Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
    Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Natural& x, const Natural& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const Natural& x, const Natural& y) {
        int c = cmp(x.value_, y.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    Integer value_{0};
};

// Exact fraction kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Natural& v) : value_(v.value()) {}
    // Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    std::string str() const { return value_.get_str(); }

    Rational operator-() const { return from_mpq(-value_); }
    friend Rational operator+(const Rational& x, const Rational& y) { return from_mpq(x.value_ + y.value_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return from_mpq(x.value_ - y.value_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return from_mpq(x.value_ * y.value_); }
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.value_ < y.value_; }

private:
    static Rational from_mpq(mpq_class v) { Rational r; r.value_ = std::move(v); return r; }

    mpq_class value_{0};
};

// Rising factorial x(x+1)...(x+n-1); 1 when n = 0.
Integer pochhammer(const Integer& x, std::uint64_t n);

// Generalized binomial x(x-1)...(x-k+1)/k!, defined for every integer x.
Integer binomial(const Integer& x, std::uint64_t k);

Natural factorial(std::uint64_t n);

struct PrimePower {
    Natural prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, every exponent >= 1.
struct Factorization {
    std::vector<PrimePower> factors;

    Natural product() const;
    // "2^5*3^2*11"; exponents of 1 are omitted; the empty product renders as "1".
    std::string str() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Miller-Rabin over the first thirteen prime bases. Deterministic below
// 3.3e24; a strong probable-prime test above that.
bool is_prime(const Natural& n);

// Trial division by 2, 3 and a 6k+-1 wheel, then Pollard-Brent on any
// composite cofactor left above the trial bound. Rejects n = 0.
Factorization factorize(const Natural& n);

}  // namespace battery

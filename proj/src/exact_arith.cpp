#include "battery/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace battery {

Natural::Natural(Integer v) : value_(std::move(v)) {
    if (sgn(value_) < 0)
        throw std::domain_error("Natural: negative value " + value_.get_str());
}

Natural Natural::parse(std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("Natural: not a decimal number: '" + std::string(digits) + "'");
    return Natural(Integer(std::string(digits), 10));
}

std::uint64_t Natural::to_u64() const {
    if (mpz_sizeinbase(value_.get_mpz_t(), 2) > 64)
        throw std::overflow_error("Natural: value exceeds 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero())
        throw std::domain_error("Rational: division by zero");
    return Rational::from_mpq(x.value_ / y.value_);
}

Integer pochhammer(const Integer& x, std::uint64_t n) {
    Integer out = 1;
    Integer factor = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        out *= factor;
        if (out == 0)
            break;
        ++factor;
    }
    return out;
}

Integer binomial(const Integer& x, std::uint64_t k) {
    // C(x, i+1) = C(x, i) * (x - i) / (i + 1), and every C(x, i) is integral.
    Integer out = 1;
    Integer factor = x;
    for (std::uint64_t i = 0; i < k; ++i) {
        out *= factor;
        mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i + 1));
        if (out == 0)
            break;
        --factor;
    }
    return out;
}

Natural factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Natural(std::move(out));
}

Natural Factorization::product() const {
    Integer out = 1;
    for (const auto& f : factors) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), f.prime.value().get_mpz_t(), f.exponent);
        out *= p;
    }
    return Natural(std::move(out));
}

std::string Factorization::str() const {
    if (factors.empty())
        return "1";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty())
            out += '*';
        out += f.prime.str();
        if (f.exponent != 1)
            out += '^' + std::to_string(f.exponent);
    }
    return out;
}

namespace {

constexpr std::array<unsigned long, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Integer& n) {
    if (n < 2)
        return false;
    for (unsigned long p : kWitnesses) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    const Integer n_minus_1 = n - 1;
    for (unsigned long base : kWitnesses) {
        Integer x;
        Integer b = base;
        mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1)
            continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Returns a nontrivial factor of the odd composite n.
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        const unsigned long batch = 128;
        for (unsigned long r = 1; g == 1; r <<= 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = (y * y + c) % n;
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g == n) {
            // The batched gcd overshot; replay one step at a time.
            do {
                ys = (ys * ys + c) % n;
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1)
        return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    Integer f = pollard_brent(n);
    split(f, out);
    split(Integer(n / f), out);
}

constexpr unsigned long kTrialBound = 1ul << 21;

}  // namespace

bool is_prime(const Natural& n) {
    return miller_rabin(n.value());
}

Factorization factorize(const Natural& n) {
    if (n.is_zero())
        throw std::invalid_argument("factorize: zero has no prime factorization");

    std::map<Integer, unsigned> found;
    Integer rest = n.value();
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e)
            found[Integer(p)] += e;
    };

    strip(2);
    strip(3);
    unsigned long p = 5;
    for (; p <= kTrialBound && Integer(p) * p <= rest; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) {
        if (Integer(p) * p > rest)
            ++found[rest];
        else
            split(rest, found);
    }

    Factorization out;
    for (auto& [prime, exponent] : found)
        out.factors.push_back({Natural(prime), exponent});
    return out;
}

}  // namespace battery

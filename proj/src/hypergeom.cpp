#include "battery/hypergeom.hpp"

#include <map>
#include <tuple>

namespace battery {

namespace {

std::string join(const std::vector<Integer>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        out += xs[i].get_str();
    }
    return out;
}

// Sums terms 0..last of the series whose parameters are given, using the
// term recurrence. Steps before `last` must not hit a zero denominator.
// `visit(n, term)` is called for every term; the sum of visit results is
// returned.
template <class Visit>
Rational sum_terms(const std::vector<Integer>& numerators, const std::vector<Integer>& denominators,
                   const Rational& z, std::uint64_t last, Visit&& visit) {
    Rational term = 1;
    Rational total = visit(std::uint64_t{0}, term);
    for (std::uint64_t n = 0; n < last; ++n) {
        Integer num = 1, den = n + 1;
        for (const auto& a : numerators)
            num *= a + n;
        for (const auto& b : denominators) {
            Integer f = b + n;
            if (f == 0)
                throw ZeroDenominator("denominator parameter " + b.get_str() + " vanishes at term " +
                                      std::to_string(n + 1));
            den *= f;
        }
        if (num == 0)
            break;
        term *= Rational(num, den) * z;
        total += visit(n + 1, term);
    }
    return total;
}

}  // namespace

std::string PFQParams::str() const {
    return std::to_string(numerators.size()) + "F" + std::to_string(denominators.size()) + "(" + join(numerators) +
           "; " + join(denominators) + "; " + z.str() + ")";
}

std::optional<std::uint64_t> termination_index(std::span<const Integer> numerators) {
    std::optional<std::uint64_t> best;
    for (const auto& a : numerators) {
        if (sgn(a) > 0)
            continue;
        Integer mag = -a;
        if (!mag.fits_ulong_p())
            throw HypergeometricError("termination index " + mag.get_str() + " is too large to sum");
        std::uint64_t n = mag.get_ui();
        if (!best || n < *best)
            best = n;
    }
    return best;
}

Rational eval_pfq(const PFQParams& params) {
    auto last = termination_index(params.numerators);
    if (!last)
        throw NonTerminatingSeries("no non-positive integer numerator in " + params.str());
    try {
        return sum_terms(params.numerators, params.denominators, params.z, *last,
                         [](std::uint64_t, const Rational& term) { return term; });
    } catch (const ZeroDenominator& e) {
        throw ZeroDenominator(params.str() + ": " + e.what());
    }
}

Rational gauss_2f1_neg(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    if (b == 0)
        throw std::invalid_argument("gauss_2f1_neg: b must be positive");
    if (a > c)
        throw std::invalid_argument("gauss_2f1_neg: requires a <= c");
    return Rational(binomial(Integer(c) + b, a), binomial(c, a));
}

Rational ContiguousDecomposition::value() const {
    Rational out;
    if (!coefficient1.is_zero())
        out += coefficient1 * eval_pfq(params1);
    if (!coefficient2.is_zero())
        out += coefficient2 * eval_pfq(params2);
    return out;
}

PFQParams make_3f2(const Integer& a, const Integer& b, const Integer& c, const Integer& d, const Integer& e) {
    return PFQParams{{a, b, Integer(-c)}, {d, Integer(-e)}, Rational(1)};
}

ContiguousDecomposition contiguous_step(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                                        const Integer& e) {
    if (sgn(a) < 0 || b < -1 || d < 1 || sgn(c) < 0 || c > e)
        throw std::invalid_argument("contiguous_step: requires a >= 0, b >= -1, d >= 1, 0 <= c <= e (got a=" +
                                    a.get_str() + ", b=" + b.get_str() + ", c=" + c.get_str() + ", d=" +
                                    d.get_str() + ", e=" + e.get_str() + ")");
    ContiguousDecomposition out;
    out.params1 = make_3f2(a, Integer(b + 1), Integer(c - 1), Integer(d + 1), Integer(e - 1));
    out.params2 = make_3f2(a, Integer(b + 1), c, Integer(d + 1), e);
    if (sgn(c) > 0)
        out.coefficient1 = Rational(Integer(-c * (e + a)), Integer(d * e));
    out.coefficient2 = Rational(Integer(d + c), d);
    return out;
}

Rational reduce_3f2(const Integer& a, const Integer& b, const Integer& c, const Integer& e) {
    if (a < 1)
        throw std::invalid_argument("reduce_3f2: requires a >= 1");
    if (sgn(c) < 0 || c > e)
        throw std::invalid_argument("reduce_3f2: requires 0 <= c <= e");
    if (!a.fits_ulong_p())
        throw std::invalid_argument("reduce_3f2: a is too large");

    // Terms 3F2(a, b', -c'; d, -e'; 1) keyed by (b', c', e') with their coefficients.
    using Key = std::tuple<Integer, Integer, Integer>;
    std::map<Key, Rational> terms{{Key{b, c, e}, Rational(1)}};
    for (Integer d = 1; d < a; ++d) {
        std::map<Key, Rational> next;
        for (const auto& [key, coef] : terms) {
            const auto& [bi, ci, ei] = key;
            auto step = contiguous_step(a, bi, ci, d, ei);
            if (!step.coefficient1.is_zero())
                next[Key{bi + 1, ci - 1, ei - 1}] += coef * step.coefficient1;
            next[Key{bi + 1, ci, ei}] += coef * step.coefficient2;
        }
        terms = std::move(next);
    }

    // With d = a the pair (a; a) cancels, leaving 2F1(b', -c'; -e'; 1).
    Rational out;
    for (const auto& [key, coef] : terms) {
        const auto& [bi, ci, ei] = key;
        if (coef.is_zero())
            continue;
        if (sgn(bi) == 0) {
            out += coef;
            continue;
        }
        if (sgn(bi) < 0)
            throw std::invalid_argument("reduce_3f2: Gauss closure needs a non-negative upper parameter, got " +
                                        bi.get_str());
        out += coef * gauss_2f1_neg(ci.get_ui(), bi.get_ui(), ei.get_ui());
    }
    return out;
}

Integer AffineParam::at(std::span<const std::uint64_t> outer) const {
    if (coefficients.size() > outer.size())
        throw std::invalid_argument("affine parameter refers to an index of a deeper level");
    Integer out = constant;
    for (std::size_t j = 0; j < coefficients.size(); ++j)
        out += coefficients[j] * outer[j];
    return out;
}

namespace {

Rational eval_level(const MultiPFQSpec& spec, std::size_t level, std::vector<std::uint64_t>& outer) {
    if (level == spec.levels.size())
        return 1;
    const SeriesLevel& lv = spec.levels[level];
    std::vector<Integer> nums, dens;
    nums.reserve(lv.numerators.size());
    dens.reserve(lv.denominators.size());
    for (const auto& p : lv.numerators)
        nums.push_back(p.at(outer));
    for (const auto& p : lv.denominators)
        dens.push_back(p.at(outer));

    auto last = termination_index(nums);
    if (level == 0 && !last)
        throw NonTerminatingSeries("level 0 of a multiple series has no non-positive integer numerator");
    if (level > 0 && (!last || *last > outer.back()))
        last = outer.back();

    auto visit = [&](std::uint64_t n, const Rational& term) {
        outer.push_back(n);
        Rational inner = eval_level(spec, level + 1, outer);
        outer.pop_back();
        return term * inner;
    };
    try {
        return sum_terms(nums, dens, lv.z, *last, visit);
    } catch (const ZeroDenominator& e) {
        throw ZeroDenominator("level " + std::to_string(level) + ": " + e.what());
    }
}

}  // namespace

Rational eval_multi_pfq(const MultiPFQSpec& spec) {
    if (spec.levels.empty())
        throw std::invalid_argument("eval_multi_pfq: spec has no levels");
    std::vector<std::uint64_t> outer;
    return eval_level(spec, 0, outer);
}

}  // namespace battery

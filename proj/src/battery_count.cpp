#include "battery/battery_count.hpp"

#include <functional>

namespace battery {

Natural to_natural_checked(const Rational& x, std::string_view what) {
    if (!x.is_integer())
        throw IntegralityError(std::string(what) + ": expected an integer count, got " + x.str());
    if (sgn(x.numerator()) < 0)
        throw IntegralityError(std::string(what) + ": expected a non-negative count, got " + x.str());
    return Natural(x.numerator());
}

unsigned BulletProfile::total() const {
    unsigned s = 0;
    for (unsigned h : heights)
        s += h;
    return s;
}

Partition BulletProfile::shape() const {
    return conjugate(Partition::from_parts(heights));
}

std::vector<BulletProfile> bullet_profiles(unsigned n, unsigned columns) {
    std::vector<BulletProfile> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned cap) {
        if (cur.size() == columns) {
            out.push_back({cur});
            return;
        }
        for (unsigned h = 0; h <= cap; ++h) {
            cur.push_back(h);
            rec(h);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

namespace {

std::string shape_label(unsigned m, unsigned n, unsigned a, unsigned k) {
    return "[(" + std::to_string(m) + "^" + std::to_string(n) + ")," + std::to_string(a) + "," + std::to_string(k) +
           "]";
}

void require_rect(unsigned m, unsigned n, unsigned k, const char* who) {
    if (n == 0)
        throw std::invalid_argument(std::string(who) + ": n must be at least 1");
    if (k == 0 || k > m)
        throw std::invalid_argument(std::string(who) + ": column " + std::to_string(k) +
                                    " does not exist in a rectangle of width " + std::to_string(m));
}

Natural hyper_count(unsigned k, unsigned m, unsigned n, unsigned a) {
    require_rect(m, n, k, "count_k");
    Rational f = syt_count_straight(rectangle(m, n));
    return to_natural_checked(f * eval_multi_pfq(battery_series(k, m, n, a)), shape_label(m, n, a, k));
}

}  // namespace

Natural count_k2(unsigned m, unsigned n, unsigned a) {
    if (m < 2)
        throw std::invalid_argument("count_k2: requires m >= 2");
    require_rect(m, n, 2, "count_k2");
    const Integer mn = Integer(m) * n;
    PFQParams series{{Integer(a), Integer(m), Integer(-Integer(n))}, {Integer(1), Integer(-mn)}, Rational(1)};
    Rational f = syt_count_straight(rectangle(m, n));
    return to_natural_checked(f * eval_pfq(series), shape_label(m, n, a, 2));
}

SeriesLevel battery_series_level(unsigned level, unsigned m, unsigned n, unsigned a) {
    const Integer A = a, M = m, N = n, MN = Integer(m) * n;
    // Parameters are affine in the outer indices (t, v, w, r).
    auto P = [](Integer c, std::vector<Integer> coefs = {}) { return AffineParam(std::move(c), std::move(coefs)); };
    SeriesLevel lv;
    switch (level) {
    case 0:
        lv.numerators = {P(A), P(M), P(-N)};
        lv.denominators = {P(-MN), P(1)};
        break;
    case 1:
        lv.numerators = {P(A, {1}), P(M - 1), P(-N - 1), P(0, {-1}), P(0, {-1})};
        lv.denominators = {P(-MN, {1}), P(-1, {-1}), P(-1, {-1}), P(1)};
        break;
    case 2:
        lv.numerators = {P(A, {1, 1}), P(M - 2), P(-N - 2), P(-1, {-1}), P(-1, {-1}), P(0, {0, -1}),
                         P(0, {0, -1})};
        lv.denominators = {P(-MN, {1, 1}), P(-2, {-1}), P(-2, {-1}), P(-1, {0, -1}), P(-1, {0, -1}), P(1)};
        break;
    case 3:
        lv.numerators = {P(A, {1, 1, 1}),  P(M - 3),          P(-N - 3),         P(-2, {-1}),
                         P(-2, {-1}),      P(-1, {0, -1}),    P(-1, {0, -1}),    P(0, {0, 0, -1}),
                         P(0, {0, 0, -1})};
        lv.denominators = {P(-MN, {1, 1, 1}), P(-3, {-1}),       P(-3, {-1}),       P(-2, {0, -1}),
                           P(-2, {0, -1}),    P(-1, {0, 0, -1}), P(-1, {0, 0, -1}), P(1)};
        break;
    case 4:
        lv.numerators = {P(A, {1, 1, 1, 1}), P(M - 4),          P(-N - 4),         P(-3, {-1}),
                         P(-3, {-1}),        P(-2, {0, -1}),    P(-2, {0, -1}),    P(-1, {0, 0, -1}),
                         P(-1, {0, 0, -1}),  P(0, {0, 0, 0, -1}), P(0, {0, 0, 0, -1})};
        lv.denominators = {P(-MN, {1, 1, 1, 1}), P(-4, {-1}),          P(-4, {-1}),
                           P(-3, {0, -1}),       P(-3, {0, -1}),       P(-2, {0, 0, -1}),
                           P(-2, {0, 0, -1}),    P(-1, {0, 0, 0, -1}), P(-1, {0, 0, 0, -1}),
                           P(1)};
        break;
    default:
        throw std::invalid_argument("battery_series_level: no transcribed level " + std::to_string(level));
    }
    return lv;
}

MultiPFQSpec battery_series(unsigned k, unsigned m, unsigned n, unsigned a) {
    if (k < 2 || k > 6)
        throw std::invalid_argument("battery_series: transcribed only for k = 2..6");
    MultiPFQSpec spec;
    for (unsigned level = 0; level + 1 < k; ++level)
        spec.levels.push_back(battery_series_level(level, m, n, a));
    return spec;
}

Natural count_k3(unsigned m, unsigned n, unsigned a) { return hyper_count(3, m, n, a); }
Natural count_k4(unsigned m, unsigned n, unsigned a) { return hyper_count(4, m, n, a); }
Natural count_k5(unsigned m, unsigned n, unsigned a) { return hyper_count(5, m, n, a); }
Natural count_k6(unsigned m, unsigned n, unsigned a) { return hyper_count(6, m, n, a); }

Natural count_hyper(unsigned m, unsigned n, unsigned a, unsigned k) {
    switch (k) {
    case 2: return count_k2(m, n, a);
    case 3: return count_k3(m, n, a);
    case 4: return count_k4(m, n, a);
    case 5: return count_k5(m, n, a);
    case 6: return count_k6(m, n, a);
    default:
        throw std::invalid_argument("count_hyper: hypergeometric formulas cover k = 2..6, got k = " +
                                    std::to_string(k));
    }
}

Natural count_general(unsigned m, unsigned n, unsigned a, unsigned k) {
    require_rect(m, n, k, "count_general");
    Natural total;
    for (const auto& profile : bullet_profiles(n, k - 1)) {
        const unsigned s = profile.total();
        Integer interleave = binomial(Integer(a) + s - 1, s);
        if (interleave == 0)
            continue;
        const Partition bullets = profile.shape();
        Integer term = interleave * syt_count_straight(bullets).value() *
                       syt_count_straight(rotated_complement(m, n, bullets)).value();
        total += Natural(std::move(term));
    }
    return total;
}

// --- closed forms -----------------------------------------------------------

namespace {

struct CaseInfo {
    ClosedFormCase id;
    std::string_view name;
    unsigned k;
    int fixed_a;  // -1 when free
    int fixed_m;
    int fixed_n;
};

constexpr CaseInfo kCases[] = {
    {ClosedFormCase::A1K2, "a1-k2", 2, 1, -1, -1}, {ClosedFormCase::A2K2, "a2-k2", 2, 2, -1, -1},
    {ClosedFormCase::A3K2, "a3-k2", 2, 3, -1, -1}, {ClosedFormCase::M3K2, "m3-k2", 2, -1, 3, -1},
    {ClosedFormCase::M4K2, "m4-k2", 2, -1, 4, -1}, {ClosedFormCase::N2K2, "n2-k2", 2, -1, -1, 2},
    {ClosedFormCase::N3K2, "n3-k2", 2, -1, -1, 3}, {ClosedFormCase::N2K3, "n2-k3", 3, -1, -1, 2},
    {ClosedFormCase::N3K3, "n3-k3", 3, -1, -1, 3}, {ClosedFormCase::N2K4, "n2-k4", 4, -1, -1, 2},
    {ClosedFormCase::N2K5, "n2-k5", 5, -1, -1, 2},
};

const CaseInfo& info(ClosedFormCase c) {
    for (const auto& ci : kCases)
        if (ci.id == c)
            return ci;
    throw std::invalid_argument("unknown closed-form case");
}

Rational B(const Integer& x, const Integer& k) {
    return binomial(x, k.get_ui());
}

Rational eval_case(ClosedFormCase c, const Integer& m, const Integer& n, const Integer& a) {
    const Integer mn = m * n;
    switch (c) {
    case ClosedFormCase::A1K2:
        return B(mn + m, m) / B(mn + m - n, m);
    case ClosedFormCase::A2K2:
        return B(mn + m, m) / B(mn + m - n + 1, m + 1) * Rational(Integer(2 * mn + m - n + 1), Integer(m + 1));
    case ClosedFormCase::A3K2: {
        Integer poly = m * m * (7 * n * n + 7 * n + 2) + m * (-7 * n * n + 9 * n + 6) + 2 * (n * n - 3 * n + 2);
        return B(mn + m, m) / B(mn - n + m + 2, m + 2) * Rational(poly, Integer(2 * (m + 2) * (m + 1)));
    }
    case ClosedFormCase::M3K2: {
        Integer poly = (n + 1) * (a * n + 2 * a + 8 * n + 4);
        return B(3 * n + a, a) / B(2 * n + a + 2, a + 1) * Rational(poly, Integer(2 * (2 * n + 1)));
    }
    case ClosedFormCase::M4K2: {
        Integer poly =
            (n + 1) * (a * a * (n + 2) * (n + 3) + a * (n + 2) * (29 * n + 15) + 18 * (3 * n + 1) * (3 * n + 2));
        return B(4 * n + a, a) / B(3 * n + a + 3, a + 1) *
               Rational(poly, Integer(6 * (3 * n + 1) * (3 * n + 2)));
    }
    case ClosedFormCase::N2K2:
        return Rational(Integer((a + 1) * (a * (m + 1) + 4 * (2 * m - 1))), Integer(4 * (2 * m - 1)));
    case ClosedFormCase::N3K2: {
        Integer poly =
            (a + 1) * (a * a * (m + 1) * (m + 2) + a * (29 * m - 14) * (m + 1) + 18 * (3 * m - 1) * (3 * m - 2));
        return Rational(poly, Integer(18 * (3 * m - 1) * (3 * m - 2)));
    }
    case ClosedFormCase::N2K3: {
        Integer poly = (a + 1) * (a + 2) *
                       (a * a * m * (m + 1) + a * (m + 1) * (19 * m - 24) + 24 * (2 * m - 1) * (2 * m - 3));
        return Rational(poly, Integer(48 * (2 * m - 1) * (2 * m - 3)));
    }
    case ClosedFormCase::N3K3: {
        Integer w = a * a * a * a * m * (m + 1) * (m + 1) * (m + 2) +
                    6 * a * a * a * m * (11 * m - 13) * (m + 1) * (m + 2) +
                    a * a * (m + 1) * (m + 1) * (1559 * m * m - 3722 * m + 2160) +
                    6 * a * (m + 1) * (2521 * m * m * m - 8169 * m * m + 8078 * m - 2280) +
                    648 * (3 * m - 1) * (3 * m - 2) * (3 * m - 4) * (3 * m - 5);
        return Rational(Integer((a + 1) * (a + 2) * w),
                        Integer(1296 * (3 * m - 1) * (3 * m - 2) * (3 * m - 4) * (3 * m - 5)));
    }
    case ClosedFormCase::N2K4: {
        Integer w = a * a * a * m * (m - 1) * (m + 1) + 3 * a * a * m * (m + 1) * (11 * m - 23) +
                    4 * a * (m + 1) * (95 * m * m - 338 * m + 270) + 192 * (2 * m - 1) * (2 * m - 3) * (2 * m - 5);
        return Rational(Integer((a + 1) * (a + 2) * (a + 3) * w),
                        Integer(1152 * (2 * m - 1) * (2 * m - 3) * (2 * m - 5)));
    }
    case ClosedFormCase::N2K5: {
        Integer w = a * a * a * a * m * (m - 1) * (m + 1) * (m - 2) +
                    2 * a * a * a * m * (m + 1) * (m - 1) * (25 * m - 74) +
                    a * a * (m + 1) * m * (m - 2) * (971 * m - 3131) +
                    2 * a * (m + 1) * (4361 * m * m * m - 29979 * m * m + 63418 * m - 40320) +
                    1920 * (2 * m - 1) * (2 * m - 3) * (2 * m - 5) * (2 * m - 7);
        return Rational(Integer((a + 1) * (a + 2) * (a + 3) * (a + 4) * w),
                        Integer(46080 * (2 * m - 1) * (2 * m - 3) * (2 * m - 5) * (2 * m - 7)));
    }
    }
    throw std::invalid_argument("unknown closed-form case");
}

}  // namespace

std::string_view closed_form_name(ClosedFormCase c) {
    return info(c).name;
}

ClosedFormCase closed_form_from_name(std::string_view name) {
    for (const auto& ci : kCases)
        if (ci.name == name)
            return ci.id;
    throw std::invalid_argument("unknown closed-form case '" + std::string(name) + "'");
}

bool closed_form_applies(ClosedFormCase c, unsigned m, unsigned n, unsigned a, unsigned k) {
    const CaseInfo& ci = info(c);
    if (k != ci.k || m < k || n < 1)
        return false;
    if (ci.fixed_a >= 0 && a != static_cast<unsigned>(ci.fixed_a))
        return false;
    if (ci.fixed_m >= 0 && m != static_cast<unsigned>(ci.fixed_m))
        return false;
    if (ci.fixed_n >= 0 && n != static_cast<unsigned>(ci.fixed_n))
        return false;
    return true;
}

std::optional<ClosedFormCase> match_closed_form(unsigned m, unsigned n, unsigned a, unsigned k) {
    for (const auto& ci : kCases)
        if (closed_form_applies(ci.id, m, n, a, k))
            return ci.id;
    return std::nullopt;
}

Natural closed_form(ClosedFormCase c, unsigned m, unsigned n, unsigned a, unsigned k) {
    if (!closed_form_applies(c, m, n, a, k))
        throw std::invalid_argument("closed form " + std::string(closed_form_name(c)) + " does not cover " +
                                    shape_label(m, n, a, k));
    Rational f = syt_count_straight(rectangle(m, n));
    return to_natural_checked(f * eval_case(c, m, n, a), shape_label(m, n, a, k));
}

}  // namespace battery

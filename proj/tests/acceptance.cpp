// Acceptance suite: one PASS/FAIL line per criterion, each checked at its
// tolerance (bit-exact) and time budget. Exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "battery/battery_count.hpp"
#include "battery/cli.hpp"
#include "battery/hypergeom.hpp"
#include "battery/oracle_dp.hpp"
#include "battery/shapes.hpp"
#include "oracles.hpp"

using namespace battery;

namespace {

// Count of IntegralityError raised or non-integral products seen, over every sweep.
unsigned integrality_violations = 0;
unsigned integral_counts_checked = 0;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok)
        throw Failure{what};
}

// Runs `count`, tallying integrality failures instead of letting them escape.
Natural counted(const std::function<Natural()>& count, const std::string& label) {
    try {
        Natural n = count();
        ++integral_counts_checked;
        return n;
    } catch (const IntegralityError& e) {
        ++integrality_violations;
        throw Failure{label + ": " + e.what()};
    }
}

void expect_integral(const Rational& r, const std::string& label) {
    ++integral_counts_checked;
    if (!r.is_integer()) {
        ++integrality_violations;
        throw Failure{label + " has denominator " + r.denominator().get_str()};
    }
}

Rational to_rational(const mpq_class& q) { return Rational(Integer(q.get_num()), Integer(q.get_den())); }

Rational direct_3f2(long a, long b, long c, long d, long e) {
    return to_rational(oracle::pfq_direct({a, b, -c}, {d, -e}, static_cast<unsigned>(a == 0 ? 0 : c)));
}

std::string label(unsigned m, unsigned n, unsigned a, unsigned k) {
    std::ostringstream s;
    s << "[(" << m << "^" << n << ")," << a << "," << k << "]";
    return s.str();
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::string()> run;  // returns a short summary
};

std::string golden(unsigned m, unsigned n, unsigned k, const std::string& factored, bool check_states) {
    const std::string name = label(m, n, 1, k);
    Natural hyper = counted([&] { return count_hyper(m, n, 1, k); }, name + " hyper");
    Natural general = counted([&] { return count_general(m, n, 1, k); }, name + " general");
    OracleStats stats;
    OracleOptions options;
    options.stats = &stats;
    Natural dp = count_linear_extensions(BatteryShape{rectangle(m, n), 1, k}, options);
    expect(factorize(hyper).str() == factored, name + " hyper factors as " + factorize(hyper).str());
    expect(general == hyper, name + " general disagrees: " + general.str());
    expect(dp == hyper, name + " dp disagrees: " + dp.str());
    const Integer bound = Integer(2) * binomial(m + n, n);
    expect(Integer(stats.states) <= bound, name + " dp visited " + std::to_string(stats.states) + " states");
    std::ostringstream s;
    s << name << " = " << factored;
    if (check_states)
        s << "; dp states " << stats.states << " <= " << bound.get_str();
    return s.str();
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> out;

    out.push_back({1, "golden count [(11^7),1,6] by k=6 series, general sum and dp", 5.0, [] {
                       return golden(11, 7, 6,
                                     "2^5*3^2*5^2*11*13*17^2*19^3*23^2*29*31*37^2*41*3361178017*2839893182041", true);
                   }});

    out.push_back({2, "golden count [(7^11),1,4] by k=4 series, general sum and dp", 5.0, [] {
                       return golden(7, 11, 4,
                                     "2^7*3^2*5^2*7*13*17^3*19^3*23^2*29^2*31^2*37^2*41*43*59*61*67*71*73*2792843",
                                     true);
                   }});

    out.push_back({3, "hook length formula on (3,2,1)", 0.1, [] {
                       Partition p{3, 2, 1};
                       auto hooks = hook_lengths(p).hooks;
                       expect(hooks == std::vector<unsigned>{5, 3, 1, 3, 1, 1}, "hook multiset differs");
                       expect(syt_count_straight(p) == Natural(16), "f^(3,2,1) != 16");
                       return std::string("f = 16, hooks {5,3,1,3,1,1}");
                   }});

    out.push_back({4, "Gauss sum 2F1(-a,b;-c;1) = C(c+b,a)/C(c,a), 0<=a<=c<=8, 0<=b<=8", 1.0, [] {
                       unsigned cases = 0;
                       for (long c = 0; c <= 8; ++c)
                           for (long a = 0; a <= c; ++a)
                               for (long b = 0; b <= 8; ++b) {
                                   Rational closed(oracle::choose(c + b, a), oracle::choose(c, a));
                                   PFQParams p{{Integer(-a), Integer(b)}, {Integer(-c)}, Rational(1)};
                                   expect(eval_pfq(p) == closed, "direct sum differs at a=" + std::to_string(a) +
                                                                     " b=" + std::to_string(b) +
                                                                     " c=" + std::to_string(c));
                                   if (b >= 1)
                                       expect(gauss_2f1_neg(a, b, c) == closed, "gauss_2f1_neg differs");
                                   ++cases;
                               }
                       expect(cases == 405, "expected 405 cases");
                       return std::to_string(cases) + " cases";
                   }});

    out.push_back({5, "contiguous relation and first-parameter expansion grids", 5.0, [] {
                       unsigned contiguous = 0, expansion = 0;
                       for (long a = 0; a <= 5; ++a)
                           for (long b = -1; b <= 5; ++b)
                               for (long d = 1; d <= 5; ++d)
                                   for (long e = 0; e <= 6; ++e)
                                       for (long c = 0; c <= e; ++c) {
                                           Rational source = direct_3f2(a, b, c, d, e);
                                           expect(contiguous_step(a, b, c, d, e).value() == source,
                                                  "contiguous relation fails");
                                           ++contiguous;
                                       }
                       for (long a = 1; a <= 5; ++a)
                           for (long b = 1; b <= 4; ++b)
                               for (long d = 1; d <= 4; ++d)
                                   for (long e = 1; e <= 5; ++e)
                                       for (long c = 1; c <= e; ++c) {
                                           Rational sum = 0;
                                           for (long t = 1; t <= a; ++t)
                                               sum += direct_3f2(t, b + 1, c - 1, d + 1, e - 1);
                                           Rational rhs = Rational(1) + Rational(b * c, d * e) * sum;
                                           expect(eval_pfq(make_3f2(a, b, c, d, e)) == rhs, "expansion fails");
                                           ++expansion;
                                       }
                       return std::to_string(contiguous) + " + " + std::to_string(expansion) + " cases";
                   }});

    out.push_back({6, "reduce_3f2 equals direct summation, a<=5, b<=6, 0<=c<=e<=12", 5.0, [] {
                       unsigned cases = 0;
                       for (long a = 1; a <= 5; ++a)
                           for (long b = 1; b <= 6; ++b)
                               for (long e = 0; e <= 12; ++e)
                                   for (long c = 0; c <= e; ++c) {
                                       Rational direct = direct_3f2(a, b, c, 1, e);
                                       expect(eval_pfq(make_3f2(a, b, c, 1, e)) == direct, "eval_pfq differs");
                                       expect(reduce_3f2(a, b, c, e) == direct, "reduce_3f2 differs");
                                       ++cases;
                                   }
                       return std::to_string(cases) + " cases";
                   }});

    out.push_back({7, "general sum = dp oracle; k=2..6 series = general sum", 30.0, [] {
                       unsigned vs_dp = 0, vs_series = 0;
                       for (unsigned m = 1; m <= 4; ++m)
                           for (unsigned n = 1; n <= 4; ++n)
                               for (unsigned a = 0; a <= 3; ++a)
                                   for (unsigned k = 1; k <= m; ++k) {
                                       auto name = label(m, n, a, k);
                                       Natural g = counted([&] { return count_general(m, n, a, k); }, name);
                                       Natural d = count_linear_extensions(BatteryShape{rectangle(m, n), a, k});
                                       expect(g == d, name + ": general " + g.str() + " dp " + d.str());
                                       ++vs_dp;
                                   }
                       auto compare = [&](unsigned k, unsigned m, unsigned n, unsigned a) {
                           auto name = label(m, n, a, k);
                           Rational f = syt_count_straight(rectangle(m, n));
                           Rational raw = k == 2 ? f * eval_pfq(make_3f2(a, m, n, 1, Integer(m) * n))
                                                 : f * eval_multi_pfq(battery_series(k, m, n, a));
                           expect_integral(raw, name + " series");
                           Natural s = counted([&] { return count_hyper(m, n, a, k); }, name + " series");
                           Natural g = counted([&] { return count_general(m, n, a, k); }, name + " general");
                           expect(s == g, name + ": series " + s.str() + " general " + g.str());
                           ++vs_series;
                       };
                       for (unsigned m = 2; m <= 5; ++m)
                           for (unsigned n = 1; n <= 5; ++n)
                               for (unsigned a = 0; a <= 4; ++a)
                                   compare(2, m, n, a);
                       for (unsigned k = 3; k <= 6; ++k)
                           for (unsigned m = k; m <= k + 2; ++m)
                               for (unsigned n = 1; n <= 4; ++n)
                                   for (unsigned a = 0; a <= 3; ++a)
                                       compare(k, m, n, a);
                       return std::to_string(vs_dp) + " dp + " + std::to_string(vs_series) + " series shapes";
                   }});

    out.push_back({8, "eleven closed forms = general sum over m,n<=6, a<=5", 30.0, [] {
                       unsigned cases = 0, families = 0;
                       for (auto c : kAllClosedForms) {
                           unsigned hits = 0;
                           for (unsigned m = 1; m <= 6; ++m)
                               for (unsigned n = 1; n <= 6; ++n)
                                   for (unsigned a = 0; a <= 5; ++a)
                                       for (unsigned k = 1; k <= m; ++k) {
                                           if (!closed_form_applies(c, m, n, a, k))
                                               continue;
                                           auto name = std::string(closed_form_name(c)) + " " + label(m, n, a, k);
                                           Natural x = counted([&] { return closed_form(c, m, n, a, k); }, name);
                                           Natural g = counted([&] { return count_general(m, n, a, k); }, name);
                                           expect(x == g, name + ": closed " + x.str() + " general " + g.str());
                                           ++hits;
                                       }
                           expect(hits > 0, std::string(closed_form_name(c)) + " never applied");
                           cases += hits;
                           ++families;
                       }
                       return std::to_string(families) + " formulas, " + std::to_string(cases) + " cases";
                   }});

    out.push_back({9, "every count above is an integer", 0.1, [] {
                       expect(integral_counts_checked > 0, "no counts were checked");
                       expect(integrality_violations == 0,
                              std::to_string(integrality_violations) + " non-integral counts");
                       return std::to_string(integral_counts_checked) + " counts, 0 violations";
                   }});

    out.push_back({10, "command line contract", 5.0, [] {
                       auto call = [](std::vector<std::string> args,
                                      const cli::MethodTable& methods = cli::default_methods()) {
                           std::ostringstream out, err;
                           int code = cli::run(args, out, err, methods);
                           return std::make_pair(code, out.str());
                       };
                       auto [c1, o1] = call({"count", "battery:rect:11x7,a=1,k=6", "--output", "factored"});
                       expect(c1 == 0 && o1 == "2^5*3^2*5^2*11*13*17^2*19^3*23^2*29*31*37^2*41*3361178017*"
                                              "2839893182041\n",
                              "factored golden invocation");
                       auto [c2, o2] = call({"count", "partition:3,2,1"});
                       expect(c2 == 0 && o2 == "16\n", "partition invocation");
                       auto [c3, o3] = call({"count", "battery:rect:2x2,a=1,k=2", "--method", "dp", "--verify"});
                       expect(c3 == 0 && o3 == "5\n", "dp --verify invocation");
                       auto faulty = cli::default_methods();
                       faulty[cli::Method::Hyper] = [](const ShapeValue&, unsigned) { return Natural(4); };
                       auto [c4, o4] =
                           call({"count", "battery:rect:2x2,a=1,k=2", "--method", "dp", "--verify"}, faulty);
                       expect(c4 == cli::kMismatch, "fault-injected verify exited " + std::to_string(c4));
                       return std::string("3 invocations exit 0, injected mismatch exits 4");
                   }});

    return out;
}

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        std::string summary;
        bool ok = true;
        try {
            summary = c.run();
        } catch (const Failure& f) {
            ok = false;
            summary = f.what;
        } catch (const std::exception& e) {
            ok = false;
            summary = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget_s) {
            ok = false;
            summary += " (over time budget)";
        }
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ["
                  << std::fixed << std::setprecision(3) << secs << " s / " << std::setprecision(1) << c.budget_s
                  << " s]  " << summary << std::endl;
    }
    std::cout << (failed ? "FAILED: " : "ALL PASSED: ") << failed << " of 10 criteria failed" << std::endl;
    return failed ? 1 : 0;
}

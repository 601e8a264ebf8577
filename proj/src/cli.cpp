#include "battery/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "battery/battery_count.hpp"
#include "battery/oracle_dp.hpp"

namespace battery::cli {

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::Auto, "auto"}, {Method::Hyper, "hyper"}, {Method::General, "general"},
    {Method::Closed, "closed"}, {Method::Dp, "dp"},
};

struct RectBattery {
    unsigned m, n, a, k;
};

// The battery shape over a nonempty rectangle, if that is what `shape` is.
std::optional<RectBattery> rect_battery(const ShapeValue& shape) {
    const auto* b = std::get_if<BatteryShape>(&shape);
    if (!b || !b->lambda.is_rectangle())
        return std::nullopt;
    return RectBattery{b->lambda[0], static_cast<unsigned>(b->lambda.length()), b->a, b->k};
}

unsigned cell_count(const ShapeValue& shape) {
    return std::visit(
        [](const auto& s) -> unsigned {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Partition> || std::is_same_v<T, BatteryShape>)
                return s.size();
            else
                return diagram_of(s).size();
        },
        shape);
}

bool hyper_applies(const ShapeValue& shape) {
    auto r = rect_battery(shape);
    return r && r->k >= 2 && r->k <= 6 && r->m >= r->k;
}

bool general_applies(const ShapeValue& shape) {
    return std::holds_alternative<Partition>(shape) || rect_battery(shape).has_value();
}

bool closed_applies(const ShapeValue& shape) {
    auto r = rect_battery(shape);
    return r && match_closed_form(r->m, r->n, r->a, r->k).has_value();
}

[[noreturn]] void inapplicable(Method m, std::string_view why) {
    throw MethodInapplicable("method '" + std::string(method_name(m)) + "' " + std::string(why));
}

Natural count_hyper_route(const ShapeValue& shape, unsigned) {
    if (!hyper_applies(shape))
        inapplicable(Method::Hyper, "needs a battery over a rectangle with 2 <= k <= 6");
    auto r = *rect_battery(shape);
    return count_hyper(r.m, r.n, r.a, r.k);
}

Natural count_general_route(const ShapeValue& shape, unsigned) {
    if (const auto* p = std::get_if<Partition>(&shape))
        return syt_count_straight(*p);
    auto r = rect_battery(shape);
    if (!r)
        inapplicable(Method::General, "needs a straight partition or a battery over a rectangle");
    return count_general(r->m, r->n, r->a, r->k);
}

Natural count_closed_route(const ShapeValue& shape, unsigned) {
    auto r = rect_battery(shape);
    std::optional<ClosedFormCase> c;
    if (r)
        c = match_closed_form(r->m, r->n, r->a, r->k);
    if (!c)
        inapplicable(Method::Closed, "has no catalog formula for this shape");
    return closed_form(*c, r->m, r->n, r->a, r->k);
}

Natural count_dp_route(const ShapeValue& shape, unsigned size_cap) {
    OracleOptions options;
    options.size_cap = size_cap;
    try {
        return std::visit(
            [&](const auto& s) -> Natural {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Partition>)
                    return count_linear_extensions(BatteryShape{s, 0, 1}, options);
                else
                    return count_linear_extensions(diagram_of(s), options);
            },
            shape);
    } catch (const SizeCapExceeded& e) {
        inapplicable(Method::Dp, e.what());
    }
}

std::string shape_kind(const ShapeValue& shape) {
    switch (shape.index()) {
    case 0: return "partition";
    case 1: return "battery";
    case 2: return "skew";
    default: return "truncated";
    }
}

nlohmann::json factorization_json(const Factorization& f) {
    auto out = nlohmann::json::array();
    for (const auto& pp : f.factors) {
        nlohmann::json prime;
        if (pp.prime.value().fits_ulong_p())
            prime = pp.prime.value().get_ui();
        else
            prime = pp.prime.str();
        out.push_back({prime, pp.exponent});
    }
    return out;
}

}  // namespace

std::string_view method_name(Method m) {
    for (const auto& [id, name] : kMethodNames)
        if (id == m)
            return name;
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (const auto& [id, n] : kMethodNames)
        if (n == name)
            return id;
    return std::nullopt;
}

MethodTable default_methods() {
    return {
        {Method::Hyper, count_hyper_route},
        {Method::General, count_general_route},
        {Method::Closed, count_closed_route},
        {Method::Dp, count_dp_route},
    };
}

std::vector<Method> applicable_methods(const ShapeValue& shape, unsigned size_cap) {
    std::vector<Method> out;
    if (closed_applies(shape))
        out.push_back(Method::Closed);
    if (hyper_applies(shape))
        out.push_back(Method::Hyper);
    if (general_applies(shape))
        out.push_back(Method::General);
    if (cell_count(shape) <= size_cap)
        out.push_back(Method::Dp);
    return out;
}

Method select_auto(const ShapeValue& shape, unsigned size_cap) {
    auto methods = applicable_methods(shape, size_cap);
    if (methods.empty())
        throw MethodInapplicable("no counting method applies to this " + shape_kind(shape) + " shape (" +
                                 std::to_string(cell_count(shape)) + " cells, size cap " +
                                 std::to_string(size_cap) + ")");
    return methods.front();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const MethodTable& methods) {
    CLI::App app{"Count standard Young tableaux of battery shapes and related diagrams", "battery-syt"};
    app.require_subcommand(1);

    std::string shape_text;
    std::string method_text = "auto";
    std::string output = "decimal";
    bool verify = false;
    unsigned size_cap = kDefaultSizeCap;

    auto* count = app.add_subcommand("count", "Count the standard Young tableaux of a shape");
    count->add_option("shape", shape_text,
                      "partition:5,3,1 | rect:MxN | battery:rect:MxN,a=A,k=K | battery:part:L1,...,a=A,k=K | "
                      "skew:OUTER/INNER | truncated:OUTER\\TRUNC[/INNER]")
        ->required();
    count->add_option("--method", method_text, "Counting method")
        ->check(CLI::IsMember({"auto", "hyper", "general", "closed", "dp"}));
    count->add_option("--output", output, "Output format")->check(CLI::IsMember({"decimal", "factored", "json"}));
    count->add_flag("--verify", verify, "Cross-check against every other applicable method");
    count->add_option("--size-cap", size_cap, "Largest diagram the dp oracle accepts")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kParseError;
    }

    const auto started = std::chrono::steady_clock::now();

    ShapeExpr shape;
    try {
        shape = parse_shape(shape_text);
    } catch (const ParseError& e) {
        err << "error: cannot parse shape '" << shape_text << "' " << e.what() << "\n";
        return kParseError;
    }

    try {
        Method method = *method_from_name(method_text);
        if (method == Method::Auto)
            method = select_auto(shape.shape, size_cap);

        auto compute = [&](Method m) {
            auto it = methods.find(m);
            if (it == methods.end())
                inapplicable(m, "is not available");
            return it->second(shape.shape, size_cap);
        };

        CountResult result{shape, compute(method), method, std::nullopt};

        std::vector<std::string> verified;
        if (verify) {
            auto others = applicable_methods(shape.shape, size_cap);
            others.erase(std::remove(others.begin(), others.end(), method), others.end());
            if (others.empty()) {
                err << "error: --verify needs a second method, but only '" << method_name(method)
                    << "' applies to " << shape.text << "\n";
                return kInapplicable;
            }
            verified.emplace_back(method_name(method));
            for (Method other : others) {
                Natural c = compute(other);
                if (c != result.count) {
                    err << "error: methods disagree on " << shape.text << ": " << method_name(method) << " = "
                        << result.count.str() << ", " << method_name(other) << " = " << c.str() << "\n";
                    return kMismatch;
                }
                verified.emplace_back(method_name(other));
            }
            err << "verified by:";
            for (const auto& v : verified)
                err << ' ' << v;
            err << "\n";
        }

        if (output != "decimal" && !result.count.is_zero())
            result.factorization = factorize(result.count);

        const double elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

        if (output == "decimal") {
            out << result.count.str() << "\n";
        } else if (output == "factored") {
            out << (result.factorization ? result.factorization->str() : result.count.str()) << "\n";
        } else {
            nlohmann::json j;
            j["shape"] = result.shape.text;
            j["method"] = std::string(method_name(result.method));
            j["count"] = result.count.str();
            j["factorization"] =
                result.factorization ? factorization_json(*result.factorization) : nlohmann::json::array();
            j["verified_methods"] = verified;
            j["elapsed_ms"] = elapsed_ms;
            out << j.dump() << "\n";
        }
        return kOk;
    } catch (const MethodInapplicable& e) {
        err << "error: " << e.what() << "\n";
        return kInapplicable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace battery::cli

#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "battery/exact_arith.hpp"
#include "battery/shape_expr.hpp"

namespace battery::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kInapplicable = 3,
    kMismatch = 4,
};

enum class Method { Auto, Hyper, General, Closed, Dp };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

class MethodInapplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CountResult {
    ShapeExpr shape;
    Natural count;
    Method method = Method::Auto;
    std::optional<Factorization> factorization;
};

// Counting routes keyed by method; tests replace entries to inject faults.
using Counter = std::function<Natural(const ShapeValue&, unsigned size_cap)>;
using MethodTable = std::map<Method, Counter>;

MethodTable default_methods();

// Methods that can count the shape, in the order `auto` prefers them.
std::vector<Method> applicable_methods(const ShapeValue& shape, unsigned size_cap);

// Throws MethodInapplicable when `auto` finds nothing.
Method select_auto(const ShapeValue& shape, unsigned size_cap);

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const MethodTable& methods = default_methods());

}  // namespace battery::cli

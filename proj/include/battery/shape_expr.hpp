#pragma once

// Textual shape expressions accepted by the command line:
//
//   partition:5,3,1
//   rect:MxN                         (N rows of length M)
//   battery:rect:MxN,a=A,k=K
//   battery:part:L1,L2,...,a=A,k=K
//   skew:OUTER/INNER                 e.g. skew:4,3,2/2,1
//   truncated:OUTER\TRUNC[/INNER]    e.g. truncated:5,5,2,1\2/2

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "battery/shapes.hpp"

namespace battery {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, std::string reason);

    std::size_t position() const { return position_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

using ShapeValue = std::variant<Partition, BatteryShape, SkewShape, TruncatedShape>;

struct ShapeExpr {
    std::string text;
    ShapeValue shape;
};

// Throws ParseError with the 0-based offset of the offending character.
ShapeExpr parse_shape(std::string_view text);

}  // namespace battery

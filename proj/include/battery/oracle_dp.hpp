#pragma once

// Independent SYT counter: dynamic programming over the order ideals of the
// cell poset. Knows nothing about hook lengths or hypergeometric series.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "battery/exact_arith.hpp"
#include "battery/shapes.hpp"

namespace battery {

class SizeCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr unsigned kDefaultSizeCap = 120;

// A filled prefix of the cell poset: `battery` cells of the battery column
// plus a filled prefix length for every row of the base diagram.
struct IdealState {
    unsigned battery = 0;
    std::vector<unsigned> fill;

    friend bool operator==(const IdealState&, const IdealState&) = default;
};

struct OracleStats {
    std::size_t states = 0;           // distinct reachable states over all levels
    std::size_t widest_level = 0;     // most states alive at one level
};

struct OracleOptions {
    unsigned size_cap = kDefaultSizeCap;
    OracleStats* stats = nullptr;
};

// Line-convex rows plus an optional battery of `battery_length` cells chained
// above the topmost cell of column `battery_column` (0-based).
struct CellDiagram {
    std::vector<RowSpan> rows;
    unsigned battery_length = 0;
    unsigned battery_column = 0;

    unsigned size() const;
};

CellDiagram diagram_of(const BatteryShape& shape);
CellDiagram diagram_of(const SkewShape& shape);
CellDiagram diagram_of(const TruncatedShape& shape);

// Number of linear extensions, i.e. standard fillings. Throws
// SizeCapExceeded above options.size_cap cells.
Natural count_linear_extensions(const CellDiagram& diagram, const OracleOptions& options = {});
Natural count_linear_extensions(const BatteryShape& shape, const OracleOptions& options = {});

// Battery entries listed top to bottom; rows hold the entries of lambda.
struct BatteryTableau {
    std::vector<unsigned> battery;
    std::vector<std::vector<unsigned>> rows;

    friend bool operator==(const BatteryTableau&, const BatteryTableau&) = default;
};

inline constexpr unsigned kEnumerationCap = 12;

// Every standard filling of the shape. Throws SizeCapExceeded when the shape
// has more than `max_size` cells.
std::vector<BatteryTableau> enumerate_syt(const BatteryShape& shape, unsigned max_size = kEnumerationCap);

}  // namespace battery

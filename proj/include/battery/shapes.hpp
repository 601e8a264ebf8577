#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "battery/exact_arith.hpp"

namespace battery {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive row lengths, top row first. The empty list is
// the empty partition. Stored without trailing zeros.
class Partition {
public:
    Partition() = default;
    // Throws ShapeError unless rows are positive and weakly decreasing.
    explicit Partition(std::vector<unsigned> rows);
    Partition(std::initializer_list<unsigned> rows) : Partition(std::vector<unsigned>(rows)) {}

    // Accepts trailing zero parts and drops them.
    static Partition from_parts(std::vector<unsigned> parts);

    const std::vector<unsigned>& rows() const { return rows_; }
    std::size_t length() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    unsigned size() const;
    // Row length, 0 past the last row.
    unsigned operator[](std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }

    bool is_rectangle() const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> rows_;
};

// (m^n): n rows of length m.
Partition rectangle(unsigned m, unsigned n);

// Column heights.
Partition conjugate(const Partition& p);

// One hook per cell, row-major.
struct HookMultiset {
    std::vector<unsigned> hooks;

    std::vector<unsigned> sorted() const;
    Natural product() const;
};

HookMultiset hook_lengths(const Partition& p);

// Hook length formula: n! / prod(hooks).
Natural syt_count_straight(const Partition& p);

// f^(m^(n-t), (m-1)^t) / f^(m^n) = C(n,t) C(m+t-1,t) / C(mn,t).
Rational rect_minus_ratio(unsigned m, unsigned n, unsigned t);

// Cells of (m^n) outside mu, rotated by 180 degrees: parts m - mu_n, ..., m - mu_1.
Partition rotated_complement(unsigned m, unsigned n, const Partition& mu);

struct SkewShape {
    Partition outer;
    Partition inner;

    // Throws ShapeError unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);
};

// Half-open column range [begin, end) of one row of a diagram.
struct RowSpan {
    unsigned begin = 0;
    unsigned end = 0;

    unsigned width() const { return end - begin; }
    friend bool operator==(const RowSpan&, const RowSpan&) = default;
};

// A skew shape with truncation[i] cells removed from the right end of row i.
// The remaining cells must be line-convex.
struct TruncatedShape {
    SkewShape base;
    Partition truncation;

    TruncatedShape(SkewShape base, Partition truncation);

    std::vector<RowSpan> rows() const;
};

std::vector<RowSpan> skew_rows(const SkewShape& s);

// Every row and every column of the cell set is contiguous. Empty rows are
// allowed; a column may not continue across one.
bool is_line_convex(const std::vector<RowSpan>& rows);

// lambda with a column of `a` cells stacked above the top cell of column k
// (1-based).
struct BatteryShape {
    Partition lambda;
    unsigned a = 0;
    unsigned k = 1;

    unsigned size() const { return lambda.size() + a; }
    std::string str() const;

    friend bool operator==(const BatteryShape&, const BatteryShape&) = default;
};

// Throws ShapeError when k = 0, when lambda has no k-th column, or when
// lambda is empty and a > 0. The empty shape (empty lambda, a = 0) is valid.
void validate_battery(const BatteryShape& b);

}  // namespace battery

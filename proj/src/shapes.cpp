#include "battery/shapes.hpp"

#include <algorithm>
#include <numeric>

namespace battery {

Partition::Partition(std::vector<unsigned> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] == 0)
            throw ShapeError("partition parts must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw ShapeError("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_parts(std::vector<unsigned> parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

unsigned Partition::size() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0u);
}

bool Partition::is_rectangle() const {
    return !rows_.empty() && rows_.front() == rows_.back();
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(rows_[i]);
    }
    return out + ")";
}

Partition rectangle(unsigned m, unsigned n) {
    if (m == 0 || n == 0)
        return {};
    return Partition(std::vector<unsigned>(n, m));
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return {};
    std::vector<unsigned> cols(p.rows().front(), 0);
    for (unsigned len : p.rows())
        for (unsigned j = 0; j < len; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

std::vector<unsigned> HookMultiset::sorted() const {
    auto out = hooks;
    std::sort(out.begin(), out.end());
    return out;
}

Natural HookMultiset::product() const {
    Integer out = 1;
    for (unsigned h : hooks)
        out *= h;
    return Natural(std::move(out));
}

HookMultiset hook_lengths(const Partition& p) {
    const Partition cols = conjugate(p);
    HookMultiset out;
    out.hooks.reserve(p.size());
    for (unsigned i = 0; i < p.length(); ++i)
        for (unsigned j = 0; j < p[i]; ++j)
            out.hooks.push_back((p[i] - j - 1) + (cols[j] - i - 1) + 1);
    return out;
}

Natural syt_count_straight(const Partition& p) {
    Integer num = factorial(p.size()).value();
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), hook_lengths(p).product().value().get_mpz_t());
    return Natural(std::move(num));
}

Rational rect_minus_ratio(unsigned m, unsigned n, unsigned t) {
    if (m == 0)
        throw std::invalid_argument("rect_minus_ratio: m must be positive");
    if (t > n)
        throw std::invalid_argument("rect_minus_ratio: t exceeds the number of rows");
    Integer num = binomial(n, t) * binomial(m + t - 1, t);
    return Rational(num, binomial(Integer(m) * n, t));
}

Partition rotated_complement(unsigned m, unsigned n, const Partition& mu) {
    if (mu.length() > n || (!mu.empty() && mu[0] > m))
        throw ShapeError("rotated_complement: " + mu.str() + " does not fit in (" + std::to_string(m) +
                         "^" + std::to_string(n) + ")");
    std::vector<unsigned> parts(n);
    for (unsigned i = 0; i < n; ++i)
        parts[i] = m - mu[n - 1 - i];
    return Partition::from_parts(std::move(parts));
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (inner.length() > outer.length())
        throw ShapeError("skew shape: inner partition has more rows than outer");
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i])
            throw ShapeError("skew shape: inner partition is not contained in outer");
}

std::vector<RowSpan> skew_rows(const SkewShape& s) {
    std::vector<RowSpan> rows;
    for (std::size_t i = 0; i < s.outer.length(); ++i)
        rows.push_back({s.inner[i], s.outer[i]});
    return rows;
}

bool is_line_convex(const std::vector<RowSpan>& rows) {
    for (const auto& r : rows)
        if (r.begin > r.end)
            return false;
    unsigned max_col = 0;
    for (const auto& r : rows)
        max_col = std::max(max_col, r.end);
    for (unsigned c = 0; c < max_col; ++c) {
        int state = 0;  // 0 before the column's cells, 1 inside, 2 after
        for (const auto& r : rows) {
            bool in = r.begin <= c && c < r.end;
            if (in && state == 2)
                return false;
            if (in)
                state = 1;
            else if (state == 1)
                state = 2;
        }
    }
    return true;
}

TruncatedShape::TruncatedShape(SkewShape base_, Partition truncation_)
    : base(std::move(base_)), truncation(std::move(truncation_)) {
    if (truncation.length() > base.outer.length())
        throw ShapeError("truncated shape: truncation has more rows than the shape");
    for (std::size_t i = 0; i < truncation.length(); ++i)
        if (base.inner[i] + truncation[i] > base.outer[i])
            throw ShapeError("truncated shape: truncation removes more cells than row " + std::to_string(i + 1) +
                             " holds");
    if (!is_line_convex(rows()))
        throw ShapeError("truncated shape: resulting diagram is not line-convex");
}

std::vector<RowSpan> TruncatedShape::rows() const {
    auto out = skew_rows(base);
    for (std::size_t i = 0; i < truncation.length(); ++i)
        out[i].end -= truncation[i];
    // Rows emptied by the truncation contribute nothing; drop them from the top.
    while (!out.empty() && out.front().width() == 0)
        out.erase(out.begin());
    return out;
}

std::string BatteryShape::str() const {
    return "[" + lambda.str() + "," + std::to_string(a) + "," + std::to_string(k) + "]";
}

void validate_battery(const BatteryShape& b) {
    if (b.k == 0)
        throw ShapeError("battery shape: k must be at least 1");
    if (b.lambda.empty()) {
        if (b.a > 0)
            throw ShapeError("battery shape: a battery column needs a nonempty base partition");
        return;
    }
    if (b.k > b.lambda[0])
        throw ShapeError("battery shape: " + b.lambda.str() + " has no column " + std::to_string(b.k));
}

}  // namespace battery

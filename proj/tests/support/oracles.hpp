#pragma once

// Test-only reference computations. Nothing here calls into the library's
// counting or series code, so the checks built on them stay independent.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct Cell {
    int row;
    int col;
    friend bool operator<(const Cell& x, const Cell& y) { return x.row != y.row ? x.row < y.row : x.col < y.col; }
    friend bool operator==(const Cell&, const Cell&) = default;
};

inline std::vector<Cell> rows_to_cells(const std::vector<std::pair<unsigned, unsigned>>& spans, int first_row = 0) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < spans.size(); ++i)
        for (unsigned c = spans[i].first; c < spans[i].second; ++c)
            cells.push_back({first_row + static_cast<int>(i), static_cast<int>(c)});
    return cells;
}

// lambda rows 0..len-1, battery rows -a..-1 in column k-1.
inline std::vector<Cell> battery_cells(const std::vector<unsigned>& lambda, unsigned a, unsigned k) {
    std::vector<std::pair<unsigned, unsigned>> spans;
    for (unsigned len : lambda)
        spans.push_back({0, len});
    auto cells = rows_to_cells(spans);
    for (unsigned i = 0; i < a; ++i)
        cells.push_back({-static_cast<int>(i) - 1, static_cast<int>(k) - 1});
    return cells;
}

// Entries increase to the right along rows and downward along columns,
// between cells that are both present and adjacent.
inline bool is_standard(const std::vector<Cell>& cells, const std::vector<unsigned>& entries) {
    std::map<Cell, unsigned> at;
    for (std::size_t i = 0; i < cells.size(); ++i)
        at[cells[i]] = entries[i];
    std::vector<unsigned> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i + 1)
            return false;
    for (const auto& [cell, v] : at) {
        auto right = at.find({cell.row, cell.col + 1});
        if (right != at.end() && right->second <= v)
            return false;
        auto down = at.find({cell.row + 1, cell.col});
        if (down != at.end() && down->second <= v)
            return false;
    }
    return true;
}

// Count standard fillings by placing 1, 2, ... one at a time into any cell
// whose left and upper neighbours (when present) are already filled.
inline std::uint64_t count_fillings(const std::vector<Cell>& cells) {
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i)
        index[cells[i]] = i;
    std::vector<bool> filled(cells.size(), false);
    auto ready = [&](std::size_t i) {
        const Cell& c = cells[i];
        for (Cell nb : {Cell{c.row, c.col - 1}, Cell{c.row - 1, c.col}}) {
            auto it = index.find(nb);
            if (it != index.end() && !filled[it->second])
                return false;
        }
        return true;
    };
    std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t placed) -> std::uint64_t {
        if (placed == cells.size())
            return 1;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (filled[i] || !ready(i))
                continue;
            filled[i] = true;
            total += rec(placed + 1);
            filled[i] = false;
        }
        return total;
    };
    return rec(0);
}

inline mpz_class rising(const mpz_class& x, unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 0; i < n; ++i)
        r *= x + i;
    return r;
}

inline mpz_class fact(unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// C(x, k) for any integer x as a falling product over k!.
inline mpz_class choose(const mpz_class& x, unsigned k) {
    mpz_class num = 1;
    for (unsigned i = 0; i < k; ++i)
        num *= x - i;
    return num / fact(k);
}

// Term n of pFq written as a closed product of rising factorials.
inline mpq_class pfq_term(const std::vector<long>& num, const std::vector<long>& den, const mpq_class& z, unsigned n) {
    mpz_class top = 1, bottom = fact(n);
    for (long a : num)
        top *= rising(a, n);
    for (long b : den)
        bottom *= rising(b, n);
    mpq_class zn = 1;
    for (unsigned i = 0; i < n; ++i)
        zn *= z;
    mpq_class out(top, bottom);
    out.canonicalize();
    return out * zn;
}

// Direct sum of a terminating pFq up to `last`.
inline mpq_class pfq_direct(const std::vector<long>& num, const std::vector<long>& den, unsigned last,
                            const mpq_class& z = 1) {
    mpq_class s = 0;
    for (unsigned n = 0; n <= last; ++n)
        s += pfq_term(num, den, z, n);
    return s;
}

// Every partition of size <= max_size, including the empty one.
inline std::vector<std::vector<unsigned>> partitions_up_to(unsigned max_size) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
        out.push_back(cur);
        for (unsigned p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_size, max_size);
    return out;
}

}  // namespace oracle

#include "battery/oracle_dp.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

namespace battery {

unsigned CellDiagram::size() const {
    unsigned s = battery_length;
    for (const auto& r : rows)
        s += r.width();
    return s;
}

CellDiagram diagram_of(const BatteryShape& shape) {
    validate_battery(shape);
    CellDiagram d;
    for (unsigned len : shape.lambda.rows())
        d.rows.push_back({0, len});
    d.battery_length = shape.a;
    d.battery_column = shape.k - 1;
    return d;
}

CellDiagram diagram_of(const SkewShape& shape) {
    return CellDiagram{skew_rows(shape), 0, 0};
}

CellDiagram diagram_of(const TruncatedShape& shape) {
    return CellDiagram{shape.rows(), 0, 0};
}

namespace {

// Moves available from a state of a fixed diagram.
class Poset {
public:
    explicit Poset(const CellDiagram& d) : d_(d) {
        if (d.battery_length > 0) {
            auto it = std::find_if(d.rows.begin(), d.rows.end(), [&](const RowSpan& r) {
                return r.begin <= d.battery_column && d.battery_column < r.end;
            });
            if (it == d.rows.end())
                throw ShapeError("battery column " + std::to_string(d.battery_column + 1) +
                                 " is not part of the diagram");
            pivot_row_ = static_cast<std::size_t>(it - d.rows.begin());
        }
    }

    bool can_fill_battery(const IdealState& s) const { return s.battery < d_.battery_length; }

    bool can_fill_row(const IdealState& s, std::size_t i) const {
        const RowSpan& r = d_.rows[i];
        if (s.fill[i] >= r.width())
            return false;
        const unsigned col = r.begin + s.fill[i];
        if (i > 0) {
            const RowSpan& up = d_.rows[i - 1];
            if (up.begin <= col && col < up.end && up.begin + s.fill[i - 1] <= col)
                return false;
        }
        if (d_.battery_length > 0 && i == pivot_row_ && col == d_.battery_column &&
            s.battery < d_.battery_length)
            return false;
        return true;
    }

    std::size_t row_count() const { return d_.rows.size(); }

private:
    const CellDiagram& d_;
    std::size_t pivot_row_ = 0;
};

struct StateHash {
    std::size_t operator()(const IdealState& s) const {
        std::size_t h = std::hash<unsigned>{}(s.battery);
        for (unsigned f : s.fill)
            h = h * 1000003u ^ f;
        return h;
    }
};

}  // namespace

Natural count_linear_extensions(const CellDiagram& diagram, const OracleOptions& options) {
    const unsigned total = diagram.size();
    if (total > options.size_cap)
        throw SizeCapExceeded("diagram has " + std::to_string(total) + " cells, above the cap of " +
                              std::to_string(options.size_cap));
    if (!is_line_convex(diagram.rows))
        throw ShapeError("oracle: diagram is not line-convex");

    const Poset poset(diagram);
    using Level = std::unordered_map<IdealState, Integer, StateHash>;
    Level level;
    level.emplace(IdealState{0, std::vector<unsigned>(diagram.rows.size(), 0)}, Integer(1));
    OracleStats stats{1, 1};

    for (unsigned step = 0; step < total; ++step) {
        Level next;
        next.reserve(level.size() * 2);
        for (const auto& [state, ways] : level) {
            if (poset.can_fill_battery(state)) {
                IdealState s = state;
                ++s.battery;
                next[std::move(s)] += ways;
            }
            for (std::size_t i = 0; i < poset.row_count(); ++i) {
                if (!poset.can_fill_row(state, i))
                    continue;
                IdealState s = state;
                ++s.fill[i];
                next[std::move(s)] += ways;
            }
        }
        level = std::move(next);
        stats.states += level.size();
        stats.widest_level = std::max(stats.widest_level, level.size());
    }

    if (options.stats)
        *options.stats = stats;
    if (level.size() != 1)
        throw std::logic_error("oracle: filling did not converge to a single full state");
    return Natural(level.begin()->second);
}

Natural count_linear_extensions(const BatteryShape& shape, const OracleOptions& options) {
    return count_linear_extensions(diagram_of(shape), options);
}

std::vector<BatteryTableau> enumerate_syt(const BatteryShape& shape, unsigned max_size) {
    const CellDiagram d = diagram_of(shape);
    const unsigned total = d.size();
    if (total > max_size)
        throw SizeCapExceeded("enumeration is limited to " + std::to_string(max_size) + " cells, shape " +
                              shape.str() + " has " + std::to_string(total));

    const Poset poset(d);
    IdealState state{0, std::vector<unsigned>(d.rows.size(), 0)};
    BatteryTableau cur;
    cur.battery.assign(d.battery_length, 0);
    for (const auto& r : d.rows)
        cur.rows.emplace_back(r.width(), 0);

    std::vector<BatteryTableau> out;
    std::function<void(unsigned)> rec = [&](unsigned next) {
        if (next > total) {
            out.push_back(cur);
            return;
        }
        if (poset.can_fill_battery(state)) {
            // Top battery cell holds the smallest battery entry.
            cur.battery[state.battery] = next;
            ++state.battery;
            rec(next + 1);
            --state.battery;
        }
        for (std::size_t i = 0; i < poset.row_count(); ++i) {
            if (!poset.can_fill_row(state, i))
                continue;
            cur.rows[i][state.fill[i]] = next;
            ++state.fill[i];
            rec(next + 1);
            --state.fill[i];
        }
    };
    rec(1);
    return out;
}

}  // namespace battery

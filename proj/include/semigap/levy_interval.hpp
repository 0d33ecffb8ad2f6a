#pragma once

// Semigroup closure for jump measures supported on unions of closed
// intervals of the nonnegative reals, the gap report for single-interval
// generators, and the rational discretization bridge to the integer
// sieve.

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "semigap/semigroup.hpp"

namespace semigap::levy {

inline constexpr double kMergeTol = 1e-12;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// Sorted disjoint closed intervals, optionally ending in a half-line
// [tail_start, inf). Touching intervals merge (tolerance kMergeTol);
// closure intervals are closed, gaps between them are open.
class IntervalSet {
public:
    IntervalSet() = default;
    static IntervalSet from_intervals(std::vector<Interval> intervals,
                                      std::optional<double> tail_start = std::nullopt);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::optional<double> tail_start() const { return tail_start_; }
    bool empty() const { return intervals_.empty() && !tail_start_; }
    double min_element() const;
    bool contains(double x, double eps = 0.0) const;

private:
    std::vector<Interval> intervals_;
    std::optional<double> tail_start_;
};

// {x + y : x in a, y in b}, merged and normalized.
IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b);

// Closure of a generator set under addition, including the empty sum {0}.
// Point generators (all widths below tolerance) fall back to the integer
// lattice: the interval stopping rule never fires on a lattice.
struct ClosureResult {
    bool lattice = false;

    // Interval form: {0} u intervals u [tail_start, inf).
    IntervalSet set;

    // Lattice form: members are lattice_span * (reduced semigroup members).
    double lattice_span = 0.0;
    semigroup::NumericalSemigroup lattice_semigroup;

    bool contains(double x, double eps = 0.0) const;
};

ClosureResult semigroup_closure(const IntervalSet& gen);

struct GapInterval {
    double lo = 0.0;
    double hi = 0.0;
    double length = 0.0;
};

// Gap structure of the closure of a single generator interval
// [c, c+delta]: gap k is ((c+delta)k, c(k+1)), nonempty while delta*k < c,
// of length c - delta*k. The initial gap (0, c) is reported separately
// and not counted. delta = 0 degenerates to the arithmetic lattice
// {0, c, 2c, ...} (flagged; infinitely many gaps).
struct IntervalGapReport {
    Interval initial_gap;
    std::vector<GapInterval> gaps;
    int count = 0;
    double tail_start = 0.0;
    bool arithmetic = false; // delta == 0
    double span = 0.0;       // lattice spacing when arithmetic
};

IntervalGapReport interval_gaps(double c, double delta);

// Integer generators {cD, cD+1, ..., (c+delta)D} on the 1/D lattice.
// c*D and (c+delta)*D must be integral (within rounding tolerance).
semigroup::GeneratorSet rational_discretize(double c, double delta,
                                            std::int64_t denominator);

nlohmann::json to_json(const IntervalGapReport& report);
nlohmann::json to_json(const ClosureResult& closure);

} // namespace semigap::levy

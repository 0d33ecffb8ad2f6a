#include "semigap/levy_interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "semigap/io_util.hpp"

namespace semigap::levy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxClosureIterations = 100000;

double merge_eps(double at) { return kMergeTol * std::max(1.0, std::abs(at)); }

std::vector<Interval> merge_sorted(std::vector<Interval> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& iv : raw) {
        if (!merged.empty() && iv.lo <= merged.back().hi + merge_eps(iv.lo)) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

// gcd over reals by Euclid with a tolerance floor; used to put point
// generators on a common lattice.
double real_gcd(double a, double b) {
    constexpr double tol = 1e-9;
    while (b > tol) {
        const double r = std::fmod(a, b);
        a = b;
        b = (r < tol || b - r < tol) ? 0.0 : r;
    }
    return a;
}

} // namespace

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals,
                                        std::optional<double> tail_start) {
    for (const Interval& iv : intervals) {
        if (!(iv.lo <= iv.hi))
            throw std::invalid_argument("interval endpoints out of order");
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("interval endpoints must be finite");
    }
    IntervalSet set;
    set.intervals_ = merge_sorted(std::move(intervals));
    set.tail_start_ = tail_start;
    if (set.tail_start_) {
        // Absorb intervals that reach into the half-line.
        while (!set.intervals_.empty()) {
            Interval& last = set.intervals_.back();
            if (last.lo >= *set.tail_start_ - merge_eps(last.lo)) {
                set.tail_start_ = std::min(*set.tail_start_, last.lo);
                set.intervals_.pop_back();
            } else if (last.hi >= *set.tail_start_ - merge_eps(last.hi)) {
                set.tail_start_ = last.lo;
                set.intervals_.pop_back();
            } else {
                break;
            }
        }
    }
    return set;
}

double IntervalSet::min_element() const {
    if (!intervals_.empty()) return intervals_.front().lo;
    if (tail_start_) return *tail_start_;
    throw std::logic_error("min_element of empty interval set");
}

bool IntervalSet::contains(double x, double eps) const {
    if (tail_start_ && x >= *tail_start_ - eps) return true;
    for (const Interval& iv : intervals_) {
        if (x < iv.lo - eps) return false;
        if (x <= iv.hi + eps) return true;
    }
    return false;
}

IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() || b.empty()) return IntervalSet();
    std::vector<Interval> sums;
    sums.reserve(a.intervals().size() * b.intervals().size());
    for (const Interval& x : a.intervals())
        for (const Interval& y : b.intervals())
            sums.push_back({x.lo + y.lo, x.hi + y.hi});

    std::optional<double> tail;
    auto propose_tail = [&tail](double t) {
        tail = tail ? std::min(*tail, t) : t;
    };
    if (a.tail_start()) propose_tail(*a.tail_start() + b.min_element());
    if (b.tail_start()) propose_tail(*b.tail_start() + a.min_element());
    return IntervalSet::from_intervals(std::move(sums), tail);
}

bool ClosureResult::contains(double x, double eps) const {
    if (lattice) {
        if (x < -eps) return false;
        const double ratio = lattice_span > 0.0 ? x / lattice_span : 0.0;
        const auto nearest = static_cast<semigroup::Value>(std::llround(ratio));
        if (std::abs(ratio - static_cast<double>(nearest)) >
            eps / std::max(lattice_span, 1e-300) + 1e-9)
            return false;
        return lattice_semigroup.contains(nearest);
    }
    return set.contains(x, eps);
}

// Iterate S <- S u (S + gen). Once some interval [lo, hi] with hi >= 2*lo
// appears, [lo, inf) is certified (doubling [lo, hi] covers every larger
// real); that lo becomes a cap. Sums of k+1 or more generator elements
// all exceed (k+1)*min, so once (k+1)*min > cap the region below the cap
// is final and the true tail start can be read off the last run.
ClosureResult semigroup_closure(const IntervalSet& gen) {
    if (gen.empty())
        throw std::invalid_argument("closure needs a nonempty generator set");
    if (gen.tail_start())
        throw std::invalid_argument("generator sets must be bounded");
    for (const Interval& iv : gen.intervals())
        if (iv.lo < 0.0)
            throw std::domain_error("generator intervals must be nonnegative");

    std::vector<Interval> points, proper;
    for (const Interval& iv : gen.intervals()) {
        if (iv.length() > merge_eps(iv.hi))
            proper.push_back(iv);
        else if (iv.lo > kMergeTol)
            points.push_back(iv); // the zero atom contributes nothing
    }

    if (!proper.empty() && !points.empty())
        throw std::domain_error(
            "mixed atomic and interval generators are not supported");

    ClosureResult result;
    if (proper.empty()) {
        // Pure lattice: map points to integers via their real gcd.
        std::vector<double> values;
        for (const Interval& p : points) values.push_back(p.lo);
        if (values.empty()) {
            result.set = IntervalSet::from_intervals({{0.0, 0.0}});
            return result;
        }
        double g = values.front();
        for (double v : values) g = real_gcd(std::max(g, v), std::min(g, v));
        std::vector<semigroup::Value> ints;
        for (double v : values) {
            const auto n = static_cast<semigroup::Value>(std::llround(v / g));
            if (std::abs(v / g - static_cast<double>(n)) > 1e-6)
                throw std::domain_error("point generators are not commensurable");
            ints.push_back(n);
        }
        const auto norm = semigroup::normalize(semigroup::GeneratorSet(ints));
        result.lattice = true;
        result.lattice_span = g * static_cast<double>(norm.span);
        result.lattice_semigroup = semigroup::sieve(norm.reduced);
        return result;
    }

    IntervalSet generators = IntervalSet::from_intervals(proper);
    const double g_min = generators.min_element();
    if (g_min <= kMergeTol) {
        // Generator interval touching zero: closure is all of [0, inf).
        result.set = IntervalSet::from_intervals({}, 0.0);
        return result;
    }

    IntervalSet sums = generators; // k-fold sums so far (k >= 1)
    double cap = kInf;
    for (int k = 1;; ++k) {
        for (const Interval& iv : sums.intervals())
            if (iv.lo > 0.0 && iv.hi >= 2.0 * iv.lo - merge_eps(iv.hi))
                cap = std::min(cap, iv.lo);

        if (cap < kInf) {
            std::vector<Interval> clipped;
            for (const Interval& iv : sums.intervals()) {
                if (iv.lo > cap + merge_eps(cap)) continue;
                clipped.push_back({iv.lo, std::min(iv.hi, cap)});
            }
            sums = IntervalSet::from_intervals(std::move(clipped));
            if (static_cast<double>(k + 1) * g_min > cap) break;
        }
        if (k > kMaxClosureIterations)
            throw std::runtime_error("interval closure failed to stabilize");
        sums = IntervalSet::from_intervals([&] {
            std::vector<Interval> next = sums.intervals();
            const IntervalSet grown = minkowski_sum(sums, generators);
            next.insert(next.end(), grown.intervals().begin(),
                        grown.intervals().end());
            return next;
        }());
    }

    std::vector<Interval> body = sums.intervals();
    double tail = cap;
    if (!body.empty() && body.back().hi >= cap - merge_eps(cap)) {
        tail = body.back().lo;
        body.pop_back();
    }
    body.insert(body.begin(), {0.0, 0.0});
    result.set = IntervalSet::from_intervals(std::move(body), tail);
    return result;
}

IntervalGapReport interval_gaps(double c, double delta) {
    if (!(c > 0.0)) throw std::domain_error("generator left endpoint must be positive");
    if (delta < 0.0) throw std::domain_error("interval width must be nonnegative");

    IntervalGapReport report;
    report.initial_gap = {0.0, c};
    if (delta == 0.0) {
        report.arithmetic = true;
        report.span = c;
        report.count = 0;
        report.tail_start = kInf;
        return report;
    }
    int k = 1;
    while (delta * k < c) {
        const double lo = (c + delta) * k;
        const double hi = c * (k + 1);
        report.gaps.push_back({lo, hi, c - delta * k});
        ++k;
    }
    report.count = static_cast<int>(report.gaps.size());
    report.tail_start = c * k; // first k with delta*k >= c
    return report;
}

semigroup::GeneratorSet rational_discretize(double c, double delta,
                                            std::int64_t denominator) {
    if (denominator < 1)
        throw std::invalid_argument("denominator must be a positive integer");
    if (!(c > 0.0)) throw std::domain_error("generator left endpoint must be positive");
    if (delta < 0.0) throw std::domain_error("interval width must be nonnegative");

    const double lo_scaled = c * static_cast<double>(denominator);
    const double hi_scaled = (c + delta) * static_cast<double>(denominator);
    const auto lo = static_cast<semigroup::Value>(std::llround(lo_scaled));
    const auto hi = static_cast<semigroup::Value>(std::llround(hi_scaled));
    constexpr double tol = 1e-6;
    if (std::abs(lo_scaled - static_cast<double>(lo)) > tol ||
        std::abs(hi_scaled - static_cast<double>(hi)) > tol)
        throw std::domain_error(
            "endpoints are not representable on the 1/D lattice");

    std::vector<semigroup::Value> gens;
    for (semigroup::Value v = lo; v <= hi; ++v) gens.push_back(v);
    return semigroup::GeneratorSet(std::move(gens));
}

nlohmann::json to_json(const IntervalGapReport& report) {
    nlohmann::json j;
    j["initial_gap"] = {io::round12(report.initial_gap.lo),
                        io::round12(report.initial_gap.hi)};
    auto gaps = nlohmann::json::array();
    for (const GapInterval& g : report.gaps)
        gaps.push_back({io::round12(g.lo), io::round12(g.hi), io::round12(g.length)});
    j["gaps"] = gaps;
    j["count"] = report.count;
    j["tail_start"] = std::isfinite(report.tail_start)
                          ? nlohmann::json(io::round12(report.tail_start))
                          : nlohmann::json(nullptr);
    if (report.arithmetic) {
        j["arithmetic"] = true;
        j["span"] = io::round12(report.span);
    }
    return j;
}

nlohmann::json to_json(const ClosureResult& closure) {
    nlohmann::json j;
    if (closure.lattice) {
        j["lattice"] = true;
        j["span"] = io::round12(closure.lattice_span);
        j["conductor"] = closure.lattice_semigroup.conductor;
        j["gaps"] = closure.lattice_semigroup.gaps;
        return j;
    }
    j["lattice"] = false;
    auto intervals = nlohmann::json::array();
    for (const Interval& iv : closure.set.intervals())
        intervals.push_back({io::round12(iv.lo), io::round12(iv.hi)});
    j["intervals"] = intervals;
    j["tail_start"] = closure.set.tail_start()
                          ? nlohmann::json(io::round12(*closure.set.tail_start()))
                          : nlohmann::json(nullptr);
    return j;
}

} // namespace semigap::levy

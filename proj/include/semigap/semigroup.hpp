#pragma once

// Additive semigroups generated by finite sets of positive integers:
// membership sieve, gaps, Frobenius number, conductor, and the gap-free
// criteria used to classify compound Poisson supports.

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

namespace semigap::semigroup {

using Value = std::int64_t;

// Nonempty set of positive integers (jump support values). Input is
// sorted and deduplicated; zero or negative entries are rejected.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Value> generators);

    const std::vector<Value>& values() const { return values_; }
    Value min() const { return values_.front(); }
    Value max() const { return values_.back(); }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<Value> values_;
};

struct Normalized {
    Value span;           // gcd of the generators
    GeneratorSet reduced; // generators / span, gcd 1
};

// Factor out the span: {4,6} -> span 2, reduced {2,3}.
Normalized normalize(const GeneratorSet& gens);

enum class Execution { serial, parallel };

struct GapRun {
    Value start;
    Value length;
    bool operator==(const GapRun&) const = default;
};

// Exact membership structure of s.g.(reduced generators), in reduced units.
// `membership` covers [0, table_limit]; every integer >= conductor is a
// member (certified by a run of min-generator consecutive members).
struct NumericalSemigroup {
    std::vector<Value> reduced_generators;
    std::vector<Value> gaps;           // sorted; empty iff gap-free
    std::optional<Value> frobenius;    // largest gap, absent when gap-free
    Value conductor = 0;               // least c with [c, inf) all members
    std::vector<std::uint8_t> membership;
    Value table_limit = 0;

    bool contains(Value v) const {
        if (v < 0) return false;
        if (v >= conductor) return true;
        return v <= table_limit && membership[static_cast<std::size_t>(v)] != 0;
    }
    // Members of the semigroup in [0, limit], ascending.
    std::vector<Value> members_up_to(Value limit) const;
};

// Dense sieve over [0, bound], doubling the bound until min(reduced)
// consecutive members certify the tail. Requires gcd(reduced) == 1.
// Serial and OpenMP residue-class variants produce identical tables.
NumericalSemigroup sieve(const GeneratorSet& reduced,
                         Execution exec = Execution::serial);

// Maximal runs of consecutive gaps, ascending by start.
std::vector<GapRun> gap_runs(const NumericalSemigroup& sg);

// True iff the support is gap-free on its span lattice. Both routes
// (1 in reduced generators; sieve gives no gaps) are evaluated and must
// agree.
bool is_gap_free(const GeneratorSet& gens);

// Values reachable with exactly n jumps: {sum n_i*y_i : sum n_i = n}.
// Built by n-fold Minkowski addition with per-step deduplication.
std::vector<Value> jump_count_values(const GeneratorSet& gens, int n);

struct GapReport {
    Value span = 1;
    std::vector<Value> generators;          // raw units
    std::vector<Value> reduced_generators;  // raw / span
    std::vector<Value> support_prefix;      // members in [0, conductor + slack]
    std::vector<Value> gaps;
    std::vector<GapRun> runs;
    std::optional<Value> frobenius;
    Value conductor = 0;
    bool gap_free = false;
};

// All counts in reduced units, with the span reported alongside.
GapReport make_gap_report(const GeneratorSet& gens, Value slack = 0);

nlohmann::json to_json(const GapReport& report);

} // namespace semigap::semigroup

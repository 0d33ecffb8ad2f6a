#include "semigap/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semigap::semigroup {

namespace {

constexpr Value kMaxTableSize = Value{1} << 28;

Value gcd_all(const std::vector<Value>& vs) {
    Value g = 0;
    for (Value v : vs) {
        g = std::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

// One unbounded-use pass for a single generator g over table[0..bound].
void apply_generator_serial(std::vector<std::uint8_t>& table, Value g) {
    const auto bound = static_cast<Value>(table.size()) - 1;
    for (Value i = g; i <= bound; ++i)
        table[static_cast<std::size_t>(i)] |=
            table[static_cast<std::size_t>(i - g)];
}

// Positions i = r, r+g, r+2g, ... form independent chains; each chain is a
// prefix-OR, so the pass parallelizes over residue classes with the exact
// same result as the serial sweep.
void apply_generator_parallel(std::vector<std::uint8_t>& table, Value g) {
    const auto bound = static_cast<Value>(table.size()) - 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (Value r = 0; r < g; ++r) {
        std::uint8_t reach = 0;
        for (Value i = r; i <= bound; i += g) {
            reach |= table[static_cast<std::size_t>(i)];
            table[static_cast<std::size_t>(i)] = reach;
        }
    }
}

std::vector<std::uint8_t> membership_table(const std::vector<Value>& gens,
                                           Value bound, Execution exec) {
    std::vector<std::uint8_t> table(static_cast<std::size_t>(bound) + 1, 0);
    table[0] = 1;
    for (Value g : gens) {
        if (g > bound) continue;
        if (exec == Execution::parallel)
            apply_generator_parallel(table, g);
        else
            apply_generator_serial(table, g);
    }
    return table;
}

// First index of a run of `run_len` consecutive members, or -1.
Value find_member_run(const std::vector<std::uint8_t>& table, Value run_len) {
    Value current = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        current = table[i] ? current + 1 : 0;
        if (current >= run_len)
            return static_cast<Value>(i) - run_len + 1;
    }
    return -1;
}

// Initial sieve bound: product of the two smallest mutually coprime
// generators when such a pair exists, else 4 * max. Doubled on demand.
Value initial_bound(const std::vector<Value>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (std::gcd(gens[i], gens[j]) == 1) return gens[i] * gens[j];
    return 4 * gens.back();
}

} // namespace

GeneratorSet::GeneratorSet(std::vector<Value> generators)
    : values_(std::move(generators)) {
    if (values_.empty())
        throw std::invalid_argument("generator set must be nonempty");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.front() < 1)
        throw std::invalid_argument("generators must be positive integers");
}

Normalized normalize(const GeneratorSet& gens) {
    const Value span = gcd_all(gens.values());
    std::vector<Value> reduced = gens.values();
    for (Value& v : reduced) v /= span;
    return Normalized{span, GeneratorSet(std::move(reduced))};
}

std::vector<Value> NumericalSemigroup::members_up_to(Value limit) const {
    std::vector<Value> out;
    for (Value v = 0; v <= limit; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

NumericalSemigroup sieve(const GeneratorSet& reduced, Execution exec) {
    const auto& gens = reduced.values();
    if (gcd_all(gens) != 1)
        throw std::invalid_argument(
            "sieve requires gcd-1 generators; call normalize first");

    const Value run_len = reduced.min();
    Value bound = std::max<Value>(initial_bound(gens), 2 * reduced.max());
    std::vector<std::uint8_t> table;
    Value run_start = -1;
    for (;;) {
        table = membership_table(gens, bound, exec);
        run_start = find_member_run(table, run_len);
        if (run_start >= 0) break;
        bound *= 2;
        if (bound > kMaxTableSize)
            throw std::runtime_error("sieve bound exceeded sanity limit");
    }

    NumericalSemigroup sg;
    sg.reduced_generators = gens;
    sg.membership = std::move(table);
    sg.table_limit = bound;

    // Everything >= run_start is a member; the largest gap sits below it.
    Value frob = -1;
    for (Value v = run_start - 1; v >= 1; --v) {
        if (!sg.membership[static_cast<std::size_t>(v)]) {
            frob = v;
            break;
        }
    }
    if (frob >= 1) {
        sg.frobenius = frob;
        sg.conductor = frob + 1;
        for (Value v = 1; v <= frob; ++v)
            if (!sg.membership[static_cast<std::size_t>(v)]) sg.gaps.push_back(v);
    } else {
        sg.frobenius = std::nullopt;
        sg.conductor = 0;
    }
    return sg;
}

std::vector<GapRun> gap_runs(const NumericalSemigroup& sg) {
    std::vector<GapRun> runs;
    for (std::size_t i = 0; i < sg.gaps.size();) {
        std::size_t j = i + 1;
        while (j < sg.gaps.size() && sg.gaps[j] == sg.gaps[j - 1] + 1) ++j;
        runs.push_back({sg.gaps[i], static_cast<Value>(j - i)});
        i = j;
    }
    return runs;
}

bool is_gap_free(const GeneratorSet& gens) {
    const Normalized norm = normalize(gens);
    const auto& reduced = norm.reduced.values();
    const bool by_generator =
        std::find(reduced.begin(), reduced.end(), Value{1}) != reduced.end();
    const bool by_sieve = sieve(norm.reduced).gaps.empty();
    if (by_generator != by_sieve)
        throw std::logic_error("gap-free criteria disagree");
    return by_generator;
}

std::vector<Value> jump_count_values(const GeneratorSet& gens, int n) {
    if (n < 0) throw std::invalid_argument("jump count must be nonnegative");
    std::vector<Value> current{0};
    for (int step = 0; step < n; ++step) {
        std::vector<Value> next;
        next.reserve(current.size() * gens.size());
        for (Value v : current)
            for (Value g : gens.values()) next.push_back(v + g);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return current;
}

GapReport make_gap_report(const GeneratorSet& gens, Value slack) {
    if (slack < 0) throw std::invalid_argument("slack must be nonnegative");
    const Normalized norm = normalize(gens);
    const NumericalSemigroup sg = sieve(norm.reduced);

    GapReport report;
    report.span = norm.span;
    report.generators = gens.values();
    report.reduced_generators = norm.reduced.values();
    report.gaps = sg.gaps;
    report.runs = gap_runs(sg);
    report.frobenius = sg.frobenius;
    report.conductor = sg.conductor;
    report.gap_free = sg.gaps.empty();
    report.support_prefix = sg.members_up_to(sg.conductor + slack);
    return report;
}

nlohmann::json to_json(const GapReport& report) {
    nlohmann::json j;
    j["span"] = report.span;
    j["generators"] = report.generators;
    j["reduced_generators"] = report.reduced_generators;
    j["support_prefix"] = report.support_prefix;
    j["gaps"] = report.gaps;
    auto runs = nlohmann::json::array();
    for (const auto& run : report.runs)
        runs.push_back({run.start, run.length});
    j["gap_runs"] = runs;
    if (report.frobenius)
        j["frobenius"] = *report.frobenius;
    else
        j["frobenius"] = nullptr;
    j["conductor"] = report.conductor;
    j["gap_free"] = report.gap_free;
    return j;
}

} // namespace semigap::semigroup

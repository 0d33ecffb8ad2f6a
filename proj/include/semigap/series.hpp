#pragma once

// Truncated power-series engine for probability generating functions:
// compound Poisson PMFs via the Panjer recursion, exp/log/pow coefficient
// recursions, n-th convolution roots, and the DID decision.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "semigap/semigroup.hpp"

namespace semigap::series {

// Coefficients c_0..c_K of a series truncated at order K. All operations
// are exact-to-order-K; there is no tail estimation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<double> coefficients);
    static TruncatedSeries zeros(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& coefficients() const { return c_; }

private:
    std::vector<double> c_;
};

// Raised when an operation needs positive mass at zero but the input has
// none (the law must be shifted to its left extremity first).
class LeftExtremityError : public std::domain_error {
public:
    LeftExtremityError()
        : std::domain_error("left extremity positive: not DID; shift first") {}
};

// b = exp(a): b_0 = exp(a_0), b_k = (1/k) sum_{j=1..k} j a_j b_{k-j}.
TruncatedSeries series_exp(const TruncatedSeries& a);
// b = log(a), a_0 > 0.
TruncatedSeries series_log(const TruncatedSeries& a);
// b = a^alpha, a_0 > 0.
TruncatedSeries series_pow(const TruncatedSeries& a, double alpha);

struct CompoundPoissonSpec {
    double rate = 1.0;                        // lambda > 0
    std::map<std::int64_t, double> jump_pmf;  // y >= 1 -> q_y > 0, sums to 1
    double time = 1.0;                        // t > 0

    void validate() const;
    std::vector<std::int64_t> jump_sizes() const;
};

// PMF prefix of X(t) by the Panjer recursion:
//   p_0 = exp(-lambda t),  p_n = (lambda t / n) sum_j j q_j p_{n-j}.
TruncatedSeries compound_poisson_pmf(const CompoundPoissonSpec& spec, int order);

// pmf^(1/n). Requires positive mass at zero (else LeftExtremityError).
TruncatedSeries nth_root(const TruncatedSeries& pmf, int n);

struct DidVerdict {
    bool is_did = false;
    std::optional<double> rate;                    // lambda-hat = -log c_0
    std::map<std::int64_t, double> jump_pmf;       // renormalized over k <= K
    std::optional<int> violation_index;
    std::optional<double> violation_value;
    bool zero_mass_at_origin = false;
};

// Compound-Poisson characterization: DID iff c_0 > 0 and every
// log-coefficient L_k (k >= 1) is nonnegative. `tol` is relative to
// max(1, lambda-hat). On failure the most negative L_k is reported; the
// recovered jump law is renormalized to account for truncated tail mass.
DidVerdict did_test(const TruncatedSeries& pmf, double tol = 1e-10);

// Indices j <= K with c_j > tol.
std::vector<int> support_indices(const TruncatedSeries& pmf, double tol);

// Absolute floor separating structural zeros from reachable mass at
// desk-scale truncation orders.
inline constexpr double kSupportFloor = 1e-250;

nlohmann::json to_json(const DidVerdict& verdict);

// CSV columns: n, p_n, member_of_semigroup. The semigroup argument is the
// sieve of the jump sizes (reduced units with span).
void write_pmf_csv(std::ostream& out, const TruncatedSeries& pmf,
                   const semigroup::NumericalSemigroup& sg,
                   semigroup::Value span);

nlohmann::json pmf_to_json(const TruncatedSeries& pmf,
                           const semigroup::NumericalSemigroup& sg,
                           semigroup::Value span);

} // namespace semigap::series

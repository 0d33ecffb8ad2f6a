#include "semigap/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semigap/io_util.hpp"

namespace semigap::series {

TruncatedSeries::TruncatedSeries(std::vector<double> coefficients)
    : c_(std::move(coefficients)) {
    if (c_.empty())
        throw std::invalid_argument("series needs at least the order-0 term");
    for (double v : c_)
        if (!std::isfinite(v))
            throw std::invalid_argument("series coefficients must be finite");
}

TruncatedSeries TruncatedSeries::zeros(int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return TruncatedSeries(std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    const int K = a.order();
    TruncatedSeries b = TruncatedSeries::zeros(K);
    b[0] = std::exp(a[0]);
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a[j] * b[k - j];
        b[k] = acc / k;
    }
    return b;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a[0] <= 0.0)
        throw std::domain_error("series_log requires a positive constant term");
    const int K = a.order();
    TruncatedSeries b = TruncatedSeries::zeros(K);
    b[0] = std::log(a[0]);
    for (int k = 1; k <= K; ++k) {
        double acc = k * a[k];
        for (int j = 1; j < k; ++j) acc -= j * b[j] * a[k - j];
        b[k] = acc / (k * a[0]);
    }
    return b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, double alpha) {
    if (a[0] <= 0.0)
        throw std::domain_error("series_pow requires a positive constant term");
    const int K = a.order();
    TruncatedSeries b = TruncatedSeries::zeros(K);
    b[0] = std::pow(a[0], alpha);
    for (int k = 1; k <= K; ++k) {
        double hi = 0.0, lo = 0.0;
        for (int j = 1; j <= k; ++j) hi += j * a[j] * b[k - j];
        for (int j = 1; j < k; ++j) lo += j * b[j] * a[k - j];
        b[k] = (alpha * hi - lo) / (k * a[0]);
    }
    return b;
}

void CompoundPoissonSpec::validate() const {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::domain_error("compound Poisson rate must be positive");
    if (!(time > 0.0) || !std::isfinite(time))
        throw std::domain_error("compound Poisson time must be positive");
    if (jump_pmf.empty())
        throw std::domain_error("jump distribution must be nonempty");
    double total = 0.0;
    for (const auto& [y, q] : jump_pmf) {
        if (y < 1)
            throw std::domain_error("jump sizes must be positive integers");
        if (!(q > 0.0))
            throw std::domain_error("jump probabilities must be positive");
        total += q;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::domain_error("jump probabilities must sum to 1");
}

std::vector<std::int64_t> CompoundPoissonSpec::jump_sizes() const {
    std::vector<std::int64_t> ys;
    ys.reserve(jump_pmf.size());
    for (const auto& [y, q] : jump_pmf) ys.push_back(y);
    return ys;
}

TruncatedSeries compound_poisson_pmf(const CompoundPoissonSpec& spec, int order) {
    spec.validate();
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    const double lt = spec.rate * spec.time;
    TruncatedSeries p = TruncatedSeries::zeros(order);
    p[0] = std::exp(-lt);
    for (int n = 1; n <= order; ++n) {
        double acc = 0.0;
        for (const auto& [y, q] : spec.jump_pmf) {
            if (y > n) break;
            acc += static_cast<double>(y) * q * p[n - static_cast<int>(y)];
        }
        p[n] = lt * acc / n;
    }
    return p;
}

TruncatedSeries nth_root(const TruncatedSeries& pmf, int n) {
    if (n < 2) throw std::invalid_argument("root order must be at least 2");
    if (pmf[0] <= 0.0) throw LeftExtremityError();
    return series_pow(pmf, 1.0 / n);
}

DidVerdict did_test(const TruncatedSeries& pmf, double tol) {
    DidVerdict verdict;
    if (pmf[0] <= 0.0) {
        verdict.is_did = false;
        verdict.zero_mass_at_origin = true;
        verdict.violation_index = 0;
        verdict.violation_value = pmf[0];
        return verdict;
    }
    const TruncatedSeries logp = series_log(pmf);
    const double lambda_hat = -logp[0];
    const double threshold = tol * std::max(1.0, lambda_hat);

    int worst_index = -1;
    double worst_value = 0.0;
    for (int k = 1; k <= logp.order(); ++k) {
        if (logp[k] < worst_value) {
            worst_value = logp[k];
            worst_index = k;
        }
    }
    if (worst_index >= 0 && worst_value < -threshold) {
        verdict.is_did = false;
        verdict.violation_index = worst_index;
        verdict.violation_value = worst_value;
        return verdict;
    }

    verdict.is_did = true;
    verdict.rate = lambda_hat;
    if (lambda_hat > 0.0) {
        double total = 0.0;
        for (int k = 1; k <= logp.order(); ++k) total += std::max(0.0, logp[k]);
        if (total > 0.0)
            for (int k = 1; k <= logp.order(); ++k) {
                const double q = std::max(0.0, logp[k]) / total;
                if (q > 0.0) verdict.jump_pmf[k] = q;
            }
    }
    return verdict;
}

std::vector<int> support_indices(const TruncatedSeries& pmf, double tol) {
    std::vector<int> idx;
    for (int k = 0; k <= pmf.order(); ++k)
        if (pmf[k] > tol) idx.push_back(k);
    return idx;
}

nlohmann::json to_json(const DidVerdict& verdict) {
    nlohmann::json j;
    j["is_did"] = verdict.is_did;
    j["rate"] = verdict.rate ? nlohmann::json(io::round12(*verdict.rate))
                             : nlohmann::json(nullptr);
    nlohmann::json jumps = nlohmann::json::object();
    for (const auto& [y, q] : verdict.jump_pmf)
        jumps[std::to_string(y)] = io::round12(q);
    j["jump_pmf"] = jumps;
    j["violation_index"] = verdict.violation_index
                               ? nlohmann::json(*verdict.violation_index)
                               : nlohmann::json(nullptr);
    j["violation_value"] = verdict.violation_value
                               ? nlohmann::json(io::round12(*verdict.violation_value))
                               : nlohmann::json(nullptr);
    return j;
}

void write_pmf_csv(std::ostream& out, const TruncatedSeries& pmf,
                   const semigroup::NumericalSemigroup& sg,
                   semigroup::Value span) {
    out << "n,p_n,member_of_semigroup\n";
    for (int n = 0; n <= pmf.order(); ++n) {
        const bool member = (n % span == 0) && sg.contains(n / span);
        out << n << ',' << io::fmt12(pmf[n]) << ',' << (member ? 1 : 0) << '\n';
    }
}

nlohmann::json pmf_to_json(const TruncatedSeries& pmf,
                           const semigroup::NumericalSemigroup& sg,
                           semigroup::Value span) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= pmf.order(); ++n) {
        const bool member = (n % span == 0) && sg.contains(n / span);
        rows.push_back({{"n", n},
                        {"p_n", io::round12(pmf[n])},
                        {"member_of_semigroup", member}});
    }
    return nlohmann::json{{"pmf", rows}};
}

} // namespace semigap::series

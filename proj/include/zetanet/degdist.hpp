#pragma once

#include "zetanet/lseries.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace zetanet {

/// Truncated degree law w_0..w_kmax.
///
/// Built from an L-family as w_k = term(k, alpha) / L(alpha) with w_0 = 0.
/// Moebius and Liouville weights can be negative; such distributions are
/// `is_signed()` and only usable as formal objects (generating functions,
/// threshold algebra), never for sampling.
class degree_distribution {
public:
    static degree_distribution from_lseries(const lseries& family, double alpha, std::uint64_t k_max);
    static degree_distribution point_mass(std::uint64_t degree);
    // Arbitrary weights indexed by degree; renormalisation is the caller's job.
    static degree_distribution from_weights(std::vector<double> weights);

    std::span<const double> weights() const { return weights_; }
    double weight(std::uint64_t k) const { return k < weights_.size() ? weights_[k] : 0.0; }
    std::uint64_t k_max() const { return weights_.size() - 1; }
    bool is_signed() const { return signed_; }
    double alpha() const { return alpha_; }
    // L(alpha); 1 for distributions not built from a family.
    double normalizer() const { return normalizer_; }
    // Bound on the absolute weight beyond k_max (0 for finite supports).
    double tail_mass() const { return tail_mass_; }
    const std::optional<lseries>& source() const { return source_; }

    // Bound on sum_{k > k_max} k^j |w_k|.
    double tail_moment_bound(int j) const;

private:
    degree_distribution() = default;

    std::vector<double> weights_;
    bool signed_ = false;
    double alpha_ = 0.0;
    double normalizer_ = 1.0;
    double tail_mass_ = 0.0;
    std::optional<lseries> source_;
};

std::pair<degree_distribution, degree_distribution>
make_bipartite_lgraph(const lseries& l1, double alpha, const lseries& l2, double beta, std::uint64_t k_max);

// E[k^j]. Closed form moment(alpha, j) / L(alpha) for family-built laws,
// the truncated sum otherwise.
double moment(const degree_distribution& d, int j);

// L(alpha - 1) / L(alpha) for Dirichlet families.
double mean_degree(const degree_distribution& d);

// E[k(k-1)] / E[k], i.e. g1'(1).
double excess_degree_slope(const degree_distribution& d);

struct gf_value {
    double value = 0.0;
    // true when the distribution is signed and the value has no
    // probabilistic meaning
    bool formal = false;
};

gf_value gf_g0(const degree_distribution& d, double x);
gf_value gf_g0_derivative(const degree_distribution& d, double x);
// g1(x) = g0'(x) / g0'(1)
gf_value gf_g1(const degree_distribution& d, double x);

// ceil(N^{1/(alpha-1)}), the natural maximum degree at sample size N.
std::uint64_t kmax_rule(std::uint64_t n, double alpha);

/// pi_{nm} = p_n q_m with n the in-degree and m the out-degree.
struct separated_joint {
    degree_distribution in;
    degree_distribution out;
};

/// pi_{nm} proportional to (w + (n + m) a)^{-alpha} on 1 <= n, m <= k_max.
class barnes_joint {
public:
    barnes_joint(double alpha, double w, double a, std::uint64_t k_max);

    double alpha() const { return alpha_; }
    double w() const { return w_; }
    double a() const { return a_; }
    std::uint64_t k_max() const { return k_max_; }
    // Untruncated mass of the support n, m >= 1.
    double normalizer() const { return normalizer_; }
    double tail_mass() const { return tail_mass_; }
    double weight(std::uint64_t n, std::uint64_t m) const;

private:
    double alpha_, w_, a_;
    std::uint64_t k_max_;
    double normalizer_ = 0.0;
    double tail_mass_ = 0.0;
};

using joint_degree_distribution = std::variant<separated_joint, barnes_joint>;

joint_degree_distribution make_directed_separated(degree_distribution p, degree_distribution q);
joint_degree_distribution make_directed_barnes(double alpha, double w, double a, std::uint64_t k_max);

// sum (n - m) pi_{nm} over the truncated support.
double joint_balance(const joint_degree_distribution& pi);
double mean_in_degree(const joint_degree_distribution& pi);
double mean_out_degree(const joint_degree_distribution& pi);
bool is_signed(const joint_degree_distribution& pi);

// Reproducibility manifest: family, exponent, k_max, tail mass.
nlohmann::json to_json(const degree_distribution& d);
nlohmann::json to_json(const joint_degree_distribution& pi);

} // namespace zetanet

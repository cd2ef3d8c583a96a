#include "zetanet/degdist.hpp"

#include "zetanet/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace zetanet {

degree_distribution degree_distribution::from_lseries(const lseries& family, double alpha, std::uint64_t k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("k_max must be at least 1");
    if (!(alpha > 1.0) || !family.converges(alpha, 0))
        throw convergence_error("degree law over " + family.name() + " needs alpha above max(1, sigma_a); got alpha = " +
                                std::to_string(alpha));
    const eval_result norm = family.eval(alpha);
    if (!(std::fabs(norm.value) > norm.tail_bound))
        throw std::domain_error("degree law over " + family.name() + ": normalizer L(alpha) is indistinguishable from 0");

    degree_distribution d;
    d.weights_.assign(k_max + 1, 0.0);
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        d.weights_[k] = family.term(k, alpha) / norm.value;
        if (d.weights_[k] < 0.0)
            d.signed_ = true;
    }
    d.alpha_ = alpha;
    d.normalizer_ = norm.value;
    d.source_ = family;
    d.tail_mass_ = family.tail_abs_bound(alpha, 0, k_max) / std::fabs(norm.value) +
                   norm.tail_bound / std::fabs(norm.value);
    return d;
}

degree_distribution degree_distribution::point_mass(std::uint64_t degree)
{
    degree_distribution d;
    d.weights_.assign(degree + 1, 0.0);
    d.weights_[degree] = 1.0;
    return d;
}

degree_distribution degree_distribution::from_weights(std::vector<double> weights)
{
    if (weights.empty())
        throw std::invalid_argument("degree distribution needs at least one weight");
    degree_distribution d;
    for (const double w : weights)
        if (w < 0.0)
            d.signed_ = true;
    d.weights_ = std::move(weights);
    return d;
}

double degree_distribution::tail_moment_bound(int j) const
{
    if (!source_)
        return 0.0;
    return source_->tail_abs_bound(alpha_, j, k_max()) / std::fabs(normalizer_);
}

std::pair<degree_distribution, degree_distribution>
make_bipartite_lgraph(const lseries& l1, double alpha, const lseries& l2, double beta, std::uint64_t k_max)
{
    return {degree_distribution::from_lseries(l1, alpha, k_max), degree_distribution::from_lseries(l2, beta, k_max)};
}

double moment(const degree_distribution& d, int j)
{
    if (d.source()) {
        const auto m = d.source()->moment(d.alpha(), j);
        return m.value / d.normalizer();
    }
    double sum = 0.0;
    const auto w = d.weights();
    for (std::size_t k = 1; k < w.size(); ++k)
        sum += std::pow(static_cast<double>(k), j) * w[k];
    return j == 0 ? sum + w[0] : sum;
}

double mean_degree(const degree_distribution& d) { return moment(d, 1); }

double excess_degree_slope(const degree_distribution& d)
{
    const double m1 = moment(d, 1);
    return (moment(d, 2) - m1) / m1;
}

gf_value gf_g0(const degree_distribution& d, double x)
{
    // Horner from the top degree
    const auto w = d.weights();
    double acc = 0.0;
    for (std::size_t k = w.size(); k-- > 0;)
        acc = acc * x + w[k];
    return {acc, d.is_signed()};
}

gf_value gf_g0_derivative(const degree_distribution& d, double x)
{
    const auto w = d.weights();
    double acc = 0.0;
    for (std::size_t k = w.size(); k-- > 1;)
        acc = acc * x + static_cast<double>(k) * w[k];
    return {acc, d.is_signed()};
}

gf_value gf_g1(const degree_distribution& d, double x)
{
    const double mean = gf_g0_derivative(d, 1.0).value;
    if (mean == 0.0)
        throw std::domain_error("g1 undefined: distribution has zero mean degree");
    return {gf_g0_derivative(d, x).value / mean, d.is_signed()};
}

std::uint64_t kmax_rule(std::uint64_t n, double alpha)
{
    if (n < 1)
        throw std::invalid_argument("kmax_rule: N must be at least 1");
    if (!(alpha > 1.0))
        throw std::invalid_argument("kmax_rule: alpha must exceed 1");
    const double raw = std::pow(static_cast<double>(n), 1.0 / (alpha - 1.0));
    const double nearest = std::round(raw);
    // exact powers (10^6 at alpha = 3) must not be bumped up by rounding noise
    if (std::fabs(raw - nearest) <= 1e-9 * std::max(1.0, raw))
        return static_cast<std::uint64_t>(nearest);
    return static_cast<std::uint64_t>(std::ceil(raw));
}

barnes_joint::barnes_joint(double alpha, double w, double a, std::uint64_t k_max)
    : alpha_(alpha), w_(w), a_(a), k_max_(k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("barnes_joint: k_max must be at least 1");
    // n, m >= 1 shifts the lattice origin to w + 2a
    const auto z = barnes_zeta(alpha, w + 2.0 * a, a);
    normalizer_ = z.value;
    double truncated = 0.0;
    for (std::uint64_t t = 2; t <= 2 * k_max; ++t) {
        const double multiplicity = static_cast<double>(t <= k_max + 1 ? t - 1 : 2 * k_max + 1 - t);
        truncated += multiplicity * std::pow(w + static_cast<double>(t) * a, -alpha);
    }
    tail_mass_ = std::max(0.0, 1.0 - truncated / normalizer_) + z.tail_bound / normalizer_;
}

double barnes_joint::weight(std::uint64_t n, std::uint64_t m) const
{
    if (n < 1 || m < 1 || n > k_max_ || m > k_max_)
        return 0.0;
    return std::pow(w_ + static_cast<double>(n + m) * a_, -alpha_) / normalizer_;
}

joint_degree_distribution make_directed_separated(degree_distribution p, degree_distribution q)
{
    return separated_joint{std::move(p), std::move(q)};
}

joint_degree_distribution make_directed_barnes(double alpha, double w, double a, std::uint64_t k_max)
{
    return barnes_joint(alpha, w, a, k_max);
}

namespace {

struct truncated_sums {
    double mass = 0.0, in = 0.0, out = 0.0;
};

double sum_weights(const degree_distribution& d, int power)
{
    double s = 0.0;
    const auto w = d.weights();
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (power == 0 ? 1.0 : static_cast<double>(k)) * w[k];
    return s;
}

truncated_sums sums(const joint_degree_distribution& pi)
{
    if (const auto* sep = std::get_if<separated_joint>(&pi)) {
        const double p0 = sum_weights(sep->in, 0), p1 = sum_weights(sep->in, 1);
        const double q0 = sum_weights(sep->out, 0), q1 = sum_weights(sep->out, 1);
        return {p0 * q0, p1 * q0, p0 * q1};
    }
    const auto& b = std::get<barnes_joint>(pi);
    truncated_sums s;
    for (std::uint64_t n = 1; n <= b.k_max(); ++n)
        for (std::uint64_t m = 1; m <= b.k_max(); ++m) {
            const double w = b.weight(n, m);
            s.mass += w;
            s.in += static_cast<double>(n) * w;
            s.out += static_cast<double>(m) * w;
        }
    return s;
}

} // namespace

double joint_balance(const joint_degree_distribution& pi)
{
    if (const auto* b = std::get_if<barnes_joint>(&pi)) {
        // pi_{nm} = pi_{mn}, so pair the (n, m) and (m, n) cells exactly
        double s = 0.0;
        for (std::uint64_t n = 1; n <= b->k_max(); ++n)
            for (std::uint64_t m = n + 1; m <= b->k_max(); ++m)
                s += (static_cast<double>(n) - static_cast<double>(m)) * b->weight(n, m) +
                     (static_cast<double>(m) - static_cast<double>(n)) * b->weight(m, n);
        return s;
    }
    const auto s = sums(pi);
    return s.in - s.out;
}

double mean_in_degree(const joint_degree_distribution& pi) { return sums(pi).in; }
double mean_out_degree(const joint_degree_distribution& pi) { return sums(pi).out; }

bool is_signed(const joint_degree_distribution& pi)
{
    if (const auto* sep = std::get_if<separated_joint>(&pi))
        return sep->in.is_signed() || sep->out.is_signed();
    return false;
}

nlohmann::json to_json(const degree_distribution& d)
{
    nlohmann::json j;
    j["family"] = d.source() ? d.source()->name() : std::string("custom");
    if (d.source() && !d.source()->is_dirichlet())
        j["k0"] = d.source()->k0();
    j["alpha"] = d.alpha();
    j["k_max"] = d.k_max();
    j["normalizer"] = d.normalizer();
    j["tail_mass"] = d.tail_mass();
    j["signed"] = d.is_signed();
    return j;
}

nlohmann::json to_json(const joint_degree_distribution& pi)
{
    if (const auto* sep = std::get_if<separated_joint>(&pi))
        return {{"structure", "separated"}, {"in", to_json(sep->in)}, {"out", to_json(sep->out)}};
    const auto& b = std::get<barnes_joint>(pi);
    return {{"structure", "barnes"}, {"alpha", b.alpha()}, {"w", b.w()}, {"a", b.a()},
            {"k_max", b.k_max()}, {"normalizer", b.normalizer()}, {"tail_mass", b.tail_mass()}};
}

} // namespace zetanet

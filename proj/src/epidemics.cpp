#include "zetanet/epidemics.hpp"

#include "zetanet/errors.hpp"
#include "zetanet/thresholds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zetanet {

transmissibility::transmissibility(double mf, double fm) : t_mf(mf), t_fm(fm)
{
    if (!(mf >= 0.0 && mf <= 1.0) || !(fm >= 0.0 && fm <= 1.0))
        throw std::invalid_argument("transmissibilities must lie in [0, 1]");
}

namespace {

void require_unsigned(const degree_distribution& d, const char* what)
{
    if (d.is_signed())
        throw signed_distribution_error(std::string(what) + ": signed degree weights have no epidemic interpretation");
}

void require_unit(double v, const char* what)
{
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

} // namespace

double dressed_gf(const degree_distribution& d, double x, double t)
{
    require_unsigned(d, "dressed_gf");
    require_unit(x, "x");
    require_unit(t, "T");
    return gf_g0(d, 1.0 + (x - 1.0) * t).value;
}

double dressed_edge_gf(const degree_distribution& d, double x, double t)
{
    require_unsigned(d, "dressed_edge_gf");
    require_unit(x, "x");
    require_unit(t, "T");
    return gf_g1(d, 1.0 + (x - 1.0) * t).value;
}

outbreak_estimate mean_outbreak_size(const degree_distribution& p, const degree_distribution& q,
                                     const transmissibility& t)
{
    require_unsigned(p, "mean_outbreak_size");
    require_unsigned(q, "mean_outbreak_size");
    // chain rule through F0(x) = f0(1 + (g1(1 + (x-1) T_fm) - 1) T_mf)
    const double f0_slope = mean_degree(p);
    const double f1_slope = excess_degree_slope(p);
    const double g1_slope = excess_degree_slope(q);
    const double transmitted = t.t_mf * t.t_fm * g1_slope;
    const double f0_prime = f0_slope * transmitted;
    const double f1_prime = f1_slope * transmitted;
    outbreak_estimate out;
    out.branching = f1_prime;
    if (f1_prime >= 1.0) {
        out.subcritical = false;
        out.mean_size = std::numeric_limits<double>::infinity();
        return out;
    }
    out.mean_size = 1.0 + f0_prime / (1.0 - f1_prime);
    return out;
}

double critical_product(const degree_distribution& p, const degree_distribution& q)
{
    return 1.0 / (excess_degree_slope(p) * excess_degree_slope(q));
}

double epidemic_threshold_product(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    if (!psi_convergent(l1, alpha, l2, beta))
        throw convergence_error("epidemic_threshold_product: (alpha, beta) = (" + std::to_string(alpha) + ", " +
                                std::to_string(beta) + ") needs " + l1.name() + " and " + l2.name() +
                                " convergent two units below the exponent");
    const double a1 = l1.moment(alpha, 1).value, a2 = l1.moment(alpha, 2).value;
    const double b1 = l2.moment(beta, 1).value, b2 = l2.moment(beta, 2).value;
    const double denominator = (a2 - a1) * (b2 - b1);
    if (denominator == 0.0 || !std::isfinite(denominator))
        throw std::domain_error("epidemic_threshold_product: degenerate denominator");
    return a1 * b1 / denominator;
}

double critical_transmissibility(const lseries& l, double alpha)
{
    if (!l.converges(alpha, 2))
        throw convergence_error("critical_transmissibility: " + l.name() + " needs alpha - 2 above its abscissa");
    const double m1 = l.moment(alpha, 1).value, m2 = l.moment(alpha, 2).value;
    return m1 / (m2 - m1);
}

std::vector<std::pair<double, double>> tc_curve(const lseries& l1, const lseries& l2, double target,
                                                const tc_window& window, std::size_t lines, double tol)
{
    std::vector<std::pair<double, double>> curve;
    if (lines < 2)
        throw std::invalid_argument("tc_curve: need at least two lines");
    const std::size_t steps = lines;
    for (std::size_t i = 0; i < lines; ++i) {
        const double alpha =
            window.alpha_min + (window.alpha_max - window.alpha_min) * static_cast<double>(i) / (lines - 1);
        auto f = [&](double beta) { return epidemic_threshold_product(l1, alpha, l2, beta) - target; };
        double prev_beta = 0.0, prev_value = 0.0;
        bool have_prev = false;
        for (std::size_t j = 0; j < steps; ++j) {
            const double beta =
                window.beta_min + (window.beta_max - window.beta_min) * static_cast<double>(j) / (steps - 1);
            if (!psi_convergent(l1, alpha, l2, beta)) {
                have_prev = false;
                continue;
            }
            const double value = f(beta);
            if (have_prev && ((value > 0.0) != (prev_value > 0.0) || value == 0.0))
                curve.emplace_back(alpha, find_critical_exponent(f, prev_beta, beta, tol));
            prev_beta = beta;
            prev_value = value;
            have_prev = true;
        }
    }
    return curve;
}

} // namespace zetanet

#include "zetanet/thresholds.hpp"

#include "zetanet/errors.hpp"

#include <cmath>
#include <sstream>

namespace zetanet {

const char* to_string(threshold_formula formula)
{
    switch (formula) {
    case threshold_formula::psi_bipartite:
        return "psi_bipartite";
    case threshold_formula::unipartite:
        return "unipartite";
    case threshold_formula::directed_separated:
        return "directed_separated";
    case threshold_formula::epidemic_product:
        return "epidemic_product";
    case threshold_formula::clustering:
        return "clustering";
    }
    return "unknown";
}

namespace {

void require(bool ok, const char* formula, const lseries& l1, double alpha, const lseries& l2, double beta,
             int shift1, int shift2)
{
    if (ok)
        return;
    std::ostringstream os;
    os << formula << ": (alpha, beta) = (" << alpha << ", " << beta << ") outside the convergence window; needs "
       << l1.name() << " at alpha - " << shift1 << " and " << l2.name() << " at beta - " << shift2
       << " above their abscissas of convergence";
    throw convergence_error(os.str());
}

threshold_result make_result(double margin, double error, threshold_formula f, const lseries& l1, double alpha,
                             const lseries& l2, double beta)
{
    return {margin, error, f, alpha, beta, l1.name(), l2.name(), true};
}

} // namespace

bool psi_convergent(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    return l1.converges(alpha, 2) && l2.converges(beta, 2);
}

bool directed_convergent(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    return l1.converges(alpha, 1) && l2.converges(beta, 1);
}

bool clustering_convergent(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    return l1.converges(alpha, 2) && l2.converges(beta, 3);
}

threshold_result psi_bipartite(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    require(psi_convergent(l1, alpha, l2, beta), "psi_bipartite", l1, alpha, l2, beta, 2, 2);
    const auto a1 = l1.moment(alpha, 1), a2 = l1.moment(alpha, 2);
    const auto b1 = l2.moment(beta, 1), b2 = l2.moment(beta, 2);
    const double psi = a2.value * b2.value - a2.value * b1.value - a1.value * b2.value;
    const double err = a2.tail_bound * (std::fabs(b2.value) + std::fabs(b1.value)) +
                       b2.tail_bound * (std::fabs(a2.value) + std::fabs(a1.value)) +
                       a1.tail_bound * std::fabs(b2.value) + b1.tail_bound * std::fabs(a2.value);
    return make_result(psi, err, threshold_formula::psi_bipartite, l1, alpha, l2, beta);
}

double psi_oracle(const degree_distribution& p, const degree_distribution& q)
{
    // Brute-force cross-check of psi_bipartite from the truncated weights.
    // Each row m of the double sum is m^2 (Q2 - Q1) - m Q2 with Qj the
    // truncated j-th moment of q.
    const auto pw = p.weights();
    const auto qw = q.weights();
    long double q1 = 0.0L, q2 = 0.0L;
    for (std::size_t n = 1; n < qw.size(); ++n) {
        const long double dn = static_cast<long double>(n);
        q1 += dn * qw[n];
        q2 += dn * dn * qw[n];
    }
    long double total = 0.0L;
    for (std::size_t m = 1; m < pw.size(); ++m) {
        const long double dm = static_cast<long double>(m);
        total += pw[m] * (dm * dm * (q2 - q1) - dm * q2);
    }
    return static_cast<double>(total);
}

double psi_oracle_truncation_bound(const degree_distribution& p, const degree_distribution& q)
{
    auto abs_moment = [](const degree_distribution& d, int j) {
        double s = 0.0;
        const auto w = d.weights();
        for (std::size_t k = 1; k < w.size(); ++k)
            s += std::pow(static_cast<double>(k), j) * std::fabs(w[k]);
        return s + d.tail_moment_bound(j);
    };
    // terms m^2 n^2, m^2 n and m n^2: pairs with either index beyond k_max
    const int powers[3][2] = {{2, 2}, {2, 1}, {1, 2}};
    double bound = 0.0;
    for (const auto& jk : powers) {
        bound += p.tail_moment_bound(jk[0]) * abs_moment(q, jk[1]);
        bound += abs_moment(p, jk[0]) * q.tail_moment_bound(jk[1]);
    }
    return bound;
}

threshold_result unipartite_margin(const lseries& l, double alpha)
{
    require(l.converges(alpha, 2), "unipartite_margin", l, alpha, l, alpha, 2, 2);
    const auto m1 = l.moment(alpha, 1), m2 = l.moment(alpha, 2);
    return make_result(m2.value - 2.0 * m1.value, m2.tail_bound + 2.0 * m1.tail_bound, threshold_formula::unipartite,
                       l, alpha, l, alpha);
}

threshold_result directed_separated_margin(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    require(directed_convergent(l1, alpha, l2, beta), "directed_separated_margin", l1, alpha, l2, beta, 1, 1);
    const auto a0 = l1.moment(alpha, 0), a1 = l1.moment(alpha, 1);
    const auto b0 = l2.moment(beta, 0), b1 = l2.moment(beta, 1);
    const double margin = 2.0 * a1.value * b1.value - a1.value * b0.value - a0.value * b1.value;
    const double err = a1.tail_bound * (2.0 * std::fabs(b1.value) + std::fabs(b0.value)) +
                       b1.tail_bound * (2.0 * std::fabs(a1.value) + std::fabs(a0.value)) +
                       a0.tail_bound * std::fabs(b1.value) + b0.tail_bound * std::fabs(a1.value);
    return make_result(margin, err, threshold_formula::directed_separated, l1, alpha, l2, beta);
}

double directed_joint_margin(const joint_degree_distribution& pi)
{
    if (const auto* sep = std::get_if<separated_joint>(&pi)) {
        // (2nm - n - m) p_n q_m factorises over the product support
        const auto pw = sep->in.weights();
        const auto qw = sep->out.weights();
        double p0 = 0.0, p1 = 0.0, q0 = 0.0, q1 = 0.0;
        for (std::size_t n = 0; n < pw.size(); ++n) {
            p0 += pw[n];
            p1 += static_cast<double>(n) * pw[n];
        }
        for (std::size_t m = 0; m < qw.size(); ++m) {
            q0 += qw[m];
            q1 += static_cast<double>(m) * qw[m];
        }
        return 2.0 * p1 * q1 - p1 * q0 - p0 * q1;
    }
    const auto& b = std::get<barnes_joint>(pi);
    // weights depend on n + m only; walk the anti-diagonals
    double total = 0.0;
    for (std::uint64_t t = 2; t <= 2 * b.k_max(); ++t) {
        const std::uint64_t lo = t > b.k_max() ? t - b.k_max() : 1;
        const std::uint64_t hi = std::min<std::uint64_t>(t - 1, b.k_max());
        double diag = 0.0;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const double dn = static_cast<double>(n), dm = static_cast<double>(t - n);
            diag += 2.0 * dn * dm - dn - dm;
        }
        total += diag * b.weight(lo, t - lo);
    }
    return total;
}

clustering_result clustering_formula(const lseries& l1, double alpha, const lseries& l2, double beta)
{
    require(clustering_convergent(l1, alpha, l2, beta), "clustering_formula", l1, alpha, l2, beta, 2, 3);
    const double a1 = l1.moment(alpha, 1).value, a2 = l1.moment(alpha, 2).value;
    const double b1 = l2.moment(beta, 1).value, b2 = l2.moment(beta, 2).value, b3 = l2.moment(beta, 3).value;
    const double f_beta = 2.0 * b1 - 3.0 * b2 + b3;
    const double spread = b2 - b1;
    const double value = a1 * b1 * f_beta / ((a2 - a1) * spread * spread + 1.0);
    return {value, f_beta, value >= 0.0 && value <= 1.0};
}

double find_critical_exponent(const std::function<double(double)>& margin, double lo, double hi, double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("find_critical_exponent: tolerance must be positive");
    if (lo > hi)
        std::swap(lo, hi);
    double flo = margin(lo);
    const double fhi = margin(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream os;
        os << "find_critical_exponent: no sign change on [" << lo << ", " << hi << "] (margins " << flo << ", " << fhi
           << ")";
        throw no_sign_change_error(os.str());
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fm = margin(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace zetanet

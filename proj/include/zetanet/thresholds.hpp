#pragma once

#include "zetanet/degdist.hpp"
#include "zetanet/lseries.hpp"

#include <functional>
#include <string>

namespace zetanet {

enum class threshold_formula { psi_bipartite, unipartite, directed_separated, epidemic_product, clustering };

const char* to_string(threshold_formula formula);

/// Value of a threshold expression at (alpha, beta). Positive margin means
/// the supercritical side (giant cluster present).
struct threshold_result {
    double margin = 0.0;
    // propagated from the tail bounds of the L-values involved
    double error_bound = 0.0;
    threshold_formula formula = threshold_formula::psi_bipartite;
    double alpha = 0.0;
    double beta = 0.0;
    std::string family1;
    std::string family2;
    bool convergent = true;
};

// Domain predicates matching the evaluators below; the evaluators throw
// convergence_error whenever these are false.
bool psi_convergent(const lseries& l1, double alpha, const lseries& l2, double beta);
bool directed_convergent(const lseries& l1, double alpha, const lseries& l2, double beta);
bool clustering_convergent(const lseries& l1, double alpha, const lseries& l2, double beta);

/// Psi = L1(a-2) L2(b-2) - L1(a-2) L2(b-1) - L1(a-1) L2(b-2)
///
/// Written with the order-j moments of each family, which coincide with
/// the shifted values L(a - j) for Dirichlet series. Psi > 0 is necessary
/// for a giant cluster, Psi = 0 is the critical surface.
threshold_result psi_bipartite(const lseries& l1, double alpha, const lseries& l2, double beta);

// sum_{m,n} mn(mn - m - n) p_m q_n over the truncated supports. Equals
// Psi / (L1(alpha) L2(beta)) in the untruncated limit.
double psi_oracle(const degree_distribution& p, const degree_distribution& q);

// Bound on |psi_oracle(p, q) - untruncated double sum| from the tails of p
// and q beyond their k_max.
double psi_oracle_truncation_bound(const degree_distribution& p, const degree_distribution& q);

// L(alpha - 2) - 2 L(alpha - 1)
threshold_result unipartite_margin(const lseries& l, double alpha);

// 2 L1(a-1) L2(b-1) - L1(a-1) L2(b) - L1(a) L2(b-1); >= 0 is the
// giant-component regime of the directed separated model.
threshold_result directed_separated_margin(const lseries& l1, double alpha, const lseries& l2, double beta);

// sum (2nm - n - m) pi_{nm} over the truncated support.
double directed_joint_margin(const joint_degree_distribution& pi);

struct clustering_result {
    double value = 0.0;
    // 2 L2(b-1) - 3 L2(b-2) + L2(b-3)
    double f_beta = 0.0;
    // false means the expression left [0, 1]; the value is not clamped
    bool in_unit_interval = true;
};

clustering_result clustering_formula(const lseries& l1, double alpha, const lseries& l2, double beta);

// Bisection to a bracket of width <= tol. Throws no_sign_change_error when
// the end points do not straddle a root.
double find_critical_exponent(const std::function<double(double)>& margin, double lo, double hi, double tol);

} // namespace zetanet

#pragma once

#include "zetanet/degdist.hpp"
#include "zetanet/lseries.hpp"

#include <utility>
#include <vector>

namespace zetanet {

/// Per-edge transmission probabilities between the two populations:
/// t_mf from type A ("m") to type B ("f"), t_fm back.
struct transmissibility {
    double t_mf = 0.0;
    double t_fm = 0.0;

    transmissibility() = default;
    transmissibility(double mf, double fm);
};

// g(1 + (x - 1) T): generating function of the transmitted-edge count when
// each edge independently transmits with probability T.
double dressed_gf(const degree_distribution& d, double x, double t);
// Same dressing applied to the edge-following function g1.
double dressed_edge_gf(const degree_distribution& d, double x, double t);

struct outbreak_estimate {
    // +inf at or above threshold
    double mean_size = 1.0;
    bool subcritical = true;
    // F1'(1) = T_mf T_fm f1'(1) g1'(1); the threshold is where it reaches 1
    double branching = 0.0;
};

// <s> = 1 + F0'(1) / (1 - F1'(1)) for an outbreak seeded in population A,
// counting infected A individuals.
outbreak_estimate mean_outbreak_size(const degree_distribution& p, const degree_distribution& q,
                                     const transmissibility& t);

// 1 / (f1'(1) g1'(1)) computed from distribution moments.
double critical_product(const degree_distribution& p, const degree_distribution& q);

/// T_mf T_fm at the epidemic threshold of a bipartite L-graph:
/// L1(a-1) L2(b-1) / ([L1(a-2) - L1(a-1)] [L2(b-2) - L2(b-1)]).
double epidemic_threshold_product(const lseries& l1, double alpha, const lseries& l2, double beta);

// zeta(a-1) / (zeta(a-2) - zeta(a-1)): the symmetric one-family value of T
// with T_mf = T_fm = T.
double critical_transmissibility(const lseries& l, double alpha);

struct tc_window {
    double alpha_min, alpha_max, beta_min, beta_max;
};

// Points (alpha, beta) where epidemic_threshold_product equals `target`,
// found by bisection along beta on `lines` equally spaced alpha values.
std::vector<std::pair<double, double>> tc_curve(const lseries& l1, const lseries& l2, double target,
                                                const tc_window& window, std::size_t lines = 200,
                                                double tol = 1e-10);

} // namespace zetanet

#pragma once

#include "zetanet/lseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zetanet {

enum class phase { super, sub, outside };

const char* to_string(phase p);

struct scan_window {
    double alpha_min = 0.0, alpha_max = 0.0, beta_min = 0.0, beta_max = 0.0;
};

/// A threshold expression over the (alpha, beta) plane. `margin` is only
/// called where `convergent` holds; margin > 0 is the SUPER phase.
struct margin_formula {
    std::string tag;
    std::function<bool(double, double)> convergent;
    std::function<double(double, double)> margin;
    scan_window default_window;
};

// Giant-cluster condition of a bipartite L-graph (sign of Psi).
margin_formula psi_formula(const lseries& l1, const lseries& l2, std::string tag = "psi");
// Directed separated condition 2 L1(a-1) L2(b-1) - L1(a-1) L2(b) - L1(a) L2(b-1).
margin_formula directed_formula(const lseries& l1, const lseries& l2, std::string tag = "direct");
// target - epidemic_threshold_product: positive where an epidemic with
// T_mf T_fm = target spreads.
margin_formula epidemic_formula(const lseries& l1, const lseries& l2, double target, std::string tag = "epid");

// Named scans: "bipthr" (Liouville/Liouville Psi), "dirthr" (Liouville
// directed), "mixthr" (Liouville/Moebius Psi), "epidliouv" (Liouville
// epidemic product at 0.5), "zeta_psi" (zeta/zeta Psi).
margin_formula formula_by_tag(const std::string& tag);
std::vector<std::string> known_formula_tags();

struct scan_options {
    std::size_t alpha_resolution = 200;
    std::size_t beta_resolution = 200;
    // bisection stops once |margin| <= tol
    double tol = scan_tolerance;
    unsigned threads = 0;
};

struct phase_scan_result {
    std::string formula;
    scan_window window;
    // bounding box of the convergent cells
    scan_window clipped_window;
    bool clipped = false;
    std::vector<double> alpha_grid;
    std::vector<double> beta_grid;
    // row-major, alpha outer; empty where the formula does not converge
    std::vector<std::optional<double>> margin;
    std::vector<std::pair<double, double>> zero_curve;
    double tol = scan_tolerance;

    const std::optional<double>& at(std::size_t i, std::size_t j) const { return margin[i * beta_grid.size() + j]; }
    phase label(std::size_t i, std::size_t j) const;
};

/// Evaluates the margin on the grid (in parallel), then bisects every grid
/// segment whose end points have opposite signs, first along beta for each
/// alpha row, then along alpha for each beta column. Throws
/// convergence_error when no grid cell converges.
phase_scan_result scan(const margin_formula& formula, const scan_window& window, const scan_options& options = {});

void export_csv(const phase_scan_result& result, const std::string& path);
void export_json(const phase_scan_result& result, const std::string& path);

// Reads a CSV written by export_csv (and its .curve.csv companion if present).
phase_scan_result import_csv(const std::string& path);

// <tag>_<resolution>.csv
std::string default_scan_filename(const std::string& tag, std::size_t resolution);

} // namespace zetanet

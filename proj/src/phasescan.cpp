#include "zetanet/phasescan.hpp"

#include "zetanet/epidemics.hpp"
#include "zetanet/errors.hpp"
#include "zetanet/parallel.hpp"
#include "zetanet/thresholds.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zetanet {

const char* to_string(phase p)
{
    switch (p) {
    case phase::super:
        return "SUPER";
    case phase::sub:
        return "SUB";
    case phase::outside:
        return "OUTSIDE";
    }
    return "OUTSIDE";
}

namespace {

constexpr double window_margin = 0.05;

std::string format17(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

// Bisects f on [x0, x1] (opposite end signs) until |f| <= tol. Returns
// nothing when the sign change is a pole rather than a root.
std::optional<double> refine_root(const std::function<double(double)>& f, double x0, double f0, double x1, double tol)
{
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = f(mid);
        if (std::fabs(fm) <= tol)
            return mid;
        if (mid <= std::min(x0, x1) || mid >= std::max(x0, x1))
            return std::nullopt;
        if ((fm > 0.0) == (f0 > 0.0)) {
            x0 = mid;
            f0 = fm;
        } else {
            x1 = mid;
        }
    }
    return std::nullopt;
}

} // namespace

phase phase_scan_result::label(std::size_t i, std::size_t j) const
{
    const auto& m = at(i, j);
    if (!m)
        return phase::outside;
    return *m > 0.0 ? phase::super : phase::sub;
}

margin_formula psi_formula(const lseries& l1, const lseries& l2, std::string tag)
{
    return {std::move(tag), [=](double a, double b) { return psi_convergent(l1, a, l2, b); },
            [=](double a, double b) { return psi_bipartite(l1, a, l2, b).margin; },
            {3.0 + window_margin, 6.0, 3.0 + window_margin, 6.0}};
}

margin_formula directed_formula(const lseries& l1, const lseries& l2, std::string tag)
{
    return {std::move(tag), [=](double a, double b) { return directed_convergent(l1, a, l2, b); },
            [=](double a, double b) { return directed_separated_margin(l1, a, l2, b).margin; },
            {1.0 + window_margin, 4.0, 1.0 + window_margin, 4.0}};
}

margin_formula epidemic_formula(const lseries& l1, const lseries& l2, double target, std::string tag)
{
    return {std::move(tag), [=](double a, double b) { return psi_convergent(l1, a, l2, b); },
            [=](double a, double b) { return target - epidemic_threshold_product(l1, a, l2, b); },
            {3.0 + window_margin, 6.0, 3.0 + window_margin, 6.0}};
}

margin_formula formula_by_tag(const std::string& tag)
{
    if (tag == "bipthr")
        return psi_formula(lseries::liouville(), lseries::liouville(), tag);
    if (tag == "dirthr")
        return directed_formula(lseries::liouville(), lseries::liouville(), tag);
    if (tag == "mixthr")
        return psi_formula(lseries::liouville(), lseries::mobius(), tag);
    if (tag == "epidliouv")
        return epidemic_formula(lseries::liouville(), lseries::liouville(), 0.5, tag);
    if (tag == "zeta_psi")
        return psi_formula(lseries::zeta(), lseries::zeta(), tag);
    throw std::invalid_argument("unknown scan formula '" + tag + "'");
}

std::vector<std::string> known_formula_tags() { return {"bipthr", "dirthr", "mixthr", "epidliouv", "zeta_psi"}; }

phase_scan_result scan(const margin_formula& formula, const scan_window& window, const scan_options& options)
{
    if (options.alpha_resolution < 2 || options.beta_resolution < 2)
        throw std::invalid_argument("scan resolution must be at least 2 per axis");
    if (!(window.alpha_max > window.alpha_min) || !(window.beta_max > window.beta_min))
        throw std::invalid_argument("scan window is empty");

    phase_scan_result r;
    r.formula = formula.tag;
    r.window = window;
    r.tol = options.tol;
    r.alpha_grid = linspace(window.alpha_min, window.alpha_max, options.alpha_resolution);
    r.beta_grid = linspace(window.beta_min, window.beta_max, options.beta_resolution);
    const std::size_t na = r.alpha_grid.size(), nb = r.beta_grid.size();
    r.margin.assign(na * nb, std::nullopt);

    // cells are written by index, so worker count cannot change the output
    parallel_for(na * nb, options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            const double a = r.alpha_grid[c / nb], b = r.beta_grid[c % nb];
            if (!formula.convergent(a, b))
                continue;
            const double m = formula.margin(a, b);
            if (std::isfinite(m))
                r.margin[c] = m;
        }
    });

    scan_window box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    bool any = false;
    for (std::size_t c = 0; c < na * nb; ++c) {
        if (!r.margin[c])
            continue;
        any = true;
        box.alpha_min = std::min(box.alpha_min, r.alpha_grid[c / nb]);
        box.alpha_max = std::max(box.alpha_max, r.alpha_grid[c / nb]);
        box.beta_min = std::min(box.beta_min, r.beta_grid[c % nb]);
        box.beta_max = std::max(box.beta_max, r.beta_grid[c % nb]);
    }
    if (!any) {
        std::ostringstream os;
        os << "scan '" << formula.tag << "': window [" << window.alpha_min << ", " << window.alpha_max << "] x ["
           << window.beta_min << ", " << window.beta_max << "] lies wholly outside the convergence region";
        throw convergence_error(os.str());
    }
    r.clipped_window = box;
    r.clipped = box.alpha_min != window.alpha_min || box.alpha_max != window.alpha_max ||
                box.beta_min != window.beta_min || box.beta_max != window.beta_max;

    // one bisection job per grid line: alpha rows first, then beta columns
    const std::size_t lines = na + nb;
    std::vector<std::vector<std::pair<double, double>>> found(lines);
    parallel_for(lines, options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t line = begin; line < end; ++line) {
            const bool row = line < na;
            const std::size_t fixed = row ? line : line - na;
            const std::size_t steps = row ? nb : na;
            auto cell = [&](std::size_t k) -> const std::optional<double>& {
                return row ? r.at(fixed, k) : r.at(k, fixed);
            };
            auto coord = [&](std::size_t k) { return row ? r.beta_grid[k] : r.alpha_grid[k]; };
            const double fixed_value = row ? r.alpha_grid[fixed] : r.beta_grid[fixed];
            const std::function<double(double)> f = [&](double x) {
                return row ? formula.margin(fixed_value, x) : formula.margin(x, fixed_value);
            };
            for (std::size_t k = 0; k + 1 < steps; ++k) {
                const auto& m0 = cell(k);
                const auto& m1 = cell(k + 1);
                if (!m0 || !m1 || (*m0 > 0.0) == (*m1 > 0.0))
                    continue;
                if (const auto root = refine_root(f, coord(k), *m0, coord(k + 1), options.tol))
                    found[line].push_back(row ? std::make_pair(fixed_value, *root) : std::make_pair(*root, fixed_value));
            }
        }
    });
    for (const auto& pts : found)
        r.zero_curve.insert(r.zero_curve.end(), pts.begin(), pts.end());
    return r;
}

std::string default_scan_filename(const std::string& tag, std::size_t resolution)
{
    return tag + "_" + std::to_string(resolution) + ".csv";
}

void export_csv(const phase_scan_result& result, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "alpha,beta,margin,phase\n";
    for (std::size_t i = 0; i < result.alpha_grid.size(); ++i)
        for (std::size_t j = 0; j < result.beta_grid.size(); ++j) {
            const auto& m = result.at(i, j);
            out << format17(result.alpha_grid[i]) << ',' << format17(result.beta_grid[j]) << ','
                << (m ? format17(*m) : std::string()) << ',' << to_string(result.label(i, j)) << '\n';
        }
    std::ofstream curve(path + ".curve.csv");
    if (!curve)
        throw std::runtime_error("cannot open '" + path + ".curve.csv' for writing");
    curve << "alpha,beta\n";
    for (const auto& [a, b] : result.zero_curve)
        curve << format17(a) << ',' << format17(b) << '\n';
    if (!out || !curve)
        throw std::runtime_error("write to '" + path + "' failed");
}

void export_json(const phase_scan_result& result, const std::string& path)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["formula"] = result.formula;
    auto window = [](const scan_window& w) {
        return nlohmann::json{{"alpha_min", w.alpha_min}, {"alpha_max", w.alpha_max},
                              {"beta_min", w.beta_min},   {"beta_max", w.beta_max}};
    };
    j["window"] = window(result.window);
    j["clipped_window"] = window(result.clipped_window);
    j["clipped"] = result.clipped;
    j["tol"] = result.tol;
    j["alpha_grid"] = result.alpha_grid;
    j["beta_grid"] = result.beta_grid;
    auto& cells = j["cells"] = nlohmann::json::array();
    for (std::size_t i = 0; i < result.alpha_grid.size(); ++i)
        for (std::size_t jj = 0; jj < result.beta_grid.size(); ++jj) {
            const auto& m = result.at(i, jj);
            cells.push_back({{"alpha", result.alpha_grid[i]},
                             {"beta", result.beta_grid[jj]},
                             {"margin", m ? nlohmann::json(*m) : nlohmann::json(nullptr)},
                             {"phase", to_string(result.label(i, jj))}});
        }
    auto& curve = j["zero_curve"] = nlohmann::json::array();
    for (const auto& [a, b] : result.zero_curve)
        curve.push_back({{"alpha", a}, {"beta", b}});

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(1) << '\n';
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, const std::string& path)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::runtime_error("'" + path + "': malformed number '" + s + "'");
    return v;
}

} // namespace

phase_scan_result import_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "alpha,beta,margin,phase")
        throw std::runtime_error("'" + path + "': header must be alpha,beta,margin,phase");

    phase_scan_result r;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = split_csv(line);
        if (f.size() != 4)
            throw std::runtime_error("'" + path + "': expected 4 columns in '" + line + "'");
        const double a = parse_double(f[0], path), b = parse_double(f[1], path);
        if (r.alpha_grid.empty() || r.alpha_grid.back() != a)
            r.alpha_grid.push_back(a);
        if (r.alpha_grid.size() == 1)
            r.beta_grid.push_back(b);
        r.margin.push_back(f[2].empty() ? std::nullopt : std::optional<double>(parse_double(f[2], path)));
    }
    if (r.margin.size() != r.alpha_grid.size() * r.beta_grid.size())
        throw std::runtime_error("'" + path + "': rows do not form a full grid");
    if (!r.alpha_grid.empty())
        r.window = {r.alpha_grid.front(), r.alpha_grid.back(), r.beta_grid.front(), r.beta_grid.back()};

    std::ifstream curve(path + ".curve.csv");
    if (curve && std::getline(curve, line)) {
        while (std::getline(curve, line)) {
            if (line.empty())
                continue;
            const auto f = split_csv(line);
            if (f.size() != 2)
                throw std::runtime_error("'" + path + ".curve.csv': expected 2 columns");
            r.zero_curve.emplace_back(parse_double(f[0], path), parse_double(f[1], path));
        }
    }
    return r;
}

} // namespace zetanet

#include "zetanet/arith.hpp"
#include "zetanet/epidemics.hpp"
#include "zetanet/errors.hpp"
#include "zetanet/parallel.hpp"
#include "zetanet/phasescan.hpp"
#include "zetanet/sampler.hpp"
#include "zetanet/thresholds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace zetanet;
using nlohmann::json;

namespace {

enum exit_code { ok = 0, usage = 1, domain = 2, sampling = 3 };

struct global_options {
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::string outdir = ".";
};

struct family_options {
    std::string l1 = "zeta";
    std::string l2;
    double alpha = 3.5;
    std::optional<double> beta;
    double k0 = 0.0;

    lseries first() const { return lseries::by_name(l1, k0); }
    lseries second() const { return lseries::by_name(l2.empty() ? l1 : l2, k0); }
    double second_exponent() const { return beta.value_or(alpha); }
};

void add_family_options(CLI::App* cmd, family_options& f)
{
    const auto families = CLI::IsMember({"zeta", "mobius", "liouville", "hurwitz", "unit"});
    cmd->add_option("--l1", f.l1, "family of the first degree law")->check(families)->capture_default_str();
    cmd->add_option("--l2", f.l2, "family of the second degree law (defaults to --l1)")->check(families);
    cmd->add_option("--alpha", f.alpha, "exponent of the first law")->capture_default_str();
    cmd->add_option("--beta", f.beta, "exponent of the second law (defaults to --alpha)");
    cmd->add_option("--k0", f.k0, "Hurwitz shift")->capture_default_str();
}

const char* phase_label(double margin) { return margin > 0.0 ? "SUPER" : margin < 0.0 ? "SUB" : "CRITICAL"; }

// Every option of the root and the selected subcommand, as given or defaulted.
json resolved_config(const CLI::App& app, const CLI::App* cmd)
{
    json cfg = json::object();
    auto collect = [&](const CLI::App& a, json& into) {
        for (const CLI::Option* opt : a.get_options()) {
            const std::string name = opt->get_single_name();
            if (name.empty() || name == "help" || name == "config")
                continue;
            if (opt->count() > 0) {
                const auto& res = opt->results();
                into[name] = res.size() == 1 ? json(res.front()) : json(res);
            } else if (opt->get_type_size() == 0) {
                into[name] = false;
            } else {
                const auto def = opt->get_default_str();
                into[name] = def.empty() ? json(nullptr) : json(def);
            }
        }
    };
    collect(app, cfg);
    if (cmd) {
        cfg["command"] = cmd->get_name();
        collect(*cmd, cfg[cmd->get_name()]);
    }
    return cfg;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::filesystem::path in_outdir(const global_options& g, const std::string& file)
{
    const std::filesystem::path p(file);
    if (p.is_absolute() || g.outdir == ".")
        return p;
    std::filesystem::create_directories(g.outdir);
    return std::filesystem::path(g.outdir) / p;
}

void write_config(const std::filesystem::path& path, const json& cfg)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << cfg.dump(2) << '\n';
}

json eval_json(const eval_result& r)
{
    return {{"value", r.value}, {"tail_bound", r.tail_bound}, {"terms_used", r.terms_used}};
}

// ---------------------------------------------------------------- eval

struct eval_options {
    std::string family = "zeta";
    double s = 2.0;
    double k0 = 0.0;
    double tol = default_tolerance;
    std::uint64_t series_terms = 0;
};

void run_eval(const eval_options& o, json& out)
{
    const auto l = lseries::by_name(o.family, o.k0);
    const auto r = l.eval(o.s, o.tol);
    out["family"] = l.name();
    out["s"] = o.s;
    out["closed_form"] = to_string(l.form());
    out["result"] = eval_json(r);
    if (o.series_terms > 0)
        out["series"] = eval_json(l.series(o.s, o.series_terms));
    std::cerr << l.name() << "(" << o.s << ") = " << r.value << " (tail bound " << r.tail_bound << ")\n";
}

// ---------------------------------------------------------------- threshold

struct threshold_options {
    std::string kind = "bipartite";
    family_options fam;
    std::optional<double> t_mf, t_fm;
    double lo = 3.1, hi = 4.0, tol = 1e-12;
};

void run_threshold(const threshold_options& o, json& out)
{
    const auto l1 = o.fam.first();
    const auto l2 = o.fam.second();
    const double a = o.fam.alpha, b = o.fam.second_exponent();
    out["kind"] = o.kind;
    out["alpha"] = a;
    out["beta"] = b;
    out["l1"] = l1.name();
    out["l2"] = l2.name();
    auto put = [&](const threshold_result& r) {
        out["margin"] = r.margin;
        out["error_bound"] = r.error_bound;
        out["formula"] = to_string(r.formula);
        out["phase"] = phase_label(r.margin);
        std::cerr << to_string(r.formula) << " margin " << r.margin << " -> " << phase_label(r.margin) << '\n';
    };
    if (o.kind == "bipartite") {
        put(psi_bipartite(l1, a, l2, b));
    } else if (o.kind == "unipartite") {
        out.erase("beta");
        out.erase("l2");
        put(unipartite_margin(l1, a));
    } else if (o.kind == "directed") {
        put(directed_separated_margin(l1, a, l2, b));
    } else if (o.kind == "clustering") {
        const auto c = clustering_formula(l1, a, l2, b);
        out["clustering"] = c.value;
        out["f_beta"] = c.f_beta;
        out["in_unit_interval"] = c.in_unit_interval;
        std::cerr << "clustering formula " << c.value << (c.in_unit_interval ? "" : " (outside [0, 1])") << '\n';
    } else if (o.kind == "epidemic") {
        const double product = epidemic_threshold_product(l1, a, l2, b);
        out["critical_product"] = product;
        if (product >= 0.0)
            out["critical_t_symmetric"] = std::sqrt(product);
        if (o.t_mf || o.t_fm) {
            const transmissibility t(o.t_mf.value_or(1.0), o.t_fm.value_or(1.0));
            const double margin = t.t_mf * t.t_fm - product;
            out["margin"] = margin;
            out["phase"] = phase_label(margin);
        }
        std::cerr << "epidemic threshold T_mf T_fm = " << product << '\n';
    } else if (o.kind == "critical") {
        out.erase("alpha");
        out.erase("beta");
        out.erase("l2");
        const double root = find_critical_exponent([&](double x) { return unipartite_margin(l1, x).margin; }, o.lo, o.hi, o.tol);
        out["critical_alpha"] = root;
        out["residual"] = unipartite_margin(l1, root).margin;
        std::cerr << "critical exponent " << root << '\n';
    }
}

// ---------------------------------------------------------------- scan

struct scan_cli_options {
    std::string eq = "bipthr";
    std::size_t res = 200;
    std::optional<std::size_t> alpha_res, beta_res;
    std::vector<double> window;
    double tol = scan_tolerance;
    std::string out;
    std::string format = "csv";
};

void run_scan(const scan_cli_options& o, const global_options& g, const json& cfg, json& out)
{
    const auto f = formula_by_tag(o.eq);
    scan_window w = f.default_window;
    if (!o.window.empty())
        w = {o.window[0], o.window[1], o.window[2], o.window[3]};
    const scan_options so{o.alpha_res.value_or(o.res), o.beta_res.value_or(o.res), o.tol, g.threads};
    const auto r = scan(f, w, so);

    const auto base = in_outdir(g, o.out.empty() ? default_scan_filename(o.eq, o.res) : o.out);
    json files = json::array();
    if (o.format == "csv" || o.format == "both") {
        export_csv(r, base.string());
        files.push_back(base.string());
        files.push_back(base.string() + ".curve.csv");
    }
    if (o.format == "json" || o.format == "both") {
        auto jpath = base;
        jpath.replace_extension(".json");
        export_json(r, jpath.string());
        files.push_back(jpath.string());
    }
    const auto cfg_path = base.string() + ".config.json";
    write_config(cfg_path, cfg);
    files.push_back(cfg_path);

    std::size_t super = 0, sub = 0, outside = 0;
    for (std::size_t i = 0; i < r.alpha_grid.size(); ++i)
        for (std::size_t j = 0; j < r.beta_grid.size(); ++j)
            switch (r.label(i, j)) {
            case phase::super:
                ++super;
                break;
            case phase::sub:
                ++sub;
                break;
            case phase::outside:
                ++outside;
                break;
            }
    out["formula"] = r.formula;
    out["window"] = {w.alpha_min, w.alpha_max, w.beta_min, w.beta_max};
    out["clipped"] = r.clipped;
    out["clipped_window"] = {r.clipped_window.alpha_min, r.clipped_window.alpha_max, r.clipped_window.beta_min,
                             r.clipped_window.beta_max};
    out["cells"] = {{"SUPER", super}, {"SUB", sub}, {"OUTSIDE", outside}};
    out["zero_curve_points"] = r.zero_curve.size();
    out["files"] = files;
    if (r.clipped)
        std::cerr << "window clipped to the convergence region [" << r.clipped_window.alpha_min << ", "
                  << r.clipped_window.alpha_max << "] x [" << r.clipped_window.beta_min << ", "
                  << r.clipped_window.beta_max << "]\n";
    std::cerr << o.eq << ": " << super << " SUPER, " << sub << " SUB, " << outside << " OUTSIDE cells, "
              << r.zero_curve.size() << " zero-curve points\n";
}

// ---------------------------------------------------------------- sample

struct sample_options {
    bool bipartite = false;
    bool directed = false;
    family_options fam;
    std::uint32_t n = 10000;
    std::optional<std::uint32_t> n_b;
    std::optional<std::uint64_t> kmax;
    std::optional<std::vector<double>> barnes;
    std::size_t replicates = 1;
    std::vector<std::string> measure;
    std::string edges;
};

void run_sample(const sample_options& o, const global_options& g, const json& cfg, json& out)
{
    const bool directed = o.directed;
    const double a = o.fam.alpha, b = o.fam.second_exponent();
    const std::uint32_t n_b = o.n_b.value_or(o.n);
    json reps = json::array();
    auto wants = [&](const std::string& m) { return std::find(o.measure.begin(), o.measure.end(), m) != o.measure.end(); };

    std::optional<joint_degree_distribution> pi;
    std::optional<std::pair<degree_distribution, degree_distribution>> laws;
    if (directed && o.barnes) {
        const auto& bw = *o.barnes;
        pi = make_directed_barnes(a, bw.at(0), bw.at(1), o.kmax.value_or(kmax_rule(o.n, a)));
        out["model"] = to_json(*pi);
    } else {
        const auto k1 = o.kmax.value_or(kmax_rule(o.n, a));
        const auto k2 = o.kmax.value_or(kmax_rule(directed ? o.n : n_b, b));
        laws.emplace(degree_distribution::from_lseries(o.fam.first(), a, k1),
                     degree_distribution::from_lseries(o.fam.second(), b, k2));
        if (directed) {
            pi = make_directed_separated(laws->first, laws->second);
            out["model"] = to_json(*pi);
            const auto m = directed_separated_margin(o.fam.first(), a, o.fam.second(), b);
            out["analytic_margin"] = m.margin;
            out["analytic_phase"] = phase_label(m.margin);
        } else {
            out["model"] = {{"a", to_json(laws->first)}, {"b", to_json(laws->second)}};
            if (psi_convergent(o.fam.first(), a, o.fam.second(), b)) {
                const auto m = psi_bipartite(o.fam.first(), a, o.fam.second(), b);
                out["analytic_margin"] = m.margin;
                out["analytic_phase"] = phase_label(m.margin);
            }
        }
    }

    for (std::size_t r = 0; r < o.replicates; ++r) {
        const auto seed = derive_seed(g.seed, r);
        const auto sample = directed ? build_directed(*pi, o.n, seed) : sample_bipartite(laws->first, laws->second, o.n, n_b, seed);
        json rep = manifest(sample);
        if (wants("giant"))
            rep["giant_fraction"] = giant_component_fraction(sample);
        if (wants("clustering") && !directed) {
            const auto proj = one_mode_projection(sample, side::a);
            rep["measured_clustering"] = measured_clustering(proj);
            if (clustering_convergent(o.fam.first(), a, o.fam.second(), b))
                rep["formula_clustering"] = clustering_formula(o.fam.first(), a, o.fam.second(), b).value;
        }
        if (r == 0 && !o.edges.empty()) {
            const auto path = in_outdir(g, o.edges);
            std::ofstream ef(path);
            if (!ef)
                throw std::runtime_error("cannot write '" + path.string() + "'");
            write_edge_list(sample, ef);
            rep["edge_list"] = path.string();
            write_config(path.string() + ".config.json", cfg);
        }
        std::cerr << "replicate " << r << " (seed " << seed << "): " << sample.edges.size() << " edges";
        if (rep.contains("giant_fraction"))
            std::cerr << ", giant fraction " << rep["giant_fraction"].get<double>();
        std::cerr << '\n';
        reps.push_back(rep);
    }
    out["mode"] = directed ? "directed" : "bipartite";
    out["replicates"] = reps;
}

// ---------------------------------------------------------------- percolate

struct percolate_options {
    family_options fam;
    std::uint32_t n = 100000;
    std::optional<std::uint64_t> kmax;
    std::optional<double> t_mf, t_fm;
    std::optional<double> sweep;
    std::size_t trials = 1000;
    double cutoff = 0.01;
};

json stats_json(const outbreak_statistics& s)
{
    return {{"mean_outbreak_a", s.mean_outbreak_a},
            {"mean_outbreak_total", s.mean_outbreak_total},
            {"giant_fraction", s.giant_fraction},
            {"mean_small_outbreak", s.mean_small_outbreak},
            {"trials", s.trials}};
}

void run_percolate(const percolate_options& o, const global_options& g, json& out)
{
    const double a = o.fam.alpha, b = o.fam.second_exponent();
    const auto p = degree_distribution::from_lseries(o.fam.first(), a, o.kmax.value_or(kmax_rule(o.n, a)));
    const auto q = degree_distribution::from_lseries(o.fam.second(), b, o.kmax.value_or(kmax_rule(o.n, b)));
    const auto sample = sample_bipartite(p, q, o.n, o.n, g.seed);
    out["graph"] = manifest(sample);
    if (psi_convergent(o.fam.first(), a, o.fam.second(), b)) {
        const double product = epidemic_threshold_product(o.fam.first(), a, o.fam.second(), b);
        out["critical_product"] = product;
        out["critical_t_symmetric"] = std::sqrt(product);
    }
    if (o.sweep) {
        const auto sw = outbreak_onset_sweep(sample, *o.sweep, o.trials, g.seed, o.cutoff, g.threads);
        json pts = json::array();
        for (const auto& pt : sw.points) {
            auto j = stats_json(pt.stats);
            j["t"] = pt.t;
            pts.push_back(j);
        }
        out["sweep"] = pts;
        out["onset"] = sw.onset ? json(*sw.onset) : json(nullptr);
        out["last_quiet"] = sw.last_quiet;
        if (sw.onset)
            std::cerr << "giant outbreaks appear between T = " << sw.last_quiet << " and " << *sw.onset << '\n';
        else
            std::cerr << "no giant outbreak up to T = 1\n";
    } else {
        const transmissibility t(o.t_mf.value_or(1.0), o.t_fm.value_or(o.t_mf.value_or(1.0)));
        const auto s = sir_percolation(sample, t, o.trials, g.seed, o.cutoff, g.threads);
        out["t_mf"] = t.t_mf;
        out["t_fm"] = t.t_fm;
        out["statistics"] = stats_json(s);
        if (!p.is_signed() && !q.is_signed()) {
            const auto est = mean_outbreak_size(p, q, t);
            out["analytic_mean_outbreak"] = std::isfinite(est.mean_size) ? json(est.mean_size) : json(nullptr);
            out["analytic_subcritical"] = est.subcritical;
        }
        std::cerr << "mean outbreak " << s.mean_outbreak_a << " A-individuals, giant fraction " << s.giant_fraction << '\n';
    }
}

// ---------------------------------------------------------------- algebra

struct algebra_options {
    std::string op = "convolve";
    std::string f = "unit";
    std::string g = "mobius";
    std::uint64_t n = 100;
    std::size_t show = 20;
};

arithmetic_function named_function(const std::string& name, std::uint64_t n)
{
    if (name == "unit")
        return unit_function(n);
    if (name == "mobius")
        return mobius_function(n);
    if (name == "liouville")
        return liouville_function(n);
    if (name == "phi")
        return euler_phi_function(n);
    if (name == "id")
        return identity_function(n);
    if (name == "epsilon")
        return epsilon_function(n);
    throw std::invalid_argument("unknown arithmetic function '" + name + "'");
}

void run_algebra(const algebra_options& o, json& out)
{
    const auto f = named_function(o.f, o.n);
    out["op"] = o.op;
    out["n"] = o.n;
    std::optional<arithmetic_function> result;
    if (o.op == "convolve") {
        result = dirichlet_convolve(f, named_function(o.g, o.n), o.n);
    } else if (o.op == "pointwise") {
        result = pointwise_product(f, named_function(o.g, o.n));
    } else if (o.op == "inverse") {
        result = dirichlet_inverse_cm(f);
    } else if (o.op == "verify") {
        const auto c = verify_multiplicative(f, o.n);
        out["function"] = o.f;
        out["kind"] = to_string(f.kind());
        out["passed"] = c.passed;
        out["witness"] = c.witness ? json{c.witness->first, c.witness->second} : json(nullptr);
        std::cerr << o.f << (c.passed ? " passes" : " fails") << " the multiplicativity check up to " << o.n << '\n';
        return;
    }
    out["kind"] = to_string(result->kind());
    const auto v = result->values();
    out["values"] = std::vector<std::int64_t>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(o.show, v.size())));
    out["equals_epsilon"] = *result == epsilon_function(o.n);
    std::cerr << o.op << " computed up to n = " << o.n << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zetanet: random graphs from L-functions, their thresholds and Monte Carlo checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "read options from a key = value file (flags override it)");
    app.allow_config_extras(CLI::config_extras_mode::error);

    global_options g;
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->envname("ZETANET_THREADS")->capture_default_str();
    app.add_option("--seed", g.seed, "base random seed")->capture_default_str();
    app.add_option("--outdir", g.outdir, "directory for output files")->capture_default_str();

    eval_options eo;
    auto* eval = app.add_subcommand("eval", "evaluate an L-series");
    eval->add_option("--family", eo.family, "zeta, mobius, liouville, hurwitz or unit")
        ->check(CLI::IsMember({"zeta", "mobius", "liouville", "hurwitz", "unit"}))
        ->capture_default_str();
    eval->add_option("--s", eo.s, "real argument")->required();
    eval->add_option("--k0", eo.k0, "Hurwitz shift")->capture_default_str();
    eval->add_option("--tol", eo.tol, "target truncation error")->capture_default_str();
    eval->add_option("--series-terms", eo.series_terms, "also report the partial sum with this many terms");

    threshold_options to;
    auto* threshold = app.add_subcommand("threshold", "evaluate a threshold condition");
    threshold->add_option("--kind", to.kind, "bipartite, unipartite, directed, clustering, epidemic or critical")
        ->check(CLI::IsMember({"bipartite", "unipartite", "directed", "clustering", "epidemic", "critical"}))
        ->capture_default_str();
    add_family_options(threshold, to.fam);
    threshold->add_option("--t-mf", to.t_mf, "transmissibility A to B (epidemic)");
    threshold->add_option("--t-fm", to.t_fm, "transmissibility B to A (epidemic)");
    threshold->add_option("--lo", to.lo, "lower bracket (critical)")->capture_default_str();
    threshold->add_option("--hi", to.hi, "upper bracket (critical)")->capture_default_str();
    threshold->add_option("--tol", to.tol, "bracket width (critical)")->capture_default_str();

    scan_cli_options so;
    auto* scan_cmd = app.add_subcommand("scan", "phase diagram over (alpha, beta)");
    scan_cmd->add_option("--eq", so.eq, "bipthr, dirthr, mixthr, epidliouv or zeta_psi")
        ->check(CLI::IsMember(known_formula_tags()))
        ->capture_default_str();
    scan_cmd->add_option("--res", so.res, "grid points per axis")->check(CLI::Range(2, 100000))->capture_default_str();
    scan_cmd->add_option("--alpha-res", so.alpha_res, "grid points along alpha")->check(CLI::Range(2, 100000));
    scan_cmd->add_option("--beta-res", so.beta_res, "grid points along beta")->check(CLI::Range(2, 100000));
    scan_cmd->add_option("--window", so.window, "alpha_min alpha_max beta_min beta_max")->expected(4);
    scan_cmd->add_option("--tol", so.tol, "zero-curve tolerance on |margin|")->capture_default_str();
    scan_cmd->add_option("--out", so.out, "CSV path (default <eq>_<res>.csv)");
    scan_cmd->add_option("--format", so.format, "csv, json or both")
        ->check(CLI::IsMember({"csv", "json", "both"}))
        ->capture_default_str();

    sample_options sa;
    auto* sample = app.add_subcommand("sample", "draw configuration-model graphs");
    auto* bip_flag = sample->add_flag("--bipartite", sa.bipartite, "bipartite L-graph (default)");
    sample->add_flag("--directed", sa.directed, "directed model")->excludes(bip_flag);
    add_family_options(sample, sa.fam);
    sample->add_option("--n", sa.n, "vertices (per side for bipartite graphs)")->capture_default_str();
    sample->add_option("--n-b", sa.n_b, "type-B vertices (defaults to --n)");
    sample->add_option("--kmax", sa.kmax, "degree truncation (default ceil(N^{1/(alpha-1)}))");
    sample->add_option("--barnes", sa.barnes, "directed Barnes model with parameters w a")->expected(2);
    sample->add_option("--replicates", sa.replicates, "independent samples")->capture_default_str();
    sample->add_option("--measure", sa.measure, "giant and/or clustering")
        ->check(CLI::IsMember({"giant", "clustering"}));
    sample->add_option("--edges", sa.edges, "write the first replicate's edge list here");

    percolate_options po;
    auto* percolate = app.add_subcommand("percolate", "SIR bond percolation on a bipartite L-graph");
    add_family_options(percolate, po.fam);
    percolate->add_option("--n", po.n, "vertices per side")->capture_default_str();
    percolate->add_option("--kmax", po.kmax, "degree truncation");
    percolate->add_option("--t-mf", po.t_mf, "transmissibility A to B")->check(CLI::Range(0.0, 1.0));
    percolate->add_option("--t-fm", po.t_fm, "transmissibility B to A (defaults to --t-mf)")->check(CLI::Range(0.0, 1.0));
    percolate->add_option("--sweep", po.sweep, "sweep T_mf = T_fm = T in this step instead")->check(CLI::Range(1e-3, 1.0));
    percolate->add_option("--trials", po.trials, "seeded outbreaks per transmissibility")->capture_default_str();
    percolate->add_option("--cutoff", po.cutoff, "giant outbreak size as a fraction of all vertices")->capture_default_str();

    algebra_options ao;
    auto* algebra = app.add_subcommand("algebra", "Dirichlet-ring operations on arithmetic functions");
    const auto fnames = CLI::IsMember({"unit", "mobius", "liouville", "phi", "id", "epsilon"});
    algebra->add_option("--op", ao.op, "convolve, pointwise, inverse or verify")
        ->check(CLI::IsMember({"convolve", "pointwise", "inverse", "verify"}))
        ->capture_default_str();
    algebra->add_option("--f", ao.f, "first function")->check(fnames)->capture_default_str();
    algebra->add_option("--g", ao.g, "second function")->check(fnames)->capture_default_str();
    algebra->add_option("--n", ao.n, "table length")->check(CLI::Range(1, 10000000))->capture_default_str();
    algebra->add_option("--show", ao.show, "values printed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const json cfg = resolved_config(app, chosen);
    json out{{"command", chosen->get_name()}, {"config", cfg}};
    try {
        if (chosen == eval)
            run_eval(eo, out);
        else if (chosen == threshold)
            run_threshold(to, out);
        else if (chosen == scan_cmd)
            run_scan(so, g, cfg, out);
        else if (chosen == sample)
            run_sample(sa, g, cfg, out);
        else if (chosen == percolate)
            run_percolate(po, g, out);
        else if (chosen == algebra)
            run_algebra(ao, out);
    } catch (const convergence_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    } catch (const balance_error& e) {
        std::cerr << "sampling failed: " << e.what() << '\n';
        return sampling;
    } catch (const signed_distribution_error& e) {
        std::cerr << "sampling failed: " << e.what() << '\n';
        return sampling;
    } catch (const no_sign_change_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    emit(out);
    return ok;
}

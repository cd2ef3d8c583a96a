#include "zetanet/sampler.hpp"

#include "zetanet/errors.hpp"
#include "zetanet/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zetanet {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_index(rng_t& rng, std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

// Union-find with path halving and union by size.
class disjoint_set {
public:
    explicit disjoint_set(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::uint32_t largest()
    {
        std::uint32_t best = 0;
        for (std::uint32_t v = 0; v < parent_.size(); ++v)
            if (parent_[v] == v)
                best = std::max(best, size_[v]);
        return best;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

using degree_draw = std::function<std::uint32_t(rng_t&)>;

std::int64_t total(const std::vector<std::uint32_t>& seq)
{
    return std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
}

// Redraw degrees on the lighter side, keeping a redraw only when it moves
// the totals closer. Returns the number of redraw attempts.
std::uint64_t balance_totals(std::vector<std::uint32_t>& first, std::vector<std::uint32_t>& second,
                             const degree_draw& draw_first, const degree_draw& draw_second, rng_t& rng)
{
    std::int64_t diff = total(first) - total(second);
    const std::uint64_t budget = 1000 * static_cast<std::uint64_t>(std::llabs(diff));
    std::uint64_t attempts = 0;
    while (diff != 0) {
        if (attempts >= budget)
            throw balance_error("could not balance stub totals within " + std::to_string(budget) +
                                " redraws; residual imbalance " + std::to_string(diff));
        ++attempts;
        const bool first_lighter = diff < 0;
        auto& seq = first_lighter ? first : second;
        const auto v = uniform_index(rng, seq.size());
        const std::uint32_t fresh = first_lighter ? draw_first(rng) : draw_second(rng);
        const std::int64_t delta = static_cast<std::int64_t>(fresh) - static_cast<std::int64_t>(seq[v]);
        const std::int64_t next = first_lighter ? diff + delta : diff - delta;
        if (std::llabs(next) < std::llabs(diff)) {
            seq[v] = fresh;
            diff = next;
        }
    }
    return attempts;
}

std::vector<std::uint32_t> stubs_of(const std::vector<std::uint32_t>& degrees)
{
    std::vector<std::uint32_t> stubs;
    stubs.reserve(static_cast<std::size_t>(total(degrees)));
    for (std::uint32_t v = 0; v < degrees.size(); ++v)
        stubs.insert(stubs.end(), degrees[v], v);
    return stubs;
}

// Pairs the i-th stub of `left` with a uniformly shuffled `right`.
std::vector<std::pair<std::uint32_t, std::uint32_t>> match_stubs(const std::vector<std::uint32_t>& left_degrees,
                                                                 const std::vector<std::uint32_t>& right_degrees,
                                                                 rng_t& rng)
{
    const auto left = stubs_of(left_degrees);
    auto right = stubs_of(right_degrees);
    std::shuffle(right.begin(), right.end(), rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        edges[i] = {left[i], right[i]};
    return edges;
}

degree_draw empirical_draw(std::vector<std::uint32_t> snapshot)
{
    return [snap = std::move(snapshot)](rng_t& rng) { return snap[uniform_index(rng, snap.size())]; };
}

void require_unsigned(const degree_distribution& d)
{
    if (d.is_signed())
        throw signed_distribution_error("cannot sample a signed degree law (negative weights)");
}

// CSR adjacency of the undirected skeleton (or of one bipartite side).
struct adjacency {
    std::vector<std::size_t> offset;
    std::vector<std::uint32_t> target;

    std::size_t degree(std::uint32_t v) const { return offset[v + 1] - offset[v]; }
};

adjacency build_adjacency(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs)
{
    adjacency adj;
    adj.offset.assign(n + 1, 0);
    for (const auto& [u, v] : arcs)
        ++adj.offset[u + 1];
    for (std::size_t i = 0; i < n; ++i)
        adj.offset[i + 1] += adj.offset[i];
    adj.target.resize(arcs.size());
    auto cursor = adj.offset;
    for (const auto& [u, v] : arcs)
        adj.target[cursor[u]++] = v;
    return adj;
}

} // namespace

rng_t make_rng(std::uint64_t seed) { return rng_t(splitmix64(seed)); }

double uniform01(rng_t& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

const char* to_string(graph_mode mode)
{
    switch (mode) {
    case graph_mode::bipartite:
        return "bipartite";
    case graph_mode::directed:
        return "directed";
    case graph_mode::unipartite:
        return "unipartite";
    }
    return "unknown";
}

degree_sampler::degree_sampler(const degree_distribution& d)
{
    require_unsigned(d);
    cumulative_.resize(d.weights().size());
    std::partial_sum(d.weights().begin(), d.weights().end(), cumulative_.begin());
    if (!(cumulative_.back() > 0.0))
        throw std::invalid_argument("degree law has no mass");
}

std::uint32_t degree_sampler::operator()(rng_t& rng) const
{
    const double u = uniform01(rng) * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto k = static_cast<std::size_t>(it - cumulative_.begin());
    return static_cast<std::uint32_t>(std::min(k, cumulative_.size() - 1));
}

std::vector<std::uint32_t> sample_degree_sequence(const degree_distribution& d, std::size_t n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("sample_degree_sequence: N must be at least 1");
    const degree_sampler draw(d);
    auto rng = make_rng(seed);
    std::vector<std::uint32_t> seq(n);
    for (auto& k : seq)
        k = draw(rng);
    return seq;
}

graph_sample build_bipartite(std::vector<std::uint32_t> seq_a, std::vector<std::uint32_t> seq_b, std::uint64_t seed)
{
    if (seq_a.empty() || seq_b.empty())
        throw std::invalid_argument("build_bipartite: both degree sequences must be nonempty");
    auto rng = make_rng(seed);
    const auto draw_a = empirical_draw(seq_a);
    const auto draw_b = empirical_draw(seq_b);
    graph_sample g;
    g.redraws = balance_totals(seq_a, seq_b, draw_a, draw_b, rng);
    g.mode = graph_mode::bipartite;
    g.n_a = static_cast<std::uint32_t>(seq_a.size());
    g.n_b = static_cast<std::uint32_t>(seq_b.size());
    g.edges = match_stubs(seq_a, seq_b, rng);
    g.k_max = std::max(*std::max_element(seq_a.begin(), seq_a.end()), *std::max_element(seq_b.begin(), seq_b.end()));
    g.degrees_a = std::move(seq_a);
    g.degrees_b = std::move(seq_b);
    g.seed = seed;
    return g;
}

graph_sample sample_bipartite(const degree_distribution& p, const degree_distribution& q, std::uint32_t n_a,
                              std::uint32_t n_b, std::uint64_t seed)
{
    if (n_a < 1 || n_b < 1)
        throw std::invalid_argument("sample_bipartite: both sides need at least one vertex");
    const degree_sampler draw_p(p), draw_q(q);
    auto rng = make_rng(seed);
    std::vector<std::uint32_t> seq_a(n_a), seq_b(n_b);
    for (auto& k : seq_a)
        k = draw_p(rng);
    for (auto& k : seq_b)
        k = draw_q(rng);
    graph_sample g;
    g.redraws = balance_totals(seq_a, seq_b, std::cref(draw_p), std::cref(draw_q), rng);
    g.mode = graph_mode::bipartite;
    g.n_a = n_a;
    g.n_b = n_b;
    g.edges = match_stubs(seq_a, seq_b, rng);
    g.degrees_a = std::move(seq_a);
    g.degrees_b = std::move(seq_b);
    g.seed = seed;
    g.k_max = std::max(p.k_max(), q.k_max());
    return g;
}

graph_sample build_directed(const joint_degree_distribution& pi, std::uint32_t n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("build_directed: need at least one vertex");
    auto rng = make_rng(seed);
    std::vector<std::uint32_t> in(n), out(n);
    graph_sample g;
    g.mode = graph_mode::directed;
    g.n_a = n;
    g.seed = seed;

    if (const auto* sep = std::get_if<separated_joint>(&pi)) {
        const degree_sampler draw_in(sep->in), draw_out(sep->out);
        for (std::uint32_t v = 0; v < n; ++v) {
            in[v] = draw_in(rng);
            out[v] = draw_out(rng);
        }
        g.redraws = balance_totals(in, out, std::cref(draw_in), std::cref(draw_out), rng);
        g.k_max = std::max(sep->in.k_max(), sep->out.k_max());
    } else {
        const auto& b = std::get<barnes_joint>(pi);
        const std::uint64_t k = b.k_max();
        std::vector<double> cumulative(k * k);
        double acc = 0.0;
        for (std::uint64_t i = 0; i < k * k; ++i) {
            acc += b.weight(i / k + 1, i % k + 1);
            cumulative[i] = acc;
        }
        auto draw_pair = [&](rng_t& r) {
            const double u = uniform01(r) * cumulative.back();
            auto idx = static_cast<std::uint64_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                                  cumulative.begin());
            idx = std::min<std::uint64_t>(idx, k * k - 1);
            return std::make_pair(static_cast<std::uint32_t>(idx / k + 1), static_cast<std::uint32_t>(idx % k + 1));
        };
        for (std::uint32_t v = 0; v < n; ++v)
            std::tie(in[v], out[v]) = draw_pair(rng);
        // in and out are correlated, so whole (in, out) pairs are redrawn
        std::int64_t diff = total(in) - total(out);
        const std::uint64_t budget = 1000 * static_cast<std::uint64_t>(std::llabs(diff));
        while (diff != 0) {
            if (g.redraws >= budget)
                throw balance_error("could not balance in/out stubs within " + std::to_string(budget) + " redraws");
            ++g.redraws;
            const auto v = uniform_index(rng, n);
            const auto [fresh_in, fresh_out] = draw_pair(rng);
            const std::int64_t next = diff + (static_cast<std::int64_t>(fresh_in) - in[v]) -
                                      (static_cast<std::int64_t>(fresh_out) - out[v]);
            if (std::llabs(next) < std::llabs(diff)) {
                in[v] = fresh_in;
                out[v] = fresh_out;
                diff = next;
            }
        }
        g.k_max = k;
    }
    // out-stubs in vertex order, in-stubs shuffled: edge u -> v
    g.edges = match_stubs(out, in, rng);
    g.degrees_a = std::move(in);
    g.degrees_b = std::move(out);
    return g;
}

double giant_component_fraction(const graph_sample& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return 0.0;
    disjoint_set ds(n);
    const std::uint32_t offset = g.mode == graph_mode::bipartite ? g.n_a : 0;
    for (const auto& [u, v] : g.edges)
        ds.unite(u, v + offset);
    return static_cast<double>(ds.largest()) / static_cast<double>(n);
}

graph_sample one_mode_projection(const graph_sample& g, side which)
{
    if (g.mode != graph_mode::bipartite)
        throw std::invalid_argument("one_mode_projection needs a bipartite sample");
    const bool keep_a = which == side::a;
    const std::uint32_t n_keep = keep_a ? g.n_a : g.n_b;
    const std::uint32_t n_hub = keep_a ? g.n_b : g.n_a;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges)
        arcs.emplace_back(keep_a ? b : a, keep_a ? a : b);
    const auto hubs = build_adjacency(n_hub, arcs);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> members;
    for (std::uint32_t h = 0; h < n_hub; ++h) {
        members.assign(hubs.target.begin() + static_cast<std::ptrdiff_t>(hubs.offset[h]),
                       hubs.target.begin() + static_cast<std::ptrdiff_t>(hubs.offset[h + 1]));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    graph_sample out;
    out.mode = graph_mode::unipartite;
    out.n_a = n_keep;
    out.seed = g.seed;
    out.k_max = g.k_max;
    out.degrees_a.assign(n_keep, 0);
    for (const auto& [u, v] : edges) {
        ++out.degrees_a[u];
        ++out.degrees_a[v];
    }
    out.edges = std::move(edges);
    return out;
}

double measured_clustering(const graph_sample& g)
{
    if (g.mode != graph_mode::unipartite)
        throw std::invalid_argument("measured_clustering needs a unipartite (projected) sample");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(2 * g.edges.size());
    for (const auto& [u, v] : g.edges) {
        if (u == v)
            throw std::invalid_argument("measured_clustering needs a simple graph (self-loop found)");
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    auto adj = build_adjacency(g.n_a, arcs);
    for (std::uint32_t v = 0; v < g.n_a; ++v)
        std::sort(adj.target.begin() + static_cast<std::ptrdiff_t>(adj.offset[v]),
                  adj.target.begin() + static_cast<std::ptrdiff_t>(adj.offset[v + 1]));

    double triples = 0.0;
    for (std::uint32_t v = 0; v < g.n_a; ++v) {
        const double d = static_cast<double>(adj.degree(v));
        triples += d * (d - 1.0) / 2.0;
    }
    if (triples == 0.0)
        return 0.0;

    // each triangle u < v < w counted once, from its lowest edge (u, v)
    std::uint64_t triangles = 0;
    for (const auto& [u0, v0] : g.edges) {
        const std::uint32_t u = std::min(u0, v0), v = std::max(u0, v0);
        auto a = adj.target.begin() + static_cast<std::ptrdiff_t>(adj.offset[u]);
        const auto a_end = adj.target.begin() + static_cast<std::ptrdiff_t>(adj.offset[u + 1]);
        auto b = adj.target.begin() + static_cast<std::ptrdiff_t>(adj.offset[v]);
        const auto b_end = adj.target.begin() + static_cast<std::ptrdiff_t>(adj.offset[v + 1]);
        a = std::upper_bound(a, a_end, v);
        b = std::upper_bound(b, b_end, v);
        while (a != a_end && b != b_end) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else {
                ++triangles;
                ++a;
                ++b;
            }
        }
    }
    return 3.0 * static_cast<double>(triangles) / triples;
}

outbreak_statistics sir_percolation(const graph_sample& g, const transmissibility& t, std::size_t trials,
                                    std::uint64_t seed, double giant_cutoff, unsigned threads)
{
    if (g.mode != graph_mode::bipartite)
        throw std::invalid_argument("sir_percolation needs a bipartite sample");
    if (g.n_a == 0)
        throw std::invalid_argument("sir_percolation: no type-A vertices to seed");
    if (trials == 0)
        throw std::invalid_argument("sir_percolation: need at least one trial");

    // vertices 0..n_a-1 are A, n_a.. are B; arcs in both directions
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(2 * g.edges.size());
    for (const auto& [a, b] : g.edges) {
        arcs.emplace_back(a, b + g.n_a);
        arcs.emplace_back(b + g.n_a, a);
    }
    const auto adj = build_adjacency(n, arcs);
    const double cutoff = giant_cutoff * static_cast<double>(n);

    std::vector<std::uint64_t> size_a(trials), size_total(trials);
    parallel_for(trials, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> stamp(n, 0);
        std::vector<std::uint32_t> queue;
        queue.reserve(1024);
        std::uint32_t epoch = 0;
        for (std::size_t trial = begin; trial < end; ++trial) {
            auto rng = make_rng(derive_seed(seed, trial));
            ++epoch;
            const auto source = static_cast<std::uint32_t>(uniform_index(rng, g.n_a));
            queue.assign(1, source);
            stamp[source] = epoch;
            std::uint64_t infected_a = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const std::uint32_t u = queue[head];
                const bool from_a = u < g.n_a;
                infected_a += from_a ? 1 : 0;
                const double p = from_a ? t.t_mf : t.t_fm;
                // each infected vertex tries each incident edge once, so lazy
                // coin flips equal a pre-drawn percolation configuration
                for (std::size_t e = adj.offset[u]; e < adj.offset[u + 1]; ++e) {
                    const std::uint32_t v = adj.target[e];
                    if (stamp[v] == epoch)
                        continue;
                    if (p < 1.0 && !(uniform01(rng) < p))
                        continue;
                    stamp[v] = epoch;
                    queue.push_back(v);
                }
            }
            size_a[trial] = infected_a;
            size_total[trial] = queue.size();
        }
    });

    outbreak_statistics stats;
    stats.trials = trials;
    std::uint64_t sum_a = 0, sum_total = 0, giant = 0, small_sum = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        sum_a += size_a[i];
        sum_total += size_total[i];
        if (static_cast<double>(size_total[i]) >= cutoff)
            ++giant;
        else
            small_sum += size_a[i];
    }
    stats.mean_outbreak_a = static_cast<double>(sum_a) / static_cast<double>(trials);
    stats.mean_outbreak_total = static_cast<double>(sum_total) / static_cast<double>(trials);
    stats.giant_fraction = static_cast<double>(giant) / static_cast<double>(trials);
    stats.mean_small_outbreak = giant == trials ? 0.0 : static_cast<double>(small_sum) / static_cast<double>(trials - giant);
    return stats;
}

onset_sweep outbreak_onset_sweep(const graph_sample& g, double step, std::size_t trials, std::uint64_t seed,
                                 double giant_cutoff, unsigned threads)
{
    if (!(step > 0.0 && step <= 1.0))
        throw std::invalid_argument("outbreak_onset_sweep: step must lie in (0, 1]");
    const auto count = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
    onset_sweep out;
    for (std::size_t i = 1; i <= count; ++i) {
        const double t = std::min(1.0, static_cast<double>(i) * step);
        const auto stats = sir_percolation(g, {t, t}, trials, derive_seed(seed, i), giant_cutoff, threads);
        out.points.push_back({t, stats});
        if (!out.onset) {
            if (stats.giant_fraction > 0.0)
                out.onset = t;
            else
                out.last_quiet = t;
        }
    }
    return out;
}

void write_edge_list(const graph_sample& g, std::ostream& out)
{
    const char* sep = g.mode == graph_mode::directed ? " -> " : " ";
    for (const auto& [u, v] : g.edges)
        out << u << sep << v << '\n';
}

nlohmann::json manifest(const graph_sample& g)
{
    nlohmann::json j;
    j["mode"] = to_string(g.mode);
    if (g.mode == graph_mode::bipartite) {
        j["n_a"] = g.n_a;
        j["n_b"] = g.n_b;
    } else {
        j["n"] = g.n_a;
    }
    j["edges"] = g.edges.size();
    j["seed"] = g.seed;
    j["k_max"] = g.k_max;
    j["redraws"] = g.redraws;
    return j;
}

} // namespace zetanet

#pragma once

#include "zetanet/degdist.hpp"
#include "zetanet/epidemics.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace zetanet {

using rng_t = std::mt19937_64;

// Engine seeded through a splitmix64 scramble of `seed`.
rng_t make_rng(std::uint64_t seed);
// Seed of replicate `index` under base seed `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) { return base ^ index; }
// Uniform double in [0, 1) from the top 53 bits.
double uniform01(rng_t& rng);

enum class graph_mode { bipartite, directed, unipartite };
enum class side { a, b };

const char* to_string(graph_mode mode);

/// A configuration-model multigraph.
///
/// bipartite: vertices 0..n_a-1 of type A and 0..n_b-1 of type B (separate
/// index spaces), edges (a, b). directed: n_a vertices, edges u -> v,
/// degrees_a holds in-degrees and degrees_b out-degrees. unipartite: n_a
/// vertices, simple undirected edges with u < v.
struct graph_sample {
    graph_mode mode = graph_mode::bipartite;
    std::uint32_t n_a = 0;
    std::uint32_t n_b = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> degrees_a;
    std::vector<std::uint32_t> degrees_b;
    std::uint64_t seed = 0;
    std::uint64_t k_max = 0;
    // number of degree redraws spent on balancing stub totals
    std::uint64_t redraws = 0;

    std::size_t vertex_count() const { return mode == graph_mode::bipartite ? std::size_t{n_a} + n_b : n_a; }
};

/// Inverse-CDF sampler over degrees 0..k_max of a non-negative weight vector.
class degree_sampler {
public:
    explicit degree_sampler(const degree_distribution& d);
    std::uint32_t operator()(rng_t& rng) const;

private:
    std::vector<double> cumulative_;
};

std::vector<std::uint32_t> sample_degree_sequence(const degree_distribution& d, std::size_t n, std::uint64_t seed);

// Stub matching of two given sequences. Unequal totals are repaired by
// redrawing degrees of random vertices on the lighter side from that side's
// own empirical law; at most 1000 |imbalance| redraws before balance_error.
graph_sample build_bipartite(std::vector<std::uint32_t> seq_a, std::vector<std::uint32_t> seq_b, std::uint64_t seed);

// Draws both sequences from p and q, redraws from the same laws.
graph_sample sample_bipartite(const degree_distribution& p, const degree_distribution& q, std::uint32_t n_a,
                              std::uint32_t n_b, std::uint64_t seed);

graph_sample build_directed(const joint_degree_distribution& pi, std::uint32_t n, std::uint64_t seed);

// Largest connected component over all vertices (directed graphs on their
// undirected skeleton).
double giant_component_fraction(const graph_sample& g);

// Simple graph on one side: an edge whenever two vertices share a neighbour.
graph_sample one_mode_projection(const graph_sample& g, side which);

// 3 x triangles / connected triples of a unipartite sample; 0 without triples.
double measured_clustering(const graph_sample& g);

struct outbreak_statistics {
    // infected type-A individuals per trial, seed included
    double mean_outbreak_a = 0.0;
    double mean_outbreak_total = 0.0;
    // fraction of trials whose outbreak reached giant_cutoff of all vertices
    double giant_fraction = 0.0;
    // mean size restricted to the non-giant trials
    double mean_small_outbreak = 0.0;
    std::size_t trials = 0;
};

// Bond percolation from uniformly random A seeds: an A -> B edge transmits
// with t_mf, a B -> A edge with t_fm, each direction independently.
outbreak_statistics sir_percolation(const graph_sample& g, const transmissibility& t, std::size_t trials,
                                    std::uint64_t seed, double giant_cutoff = 0.01, unsigned threads = 0);

struct sweep_point {
    double t = 0.0;
    outbreak_statistics stats;
};

struct onset_sweep {
    std::vector<sweep_point> points;
    // first T (with t_mf = t_fm = T) at which any trial produced a giant
    // outbreak, and the sweep value just below it
    std::optional<double> onset;
    double last_quiet = 0.0;
};

// Runs sir_percolation at T = step, 2 step, ..., 1 with trial seeds derived
// from `seed` and the sweep index.
onset_sweep outbreak_onset_sweep(const graph_sample& g, double step, std::size_t trials, std::uint64_t seed,
                                 double giant_cutoff = 0.01, unsigned threads = 0);

void write_edge_list(const graph_sample& g, std::ostream& out);
nlohmann::json manifest(const graph_sample& g);

} // namespace zetanet

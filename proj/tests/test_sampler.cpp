#include "zetanet/errors.hpp"
#include "zetanet/sampler.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

using namespace zetanet;

namespace {

std::uint64_t total(const std::vector<std::uint32_t>& v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); }

// Pearson chi-square of a degree histogram against the pmf, pooling cells
// with expected count below 5 into one bin.
std::pair<double, int> chi_square(const std::vector<std::uint32_t>& seq, const degree_distribution& d)
{
    std::vector<double> observed(d.k_max() + 1, 0.0);
    for (auto k : seq)
        observed.at(k) += 1.0;
    double mass = 0.0;
    for (auto w : d.weights())
        mass += w;
    const double n = static_cast<double>(seq.size());
    double stat = 0.0, pooled_obs = 0.0, pooled_exp = 0.0;
    int cells = 0;
    for (std::size_t k = 0; k <= d.k_max(); ++k) {
        const double e = n * d.weight(k) / mass;
        if (e == 0.0)
            continue;
        if (e < 5.0) {
            pooled_obs += observed[k];
            pooled_exp += e;
            continue;
        }
        stat += (observed[k] - e) * (observed[k] - e) / e;
        ++cells;
    }
    if (pooled_exp > 0.0) {
        stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        ++cells;
    }
    return {stat, cells - 1};
}

// Upper 1e-3 quantile of chi-square(dof), Wilson-Hilferty.
double chi_square_critical(int dof)
{
    const double z = 3.090232306167813;
    const double k = dof;
    const double c = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
    return k * c * c * c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_edges(graph_sample g)
{
    std::sort(g.edges.begin(), g.edges.end());
    return g.edges;
}

} // namespace

TEST_CASE("degree sequences")
{
    const auto three = sample_degree_sequence(degree_distribution::point_mass(3), 5, 1);
    CHECK(three == std::vector<std::uint32_t>(5, 3));

    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.0, 1000);
    const auto a = sample_degree_sequence(z, 1000, 42);
    CHECK(a == sample_degree_sequence(z, 1000, 42));
    CHECK(a != sample_degree_sequence(z, 1000, 43));

    const auto mu = degree_distribution::from_lseries(lseries::mobius(), 3.0, 100);
    CHECK_THROWS_AS(sample_degree_sequence(mu, 10, 1), signed_distribution_error);
}

TEST_CASE("sample mean of the zeta law")
{
    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.0, 1000);
    const std::size_t n = 1000000;
    const auto seq = sample_degree_sequence(z, n, 2024);
    double mass = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::uint64_t k = 1; k <= 1000; ++k) {
        mass += z.weight(k);
        m1 += k * z.weight(k);
        m2 += double(k) * k * z.weight(k);
    }
    m1 /= mass;
    m2 /= mass;
    const double sigma = std::sqrt(m2 - m1 * m1);
    const double mean = static_cast<double>(total(seq)) / n;
    CHECK(std::fabs(mean - m1) <= 3.0 * sigma / std::sqrt(double(n)));
    CHECK(m1 == doctest::Approx(1.3684327776202059).epsilon(1e-3));
}

TEST_CASE("bipartite configuration model")
{
    const auto g = build_bipartite({2, 2}, {1, 1, 1, 1}, 3);
    CHECK(g.edges.size() == 4);
    CHECK(g.redraws == 0);
    std::vector<int> deg_b(4, 0);
    for (auto [a, b] : g.edges)
        ++deg_b[b];
    CHECK(deg_b == std::vector<int>{1, 1, 1, 1});

    const auto seven = build_bipartite({3, 4}, {2, 2, 3}, 5);
    CHECK(seven.redraws == 0);
    CHECK(seven.edges.size() == 7);

    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.5, kmax_rule(100000, 3.5));
    const auto s = sample_bipartite(z, z, 100000, 100000, 8);
    CHECK(total(s.degrees_a) == s.edges.size());
    CHECK(total(s.degrees_b) == s.edges.size());
    for (const auto* seq : {&s.degrees_a, &s.degrees_b}) {
        const auto [stat, dof] = chi_square(*seq, z);
        INFO("chi2 " << stat << " dof " << dof);
        CHECK(stat < chi_square_critical(dof));
    }
    CHECK(sorted_edges(s) == sorted_edges(sample_bipartite(z, z, 100000, 100000, 8)));
}

TEST_CASE("balance failure")
{
    // the lighter side can never catch up: every redraw gives degree 1
    CHECK_THROWS_AS(build_bipartite({1, 1}, {5, 5}, 1), balance_error);
}

TEST_CASE("directed configuration model")
{
    const auto one = degree_distribution::point_mass(1);
    const auto g = build_directed(make_directed_separated(one, one), 1000, 4);
    CHECK(g.edges.size() == 1000);
    std::vector<int> out(1000, 0);
    for (auto [u, v] : g.edges)
        ++out[u];
    CHECK(std::all_of(out.begin(), out.end(), [](int d) { return d == 1; }));

    const auto h = degree_distribution::from_lseries(lseries::hurwitz(1.0), 3.5, kmax_rule(100000, 3.5));
    const auto d = build_directed(make_directed_separated(h, h), 100000, 12);
    CHECK(total(d.degrees_a) == d.edges.size());
    CHECK(total(d.degrees_b) == d.edges.size());
    for (const auto* seq : {&d.degrees_a, &d.degrees_b}) {
        const auto [stat, dof] = chi_square(*seq, h);
        INFO("chi2 " << stat << " dof " << dof);
        CHECK(stat < chi_square_critical(dof));
    }
    CHECK(d.edges == build_directed(make_directed_separated(h, h), 100000, 12).edges);

    const auto b = build_directed(make_directed_barnes(5.0, 1.0, 1.0, 30), 5000, 3);
    CHECK(total(b.degrees_a) == b.edges.size());
    CHECK(total(b.degrees_b) == b.edges.size());

    const auto la = degree_distribution::from_lseries(lseries::liouville(), 3.0, 10);
    CHECK_THROWS_AS(build_directed(make_directed_separated(la, la), 10, 1), signed_distribution_error);
}

TEST_CASE("giant component fraction")
{
    graph_sample g;
    g.mode = graph_mode::bipartite;
    g.n_a = 2;
    g.n_b = 2;
    g.edges = {{0, 0}, {1, 1}};
    CHECK(giant_component_fraction(g) == 0.5);
    g.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(giant_component_fraction(g) == 1.0);

    graph_sample d;
    d.mode = graph_mode::directed;
    d.n_a = 4;
    d.edges = {{0, 1}, {2, 1}};
    CHECK(giant_component_fraction(d) == 0.75);
}

TEST_CASE("one-mode projection and clustering")
{
    graph_sample star;
    star.mode = graph_mode::bipartite;
    star.n_a = 3;
    star.n_b = 1;
    star.edges = {{0, 0}, {1, 0}, {2, 0}};
    const auto tri = one_mode_projection(star, side::a);
    CHECK(tri.mode == graph_mode::unipartite);
    CHECK(tri.edges.size() == 3);
    CHECK(measured_clustering(tri) == 1.0);
    CHECK(one_mode_projection(star, side::b).edges.empty());

    graph_sample matching;
    matching.mode = graph_mode::bipartite;
    matching.n_a = matching.n_b = 3;
    matching.edges = {{0, 0}, {1, 1}, {2, 2}};
    CHECK(one_mode_projection(matching, side::a).edges.empty());

    graph_sample path;
    path.mode = graph_mode::unipartite;
    path.n_a = 3;
    path.edges = {{0, 1}, {1, 2}};
    CHECK(measured_clustering(path) == 0.0);

    graph_sample k4;
    k4.mode = graph_mode::unipartite;
    k4.n_a = 4;
    k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(measured_clustering(k4) == 1.0);

    // duplicates from multi-edges collapse
    graph_sample multi = star;
    multi.edges.push_back({0, 0});
    CHECK(one_mode_projection(multi, side::a).edges.size() == 3);
}

TEST_CASE("sir percolation limits")
{
    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.5, 200);
    const auto g = sample_bipartite(z, z, 5000, 5000, 17);
    const auto none = sir_percolation(g, {0.0, 0.0}, 500, 1);
    CHECK(none.mean_outbreak_a == 1.0);
    CHECK(none.mean_outbreak_total == 1.0);
    CHECK(none.trials == 500);

    // T = 1: the outbreak is the seed's component
    graph_sample two;
    two.mode = graph_mode::bipartite;
    two.n_a = 2;
    two.n_b = 2;
    two.edges = {{0, 0}, {1, 0}};
    two.degrees_a = {1, 1};
    two.degrees_b = {2, 0};
    const auto all = sir_percolation(two, {1.0, 1.0}, 100, 3);
    CHECK(all.mean_outbreak_a == 2.0);
    CHECK(all.mean_outbreak_total == 3.0);

    // determinism across worker counts
    const auto a = sir_percolation(g, {0.8, 0.8}, 300, 9, 0.01, 1);
    const auto b = sir_percolation(g, {0.8, 0.8}, 300, 9, 0.01, 4);
    CHECK(a.mean_outbreak_total == b.mean_outbreak_total);
    CHECK(a.giant_fraction == b.giant_fraction);
}

TEST_CASE("edge list export and manifest")
{
    const auto g = build_bipartite({1, 1}, {2}, 1);
    std::ostringstream os;
    write_edge_list(g, os);
    CHECK(os.str() == "0 0\n1 0\n");

    const auto one = degree_distribution::point_mass(1);
    const auto d = build_directed(make_directed_separated(one, one), 3, 2);
    std::ostringstream ds;
    write_edge_list(d, ds);
    CHECK(ds.str().find(" -> ") != std::string::npos);

    const auto m = manifest(g);
    CHECK(m["seed"] == 1);
    CHECK(m["mode"] == "bipartite");
    CHECK(m["edges"] == 2);
}

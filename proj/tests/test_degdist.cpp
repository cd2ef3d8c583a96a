#include "oracles.hpp"
#include "zetanet/degdist.hpp"
#include "zetanet/errors.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>

using namespace zetanet;

namespace {

double truncated_moment(const degree_distribution& d, int j)
{
    long double s = 0.0L;
    const auto w = d.weights();
    for (std::size_t k = 1; k < w.size(); ++k)
        s += std::pow(static_cast<long double>(k), j) * w[k];
    return static_cast<double>(s);
}

} // namespace

TEST_CASE("zeta bipartite L-graph")
{
    const auto z = lseries::zeta();
    const auto [p, q] = make_bipartite_lgraph(z, 3.0, z, 3.0, 1000);
    CHECK(p.weight(0) == 0.0);
    CHECK(p.weight(1) == doctest::Approx(1.0 / 1.2020569031595942).epsilon(1e-14));
    CHECK(p.weight(7) == doctest::Approx(std::pow(7.0, -3.0) / 1.2020569031595942).epsilon(1e-14));
    CHECK_FALSE(p.is_signed());
    CHECK(q.k_max() == 1000);
    CHECK(std::fabs(gf_g0(p, 1.0).value - 1.0) <= p.tail_mass());
}

TEST_CASE("signed families")
{
    const auto mu = degree_distribution::from_lseries(lseries::mobius(), 3.0, 100);
    CHECK(mu.is_signed());
    CHECK(mu.weight(2) < 0.0);
    CHECK(mu.weight(4) == 0.0);
    CHECK(gf_g0(mu, 0.5).formal);
    CHECK(std::fabs(gf_g0(mu, 1.0).value - 1.0) <= mu.tail_mass());

    const auto la = degree_distribution::from_lseries(lseries::liouville(), 2.5, 5000);
    CHECK(la.is_signed());
    CHECK(std::fabs(gf_g0(la, 1.0).value - 1.0) <= la.tail_mass());
}

TEST_CASE("hurwitz with k0 = 0 reduces to zeta")
{
    const auto h = degree_distribution::from_lseries(lseries::hurwitz(0.0), 3.0, 300);
    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.0, 300);
    for (std::uint64_t k = 0; k <= 300; ++k)
        REQUIRE(h.weight(k) == doctest::Approx(z.weight(k)).epsilon(1e-13));
    CHECK(mean_degree(h) == doctest::Approx(mean_degree(z)).epsilon(1e-13));
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(degree_distribution::from_lseries(lseries::zeta(), 1.0, 10), convergence_error);
    CHECK_THROWS_AS(degree_distribution::from_lseries(lseries::liouville(), 0.8, 10), convergence_error);
    CHECK_THROWS_AS(degree_distribution::from_lseries(lseries::zeta(), 3.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(degree_distribution::from_weights({}), std::invalid_argument);
}

TEST_CASE("mean degree")
{
    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.0, 100);
    CHECK(mean_degree(z) == doctest::Approx(1.3684327776202059).epsilon(1e-13));
    CHECK(mean_degree(degree_distribution::from_lseries(lseries::zeta(), 60.0, 10)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(mean_degree(degree_distribution::from_lseries(lseries::zeta(), 1.9, 10)), convergence_error);
    CHECK(mean_degree(degree_distribution::point_mass(4)) == 4.0);
}

TEST_CASE("moment identities within the tail bound")
{
    for (const auto& l : {lseries::zeta(), lseries::mobius(), lseries::liouville(), lseries::hurwitz(0.5)})
        for (double alpha : {3.6, 4.2, 5.0}) {
            const auto d = degree_distribution::from_lseries(l, alpha, 20000);
            for (int j : {0, 1, 2}) {
                INFO(l.name() << " alpha " << alpha << " j " << j);
                const double closed = moment(d, j);
                CHECK(std::fabs(truncated_moment(d, j) - closed) <= d.tail_moment_bound(j) + 1e-12 * std::fabs(closed) + 1e-13);
            }
        }
}

TEST_CASE("scale-free ratio for completely multiplicative coefficients")
{
    const double alpha = 2.7;
    const auto d = degree_distribution::from_lseries(lseries::liouville(), alpha, 2000);
    for (std::uint64_t j = 1; j <= 40; ++j)
        for (std::uint64_t k = 1; j * k <= 2000; ++k) {
            const double expected = oracle::lambda(j) * std::pow(static_cast<double>(j), -alpha);
            REQUIRE(d.weight(j * k) / d.weight(k) == doctest::Approx(expected).epsilon(1e-12));
        }
}

TEST_CASE("generating functions")
{
    const auto z = degree_distribution::from_lseries(lseries::zeta(), 3.0, 5000);
    CHECK(gf_g0(z, 0.0).value == 0.0);
    CHECK(gf_g1(z, 1.0).value == doctest::Approx(1.0).epsilon(1e-15));
    const auto d = degree_distribution::from_weights({0.1, 0.2, 0.3, 0.4});
    CHECK(gf_g0(d, 0.5).value == doctest::Approx(0.1 + 0.1 + 0.075 + 0.05));
    CHECK(gf_g0_derivative(d, 1.0).value == doctest::Approx(0.2 + 0.6 + 1.2));
    // g1 = g0' / mean
    CHECK(gf_g1(d, 0.3).value == doctest::Approx(gf_g0_derivative(d, 0.3).value / 2.0));
    CHECK(excess_degree_slope(d) == doctest::Approx((0.2 + 1.2 + 3.6 - 2.0) / 2.0));
}

TEST_CASE("kmax rule")
{
    CHECK(kmax_rule(1000000, 3.0) == 1000);
    CHECK(kmax_rule(1000000, 2.0) == 1000000);
    CHECK(kmax_rule(256, 5.0) == 4);
    CHECK(kmax_rule(1000, 3.0) == 32);
    CHECK_THROWS_AS(kmax_rule(0, 3.0), std::invalid_argument);
}

TEST_CASE("directed separated model")
{
    const auto z = lseries::zeta();
    const auto p = degree_distribution::from_lseries(z, 3.0, 50000);
    const auto q = degree_distribution::from_lseries(z, 4.0, 50000);
    const auto pi = make_directed_separated(p, q);
    CHECK(mean_in_degree(pi) == doctest::Approx(1.3684327776202059).epsilon(2e-5));
    CHECK(mean_out_degree(pi) == doctest::Approx(1.2020569031595942 / 1.0823232337111382).epsilon(1e-9));
    CHECK_FALSE(is_signed(pi));

    const auto sym = make_directed_separated(p, p);
    CHECK(mean_in_degree(sym) == mean_out_degree(sym));
    CHECK(std::fabs(joint_balance(sym)) <= 1e-12);

    const auto h = lseries::hurwitz(1.0);
    const auto www = make_directed_separated(degree_distribution::from_lseries(h, 3.5, 100),
                                             degree_distribution::from_lseries(h, 2.5, 100));
    const auto& sep = std::get<separated_joint>(www);
    const double n1 = hurwitz_zeta(3.5, 1.0).value, n2 = hurwitz_zeta(2.5, 1.0).value;
    CHECK(sep.in.weight(3) * sep.out.weight(5) ==
          doctest::Approx(std::pow(4.0, -3.5) * std::pow(6.0, -2.5) / (n1 * n2)).epsilon(1e-13));

    CHECK(is_signed(make_directed_separated(degree_distribution::from_lseries(lseries::liouville(), 3.0, 10), p)));
}

TEST_CASE("barnes joint model")
{
    const barnes_joint b(5.0, 1.0, 1.0, 1000);
    // weights only depend on n + m
    CHECK(b.weight(2, 7) == b.weight(7, 2));
    CHECK(b.weight(3, 6) == b.weight(4, 5));
    CHECK(b.weight(0, 3) == 0.0);
    // normalizer: sum_{n,m>=1} (1 + n + m)^{-5} = sum_{u>=3} (u - 2) u^{-5}
    const double norm = (hurwitz_zeta(4.0, 2.0).value - 2.0 * hurwitz_zeta(5.0, 2.0).value);
    CHECK(b.normalizer() == doctest::Approx(norm).epsilon(1e-13));
    CHECK(b.normalizer() == doctest::Approx(0.00846772342439834).epsilon(1e-12));
    double mass = 0.0;
    for (std::uint64_t n = 1; n <= 1000; ++n)
        for (std::uint64_t m = 1; m <= 1000; ++m)
            mass += b.weight(n, m);
    CHECK(std::fabs(mass - 1.0) <= b.tail_mass() + 1e-12);
    CHECK(std::fabs(joint_balance(b)) <= 1e-12);
    CHECK(mean_in_degree(b) == doctest::Approx(mean_out_degree(b)).epsilon(1e-12));
}

TEST_CASE("json manifests")
{
    const auto d = degree_distribution::from_lseries(lseries::hurwitz(0.5), 3.0, 10);
    const auto j = to_json(d);
    CHECK(j["family"] == "hurwitz");
    CHECK(j["k0"] == 0.5);
    CHECK(j["k_max"] == 10);
    CHECK(j.contains("tail_mass"));
    const auto jb = to_json(make_directed_barnes(5.0, 1.0, 1.0, 20));
    CHECK(jb["structure"] == "barnes");
}

#include "oracles.hpp"
#include "zetanet/errors.hpp"
#include "zetanet/thresholds.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace zetanet;

namespace {

std::vector<double> weights_of(const degree_distribution& d) { return {d.weights().begin(), d.weights().end()}; }

double zeta_of(double s) { return riemann_zeta(s).value; }

} // namespace

TEST_CASE("psi for the zeta family")
{
    const auto z = lseries::zeta();
    CHECK(psi_bipartite(z, 3.1, z, 3.1).margin == doctest::Approx(79.00248632).epsilon(1e-9));
    CHECK(psi_bipartite(z, 3.9, z, 3.9).margin == doctest::Approx(-1.21873576).epsilon(1e-8));
    CHECK(psi_bipartite(z, 3.2, z, 3.2).margin == doctest::Approx(14.5968032).epsilon(1e-8));
    CHECK(psi_bipartite(z, 4.0, z, 4.0).margin == doctest::Approx(-1.24880062).epsilon(1e-8));
    const auto r = psi_bipartite(z, 3.5, z, 4.5);
    CHECK(r.formula == threshold_formula::psi_bipartite);
    CHECK(r.family1 == "zeta");
    CHECK(r.convergent);
    CHECK(r.error_bound < 1e-10);
    CHECK_THROWS_AS(psi_bipartite(z, 3.0, z, 3.5), convergence_error);
    CHECK_FALSE(psi_convergent(z, 3.0, z, 3.5));
}

TEST_CASE("psi matches its definition for mixed families")
{
    const auto l = lseries::liouville(), m = lseries::mobius();
    const double a = 3.7, b = 4.4;
    auto L = [](double s) { return zeta_of(2 * s) / zeta_of(s); };
    auto M = [](double s) { return 1.0 / zeta_of(s); };
    const double expected = L(a - 2) * M(b - 2) - L(a - 2) * M(b - 1) - L(a - 1) * M(b - 2);
    CHECK(psi_bipartite(l, a, m, b).margin == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("psi oracle")
{
    CHECK(psi_oracle(degree_distribution::point_mass(2), degree_distribution::point_mass(2)) == 0.0);
    CHECK(psi_oracle(degree_distribution::point_mass(1), degree_distribution::point_mass(1)) == -1.0);

    // factorized evaluation against the literal double loop
    for (const auto& l : {lseries::zeta(), lseries::liouville()}) {
        const auto [p, q] = make_bipartite_lgraph(l, 3.4, l, 4.1, 400);
        CHECK(psi_oracle(p, q) == doctest::Approx(oracle::psi_double_loop(weights_of(p), weights_of(q))).epsilon(1e-12));
    }

    const auto z = lseries::zeta();
    const auto [p, q] = make_bipartite_lgraph(z, 3.5, z, 3.5, 20000);
    const double scale = zeta_of(3.5) * zeta_of(3.5);
    const auto psi = psi_bipartite(z, 3.5, z, 3.5);
    CHECK(std::fabs(psi_oracle(p, q) * scale - psi.margin) <= psi_oracle_truncation_bound(p, q) * scale + psi.error_bound);
}

TEST_CASE("unipartite margin and the Aiello root")
{
    const auto z = lseries::zeta();
    CHECK(unipartite_margin(z, 3.2).margin == doctest::Approx(2.6104959).epsilon(1e-7));
    CHECK(unipartite_margin(z, 4.0).margin == doctest::Approx(-0.7591797).epsilon(1e-7));
    CHECK(std::fabs(unipartite_margin(z, 3.47875).margin) < 1e-3);
    const double root = find_critical_exponent([&](double a) { return unipartite_margin(z, a).margin; }, 3.1, 4.0, 1e-12);
    CHECK(root == doctest::Approx(3.4787507857339603).epsilon(1e-11));
    CHECK(std::fabs(unipartite_margin(z, root).margin) < 1e-9);
}

TEST_CASE("symmetric reduction psi = L(a-2) * unipartite margin")
{
    for (const auto& l : {lseries::zeta(), lseries::liouville(), lseries::hurwitz(0.3)})
        for (double a : {3.1, 3.5, 4.2, 5.5}) {
            const double psi = psi_bipartite(l, a, l, a).margin;
            const double factored = l.moment(a, 2).value * unipartite_margin(l, a).margin;
            REQUIRE(psi == doctest::Approx(factored).epsilon(1e-9));
        }
}

TEST_CASE("find_critical_exponent")
{
    CHECK(find_critical_exponent([](double x) { return x - 2.0; }, 0.0, 5.0, 1e-12) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(find_critical_exponent([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9), no_sign_change_error);
    const auto z = lseries::zeta();
    const double sym = find_critical_exponent([&](double a) { return psi_bipartite(z, a, z, a).margin; }, 3.1, 4.0, 1e-12);
    CHECK(sym == doctest::Approx(3.4787507857339603).epsilon(1e-10));
}

TEST_CASE("directed separated margin")
{
    const auto z = lseries::zeta();
    const double a = 3.0, b = 3.0;
    const double expected = 2 * zeta_of(a - 1) * zeta_of(b - 1) - zeta_of(a - 1) * zeta_of(b) - zeta_of(a) * zeta_of(b - 1);
    CHECK(directed_separated_margin(z, a, z, b).margin == doctest::Approx(expected).epsilon(1e-13));
    CHECK_THROWS_AS(directed_separated_margin(z, 2.0, z, 3.0), convergence_error);

    // point masses at degree 1: 2 - 1 - 1
    const auto one = make_directed_separated(degree_distribution::point_mass(1), degree_distribution::point_mass(1));
    CHECK(directed_joint_margin(one) == 0.0);

    // the joint sum equals L1(a) L2(b) times the directed margin in the limit
    const auto pi = make_directed_separated(degree_distribution::from_lseries(z, a, 100000),
                                            degree_distribution::from_lseries(z, b, 100000));
    CHECK(directed_joint_margin(pi) > 0.0);
    CHECK(directed_joint_margin(pi) * zeta_of(a) * zeta_of(b) == doctest::Approx(expected).epsilon(1e-4));

    // Liouville specialization
    const auto l = lseries::liouville();
    auto L = [](double s) { return zeta_of(2 * s) / zeta_of(s); };
    const double dl = 2 * L(2.5) * L(3.0) - L(2.5) * L(4.0) - L(3.5) * L(3.0);
    CHECK(directed_separated_margin(l, 3.5, l, 4.0).margin == doctest::Approx(dl).epsilon(1e-13));
}

TEST_CASE("barnes directed joint margin fixture")
{
    const auto pi = make_directed_barnes(5.0, 1.0, 1.0, 1000);
    CHECK(directed_joint_margin(pi) == doctest::Approx(4.56228955441421).epsilon(1e-12));

    // literal double sum on a small support
    const auto small = make_directed_barnes(4.5, 0.5, 2.0, 60);
    const auto& b = std::get<barnes_joint>(small);
    long double s = 0.0L;
    for (std::uint64_t n = 1; n <= 60; ++n)
        for (std::uint64_t m = 1; m <= 60; ++m)
            s += (2.0L * n * m - n - m) * std::pow(0.5L + 2.0L * (n + m), -4.5L);
    CHECK(directed_joint_margin(small) == doctest::Approx(static_cast<double>(s / b.normalizer())).epsilon(1e-12));
}

TEST_CASE("clustering formula")
{
    const auto z = lseries::zeta();
    const auto c = clustering_formula(z, 4.5, z, 5.5);
    CHECK(c.value == doctest::Approx(0.083925392653660972).epsilon(1e-12));
    CHECK(c.f_beta == doctest::Approx(2 * zeta_of(4.5) - 3 * zeta_of(3.5) + zeta_of(2.5)).epsilon(1e-14));
    CHECK(c.f_beta == doctest::Approx(0.070700676822655769).epsilon(1e-12));
    CHECK(c.in_unit_interval);
    CHECK_THROWS_AS(clustering_formula(z, 4.5, z, 4.0), convergence_error);
    CHECK_FALSE(clustering_convergent(z, 4.5, z, 4.0));
}

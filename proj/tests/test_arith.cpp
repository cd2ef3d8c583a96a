#include "oracles.hpp"
#include "zetanet/arith.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace zetanet;

namespace {

arithmetic_function random_function(std::mt19937_64& rng, std::uint64_t n)
{
    std::uniform_int_distribution<int> pick(-3, 3);
    return arithmetic_function::tabulate("random", n, multiplicativity::general, [&](std::uint64_t) { return pick(rng); });
}

std::vector<std::int64_t> as_vector(const arithmetic_function& f) { return {f.values().begin(), f.values().end()}; }

} // namespace

TEST_CASE("mobius values")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    for (std::uint64_t n = 1; n <= 3000; ++n)
        REQUIRE(mobius(n) == oracle::mu(n));
}

TEST_CASE("liouville values")
{
    CHECK(liouville(1) == 1);
    CHECK(liouville(2) == -1);
    CHECK(liouville(12) == -1);
    CHECK_THROWS_AS(liouville(0), std::invalid_argument);
    for (std::uint64_t n = 1; n <= 3000; ++n)
        REQUIRE(liouville(n) == oracle::lambda(n));
}

TEST_CASE("euler phi values")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(10) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    for (std::uint64_t n = 1; n <= 500; ++n)
        REQUIRE(euler_phi(n) == oracle::phi_count(n));
}

TEST_CASE("factorization beyond the sieve limit")
{
    const std::uint64_t big = 1000003ULL * 999983ULL;
    const auto f = factorize(big);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 999983ULL);
    CHECK(f[1].first == 1000003ULL);
    CHECK(mobius(big) == 1);
    CHECK(liouville(big * 2) == -1);
}

TEST_CASE("tables agree with pointwise queries")
{
    const auto mu = mobius_function(10000);
    const auto la = liouville_function(10000);
    const auto ph = euler_phi_function(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        REQUIRE(mu(n) == mobius(n));
        REQUIRE(la(n) == liouville(n));
        REQUIRE(ph(n) == static_cast<std::int64_t>(euler_phi(n)));
    }
    CHECK(mu.kind() == multiplicativity::multiplicative);
    CHECK(la.kind() == multiplicativity::completely_multiplicative);
    CHECK_THROWS_AS(mu(0), std::out_of_range);
    CHECK_THROWS_AS(mu(10001), std::out_of_range);
}

TEST_CASE("arithmetic_function construction rules")
{
    CHECK_THROWS_AS(arithmetic_function("empty", {}), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_function("bad", {2, 1}, multiplicativity::multiplicative), std::invalid_argument);
    CHECK_NOTHROW(arithmetic_function("ok", {2, 1}, multiplicativity::general));
}

TEST_CASE("dirichlet convolution examples")
{
    const std::uint64_t n = 2000;
    CHECK(dirichlet_convolve(unit_function(n), mobius_function(n), n) == epsilon_function(n));

    std::mt19937_64 rng(3);
    const auto f = random_function(rng, n);
    CHECK(dirichlet_convolve(f, epsilon_function(n), n) == f);

    const auto d = dirichlet_convolve(unit_function(n), unit_function(n), n);
    CHECK(d(6) == 4);
    CHECK(d(12) == 6);
    CHECK(d.kind() == multiplicativity::multiplicative);

    CHECK_THROWS_AS(dirichlet_convolve(unit_function(10), unit_function(20), 15), std::out_of_range);
    CHECK(dirichlet_convolve(unit_function(10), unit_function(20)).size() == 10);
}

TEST_CASE("convolution matches divisor enumeration")
{
    std::mt19937_64 rng(17);
    const std::uint64_t n = 3000;
    const auto f = random_function(rng, n);
    const auto g = random_function(rng, n);
    CHECK(as_vector(dirichlet_convolve(f, g, n)) == oracle::convolve(as_vector(f), as_vector(g), n));
}

TEST_CASE("phi = mu * id and the Liouville square identity")
{
    const std::uint64_t n = 10000;
    CHECK(dirichlet_convolve(mobius_function(n), identity_function(n), n) == euler_phi_function(n));
    const auto s = dirichlet_convolve(liouville_function(n), unit_function(n), n);
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(k))));
        REQUIRE(s(k) == (r * r == k ? 1 : 0));
    }
}

TEST_CASE("pointwise product")
{
    const std::uint64_t n = 1000;
    const auto ll = pointwise_product(liouville_function(n), liouville_function(n));
    CHECK(ll == unit_function(n));
    CHECK(ll.kind() == multiplicativity::completely_multiplicative);
    std::mt19937_64 rng(5);
    const auto f = random_function(rng, n);
    CHECK(pointwise_product(f, unit_function(n)) == f);
    const auto ml = pointwise_product(mobius_function(n), liouville_function(n));
    CHECK(ml(6) == 1);
    CHECK(ml.kind() == multiplicativity::multiplicative);
    CHECK_THROWS_AS(pointwise_product(unit_function(10), unit_function(11)), std::invalid_argument);
}

TEST_CASE("inverse of completely multiplicative functions")
{
    const std::uint64_t n = 5000;
    CHECK(dirichlet_inverse_cm(unit_function(n)) == mobius_function(n));

    const auto la = liouville_function(n);
    CHECK(dirichlet_convolve(la, dirichlet_inverse_cm(la), n) == epsilon_function(n));

    // completely multiplicative with f(p) = p + 1
    const auto f = arithmetic_function::tabulate("shifted", 200, multiplicativity::completely_multiplicative,
                                                 [](std::uint64_t k) {
                                                     std::int64_t v = 1;
                                                     for (auto [p, e] : oracle::trial_factor(k))
                                                         for (int i = 0; i < e; ++i)
                                                             v *= static_cast<std::int64_t>(p) + 1;
                                                     return v;
                                                 });
    CHECK(f(2) == 3);
    CHECK(dirichlet_inverse_cm(f)(2) == -3);
    CHECK(dirichlet_convolve(f, dirichlet_inverse_cm(f), 200) == epsilon_function(200));

    CHECK_THROWS_AS(dirichlet_inverse_cm(mobius_function(100)), std::invalid_argument);
}

TEST_CASE("verify_multiplicative")
{
    CHECK(verify_multiplicative(mobius_function(1000), 1000).passed);
    CHECK(verify_multiplicative(liouville_function(1000), 1000, multiplicativity::completely_multiplicative).passed);
    CHECK_FALSE(verify_multiplicative(mobius_function(1000), 1000, multiplicativity::completely_multiplicative).passed);

    const auto bad = mobius_function(1000).with_value(6, 5);
    const auto r = verify_multiplicative(bad, 1000);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness);
    CHECK(r.witness->first == 2);
    CHECK(r.witness->second == 3);

    const auto conv = dirichlet_convolve(mobius_function(3000), euler_phi_function(3000), 3000);
    CHECK(verify_multiplicative(conv, 3000).passed);
}

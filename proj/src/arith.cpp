#include "zetanet/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace zetanet {

arithmetic_function::arithmetic_function(std::string name, std::vector<std::int64_t> values,
                                         multiplicativity kind)
    : name_(std::move(name)), values_(std::move(values)), kind_(kind)
{
    if (values_.empty())
        throw std::invalid_argument("arithmetic function '" + name_ + "' has no values");
    if (kind_ != multiplicativity::general && values_[0] != 1)
        throw std::invalid_argument("multiplicative function '" + name_ + "' must have f(1) = 1");
}

std::int64_t arithmetic_function::operator()(std::uint64_t n) const
{
    if (n == 0 || n > values_.size())
        throw std::out_of_range("arithmetic function '" + name_ + "' evaluated at " + std::to_string(n) +
                                " outside 1.." + std::to_string(values_.size()));
    return values_[n - 1];
}

arithmetic_function arithmetic_function::with_value(std::uint64_t n, std::int64_t value) const
{
    (void)(*this)(n);
    auto values = values_;
    values[n - 1] = value;
    return arithmetic_function(name_, std::move(values), kind_);
}

spf_sieve::spf_sieve(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0)
{
    if (limit >= 1)
        spf_[1] = 1;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (spf_[p] != 0)
            continue;
        for (std::uint64_t m = p; m <= limit; m += p)
            if (spf_[m] == 0)
                spf_[m] = static_cast<std::uint32_t>(p);
    }
}

factorization spf_sieve::factorize(std::uint64_t n) const
{
    if (n == 0)
        throw std::invalid_argument("cannot factorize 0");
    factorization out;
    auto push = [&out](std::uint64_t p) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    };
    // trial division until the cofactor fits the table
    for (std::uint64_t p = 2; n > limit() && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    }
    if (n > limit()) {
        push(n); // remaining cofactor is prime
        return out;
    }
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        push(p);
        n /= p;
    }
    return out;
}

const spf_sieve& default_sieve()
{
    static const spf_sieve sieve(static_cast<std::uint32_t>(default_n_max));
    return sieve;
}

factorization factorize(std::uint64_t n) { return default_sieve().factorize(n); }

namespace {

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + " is defined for n >= 1 only");
}

// Linear sieve filling mu, lambda and phi for 1..n.
struct sieve_tables {
    std::vector<std::int64_t> mu, lambda, phi;
};

sieve_tables linear_sieve(std::uint64_t n)
{
    sieve_tables t{std::vector<std::int64_t>(n + 1), std::vector<std::int64_t>(n + 1),
                   std::vector<std::int64_t>(n + 1)};
    std::vector<std::uint64_t> primes;
    std::vector<bool> composite(n + 1, false);
    if (n >= 1) {
        t.mu[1] = 1;
        t.lambda[1] = 1;
        t.phi[1] = 1;
    }
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            t.mu[i] = -1;
            t.lambda[i] = -1;
            t.phi[i] = static_cast<std::int64_t>(i - 1);
        }
        for (const std::uint64_t p : primes) {
            if (p * i > n)
                break;
            composite[p * i] = true;
            t.lambda[p * i] = -t.lambda[i];
            if (i % p == 0) {
                t.mu[p * i] = 0;
                t.phi[p * i] = t.phi[i] * static_cast<std::int64_t>(p);
                break;
            }
            t.mu[p * i] = -t.mu[i];
            t.phi[p * i] = t.phi[i] * static_cast<std::int64_t>(p - 1);
        }
    }
    return t;
}

std::vector<std::int64_t> drop_zero_index(std::vector<std::int64_t> v)
{
    v.erase(v.begin());
    return v;
}

} // namespace

int mobius(std::uint64_t n)
{
    require_positive(n, "mobius");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

int liouville(std::uint64_t n)
{
    require_positive(n, "liouville");
    int total = 0;
    for (const auto& [p, e] : factorize(n))
        total += e;
    return total % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    require_positive(n, "euler_phi");
    std::uint64_t result = n;
    for (const auto& [p, e] : factorize(n))
        result = result / p * (p - 1);
    return result;
}

arithmetic_function mobius_function(std::uint64_t n)
{
    require_positive(n, "mobius_function");
    return {"mobius", drop_zero_index(linear_sieve(n).mu), multiplicativity::multiplicative};
}

arithmetic_function liouville_function(std::uint64_t n)
{
    require_positive(n, "liouville_function");
    return {"liouville", drop_zero_index(linear_sieve(n).lambda), multiplicativity::completely_multiplicative};
}

arithmetic_function euler_phi_function(std::uint64_t n)
{
    require_positive(n, "euler_phi_function");
    return {"phi", drop_zero_index(linear_sieve(n).phi), multiplicativity::multiplicative};
}

arithmetic_function unit_function(std::uint64_t n)
{
    require_positive(n, "unit_function");
    return {"unit", std::vector<std::int64_t>(n, 1), multiplicativity::completely_multiplicative};
}

arithmetic_function identity_function(std::uint64_t n)
{
    require_positive(n, "identity_function");
    std::vector<std::int64_t> v(n);
    std::iota(v.begin(), v.end(), std::int64_t{1});
    return {"id", std::move(v), multiplicativity::completely_multiplicative};
}

arithmetic_function epsilon_function(std::uint64_t n)
{
    require_positive(n, "epsilon_function");
    std::vector<std::int64_t> v(n, 0);
    v[0] = 1;
    return {"epsilon", std::move(v), multiplicativity::completely_multiplicative};
}

arithmetic_function dirichlet_convolve(const arithmetic_function& f, const arithmetic_function& g,
                                       std::uint64_t n_max)
{
    if (n_max == 0)
        throw std::invalid_argument("dirichlet_convolve: N must be positive");
    if (n_max > f.size() || n_max > g.size())
        throw std::out_of_range("dirichlet_convolve: N = " + std::to_string(n_max) + " exceeds input range (" +
                                std::to_string(f.size()) + ", " + std::to_string(g.size()) + ")");
    std::vector<std::int64_t> h(n_max, 0);
    const auto fv = f.values();
    const auto gv = g.values();
    for (std::uint64_t x = 1; x <= n_max; ++x) {
        const std::int64_t fx = fv[x - 1];
        if (fx == 0)
            continue;
        for (std::uint64_t y = 1, n = x; n <= n_max; ++y, n += x) {
            std::int64_t term = 0;
            if (__builtin_mul_overflow(fx, gv[y - 1], &term) || __builtin_add_overflow(h[n - 1], term, &h[n - 1]))
                throw std::overflow_error("dirichlet_convolve: coefficient overflow at n = " + std::to_string(n));
        }
    }
    const bool both_mult = f.kind() != multiplicativity::general && g.kind() != multiplicativity::general;
    return {f.name() + "*" + g.name(), std::move(h),
            both_mult ? multiplicativity::multiplicative : multiplicativity::general};
}

arithmetic_function dirichlet_convolve(const arithmetic_function& f, const arithmetic_function& g)
{
    return dirichlet_convolve(f, g, std::min(f.size(), g.size()));
}

arithmetic_function pointwise_product(const arithmetic_function& f, const arithmetic_function& g)
{
    if (f.size() != g.size())
        throw std::invalid_argument("pointwise_product: range mismatch (" + std::to_string(f.size()) + " vs " +
                                    std::to_string(g.size()) + ")");
    std::vector<std::int64_t> h(f.size());
    const auto fv = f.values();
    const auto gv = g.values();
    for (std::size_t i = 0; i < h.size(); ++i)
        if (__builtin_mul_overflow(fv[i], gv[i], &h[i]))
            throw std::overflow_error("pointwise_product: coefficient overflow at n = " + std::to_string(i + 1));

    multiplicativity kind = multiplicativity::general;
    if (f.kind() == multiplicativity::completely_multiplicative &&
        g.kind() == multiplicativity::completely_multiplicative)
        kind = multiplicativity::completely_multiplicative;
    else if (f.kind() != multiplicativity::general && g.kind() != multiplicativity::general)
        kind = multiplicativity::multiplicative;
    return {f.name() + "." + g.name(), std::move(h), kind};
}

arithmetic_function dirichlet_inverse_cm(const arithmetic_function& f)
{
    if (f.kind() != multiplicativity::completely_multiplicative)
        throw std::invalid_argument("dirichlet_inverse_cm: '" + f.name() +
                                    "' is not completely multiplicative; mu(n) f(n) is not its inverse");
    const auto mu = mobius_function(f.size());
    const auto product = pointwise_product(mu, f);
    const auto h = product.values();
    return {"mu." + f.name(), {h.begin(), h.end()}, multiplicativity::multiplicative};
}

multiplicativity_check verify_multiplicative(const arithmetic_function& f, std::uint64_t n_max,
                                             std::optional<multiplicativity> level)
{
    n_max = std::min<std::uint64_t>(n_max, f.size());
    const bool complete = level.value_or(f.kind()) == multiplicativity::completely_multiplicative;
    if (f(1) != 1)
        return {false, std::make_pair(std::uint64_t{1}, std::uint64_t{1})};
    for (std::uint64_t m = 2; m * m <= n_max; ++m) {
        for (std::uint64_t n = m; m * n <= n_max; ++n) {
            if (!complete && std::gcd(m, n) != 1)
                continue;
            if (f(m * n) != f(m) * f(n))
                return {false, std::make_pair(m, n)};
        }
    }
    return {};
}

const char* to_string(multiplicativity kind)
{
    switch (kind) {
    case multiplicativity::general:
        return "general";
    case multiplicativity::multiplicative:
        return "multiplicative";
    case multiplicativity::completely_multiplicative:
        return "completely_multiplicative";
    }
    return "unknown";
}

} // namespace zetanet

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zetanet {

enum class multiplicativity { general, multiplicative, completely_multiplicative };

inline constexpr std::uint64_t default_n_max = 100000;

/// Integer-valued arithmetic function f(1), ..., f(N).
///
/// Values are exact so that Dirichlet-ring identities can be checked without
/// rounding. A function declared (completely) multiplicative must have
/// f(1) = 1; the product rule itself is not checked here, see
/// verify_multiplicative().
class arithmetic_function {
public:
    arithmetic_function(std::string name, std::vector<std::int64_t> values,
                        multiplicativity kind = multiplicativity::general);

    template <typename F>
    static arithmetic_function tabulate(std::string name, std::uint64_t n, multiplicativity kind, F&& f)
    {
        std::vector<std::int64_t> values(n);
        for (std::uint64_t k = 1; k <= n; ++k)
            values[k - 1] = static_cast<std::int64_t>(f(k));
        return arithmetic_function(std::move(name), std::move(values), kind);
    }

    // 1-based access; throws std::out_of_range outside 1..size().
    std::int64_t operator()(std::uint64_t n) const;
    std::int64_t at(std::uint64_t n) const { return (*this)(n); }

    std::uint64_t size() const { return values_.size(); }
    multiplicativity kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::span<const std::int64_t> values() const { return values_; }

    // Copy with a single entry replaced; kind is kept as declared.
    arithmetic_function with_value(std::uint64_t n, std::int64_t value) const;

    bool operator==(const arithmetic_function& other) const { return values_ == other.values_; }

private:
    std::string name_;
    std::vector<std::int64_t> values_;
    multiplicativity kind_;
};

using factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Smallest-prime-factor table up to a fixed limit.
class spf_sieve {
public:
    explicit spf_sieve(std::uint32_t limit);

    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_.at(n); }

    // Uses the table for n <= limit() and trial division above it.
    factorization factorize(std::uint64_t n) const;

private:
    std::vector<std::uint32_t> spf_;
};

// Process-wide sieve up to default_n_max, built on first use.
const spf_sieve& default_sieve();

factorization factorize(std::uint64_t n);

int mobius(std::uint64_t n);
int liouville(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Tables f(1..n) built in one linear sieve pass.
arithmetic_function mobius_function(std::uint64_t n = default_n_max);
arithmetic_function liouville_function(std::uint64_t n = default_n_max);
arithmetic_function euler_phi_function(std::uint64_t n = default_n_max);
arithmetic_function unit_function(std::uint64_t n = default_n_max);
arithmetic_function identity_function(std::uint64_t n = default_n_max);
arithmetic_function epsilon_function(std::uint64_t n = default_n_max);

/// h(n) = sum over x | n of f(x) g(n/x), for n = 1..n_max.
///
/// Divisor-sieve evaluation, O(N log N). The result is declared
/// multiplicative when both factors are. Throws std::out_of_range when n_max
/// exceeds either input and std::overflow_error if an entry leaves int64.
arithmetic_function dirichlet_convolve(const arithmetic_function& f, const arithmetic_function& g,
                                       std::uint64_t n_max);
arithmetic_function dirichlet_convolve(const arithmetic_function& f, const arithmetic_function& g);

// h(n) = f(n) g(n). Both inputs must cover the same range.
arithmetic_function pointwise_product(const arithmetic_function& f, const arithmetic_function& g);

// n -> mu(n) f(n); only valid for completely multiplicative f.
arithmetic_function dirichlet_inverse_cm(const arithmetic_function& f);

struct multiplicativity_check {
    bool passed = true;
    // First (m, n) in lexicographic order with f(mn) != f(m) f(n).
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

// Exhaustive product-rule check over pairs with mn <= n_max. Coprime pairs
// only, unless `level` is completely_multiplicative. Defaults to f's kind.
multiplicativity_check verify_multiplicative(const arithmetic_function& f, std::uint64_t n_max,
                                             std::optional<multiplicativity> level = std::nullopt);

const char* to_string(multiplicativity kind);

} // namespace zetanet

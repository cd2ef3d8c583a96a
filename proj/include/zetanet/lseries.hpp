#pragma once

#include "zetanet/arith.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace zetanet {

/// A truncated or accelerated series value. `tail_bound` bounds
/// |value - exact| (truncation plus accumulated rounding).
struct eval_result {
    double value = 0.0;
    double tail_bound = 0.0;
    std::uint64_t terms_used = 0;
};

inline constexpr double default_tolerance = 1e-12;
inline constexpr double scan_tolerance = 1e-9;

// Euler-Maclaurin parameters for the zeta family: explicit summation up to
// `cutoff` terms, then `order` Bernoulli corrections (at most 10).
struct euler_maclaurin_config {
    int cutoff = 20;
    int order = 8;
};

// zeta(s) for real s > 1.
eval_result riemann_zeta(double s, const euler_maclaurin_config& cfg = {});

// sum_{k >= 1} (k + k0)^{-s}; note the sum starts at k = 1, so
// hurwitz_zeta(s, 0) == riemann_zeta(s). Requires s > 1 and k0 > -1.
eval_result hurwitz_zeta(double s, double k0, const euler_maclaurin_config& cfg = {});

// sum_{m,n >= 0} (w + m a + n a)^{-s}, the equal-parameter Barnes double
// zeta. Requires s > 2, w > 0, a > 0.
eval_result barnes_zeta(double s, double w, double a, const euler_maclaurin_config& cfg = {});

enum class closed_form { none, riemann_zeta, inverse_zeta, zeta2s_over_zetas, hurwitz };

const char* to_string(closed_form form);

/// A Dirichlet-type series L(s) used as the normaliser of a degree law.
///
/// Most families are sum a_m m^{-s}; the Hurwitz family is the shifted
/// sum (m + k0)^{-s}. `term(m, s)` is the unnormalised weight of degree m
/// in either case and `moment(alpha, j)` is sum m^j term(m, alpha). For the
/// Dirichlet families moment(alpha, j) is exactly L(alpha - j).
class lseries {
public:
    static lseries zeta();
    static lseries mobius();
    static lseries liouville();
    static lseries hurwitz(double k0);
    // General coefficients. `coefficient_bound` (|a_n| <= B for all n) is
    // needed for any tail bound; without it evaluation throws.
    static lseries from_coefficients(arithmetic_function coefficients, double sigma_a,
                                     std::optional<double> coefficient_bound);

    // "zeta", "mobius", "liouville", "unit", "hurwitz" (k0 used only there).
    static lseries by_name(const std::string& family, double k0 = 0.0);

    const std::string& name() const { return name_; }
    double sigma_a() const { return sigma_a_; }
    closed_form form() const { return form_; }
    double k0() const { return k0_; }
    bool is_dirichlet() const { return form_ != closed_form::hurwitz; }
    std::optional<double> coefficient_bound() const { return bound_; }

    // True when some coefficient is negative (Moebius, Liouville, ...).
    bool is_signed() const { return signed_; }

    double coefficient(std::uint64_t m) const;
    double term(std::uint64_t m, double s) const;

    // Closed form when available, otherwise a bounded partial sum meeting
    // `tol` as far as the coefficient table allows.
    eval_result eval(double s, double tol = default_tolerance) const;

    // Plain partial sum over m = 1..terms with the integral tail bound
    // B N^{1-s}/(s-1); the cross-check route for closed forms.
    eval_result series(double s, std::uint64_t terms) const;

    // sum_{m >= 1} m^j term(m, alpha), requires converges(alpha, j).
    eval_result moment(double alpha, int j, double tol = default_tolerance) const;
    bool converges(double alpha, int j = 0) const;

    // Bound on sum_{m > k} m^j |term(m, alpha)|.
    double tail_abs_bound(double alpha, int j, std::uint64_t k) const;

private:
    lseries() = default;
    void require_convergent(double s, const char* what) const;

    std::string name_;
    double sigma_a_ = 1.0;
    closed_form form_ = closed_form::none;
    double k0_ = 0.0;
    std::optional<double> bound_;
    bool signed_ = false;
    std::shared_ptr<const arithmetic_function> coefficients_;
};

eval_result lseries_eval(const lseries& series, double s, double tol = default_tolerance);

} // namespace zetanet

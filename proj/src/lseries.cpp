#include "zetanet/lseries.hpp"

#include "zetanet/errors.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zetanet {

namespace {

// B_2, B_4, ..., B_22
constexpr std::array<double, 11> bernoulli_even = {
    1.0 / 6.0,           -1.0 / 30.0,         1.0 / 42.0,           -1.0 / 30.0,
    5.0 / 66.0,          -691.0 / 2730.0,     7.0 / 6.0,            -3617.0 / 510.0,
    43867.0 / 798.0,     -174611.0 / 330.0,   854513.0 / 138.0,
};

constexpr int max_em_order = static_cast<int>(bernoulli_even.size()) - 1;

std::string format_number(double x)
{
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

// sum_{n >= 0} (x0 + n)^{-s} by Euler-Maclaurin, x0 > 0, s > 1.
eval_result em_tail(double s, double x0, int order)
{
    const long double xs = std::pow(static_cast<long double>(x0), -static_cast<long double>(s));
    long double tail = xs * x0 / (s - 1.0L) + xs / 2.0L;
    long double poch = s; // rising factorial s (s+1) ... (s+2k-2)
    long double xpow = xs / x0;
    long double factorial = 2.0L;
    for (int k = 1; k <= order; ++k) {
        tail += bernoulli_even[k - 1] / factorial * poch * xpow;
        // advance to the next odd derivative
        poch *= (s + 2 * k - 1.0L) * (s + 2 * k);
        xpow /= static_cast<long double>(x0) * x0;
        factorial *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
    }
    const long double next = std::fabs(bernoulli_even[order] / factorial * poch * xpow);
    return {static_cast<double>(tail), static_cast<double>(next), static_cast<std::uint64_t>(order)};
}

void check_config(const euler_maclaurin_config& cfg)
{
    if (cfg.cutoff < 1)
        throw std::invalid_argument("Euler-Maclaurin cutoff must be at least 1");
    if (cfg.order < 0 || cfg.order > max_em_order)
        throw std::invalid_argument("Euler-Maclaurin order must lie in 0.." + std::to_string(max_em_order));
}

double rounding_slack(double value) { return 4.0 * DBL_EPSILON * std::fabs(value); }

} // namespace

eval_result hurwitz_zeta(double s, double k0, const euler_maclaurin_config& cfg)
{
    if (!(s > 1.0))
        throw convergence_error("hurwitz_zeta: s = " + format_number(s) +
                                " is not above the abscissa of convergence 1");
    if (!(k0 > -1.0))
        throw convergence_error("hurwitz_zeta: k0 = " + format_number(k0) + " must exceed -1");
    check_config(cfg);

    long double head = 0.0L;
    for (int k = cfg.cutoff - 1; k >= 1; --k)
        head += std::pow(static_cast<long double>(k) + k0, -static_cast<long double>(s));
    const eval_result tail = em_tail(s, cfg.cutoff + k0, cfg.order);
    const double value = static_cast<double>(head + tail.value);
    return {value, tail.tail_bound + rounding_slack(value),
            static_cast<std::uint64_t>(cfg.cutoff - 1) + tail.terms_used};
}

eval_result riemann_zeta(double s, const euler_maclaurin_config& cfg)
{
    if (!(s > 1.0))
        throw convergence_error("riemann_zeta: s = " + format_number(s) +
                                " is not above the abscissa of convergence 1");
    return hurwitz_zeta(s, 0.0, cfg);
}

eval_result barnes_zeta(double s, double w, double a, const euler_maclaurin_config& cfg)
{
    if (!(s > 2.0))
        throw convergence_error("barnes_zeta: s = " + format_number(s) + " must exceed 2");
    if (!(w > 0.0) || !(a > 0.0))
        throw std::invalid_argument("barnes_zeta: w and a must be positive");
    // Lattice points with m + n = t all share the value (w + t a)^{-s} and
    // there are t + 1 of them; writing t + 1 = (t + c) + (1 - c) with c = w/a
    // reduces the double sum to two Hurwitz sums starting at t = 0.
    const double c = w / a;
    const eval_result h1 = hurwitz_zeta(s - 1.0, c - 1.0, cfg);
    const eval_result h0 = hurwitz_zeta(s, c - 1.0, cfg);
    const double scale = std::pow(a, -s);
    const double value = scale * (h1.value + (1.0 - c) * h0.value);
    const double bound = scale * (h1.tail_bound + std::fabs(1.0 - c) * h0.tail_bound) +
                         scale * (rounding_slack(h1.value) + rounding_slack((1.0 - c) * h0.value)) +
                         rounding_slack(value);
    return {value, bound, h1.terms_used + h0.terms_used};
}

const char* to_string(closed_form form)
{
    switch (form) {
    case closed_form::none:
        return "none";
    case closed_form::riemann_zeta:
        return "riemann_zeta";
    case closed_form::inverse_zeta:
        return "inverse_zeta";
    case closed_form::zeta2s_over_zetas:
        return "zeta2s_over_zetas";
    case closed_form::hurwitz:
        return "hurwitz";
    }
    return "unknown";
}

lseries lseries::zeta()
{
    lseries l;
    l.name_ = "zeta";
    l.form_ = closed_form::riemann_zeta;
    l.bound_ = 1.0;
    return l;
}

lseries lseries::mobius()
{
    lseries l;
    l.name_ = "mobius";
    l.form_ = closed_form::inverse_zeta;
    l.bound_ = 1.0;
    l.signed_ = true;
    return l;
}

lseries lseries::liouville()
{
    lseries l;
    l.name_ = "liouville";
    l.form_ = closed_form::zeta2s_over_zetas;
    l.bound_ = 1.0;
    l.signed_ = true;
    return l;
}

lseries lseries::hurwitz(double k0)
{
    if (!(k0 > -1.0))
        throw std::invalid_argument("hurwitz family needs k0 > -1");
    lseries l;
    l.name_ = "hurwitz";
    l.form_ = closed_form::hurwitz;
    l.k0_ = k0;
    l.bound_ = 1.0;
    return l;
}

lseries lseries::from_coefficients(arithmetic_function coefficients, double sigma_a,
                                   std::optional<double> coefficient_bound)
{
    lseries l;
    l.name_ = coefficients.name();
    l.sigma_a_ = sigma_a;
    l.bound_ = coefficient_bound;
    for (const auto v : coefficients.values())
        if (v < 0)
            l.signed_ = true;
    l.coefficients_ = std::make_shared<const arithmetic_function>(std::move(coefficients));
    return l;
}

lseries lseries::by_name(const std::string& family, double k0)
{
    if (family == "zeta")
        return zeta();
    if (family == "mobius")
        return mobius();
    if (family == "liouville")
        return liouville();
    if (family == "hurwitz")
        return hurwitz(k0);
    if (family == "unit") {
        auto l = from_coefficients(unit_function(), 1.0, 1.0);
        return l;
    }
    throw std::invalid_argument("unknown L-series family '" + family +
                                "' (expected zeta, mobius, liouville, hurwitz or unit)");
}

double lseries::coefficient(std::uint64_t m) const
{
    if (m == 0)
        throw std::invalid_argument("coefficients are indexed from 1");
    switch (form_) {
    case closed_form::riemann_zeta:
    case closed_form::hurwitz:
        return 1.0;
    case closed_form::inverse_zeta:
        return zetanet::mobius(m);
    case closed_form::zeta2s_over_zetas:
        return zetanet::liouville(m);
    case closed_form::none:
        return static_cast<double>((*coefficients_)(m));
    }
    return 0.0;
}

double lseries::term(std::uint64_t m, double s) const
{
    if (form_ == closed_form::hurwitz)
        return std::pow(static_cast<double>(m) + k0_, -s);
    const double a = coefficient(m);
    return a == 0.0 ? 0.0 : a * std::pow(static_cast<double>(m), -s);
}

void lseries::require_convergent(double s, const char* what) const
{
    if (!(s > sigma_a_))
        throw convergence_error(std::string(what) + ": " + name_ + " series evaluated at s = " + format_number(s) +
                                ", at or below its abscissa of absolute convergence " + format_number(sigma_a_));
}

eval_result lseries::series(double s, std::uint64_t terms) const
{
    require_convergent(s, "series");
    if (!bound_)
        throw std::invalid_argument("series: no coefficient bound supplied for '" + name_ +
                                    "', truncation error is unbounded");
    if (terms == 0)
        throw std::invalid_argument("series: need at least one term");
    if (coefficients_)
        terms = std::min<std::uint64_t>(terms, coefficients_->size());

    std::vector<std::int64_t> table;
    if (form_ == closed_form::inverse_zeta || form_ == closed_form::zeta2s_over_zetas) {
        const auto f = form_ == closed_form::inverse_zeta ? mobius_function(terms) : liouville_function(terms);
        table.assign(f.values().begin(), f.values().end());
    }

    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    for (std::uint64_t m = terms; m >= 1; --m) {
        long double t;
        if (form_ == closed_form::hurwitz)
            t = std::pow(static_cast<long double>(m) + k0_, -static_cast<long double>(s));
        else {
            const double a = table.empty() ? coefficient(m) : static_cast<double>(table[m - 1]);
            t = a == 0.0 ? 0.0L : a * std::pow(static_cast<long double>(m), -static_cast<long double>(s));
        }
        sum += t;
        abs_sum += std::fabs(t);
    }
    const double shift = form_ == closed_form::hurwitz ? k0_ : 0.0;
    const double tail = (*bound_) * std::pow(static_cast<double>(terms) + shift, 1.0 - s) / (s - 1.0);
    const double value = static_cast<double>(sum);
    const double rounding = static_cast<double>(abs_sum) * terms * LDBL_EPSILON + rounding_slack(value);
    return {value, tail + rounding, terms};
}

eval_result lseries::eval(double s, double tol) const
{
    require_convergent(s, "eval");
    switch (form_) {
    case closed_form::riemann_zeta:
        return riemann_zeta(s);
    case closed_form::hurwitz:
        return hurwitz_zeta(s, k0_);
    case closed_form::inverse_zeta: {
        const auto z = riemann_zeta(s);
        const double value = 1.0 / z.value;
        return {value, z.tail_bound / (z.value * (z.value - z.tail_bound)) + rounding_slack(value), z.terms_used};
    }
    case closed_form::zeta2s_over_zetas: {
        const auto z1 = riemann_zeta(s);
        const auto z2 = riemann_zeta(2.0 * s);
        const double value = z2.value / z1.value;
        const double bound = (z2.tail_bound + value * z1.tail_bound) / (z1.value - z1.tail_bound);
        return {value, bound + rounding_slack(value), z1.terms_used + z2.terms_used};
    }
    case closed_form::none:
        break;
    }
    if (!bound_)
        throw std::invalid_argument("eval: no coefficient bound supplied for '" + name_ +
                                    "', truncation error is unbounded");
    if (!(s > 1.0))
        throw convergence_error("eval: bounded-coefficient tail estimate needs s > 1 for '" + name_ + "'");
    // smallest N with B N^{1-s}/(s-1) <= tol
    const double log_n = (std::log(*bound_) - std::log(tol) - std::log(s - 1.0)) / (s - 1.0);
    const double wanted = std::ceil(std::exp(std::min(log_n, 60.0)));
    const auto terms = static_cast<std::uint64_t>(std::max(1.0, std::min(wanted, 1e18)));
    return series(s, terms);
}

bool lseries::converges(double alpha, int j) const
{
    if (form_ == closed_form::hurwitz)
        return alpha - j > 1.0;
    return alpha - j > sigma_a_;
}

eval_result lseries::moment(double alpha, int j, double tol) const
{
    if (j < 0)
        throw std::invalid_argument("moment order must be non-negative");
    if (!converges(alpha, j))
        throw convergence_error("moment: " + name_ + " at exponent " + format_number(alpha) + " has order-" +
                                std::to_string(j) + " moment argument " + format_number(alpha - j) +
                                " at or below the abscissa " + format_number(form_ == closed_form::hurwitz ? 1.0 : sigma_a_));
    if (is_dirichlet())
        return eval(alpha - j, tol);

    // m^j = ((m + k0) - k0)^j expanded binomially
    double value = 0.0;
    double bound = 0.0;
    std::uint64_t used = 0;
    double binom = 1.0;
    for (int i = j; i >= 0; --i) {
        const auto h = hurwitz_zeta(alpha - i, k0_);
        const double coef = binom * std::pow(-k0_, j - i);
        value += coef * h.value;
        bound += std::fabs(coef) * h.tail_bound + rounding_slack(coef * h.value);
        used += h.terms_used;
        binom = binom * i / (j - i + 1);
    }
    return {value, bound, used};
}

double lseries::tail_abs_bound(double alpha, int j, std::uint64_t k) const
{
    const double decay = alpha - j - 1.0;
    if (!bound_ || !(decay > 0.0))
        return std::numeric_limits<double>::infinity();
    double shift_factor = 1.0;
    if (form_ == closed_form::hurwitz && k0_ < 0.0)
        shift_factor = std::pow(1.0 + k0_ / static_cast<double>(k + 1), -alpha);
    if (k == 0)
        return (*bound_) * shift_factor * (1.0 + 1.0 / decay);
    return (*bound_) * shift_factor * std::pow(static_cast<double>(k), -decay) / decay;
}

eval_result lseries_eval(const lseries& series, double s, double tol) { return series.eval(s, tol); }

} // namespace zetanet

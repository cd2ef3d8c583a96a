#pragma once

#include <stdexcept>

namespace zetanet {

// An L-series (or a shifted argument of one) was requested at or below its
// abscissa of absolute convergence.
class convergence_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation needs a genuine probability distribution but received a signed
// (formal) one, e.g. Moebius or Liouville weights.
class signed_distribution_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Stub totals could not be balanced within the redraw budget.
class balance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class no_sign_change_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zetanet

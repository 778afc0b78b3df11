#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssr {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

// Controls the semi-infinite Fourier integrals. Integrands are assumed to
// carry a Gaussian envelope; the upper limit is placed where the integrand
// magnitude stays below truncation_threshold.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_panels = 4000;
  double truncation_threshold = 1e-13;

  void validate() const;
};

// Thrown when panel refinement runs out of budget; carries the partial
// integral and the accumulated error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double partial, double error)
      : std::runtime_error(what), partial_value(partial), error_estimate(error) {}

  double partial_value;
  double error_estimate;
};

// E_{alpha,alpha}(x) for 0 < alpha <= 1 and x <= 0.
double mittag_leffler_2p(double alpha, double x);

// Adaptive Gauss-Legendre quadrature of f over [0, a_max], with a_max chosen
// past the point where |f| falls below spec.truncation_threshold.
double integrate_lewis(const std::function<double(double)>& f,
                       const QuadratureSpec& spec = {});

// Same rule applied to a family of integrands evaluated from one sample
// provider: the panel set refines until every component meets the tolerance,
// so all integrals share one truncation and one node set.
std::vector<double> integrate_lewis_many(
    const std::function<void(double, std::span<double>)>& sample,
    std::size_t n_integrands, const QuadratureSpec& spec = {});

// Brent root search on [lo, hi]; stops when |f| <= tol or the bracket
// shrinks below tol.
double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol);

// Adaptive Gauss-Legendre on a finite interval. initial_breaks, when given,
// seeds the panel layout (useful for kinks or sharp bumps at known points).
double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double abs_tol = 1e-12,
                          double rel_tol = 1e-11, int max_panels = 4000,
                          std::span<const double> initial_breaks = {});

double norm_cdf(double x);

}  // namespace ssr

#include "ssr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "gl_nodes.hpp"

namespace ssr {

namespace {

constexpr double kPi = std::numbers::pi;

// E_{a,a}(x) by the defining power series, summed in extended precision.
// Returns false when the series would lose too many digits to cancellation
// (large |x|), in which case the caller switches to the integral form.
bool ml_series(double alpha, double x, double& out) {
  const double lx = std::log(-x);
  long double sum = 0.0L;
  double peak = 0.0;
  double prev = std::numeric_limits<double>::max();
  for (int k = 0; k < 520; ++k) {
    const double lt = k * lx - std::lgamma(alpha * (k + 1));
    if (lt > 690.0) return false;
    double t = std::exp(lt);
    peak = std::max(peak, t);
    if (k & 1) t = -t;
    sum += t;
    const double at = std::fabs(t);
    if (k > 3 && at < prev && at < 1e-19L * std::fabs((double)sum)) {
      // cancellation guard: long double carries ~19 digits
      if (peak > 1e7 * std::fabs((double)sum)) return false;
      out = (double)sum;
      return true;
    }
    prev = at;
  }
  return false;
}

// Spectral representation of E_{a,a} on the negative real axis:
//   E_{a,a}(x) = sin(pi a)/pi * int_0^inf w^a e^-w / ((w^a - xc)^2 + (xs)^2) dw
// with c = cos(pi a), s = sin(pi a). The denominator is bounded below by
// (xs)^2, so the integrand is smooth; for a > 1/2 it has a Lorentzian bump
// at w = (xc)^(1/a) which seeds the panel layout.
double ml_integral(double alpha, double x) {
  const double c = std::cos(kPi * alpha);
  const double s = std::sin(kPi * alpha);
  const double xc = x * c;
  const double xs = x * s;
  auto f = [=](double w) {
    const double wa = std::pow(w, alpha);
    const double d = wa - xc;
    return wa * std::exp(-w) / (d * d + xs * xs);
  };
  const double wmax = 60.0 + 10.0 * std::log1p(-x);
  std::vector<double> breaks;
  if (xc > 0.0) {
    const double w0 = std::pow(xc, 1.0 / alpha);
    for (double b : {0.5 * w0, w0, 2.0 * w0})
      if (b > 0.0 && b < wmax) breaks.push_back(b);
  }
  const double integral =
      integrate_adaptive(f, 0.0, wmax, 1e-300, 5e-14, 40000, breaks);
  return s / kPi * integral;
}

struct Panel {
  double lo;
  double hi;
  std::vector<double> coarse;  // one GL12 estimate per integrand
};

using Sampler = std::function<void(double, std::span<double>)>;

std::vector<double> gl12_panel(const Sampler& sample, std::size_t m, double lo,
                               double hi) {
  std::vector<double> acc(m, 0.0);
  std::vector<double> vals(m);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (const auto& p : detail::kGl12) {
    sample(mid + half * p.x, vals);
    for (std::size_t i = 0; i < m; ++i) acc[i] += p.w * vals[i];
  }
  for (std::size_t i = 0; i < m; ++i) acc[i] *= half;
  return acc;
}

// Envelope-based truncation: walk a geometric probe sequence and stop once
// the integrand magnitude has both risen above and fallen back below the
// threshold (or stayed negligible long enough to matter nowhere).
double find_truncation(const Sampler& sample, std::size_t m, double threshold) {
  std::vector<double> vals(m);
  auto envelope = [&](double a) {
    sample(a, vals);
    double e = 0.0;
    for (double v : vals) e = std::max(e, std::fabs(v));
    return e;
  };
  double p = 0.5;
  double peak = 0.0;
  for (int k = 0; k < 64; ++k, p *= 2.0) {
    const double v = std::max(envelope(p), envelope(1.37 * p));
    if (v < threshold && (peak >= threshold || k >= 12)) return 1.37 * p;
    peak = std::max(peak, v);
  }
  throw QuadratureError(
      "integrate_lewis: integrand never fell below the truncation threshold",
      0.0, std::numeric_limits<double>::infinity());
}

std::vector<double> adaptive_lewis(const Sampler& sample, std::size_t m,
                                   const QuadratureSpec& spec) {
  spec.validate();
  const double a_max = find_truncation(sample, m, spec.truncation_threshold);

  // seed pass: 8 panels give the scale estimates that fix the tolerances
  std::deque<Panel> work;
  std::vector<double> estimate(m, 0.0);
  const int seed = 8;
  for (int i = 0; i < seed; ++i) {
    const double lo = a_max * i / seed;
    const double hi = a_max * (i + 1) / seed;
    Panel p{lo, hi, gl12_panel(sample, m, lo, hi)};
    for (std::size_t j = 0; j < m; ++j) estimate[j] += p.coarse[j];
    work.push_back(std::move(p));
  }
  std::vector<double> tol(m);
  for (std::size_t j = 0; j < m; ++j)
    tol[j] = std::max(spec.abs_tol, spec.rel_tol * std::fabs(estimate[j]));

  std::vector<double> total(m, 0.0);
  std::vector<double> err_acc(m, 0.0);
  int panels = seed;
  while (!work.empty()) {
    Panel p = std::move(work.front());
    work.pop_front();
    const double mid = 0.5 * (p.lo + p.hi);
    auto left = gl12_panel(sample, m, p.lo, mid);
    auto right = gl12_panel(sample, m, mid, p.hi);
    const double frac = (p.hi - p.lo) / a_max;
    bool ok = true;
    for (std::size_t j = 0; j < m; ++j) {
      const double err = std::fabs(left[j] + right[j] - p.coarse[j]);
      if (err > tol[j] * frac) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (std::size_t j = 0; j < m; ++j) {
        total[j] += left[j] + right[j];
        err_acc[j] += std::fabs(left[j] + right[j] - p.coarse[j]);
      }
      continue;
    }
    panels += 2;
    if (panels > spec.max_panels) {
      double partial = total[0];
      double err = err_acc[0];
      for (const auto& q : work) partial += q.coarse[0];
      throw QuadratureError("integrate_lewis: panel budget exhausted", partial,
                            err);
    }
    work.push_front({mid, p.hi, std::move(right)});
    work.push_front({p.lo, mid, std::move(left)});
  }
  return total;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
  if (max_panels < 1) throw std::invalid_argument("QuadratureSpec: max_panels must be >= 1");
  if (!(truncation_threshold > 0.0))
    throw std::invalid_argument("QuadratureSpec: truncation_threshold must be > 0");
}

double mittag_leffler_2p(double alpha, double x) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("mittag_leffler_2p: alpha must be in (0, 1]");
  if (x > 0.0)
    throw std::domain_error("mittag_leffler_2p: x must be <= 0");
  if (alpha == 1.0) return std::exp(x);
  if (x == 0.0) return 1.0 / std::tgamma(alpha);
  double value;
  if (ml_series(alpha, x, value)) return value;
  return ml_integral(alpha, x);
}

double integrate_lewis(const std::function<double(double)>& f,
                       const QuadratureSpec& spec) {
  auto sample = [&f](double a, std::span<double> out) { out[0] = f(a); };
  return adaptive_lewis(sample, 1, spec)[0];
}

std::vector<double> integrate_lewis_many(
    const std::function<void(double, std::span<double>)>& sample,
    std::size_t n_integrands, const QuadratureSpec& spec) {
  if (n_integrands == 0)
    throw std::invalid_argument("integrate_lewis_many: no integrands");
  return adaptive_lewis(sample, n_integrands, spec);
}

double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_root_bracketed: tol must be > 0");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw std::invalid_argument("find_root_bracketed: f(lo) and f(hi) have the same sign");

  // Brent: inverse quadratic / secant with bisection fallback
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(fb) <= tol || std::fabs(xm) <= tol1) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double abs_tol, double rel_tol,
                          int max_panels, std::span<const double> initial_breaks) {
  if (hi == lo) return 0.0;
  if (hi < lo) return -integrate_adaptive(f, hi, lo, abs_tol, rel_tol, max_panels, initial_breaks);

  auto gl12 = [&f](double x0, double x1) {
    const double mid = 0.5 * (x0 + x1);
    const double half = 0.5 * (x1 - x0);
    double acc = 0.0;
    for (const auto& p : detail::kGl12) acc += p.w * f(mid + half * p.x);
    return acc * half;
  };

  std::vector<double> edges{lo};
  for (double b : initial_breaks)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());

  struct Seg {
    double lo, hi, coarse;
  };
  std::deque<Seg> work;
  double estimate = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Seg s{edges[i], edges[i + 1], gl12(edges[i], edges[i + 1])};
    estimate += s.coarse;
    work.push_back(s);
  }
  const double tol = std::max(abs_tol, rel_tol * std::fabs(estimate));
  const double width = hi - lo;

  double total = 0.0;
  double err_acc = 0.0;
  int panels = (int)work.size();
  while (!work.empty()) {
    Seg s = work.front();
    work.pop_front();
    const double mid = 0.5 * (s.lo + s.hi);
    const double l = gl12(s.lo, mid);
    const double r = gl12(mid, s.hi);
    const double err = std::fabs(l + r - s.coarse);
    if (err <= tol * (s.hi - s.lo) / width || (s.hi - s.lo) < 1e-14 * width) {
      total += l + r;
      err_acc += err;
      continue;
    }
    panels += 2;
    if (panels > max_panels) {
      double partial = total;
      for (const auto& q : work) partial += q.coarse;
      throw QuadratureError("integrate_adaptive: panel budget exhausted",
                            partial, err_acc);
    }
    work.push_front({mid, s.hi, r});
    work.push_front({s.lo, mid, l});
  }
  return total;
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace ssr

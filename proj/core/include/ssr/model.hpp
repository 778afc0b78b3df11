#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssr/numerics.hpp"

namespace ssr {

// alpha = H + 1/2 is the canonical roughness parameter; every kernel and
// Riccati formula below is written in alpha.
struct ModelParams {
  double alpha = 1.0;   // in (1/2, 1]
  double nu = 0.4;      // vol-of-vol, > 0
  double lambda = 0.0;  // mean reversion, >= 0
  double rho = -0.65;   // spot-vol correlation, in [-1, 1]
  double vbar = 0.04;   // long-run variance, >= 0
  double v0 = 0.04;     // instantaneous variance, > 0

  double hurst() const { return alpha - 0.5; }
  void validate() const;
};

enum class KernelKind { power_law, mittag_leffler, exponential };

// Volatility kernel kappa(tau) of the forward variance dynamics:
//   power_law       nu tau^(alpha-1) / Gamma(alpha)
//   mittag_leffler  nu tau^(alpha-1) E_{alpha,alpha}(-lambda tau^alpha)
//   exponential     nu exp(-lambda tau)        (classical Heston)
class Kernel {
 public:
  Kernel(KernelKind kind, double alpha, double nu, double lambda);
  static Kernel from_params(KernelKind kind, const ModelParams& p) {
    return Kernel(kind, p.alpha, p.nu, p.lambda);
  }

  double operator()(double tau) const;
  double cumulative(double tau) const;  // int_0^tau kappa

  KernelKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double nu() const { return nu_; }
  double lambda() const { return lambda_; }

 private:
  KernelKind kind_;
  double alpha_;
  double nu_;
  double lambda_;
};

double kernel_eval(const Kernel& k, double tau);
double kernel_cumulative(const Kernel& k, double tau);

enum class CurveKind { flat, exponential_decay, tabulated };

// Forward variance curve xi_t(t + u) as a function of time ahead u >= 0.
// Tabulated curves are piecewise constant in forward variance (variance-swap
// strip convention): entry (m_i, xi_i) holds on (m_{i-1}, m_i].
class ForwardVarianceCurve {
 public:
  static ForwardVarianceCurve flat(double level);
  static ForwardVarianceCurve exponential_decay(double v0, double vbar,
                                                double lambda);
  static ForwardVarianceCurve tabulated(
      std::vector<std::pair<double, double>> table);

  double operator()(double time_ahead) const;
  double integral(double tau) const;  // int_0^tau xi
  ForwardVarianceCurve shifted(double dt) const;

  CurveKind kind() const { return kind_; }
  double level() const { return v0_; }
  double vbar() const { return vbar_; }
  double lambda() const { return lambda_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

  // maturities where a tabulated curve jumps; empty for smooth kinds
  std::vector<double> breakpoints(double up_to) const;

 private:
  ForwardVarianceCurve() = default;
  CurveKind kind_ = CurveKind::flat;
  double v0_ = 0.0;
  double vbar_ = 0.0;
  double lambda_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

double curve_eval(const ForwardVarianceCurve& c, double time_ahead);
double curve_integral(const ForwardVarianceCurve& c, double tau);

// Flat key=value config (# comments). Recognised keys: alpha | hurst, nu,
// lambda, rho, vbar, v0, kernel, curve.kind, curve.v0, curve.vbar,
// curve.lambda, curve.table (path to a maturity,xi CSV). Unknown keys throw.
struct ModelConfig {
  ModelParams params;
  KernelKind kernel = KernelKind::mittag_leffler;
  ForwardVarianceCurve curve = ForwardVarianceCurve::flat(0.04);
};

ModelConfig load_model_config(const std::filesystem::path& file);
KernelKind parse_kernel_kind(const std::string& s);

}  // namespace ssr

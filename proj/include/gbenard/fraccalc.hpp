#pragma once

#include <vector>

#include "gbenard/errors.hpp"

namespace gbenard {

/// Fractional order alpha in (0, 1]. alpha = 1 reduces every operator in
/// this module to its classical counterpart.
struct FracOrder {
  double alpha = 1.0;

  explicit FracOrder(double a) : alpha(a) {
    if (!(a > 0.0) || a > 1.0)
      throw ConfigError("FracOrder: alpha must lie in (0, 1]");
  }
};

/// Uniform time grid on [0, t_end] with n_steps intervals; node k at k*dt.
struct TimeGrid {
  double t_end = 1.0;
  int n_steps = 1;

  TimeGrid(double t, int n) : t_end(t), n_steps(n) {
    if (!(t > 0.0)) throw ConfigError("TimeGrid: t_end must be positive");
    if (n < 1) throw ConfigError("TimeGrid: n_steps must be >= 1");
  }
  double dt() const { return t_end / n_steps; }
  double node(int k) const { return k * dt(); }
};

/// Scalar signal sampled at every grid node (length n_steps + 1).
/// node0_valid is cleared by derivative operators whose node-0 value is a
/// convention (set to 0) rather than a computed quantity.
struct SampledSignal {
  TimeGrid grid;
  std::vector<double> values;
  bool node0_valid = true;

  SampledSignal(TimeGrid g, std::vector<double> v)
      : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n_steps + 1)
      throw ConfigError("SampledSignal: length must equal n_steps + 1");
  }
  static SampledSignal zeros(TimeGrid g) {
    return SampledSignal(g, std::vector<double>(g.n_steps + 1, 0.0));
  }
  template <class F>
  static SampledSignal sample(TimeGrid g, F&& f) {
    std::vector<double> v(g.n_steps + 1);
    for (int k = 0; k <= g.n_steps; ++k) v[k] = f(g.node(k));
    return SampledSignal(g, std::move(v));
  }
  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int k) { return values[k]; }
  double operator[](int k) const { return values[k]; }
};

/// Riemann-Liouville kernel t^(alpha-1)/Gamma(alpha); t > 0 required.
double rl_kernel(FracOrder alpha, double t);

/// Left RL integral by product integration, exact for piecewise-linear v.
SampledSignal rl_integral_left(const SampledSignal& v, FracOrder alpha);

/// Right RL integral; time reflection of the left one about T.
SampledSignal rl_integral_right(const SampledSignal& v, FracOrder alpha);

/// L1 weights w_0..w_k with sum_j w_j v(t_j) ~ D^alpha v(t_k).
/// Weights sum to zero; at alpha = 1 they reduce to a backward difference.
std::vector<double> caputo_l1_weights(FracOrder alpha, double dt, int k);

/// L1 Caputo derivative; node 0 is zero and flagged undefined.
SampledSignal caputo_derivative(const SampledSignal& v, FracOrder alpha);

/// Right RL derivative -d/dt I^{1-alpha}_{t,T}, second-order differencing.
SampledSignal rl_derivative_right(const SampledSignal& v, FracOrder alpha);

/// Defect of the fractional integration-by-parts identity
///   int_0^T D^a u psi = int_0^T u D^a_{t,T} psi - u(0) (I^{1-a}_{0,T} psi)(0)
/// evaluated discretely. psi must vanish at t = T.
double frac_ibp_residual(const SampledSignal& u, const SampledSignal& psi,
                         FracOrder alpha);

/// Right-hand side of the fractional Gronwall lemma:
/// node k holds v0 + (1/Gamma(gamma)) int_0^{t_k} (t_k-s)^{gamma-1} c2(s) ds.
SampledSignal frac_gronwall_bound(double v0, FracOrder gamma,
                                  const SampledSignal& c2);

/// One-parameter Mittag-Leffler function E_alpha(z).
/// Power series for small |z|, branch-cut integral representation on the
/// mid negative axis, asymptotic expansion for z <= -Z_switch (= 10).
double mittag_leffler(FracOrder alpha, double z);

}  // namespace gbenard

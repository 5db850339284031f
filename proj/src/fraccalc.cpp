#include "gbenard/fraccalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gbenard/gammafn.hpp"

namespace gbenard {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kMLSwitch = 10.0;  // series / asymptotic switch point
constexpr int kMLTermCap = 200;

// pow(i, 1-alpha) with the convention 0^0 = 0, so the alpha = 1 limit of the
// L1 weights is the exact backward difference.
double pow_frac(int i, double e) {
  return i == 0 ? 0.0 : std::pow(static_cast<double>(i), e);
}

double trapz(const SampledSignal& a, const SampledSignal& b) {
  const int n = a.grid.n_steps;
  double s = 0.5 * (a[0] * b[0] + a[n] * b[n]);
  for (int k = 1; k < n; ++k) s += a[k] * b[k];
  return s * a.grid.dt();
}

double ml_series(double alpha, double z) {
  // Plain power series; positive arguments and the mildly negative range.
  long double sum = 1.0L;  // n = 0 term
  const double la = std::log(std::abs(z));
  double prev = std::numeric_limits<double>::max();
  for (int n = 1; n <= kMLTermCap; ++n) {
    const double mag = std::exp(n * la - lgamma_pos(alpha * n + 1.0));
    const double term = (z < 0.0 && (n & 1)) ? -mag : mag;
    sum += static_cast<long double>(term);
    if (mag < 1e-17 * std::abs(static_cast<double>(sum)) && mag < prev)
      return static_cast<double>(sum);
    prev = mag;
  }
  throw NumericError("mittag_leffler: series term cap exceeded");
}

struct MLAsym {
  double value;
  double rel_err;  // magnitude of the first omitted term, relative
};

MLAsym ml_asymptotic(double alpha, double z) {
  // E_alpha(z) ~ -sum_{n>=1} z^{-n} / Gamma(1 - alpha n) for z -> -inf.
  // Divergent series; stop at the smallest term and report its size so the
  // caller can fall back when optimal truncation is not accurate enough.
  long double sum = 0.0L;
  double zp = 1.0;
  double prev = std::numeric_limits<double>::max();
  double tail = 0.0;
  for (int n = 1; n <= kMLTermCap; ++n) {
    zp /= z;
    const double term = -zp * rgamma_fn(1.0 - alpha * n);
    const double mag = std::abs(term);
    if (mag == 0.0) continue;  // pole of 1/Gamma
    if (mag > prev) {
      tail = mag;  // optimal truncation reached
      break;
    }
    sum += static_cast<long double>(term);
    prev = mag;
    tail = mag;
    if (mag < 1e-17 * std::abs(static_cast<double>(sum))) {
      tail = 0.0;
      break;
    }
  }
  const double v = static_cast<double>(sum);
  return {v, v != 0.0 ? std::abs(tail / v) : tail};
}

template <class F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(F&& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

double ml_negative_integral(double alpha, double x) {
  // Branch-cut representation for E_alpha(-x), x > 0, 0 < alpha < 1:
  //   E_alpha(-x) = (x sin(a pi) / (a pi)) *
  //                 int_0^inf exp(-s^{1/a}) / (s^2 + 2 s x cos(a pi) + x^2) ds
  // (substitution r = s^{1/a} in the classical spectral formula removes the
  // endpoint singularity). The integrand is positive, so no cancellation.
  const double c = std::cos(alpha * kPi);
  const double pref = x * std::sin(alpha * kPi) / (alpha * kPi);
  auto f = [&](double s) {
    const double e = std::exp(-std::pow(s, 1.0 / alpha));
    return e / ((s + x * c) * (s + x * c) + x * x * (1.0 - c * c));
  };
  const double s_max = std::pow(42.0, alpha);
  const double rough = 1.0 / (x * x * std::max(1.0 - c * c, 1e-4));
  return pref * integrate(f, 0.0, s_max, 1e-14 * rough * s_max);
}

}  // namespace

double rl_kernel(FracOrder alpha, double t) {
  if (!(t > 0.0))
    throw ConfigError("rl_kernel: t must be positive (kernel singular at 0)");
  return std::pow(t, alpha.alpha - 1.0) * rgamma_fn(alpha.alpha);
}

SampledSignal rl_integral_left(const SampledSignal& v, FracOrder alpha) {
  const double a = alpha.alpha;
  const int n = v.grid.n_steps;
  const double dt = v.grid.dt();
  // Per-interval moments of the kernel, m = k - j intervals back:
  //   A_m = int tau^{a-1}, over [(m-1)dt, m dt]
  //   Bs_m = int tau^{a-1} (tau - (m-1)dt)
  std::vector<double> A(n + 1, 0.0), Bs(n + 1, 0.0);
  for (int m = 1; m <= n; ++m) {
    const double lo = pow_frac(m - 1, a), hi = pow_frac(m, a);
    const double lo1 = pow_frac(m - 1, a + 1.0), hi1 = pow_frac(m, a + 1.0);
    A[m] = std::pow(dt, a) * (hi - lo) / a;
    Bs[m] = std::pow(dt, a + 1.0) * (hi1 - lo1) / (a + 1.0) -
            (m - 1) * dt * A[m];
  }
  const double rg = rgamma_fn(a);
  SampledSignal out = SampledSignal::zeros(v.grid);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) {
      const int m = k - j;
      s += v[j + 1] * A[m] + (v[j] - v[j + 1]) / dt * Bs[m];
    }
    out[k] = rg * s;
  }
  return out;
}

SampledSignal rl_integral_right(const SampledSignal& v, FracOrder alpha) {
  const int n = v.grid.n_steps;
  SampledSignal rev = v;
  std::reverse(rev.values.begin(), rev.values.end());
  SampledSignal left = rl_integral_left(rev, alpha);
  std::reverse(left.values.begin(), left.values.end());
  (void)n;
  return left;
}

std::vector<double> caputo_l1_weights(FracOrder alpha, double dt, int k) {
  if (!(dt > 0.0)) throw ConfigError("caputo_l1_weights: dt must be positive");
  if (k < 1) throw ConfigError("caputo_l1_weights: k must be >= 1");
  const double a = alpha.alpha;
  const double c = std::pow(dt, -a) * rgamma_fn(2.0 - a);
  auto ai = [&](int i) {
    return pow_frac(i + 1, 1.0 - a) - pow_frac(i, 1.0 - a);
  };
  std::vector<double> w(k + 1);
  w[k] = c;  // a_0 = 1
  for (int j = 1; j < k; ++j) w[j] = c * (ai(k - j) - ai(k - j - 1));
  w[0] = -c * ai(k - 1);
  if (k == 1) w[0] = -c;
  return w;
}

SampledSignal caputo_derivative(const SampledSignal& v, FracOrder alpha) {
  const double a = alpha.alpha;
  const int n = v.grid.n_steps;
  const double dt = v.grid.dt();
  const double c = std::pow(dt, -a) * rgamma_fn(2.0 - a);
  // D^a v(t_k) = c * sum_{j=0}^{k-1} a_{k-j-1} (v_{j+1} - v_j)
  std::vector<double> ai(n);
  for (int i = 0; i < n; ++i)
    ai[i] = pow_frac(i + 1, 1.0 - a) - pow_frac(i, 1.0 - a);
  SampledSignal out = SampledSignal::zeros(v.grid);
  out.node0_valid = false;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += ai[k - j - 1] * (v[j + 1] - v[j]);
    out[k] = c * s;
  }
  return out;
}

SampledSignal rl_derivative_right(const SampledSignal& v, FracOrder alpha) {
  const int n = v.grid.n_steps;
  const double dt = v.grid.dt();
  SampledSignal out = SampledSignal::zeros(v.grid);
  if (alpha.alpha == 1.0) {
    // I^0 is the identity: D^1_{t,T} v = -v'.
    if (n == 1) {
      out[0] = out[1] = -(v[1] - v[0]) / dt;
      return out;
    }
    for (int k = 1; k < n; ++k) out[k] = -(v[k + 1] - v[k - 1]) / (2.0 * dt);
    out[0] = -(-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
    out[n] = -(3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * dt);
    return out;
  }
  const SampledSignal R = rl_integral_right(v, FracOrder(1.0 - alpha.alpha));
  if (n == 1) {
    out[0] = out[1] = -(R[1] - R[0]) / dt;
    return out;
  }
  for (int k = 1; k < n; ++k) out[k] = -(R[k + 1] - R[k - 1]) / (2.0 * dt);
  out[0] = -(-3.0 * R[0] + 4.0 * R[1] - R[2]) / (2.0 * dt);
  out[n] = -(3.0 * R[n] - 4.0 * R[n - 1] + R[n - 2]) / (2.0 * dt);
  return out;
}

double frac_ibp_residual(const SampledSignal& u, const SampledSignal& psi,
                         FracOrder alpha) {
  const int n = psi.grid.n_steps;
  double scale = 0.0;
  for (double x : psi.values) scale = std::max(scale, std::abs(x));
  if (std::abs(psi[n]) > 1e-13 * std::max(scale, 1.0))
    throw ConfigError("frac_ibp_residual: psi must vanish at t = T");
  const SampledSignal du = caputo_derivative(u, alpha);
  const SampledSignal dpsi = rl_derivative_right(psi, alpha);
  const double A = trapz(du, psi);
  const double B = trapz(u, dpsi);
  double boundary;
  if (alpha.alpha == 1.0) {
    boundary = u[0] * psi[0];
  } else {
    boundary = u[0] * rl_integral_right(psi, FracOrder(1.0 - alpha.alpha))[0];
  }
  // Identity: A = B - boundary.
  return std::abs(A - B + boundary);
}

SampledSignal frac_gronwall_bound(double v0, FracOrder gamma,
                                  const SampledSignal& c2) {
  for (double x : c2.values)
    if (x < 0.0)
      throw ConfigError("frac_gronwall_bound: c2 must be nonnegative");
  SampledSignal out = rl_integral_left(c2, gamma);
  for (double& x : out.values) x += v0;
  return out;
}

double mittag_leffler(FracOrder alpha, double z) {
  const double a = alpha.alpha;
  if (z == 0.0) return 1.0;
  if (a == 1.0) return std::exp(z);
  if (z <= -kMLSwitch) {
    const MLAsym r = ml_asymptotic(a, z);
    // Optimal truncation can be too coarse near the switch point when alpha
    // is close to 1; the integral representation covers that corner.
    if (r.rel_err <= 1e-12) return r.value;
    return ml_negative_integral(a, -z);
  }
  if (z < -2.0) return ml_negative_integral(a, -z);
  return ml_series(a, z);
}

}  // namespace gbenard

#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <fftw3.h>

#include "gbenard/errors.hpp"

namespace gbenard {

/// Periodic square grid on Omega_2 = (0,1)^2, n points per dimension.
struct Grid2 {
  int n = 0;

  explicit Grid2(int n_) : n(n_) {
    if (n < 8) throw ConfigError("Grid2: n must be >= 8");
    if ((n & (n - 1)) != 0) throw ConfigError("Grid2: n must be a power of two");
  }
  double h() const { return 1.0 / n; }
  int nodes() const { return n * n; }
  int spec_size() const { return n * (n / 2 + 1); }
  double x(int ix) const { return ix * h(); }
  double y(int iy) const { return iy * h(); }
  /// Signed wavenumber for the full (first) dimension index.
  int kx(int i) const { return i < n / 2 ? i : i - n; }
  /// 2/3-rule cutoff: modes with |k| > kmax are dropped after products.
  int kmax() const { return n / 3; }
  bool operator==(const Grid2& o) const { return n == o.n; }
};

/// Scalar field as grid values; index (ix, iy) -> v[ix*n + iy].
struct FieldS {
  Grid2 grid;
  Eigen::ArrayXd v;

  explicit FieldS(Grid2 g) : grid(g), v(Eigen::ArrayXd::Zero(g.nodes())) {}
  FieldS(Grid2 g, Eigen::ArrayXd vals) : grid(g), v(std::move(vals)) {
    if (v.size() != grid.nodes()) throw ConfigError("FieldS: size mismatch");
  }
  double& at(int ix, int iy) { return v[ix * grid.n + iy]; }
  double at(int ix, int iy) const { return v[ix * grid.n + iy]; }
  template <class F>
  static FieldS sample(Grid2 g, F&& f) {
    FieldS out(g);
    for (int ix = 0; ix < g.n; ++ix)
      for (int iy = 0; iy < g.n; ++iy) out.at(ix, iy) = f(g.x(ix), g.y(iy));
    return out;
  }
};

/// Two-component velocity field.
struct Field2 {
  FieldS x, y;

  explicit Field2(Grid2 g) : x(g), y(g) {}
  Field2(FieldS fx, FieldS fy) : x(std::move(fx)), y(std::move(fy)) {
    if (!(x.grid == y.grid)) throw ConfigError("Field2: grid mismatch");
  }
  Grid2 grid() const { return x.grid; }
};

/// Half-complex spectrum (r2c layout, Hermitian symmetry implicit).
struct Spectrum {
  Grid2 grid;
  Eigen::ArrayXcd c;

  explicit Spectrum(Grid2 g) : grid(g), c(Eigen::ArrayXcd::Zero(g.spec_size())) {}
  std::complex<double>& at(int ix, int iyh) { return c[ix * (grid.n / 2 + 1) + iyh]; }
  std::complex<double> at(int ix, int iyh) const { return c[ix * (grid.n / 2 + 1) + iyh]; }
};

/// FFT workspace bound to one grid. Owns FFTW plans and scratch; one
/// instance per worker thread (plan execution with its own buffers only).
class Fft2 {
 public:
  explicit Fft2(Grid2 g);
  ~Fft2();
  Fft2(const Fft2&) = delete;
  Fft2& operator=(const Fft2&) = delete;

  Grid2 grid() const { return grid_; }
  /// Forward transform, normalized so coefficients are Fourier coefficients.
  Spectrum fwd(const FieldS& f);
  /// Inverse transform back to grid values.
  FieldS inv(const Spectrum& s);

  /// Spectral partial derivatives (Nyquist modes zeroed).
  Spectrum deriv_x(const Spectrum& s) const;
  Spectrum deriv_y(const Spectrum& s) const;
  FieldS deriv_x(const FieldS& f);
  FieldS deriv_y(const FieldS& f);
  Field2 gradient(const FieldS& f);

  /// 2/3-rule truncation.
  void dealias(Spectrum& s) const;
  FieldS dealias(const FieldS& f);

 private:
  Grid2 grid_;
  double* real_ = nullptr;
  fftw_complex* cplx_ = nullptr;
  fftw_plan plan_fwd_ = nullptr;
  fftw_plan plan_inv_ = nullptr;
};

double mean(const FieldS& f);
void subtract_mean(FieldS& f);

/// Registered analytic weight expression with exact partial derivatives.
struct GExpr {
  std::string name;
  std::map<std::string, double> params;
};

/// Weight function g on the grid with the §(2.1) bounds and the smallness
/// condition |grad g|_inf^2 < pi^2 m0^3 / M0 verified at construction.
struct GWeight {
  FieldS samples;
  Field2 grad;      // spectral differentiation of the samples
  FieldS inv_g;     // 1/g node values
  double m0 = 0.0;  // refined min over a 4x denser sampling
  double M0 = 0.0;  // refined max
  double grad_inf = 0.0;
  std::string key;  // expression name + params, used by the basis cache

  GWeight(FieldS s, Field2 gr, FieldS ig)
      : samples(std::move(s)), grad(std::move(gr)), inv_g(std::move(ig)) {}
  bool is_constant() const { return grad_inf == 0.0; }
};

/// Build and validate a GWeight from a registered expression.
/// Throws ConfigError on "m0 violation" or "smallness violation".
GWeight make_gweight(const GExpr& expr, Grid2 grid, Fft2& fft);

/// Names understood by make_gweight (constant, sin_x, cos_xy families).
std::vector<std::string> gweight_registry_names();

/// Weighted inner products <a,b>_g = int a.b g dx (collocation quadrature).
double inner_g(const FieldS& a, const FieldS& b, const GWeight& g);
double inner_g(const Field2& a, const Field2& b, const GWeight& g);
double norm_g(const FieldS& a, const GWeight& g);
double norm_g(const Field2& a, const GWeight& g);

/// H1(Omega, g) seminorm |grad a|_g, derivatives computed spectrally.
double h1_seminorm_g(const FieldS& a, const GWeight& g, Fft2& fft);
double h1_seminorm_g(const Field2& a, const GWeight& g, Fft2& fft);

/// Spectral evaluation of div(g u), product dealiased by the 2/3 rule.
FieldS g_divergence(const Field2& u, const GWeight& g, Fft2& fft);

/// Snapshot format: "GBSN", u32 n, u32 ncomp, f64 time, f64 alpha, then
/// ncomp blocks of n*n doubles in (ix*n+iy) order.
void write_snapshot(const std::string& path, const std::vector<const FieldS*>& comps,
                    double time, double alpha);
std::vector<FieldS> read_snapshot(const std::string& path, double* time = nullptr,
                                  double* alpha = nullptr);
void write_field_csv(const std::string& path, const std::vector<const FieldS*>& comps);

}  // namespace gbenard

#include "gbenard/gdomain.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <mutex>

namespace gbenard {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct GFamily {
  double (*g)(double x, double y, const std::map<std::string, double>&);
  double (*gx)(double x, double y, const std::map<std::string, double>&);
  double (*gy)(double x, double y, const std::map<std::string, double>&);
};

double param(const std::map<std::string, double>& p, const std::string& k,
             double dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

const std::map<std::string, GFamily>& g_registry() {
  static const std::map<std::string, GFamily> reg = {
      {"constant",
       {[](double, double, const std::map<std::string, double>& p) {
          return param(p, "value", 1.0);
        },
        [](double, double, const std::map<std::string, double>&) { return 0.0; },
        [](double, double, const std::map<std::string, double>&) { return 0.0; }}},
      {"sin_x",
       {[](double x, double, const std::map<std::string, double>& p) {
          return param(p, "base", 1.0) +
                 param(p, "amp", 0.2) * std::sin(kTwoPi * param(p, "k", 1.0) * x);
        },
        [](double x, double, const std::map<std::string, double>& p) {
          const double k = param(p, "k", 1.0);
          return param(p, "amp", 0.2) * kTwoPi * k * std::cos(kTwoPi * k * x);
        },
        [](double, double, const std::map<std::string, double>&) { return 0.0; }}},
      {"cos_xy",
       {[](double x, double y, const std::map<std::string, double>& p) {
          return param(p, "base", 1.0) +
                 param(p, "amp", 0.1) * std::cos(kTwoPi * x) * std::cos(kTwoPi * y);
        },
        [](double x, double y, const std::map<std::string, double>& p) {
          return -param(p, "amp", 0.1) * kTwoPi * std::sin(kTwoPi * x) *
                 std::cos(kTwoPi * y);
        },
        [](double x, double y, const std::map<std::string, double>& p) {
          return -param(p, "amp", 0.1) * kTwoPi * std::cos(kTwoPi * x) *
                 std::sin(kTwoPi * y);
        }}},
  };
  return reg;
}

}  // namespace

Fft2::Fft2(Grid2 g) : grid_(g) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  const int n = grid_.n;
  real_ = fftw_alloc_real(static_cast<size_t>(n) * n);
  cplx_ = fftw_alloc_complex(static_cast<size_t>(n) * (n / 2 + 1));
  // FFTW_ESTIMATE keeps plan selection deterministic run to run.
  plan_fwd_ = fftw_plan_dft_r2c_2d(n, n, real_, cplx_, FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_c2r_2d(n, n, cplx_, real_, FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_inv_) throw NumericError("Fft2: planning failed");
}

Fft2::~Fft2() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(plan_fwd_);
  if (plan_inv_) fftw_destroy_plan(plan_inv_);
  if (real_) fftw_free(real_);
  if (cplx_) fftw_free(cplx_);
}

Spectrum Fft2::fwd(const FieldS& f) {
  if (!(f.grid == grid_)) throw ConfigError("Fft2: grid mismatch");
  const int n = grid_.n;
  std::memcpy(real_, f.v.data(), sizeof(double) * static_cast<size_t>(n) * n);
  fftw_execute(plan_fwd_);
  Spectrum s(grid_);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int i = 0; i < grid_.spec_size(); ++i)
    s.c[i] = std::complex<double>(cplx_[i][0], cplx_[i][1]) * scale;
  return s;
}

FieldS Fft2::inv(const Spectrum& s) {
  if (!(s.grid == grid_)) throw ConfigError("Fft2: grid mismatch");
  const int n = grid_.n;
  for (int i = 0; i < grid_.spec_size(); ++i) {
    cplx_[i][0] = s.c[i].real();
    cplx_[i][1] = s.c[i].imag();
  }
  fftw_execute(plan_inv_);
  FieldS f(grid_);
  std::memcpy(f.v.data(), real_, sizeof(double) * static_cast<size_t>(n) * n);
  return f;
}

Spectrum Fft2::deriv_x(const Spectrum& s) const {
  const int n = grid_.n;
  Spectrum out = s;
  for (int ix = 0; ix < n; ++ix) {
    const int kx = grid_.kx(ix);
    const std::complex<double> f(0.0, kTwoPi * kx);
    for (int iyh = 0; iyh <= n / 2; ++iyh) {
      std::complex<double>& c = out.at(ix, iyh);
      c = (kx == -n / 2 || iyh == n / 2) ? 0.0 : f * c;
    }
  }
  return out;
}

Spectrum Fft2::deriv_y(const Spectrum& s) const {
  const int n = grid_.n;
  Spectrum out = s;
  for (int ix = 0; ix < n; ++ix) {
    const int kx = grid_.kx(ix);
    for (int iyh = 0; iyh <= n / 2; ++iyh) {
      std::complex<double>& c = out.at(ix, iyh);
      c = (kx == -n / 2 || iyh == n / 2)
              ? 0.0
              : std::complex<double>(0.0, kTwoPi * iyh) * c;
    }
  }
  return out;
}

FieldS Fft2::deriv_x(const FieldS& f) { return inv(deriv_x(fwd(f))); }
FieldS Fft2::deriv_y(const FieldS& f) { return inv(deriv_y(fwd(f))); }

Field2 Fft2::gradient(const FieldS& f) {
  Spectrum s = fwd(f);
  return Field2(inv(deriv_x(s)), inv(deriv_y(s)));
}

void Fft2::dealias(Spectrum& s) const {
  const int n = grid_.n;
  const int kc = grid_.kmax();
  for (int ix = 0; ix < n; ++ix) {
    const int kx = grid_.kx(ix);
    for (int iyh = 0; iyh <= n / 2; ++iyh) {
      if (std::abs(kx) > kc || iyh > kc) s.at(ix, iyh) = 0.0;
    }
  }
}

FieldS Fft2::dealias(const FieldS& f) {
  Spectrum s = fwd(f);
  dealias(s);
  return inv(s);
}

double mean(const FieldS& f) { return f.v.mean(); }

void subtract_mean(FieldS& f) { f.v -= f.v.mean(); }

GWeight make_gweight(const GExpr& expr, Grid2 grid, Fft2& fft) {
  const auto& reg = g_registry();
  auto it = reg.find(expr.name);
  if (it == reg.end())
    throw ConfigError("make_gweight: unknown expression '" + expr.name + "'");
  const GFamily& fam = it->second;

  FieldS samples = FieldS::sample(
      grid, [&](double x, double y) { return fam.g(x, y, expr.params); });
  Field2 grad = fft.gradient(samples);
  FieldS inv_g(grid);
  for (int i = 0; i < grid.nodes(); ++i) {
    if (!(samples.v[i] > 0.0))
      throw ConfigError("make_gweight: m0 violation (nonpositive sample)");
    inv_g.v[i] = 1.0 / samples.v[i];
  }

  GWeight g(std::move(samples), std::move(grad), std::move(inv_g));

  // Extrema refined on a 4x denser sampling of the analytic expression.
  const int dn = 4 * grid.n;
  double m0 = 1e300, M0 = -1e300, gi = 0.0;
  for (int ix = 0; ix < dn; ++ix) {
    for (int iy = 0; iy < dn; ++iy) {
      const double x = static_cast<double>(ix) / dn;
      const double y = static_cast<double>(iy) / dn;
      const double v = fam.g(x, y, expr.params);
      m0 = std::min(m0, v);
      M0 = std::max(M0, v);
      const double dx = fam.gx(x, y, expr.params);
      const double dy = fam.gy(x, y, expr.params);
      gi = std::max(gi, std::sqrt(dx * dx + dy * dy));
    }
  }
  g.m0 = m0;
  g.M0 = M0;
  g.grad_inf = gi;

  char buf[64];
  std::string key = expr.name;
  for (const auto& [k, v] : expr.params) {
    std::snprintf(buf, sizeof buf, ":%s=%.17g", k.c_str(), v);
    key += buf;
  }
  g.key = key;

  if (!(g.m0 > 0.0))
    throw ConfigError("make_gweight: m0 violation (min g = " +
                      std::to_string(g.m0) + ")");
  // Smallness condition needed for positive nu', kappa'.
  if (!(gi * gi < kPi * kPi * m0 * m0 * m0 / M0))
    throw ConfigError("make_gweight: smallness violation (|grad g|_inf^2 = " +
                      std::to_string(gi * gi) + " >= pi^2 m0^3/M0 = " +
                      std::to_string(kPi * kPi * m0 * m0 * m0 / M0) + ")");
  return g;
}

std::vector<std::string> gweight_registry_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : g_registry()) names.push_back(k);
  return names;
}

double inner_g(const FieldS& a, const FieldS& b, const GWeight& g) {
  if (!(a.grid == b.grid) || !(a.grid == g.samples.grid))
    throw ConfigError("inner_g: grid mismatch");
  const double h2 = a.grid.h() * a.grid.h();
  return h2 * (a.v * b.v * g.samples.v).sum();
}

double inner_g(const Field2& a, const Field2& b, const GWeight& g) {
  return inner_g(a.x, b.x, g) + inner_g(a.y, b.y, g);
}

double norm_g(const FieldS& a, const GWeight& g) {
  return std::sqrt(std::max(0.0, inner_g(a, a, g)));
}

double norm_g(const Field2& a, const GWeight& g) {
  return std::sqrt(std::max(0.0, inner_g(a, a, g)));
}

double h1_seminorm_g(const FieldS& a, const GWeight& g, Fft2& fft) {
  Field2 gr = fft.gradient(a);
  return std::sqrt(std::max(0.0, inner_g(gr, gr, g)));
}

double h1_seminorm_g(const Field2& a, const GWeight& g, Fft2& fft) {
  Field2 gx = fft.gradient(a.x);
  Field2 gy = fft.gradient(a.y);
  return std::sqrt(
      std::max(0.0, inner_g(gx, gx, g) + inner_g(gy, gy, g)));
}

FieldS g_divergence(const Field2& u, const GWeight& g, Fft2& fft) {
  FieldS px(u.grid()), py(u.grid());
  px.v = g.samples.v * u.x.v;
  py.v = g.samples.v * u.y.v;
  Spectrum sx = fft.fwd(px);
  Spectrum sy = fft.fwd(py);
  Spectrum d = fft.deriv_x(sx);
  const Spectrum dy = fft.deriv_y(sy);
  d.c += dy.c;
  fft.dealias(d);
  return fft.inv(d);
}

void write_snapshot(const std::string& path, const std::vector<const FieldS*>& comps,
                    double time, double alpha) {
  if (comps.empty()) throw ConfigError("write_snapshot: no components");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_snapshot: cannot open " + path);
  const char magic[4] = {'G', 'B', 'S', 'N'};
  out.write(magic, 4);
  const uint32_t n = static_cast<uint32_t>(comps[0]->grid.n);
  const uint32_t nc = static_cast<uint32_t>(comps.size());
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&nc), 4);
  out.write(reinterpret_cast<const char*>(&time), 8);
  out.write(reinterpret_cast<const char*>(&alpha), 8);
  for (const FieldS* f : comps) {
    if (static_cast<uint32_t>(f->grid.n) != n)
      throw ConfigError("write_snapshot: mixed grids");
    out.write(reinterpret_cast<const char*>(f->v.data()),
              static_cast<std::streamsize>(sizeof(double)) * f->grid.nodes());
  }
}

std::vector<FieldS> read_snapshot(const std::string& path, double* time,
                                  double* alpha) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("read_snapshot: cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (std::memcmp(magic, "GBSN", 4) != 0)
    throw ConfigError("read_snapshot: bad magic in " + path);
  uint32_t n = 0, nc = 0;
  double t = 0.0, a = 0.0;
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&nc), 4);
  in.read(reinterpret_cast<char*>(&t), 8);
  in.read(reinterpret_cast<char*>(&a), 8);
  if (time) *time = t;
  if (alpha) *alpha = a;
  std::vector<FieldS> out;
  Grid2 grid(static_cast<int>(n));
  for (uint32_t c = 0; c < nc; ++c) {
    FieldS f(grid);
    in.read(reinterpret_cast<char*>(f.v.data()),
            static_cast<std::streamsize>(sizeof(double)) * grid.nodes());
    if (!in) throw ConfigError("read_snapshot: truncated file " + path);
    out.push_back(std::move(f));
  }
  return out;
}

void write_field_csv(const std::string& path,
                     const std::vector<const FieldS*>& comps) {
  if (comps.empty()) throw ConfigError("write_field_csv: no components");
  std::ofstream out(path);
  if (!out) throw ConfigError("write_field_csv: cannot open " + path);
  const Grid2 g = comps[0]->grid;
  out << "x,y";
  for (size_t c = 0; c < comps.size(); ++c) out << ",c" << c;
  out << "\n";
  char buf[64];
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", g.x(ix), g.y(iy));
      out << buf;
      for (const FieldS* f : comps) {
        std::snprintf(buf, sizeof buf, ",%.17g", f->at(ix, iy));
        out << buf;
      }
      out << "\n";
    }
  }
}

}  // namespace gbenard

#pragma once

namespace gbenard {

// Shared Gamma implementation (Lanczos approximation, g = 7, 9 terms).
// Every module that needs Gamma goes through these three functions so the
// discretizations and their oracles agree on the constant.

/// Gamma(x) for real x. Poles (x = 0, -1, -2, ...) return +/-inf.
double gamma_fn(double x);

/// log|Gamma(x)| for x > 0. Relative accuracy ~1e-14 on (0, 170).
double lgamma_pos(double x);

/// 1/Gamma(x) for any real x; exactly 0 at the poles.
double rgamma_fn(double x);

}  // namespace gbenard

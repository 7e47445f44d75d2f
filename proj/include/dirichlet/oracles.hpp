#pragma once

// Independent reference computations: a spectral solver for linear gradient
// flows of quadratic graph energies, a projected Runge-Kutta integrator with
// event detection for the two R^2 collar examples, and an exhaustive grid
// minimizer for prox objectives on tiny spaces.  These never share code with
// the production solvers they validate.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "dirichlet/core.hpp"
#include "dirichlet/energy.hpp"

namespace dirichlet {

struct OdeOracleConfig {
  double step = 1e-4;             // fixed RK4 step
  double event_tolerance = 1e-10; // boundary-crossing snap tolerance
};

/// Gradient flow of E(u) = u^T L u in L2_m: solves M u' = -2 L u, i.e.
/// u(t) = M^{-1/2} exp(-2 M^{-1/2} L M^{-1/2} t) M^{1/2} f.  With unit
/// weights this is exp(-2 L t) f.  The factor 2 is the gradient of the
/// quadratic form.
inline Field heat_flow_oracle(const Eigen::MatrixXd& lap, const Field& f, double t) {
  const auto n = static_cast<Eigen::Index>(f.size());
  if (lap.rows() != n || lap.cols() != n)
    throw std::invalid_argument("heat_flow_oracle: matrix size does not match field");
  if ((lap - lap.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("heat_flow_oracle: matrix must be symmetric");
  if (t < 0.0) throw std::invalid_argument("heat_flow_oracle: t must be >= 0");

  Eigen::VectorXd sqrt_m(n), inv_sqrt_m(n), x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = f.space()->weight(static_cast<std::size_t>(i));
    sqrt_m(i) = std::sqrt(m);
    inv_sqrt_m(i) = 1.0 / sqrt_m(i);
    x(i) = f[static_cast<std::size_t>(i)];
  }
  const Eigen::MatrixXd sym =
      inv_sqrt_m.asDiagonal() * (2.0 * lap) * inv_sqrt_m.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  const Eigen::VectorXd decay = (-t * es.eigenvalues().array()).exp();
  const Eigen::VectorXd y =
      inv_sqrt_m.asDiagonal() *
      (es.eigenvectors() * (decay.asDiagonal() * (es.eigenvectors().transpose() *
                                                  (sqrt_m.asDiagonal() * x))));
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = y(i);
  return Field(f.space(), std::move(out));
}

enum class R2EnergyKind { kQuadraticBox, kLinearBox };

namespace detail {

using Vec2 = std::array<double, 2>;

inline double l1(const Vec2& h) { return std::abs(h[0]) + std::abs(h[1]); }

inline Vec2 r2_descent_field(R2EnergyKind kind, const Vec2& h) {
  const double excess = l1(h) - 1.0;
  if (excess <= 0.0) return {0.0, 0.0};
  const double slope = kind == R2EnergyKind::kQuadraticBox ? 2.0 * excess : 1.0;
  auto sgn = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
  return {-slope * sgn(h[0]), -slope * sgn(h[1])};
}

inline Vec2 rk4_step(R2EnergyKind kind, const Vec2& h, double dt) {
  auto f = [&](const Vec2& x) { return r2_descent_field(kind, x); };
  auto adv = [](const Vec2& x, const Vec2& k, double c) {
    return Vec2{x[0] + c * k[0], x[1] + c * k[1]};
  };
  const Vec2 k1 = f(h);
  const Vec2 k2 = f(adv(h, k1, 0.5 * dt));
  const Vec2 k3 = f(adv(h, k2, 0.5 * dt));
  const Vec2 k4 = f(adv(h, k3, dt));
  Vec2 out{h[0] + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
           h[1] + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
  for (double& v : out) v = std::min(std::max(v, -1.0), 1.0);  // box projection
  return out;
}

}  // namespace detail

/// Integrates the differential inclusion h' in -dE(h) for the two collar
/// energies by projected fixed-step RK4.  Events: crossing the |h|_1 = 1
/// manifold (both energies are stationary on it, so the state is snapped and
/// frozen) and coordinate sign changes (snapped, then integration resumes).
inline std::array<double, 2> r2_flow_oracle(R2EnergyKind kind, std::array<double, 2> h, double t,
                                            const OdeOracleConfig& cfg = {}) {
  if (std::abs(h[0]) > 1.0 || std::abs(h[1]) > 1.0)
    throw std::invalid_argument("r2_flow_oracle: start outside the unit box");
  if (t < 0.0) throw std::invalid_argument("r2_flow_oracle: t must be >= 0");
  using detail::l1;
  if (l1(h) <= 1.0 + cfg.event_tolerance) return h;  // stationary region

  double remaining = t;
  while (remaining > 0.0) {
    const double dt = std::min(cfg.step, remaining);
    const detail::Vec2 next = detail::rk4_step(kind, h, dt);

    // Event: reached (or crossed into) the l1 ball, where the flow stops.
    if (l1(next) <= 1.0 + cfg.event_tolerance) {
      double lo = 0.0, hi = dt;  // first crossing time within the step
      if (l1(next) < 1.0 - cfg.event_tolerance) {
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (l1(detail::rk4_step(kind, h, mid)) >= 1.0) {
            lo = mid;
          } else {
            hi = mid;
          }
          if (hi - lo < cfg.event_tolerance * std::max(dt, 1e-300)) break;
        }
      }
      detail::Vec2 snapped = detail::rk4_step(kind, h, 0.5 * (lo + hi));
      // land exactly on the manifold along the sign direction
      const double excess = l1(snapped) - 1.0;
      for (double& v : snapped)
        if (v != 0.0) v -= 0.5 * excess * (v > 0.0 ? 1.0 : -1.0);
      return snapped;
    }

    // Event: a coordinate changed sign; snap it to zero and resume.
    bool snapped_sign = false;
    detail::Vec2 cur = next;
    for (int i = 0; i < 2; ++i) {
      if (h[i] != 0.0 && cur[i] != 0.0 && (h[i] > 0.0) != (cur[i] > 0.0)) {
        cur[i] = 0.0;
        snapped_sign = true;
      }
    }
    h = cur;
    remaining -= dt;
    if (snapped_sign && l1(h) <= 1.0 + cfg.event_tolerance) return h;
  }
  return h;
}

/// Exhaustive grid minimization of the prox objective around f; spaces with
/// at most 3 points only.
inline Field brute_force_prox(const EnergyFunctional& e, const Field& f, double lambda,
                              double grid_radius, double grid_step) {
  if (f.size() > 3) throw std::invalid_argument("brute_force_prox: space too large (max 3 points)");
  if (!(grid_radius > 0.0) || !(grid_step > 0.0))
    throw std::invalid_argument("brute_force_prox: grid parameters must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("brute_force_prox: lambda must be positive");

  const long k = static_cast<long>(std::floor(grid_radius / grid_step));
  const std::size_t n = f.size();
  std::vector<long> idx(n, -k);
  std::vector<double> best(f.values());
  double best_obj = std::numeric_limits<double>::infinity();
  std::vector<double> cand(n);

  while (true) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = f[i] + static_cast<double>(idx[i]) * grid_step;
    const Field g(f.space(), cand);
    const EnergyValue ev = e.evaluate(g);
    if (ev.is_finite()) {
      const Field d = sub(f, g);
      const double obj = inner(d, d) / (2.0 * lambda) + ev.value();
      if (obj < best_obj) {
        best_obj = obj;
        best = cand;
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] > k) {
      idx[pos] = -k;
      ++pos;
    }
    if (pos == n) break;
  }
  if (!std::isfinite(best_obj))
    throw std::runtime_error("brute_force_prox: no grid point with finite energy");
  return Field(f.space(), std::move(best));
}

}  // namespace dirichlet

#pragma once

// Extended-real convex energies over a finite measure space, plus the builtin
// catalog.  An energy owns its evaluator, a capability descriptor that drives
// the proximal solver dispatch, and optional oracles (subgradient selection,
// closed-form prox, projection onto the closure of the domain).
//
// Convention: all gradients/subgradients are taken w.r.t. the m-weighted
// inner product, i.e. the oracle returns v with E(g) >= E(f) + <v, g-f>_m.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dirichlet/core.hpp"

namespace dirichlet {

/// A value in (-inf, +inf]; never -inf.
class EnergyValue {
 public:
  EnergyValue(double v) : v_(v) {  // NOLINT: intentionally implicit
    if (std::isnan(v_) || v_ == -std::numeric_limits<double>::infinity())
      throw std::invalid_argument("EnergyValue: must lie in (-inf, +inf]");
  }
  static EnergyValue infinity() { return EnergyValue(std::numeric_limits<double>::infinity()); }

  bool is_finite() const { return std::isfinite(v_); }
  double value() const { return v_; }

  EnergyValue operator+(const EnergyValue& o) const { return EnergyValue(v_ + o.v_); }
  bool operator<(const EnergyValue& o) const { return v_ < o.v_; }
  bool operator<=(const EnergyValue& o) const { return v_ <= o.v_; }
  bool operator==(const EnergyValue& o) const { return v_ == o.v_; }

 private:
  double v_;
};

enum class ProxCapability {
  kClosedForm,       // direct formula / linear solve
  kSmoothPlusBox,    // smooth gradient + projection onto a convex domain
  kSubgradientOnly,  // only an evaluator and a subgradient selection
};

inline const char* to_string(ProxCapability c) {
  switch (c) {
    case ProxCapability::kClosedForm: return "closed_form_prox";
    case ProxCapability::kSmoothPlusBox: return "smooth_plus_box";
    case ProxCapability::kSubgradientOnly: return "subgradient_only";
  }
  return "?";
}

/// A proper convex energy E : L2_m -> (-inf, +inf].  Domain membership is
/// "evaluate(u) is finite"; +inf is representable only in EnergyValue.
/// Evaluation and all oracles must be pure and re-entrant.
struct EnergyFunctional {
  SpacePtr space;
  std::string name;
  std::function<EnergyValue(const Field&)> evaluate;
  ProxCapability capability = ProxCapability::kSubgradientOnly;

  /// One selection from the subdifferential (m-weighted).  For
  /// kSmoothPlusBox energies this is the gradient of the smooth part.
  std::function<Field(const Field&)> subgradient;

  /// Projection onto the closure of dom E; null when the domain is the whole
  /// space (see full_domain).
  std::function<Field(const Field&)> domain_projection;

  /// prox_{lambda E}: exact minimizer of g -> |f-g|^2/(2 lambda) + E(g).
  std::function<Field(const Field&, double)> closed_form_prox;

  /// m-metric Lipschitz bound for the gradient of the smooth part
  /// (kSmoothPlusBox only).
  double smooth_lipschitz = 0.0;

  /// A registered point of finite energy (properness witness).
  std::vector<double> witness_values;

  bool even = false;
  bool grounded = false;
  bool translation_invariant = false;
  bool full_domain = true;

  EnergyValue operator()(const Field& u) const { return evaluate(u); }
  bool in_domain(const Field& u) const { return evaluate(u).is_finite(); }
  Field witness() const { return Field(space, witness_values); }
};

struct Edge {
  std::size_t i;
  std::size_t j;
  double w;
};

/// Dense (Euclidean) graph Laplacian of the edge list: L = sum_e w (e_i - e_j)(e_i - e_j)^T.
inline Eigen::MatrixXd graph_laplacian(std::size_t n, const std::vector<Edge>& edges) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const Edge& e : edges) {
    const auto i = static_cast<Eigen::Index>(e.i);
    const auto j = static_cast<Eigen::Index>(e.j);
    L(i, i) += e.w;
    L(j, j) += e.w;
    L(i, j) -= e.w;
    L(j, i) -= e.w;
  }
  return L;
}

namespace detail {

inline std::vector<Edge> validate_edges(const MeasureSpace& s, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.i >= s.size() || e.j >= s.size())
      throw std::invalid_argument("graph energy: edge endpoint out of range");
    if (e.i == e.j) throw std::invalid_argument("graph energy: self-loop");
    if (!(e.w >= 0.0) || !std::isfinite(e.w))
      throw std::invalid_argument("graph energy: edge weights must be finite and >= 0");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  return edges;
}

/// Largest eigenvalue of M^{-1/2} A M^{-1/2} for symmetric A (m-metric
/// operator norm of M^{-1} A).
inline double weighted_operator_norm(const MeasureSpace& s, const Eigen::MatrixXd& a) {
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sqrt(i) = 1.0 / std::sqrt(s.weight(static_cast<std::size_t>(i)));
  const Eigen::MatrixXd sym = inv_sqrt.asDiagonal() * a * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  return es.eigenvalues().maxCoeff();
}

}  // namespace detail

/// E(u) = sum_{i<j} w_ij |u_i - u_j|^p, p >= 1.  Even, grounded, translation
/// invariant, full domain.  p = 2 solves its prox by one SPD linear solve.
inline EnergyFunctional make_graph_p_energy(SpacePtr space, std::vector<Edge> edges, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("make_graph_p_energy: need p >= 1");
  edges = detail::validate_edges(*space, std::move(edges));

  EnergyFunctional e;
  e.space = space;
  e.name = "graph_p_energy(p=" + std::to_string(p) + ")";
  e.evaluate = [edges, p](const Field& u) -> EnergyValue {
    double s = 0.0;
    if (p == 2.0) {
      for (const Edge& ed : edges) {
        const double d = u[ed.i] - u[ed.j];
        s += ed.w * d * d;
      }
    } else {
      for (const Edge& ed : edges) s += ed.w * std::pow(std::abs(u[ed.i] - u[ed.j]), p);
    }
    return s;
  };
  e.subgradient = [space, edges, p](const Field& u) {
    std::vector<double> g(u.size(), 0.0);
    for (const Edge& ed : edges) {
      const double d = u[ed.i] - u[ed.j];
      double t;
      if (p == 2.0) {
        t = 2.0 * ed.w * d;
      } else if (d == 0.0) {
        t = 0.0;  // 0 is a valid selection at the kink (p=1) and the true derivative for p>1
      } else {
        t = p * ed.w * std::pow(std::abs(d), p - 1.0) * (d > 0.0 ? 1.0 : -1.0);
      }
      g[ed.i] += t;
      g[ed.j] -= t;
    }
    for (std::size_t i = 0; i < g.size(); ++i) g[i] /= space->weight(i);
    return Field(u.space(), std::move(g));
  };
  if (p == 2.0) {
    e.capability = ProxCapability::kClosedForm;
    const Eigen::MatrixXd lap = graph_laplacian(space->size(), edges);
    e.smooth_lipschitz = detail::weighted_operator_norm(*space, 2.0 * lap);
    e.closed_form_prox = [space, lap](const Field& f, double lambda) {
      const auto n = static_cast<Eigen::Index>(space->size());
      Eigen::MatrixXd a = 2.0 * lambda * lap;
      Eigen::VectorXd rhs(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const double m = space->weight(static_cast<std::size_t>(i));
        a(i, i) += m;
        rhs(i) = m * f[static_cast<std::size_t>(i)];
      }
      const Eigen::VectorXd g = a.llt().solve(rhs);
      std::vector<double> out(static_cast<std::size_t>(n));
      for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = g(i);
      return Field(f.space(), std::move(out));
    };
  } else {
    e.capability = ProxCapability::kSubgradientOnly;
  }
  e.witness_values.assign(space->size(), 0.0);
  e.even = true;
  e.grounded = true;
  e.translation_invariant = true;
  e.full_domain = true;
  return e;
}

/// Discrete Dirichlet integral on the n-node grid over [0,1] restricted to
/// the unit sup-norm ball: E(u) = sum (u_{i+1}-u_i)^2/dx when |u|_inf <= 1,
/// +inf otherwise.
inline EnergyFunctional make_box_h1(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_box_h1: need n >= 2");
  SpacePtr space = MeasureSpace::unit_interval_grid(n);
  const double dx = 1.0 / static_cast<double>(n - 1);

  EnergyFunctional e;
  e.space = space;
  e.name = "box_h1(n=" + std::to_string(n) + ")";
  e.evaluate = [n, dx](const Field& u) -> EnergyValue {
    for (double v : u.values())
      if (std::abs(v) > 1.0) return EnergyValue::infinity();
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double d = u[i + 1] - u[i];
      s += d * d / dx;
    }
    return s;
  };
  e.subgradient = [space, n, dx](const Field& u) {
    std::vector<double> g(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double t = 2.0 * (u[i + 1] - u[i]) / dx;
      g[i + 1] += t;
      g[i] -= t;
    }
    for (std::size_t i = 0; i < n; ++i) g[i] /= space->weight(i);
    return Field(u.space(), std::move(g));
  };
  e.domain_projection = [](const Field& u) {
    return map_field(u, [](double v) { return std::min(std::max(v, -1.0), 1.0); });
  };
  e.capability = ProxCapability::kSmoothPlusBox;
  {
    std::vector<Edge> path;
    for (std::size_t i = 0; i + 1 < n; ++i) path.push_back({i, i + 1, 1.0 / dx});
    e.smooth_lipschitz = detail::weighted_operator_norm(*space, 2.0 * graph_laplacian(n, path));
  }
  e.witness_values.assign(n, 0.0);
  e.even = true;
  e.grounded = true;
  e.translation_invariant = false;
  e.full_domain = false;
  return e;
}

namespace detail {

// Exact prox for the two R^2 collar energies
//   E(h) = theta((|h|_1 - 1)_+) + indicator(|h|_inf <= 1),
// theta(r) = r^2 (quadratic) or r (linear), on the 2-point unit-weight space.
// By sign symmetry the problem reduces to the positive quadrant; the reduced
// problem splits into the region {g1+g2 <= 1} (pure projection) and
// {g1+g2 >= 1} (smooth collar, finite active-set enumeration).
inline std::array<double, 2> r2_prox_reduced(bool quadratic, const std::array<double, 2>& x,
                                             double lambda) {
  auto clamp01 = [](double t) { return std::min(std::max(t, 0.0), 1.0); };

  // Candidate A: projection onto box ∩ {g1+g2 <= 1}, collar inactive.
  std::array<double, 2> ga{clamp01(x[0]), clamp01(x[1])};
  if (ga[0] + ga[1] > 1.0) {
    const double t = clamp01(0.5 * (x[0] - x[1] + 1.0));
    ga = {t, 1.0 - t};
  }
  double best_obj = 0.5 * ((ga[0] - x[0]) * (ga[0] - x[0]) + (ga[1] - x[1]) * (ga[1] - x[1]));
  std::array<double, 2> best = ga;

  // Candidate B: minimizers over box ∩ {g1+g2 >= 1}; candidates whose sum
  // falls below 1 are dominated by the S = 1 boundary, already covered by A.
  auto consider = [&](double g1, double g2) {
    g1 = clamp01(g1);
    g2 = clamp01(g2);
    const double s = g1 + g2;
    if (s < 1.0) return;
    const double r = s - 1.0;
    const double collar = quadratic ? lambda * r * r : lambda * r;
    const double obj =
        0.5 * ((g1 - x[0]) * (g1 - x[0]) + (g2 - x[1]) * (g2 - x[1])) + collar;
    if (obj < best_obj) {
      best_obj = obj;
      best = {g1, g2};
    }
  };

  if (quadratic) {
    const double c = (x[0] + x[1] - 1.0) / (1.0 + 4.0 * lambda);
    consider(x[0] - 2.0 * lambda * c, x[1] - 2.0 * lambda * c);  // both free
    for (const double b : {0.0, 1.0}) {
      // one coordinate pinned to b: min 0.5 (g - x_i)^2 + lambda (g + b - 1)^2
      consider((x[0] + 2.0 * lambda * (1.0 - b)) / (1.0 + 2.0 * lambda), b);
      consider(b, (x[1] + 2.0 * lambda * (1.0 - b)) / (1.0 + 2.0 * lambda));
    }
  } else {
    consider(x[0] - lambda, x[1] - lambda);
    for (const double b : {0.0, 1.0}) {
      consider(x[0] - lambda, b);
      consider(b, x[1] - lambda);
    }
  }
  consider(1.0, 0.0);
  consider(0.0, 1.0);
  consider(1.0, 1.0);
  return best;
}

inline EnergyFunctional make_r2_collar(bool quadratic) {
  SpacePtr space = MeasureSpace::make({"h1", "h2"}, {1.0, 1.0});
  EnergyFunctional e;
  e.space = space;
  e.name = quadratic ? "r2_quadratic_box" : "r2_linear_box";
  e.evaluate = [quadratic](const Field& h) -> EnergyValue {
    if (std::abs(h[0]) > 1.0 || std::abs(h[1]) > 1.0) return EnergyValue::infinity();
    const double l1 = std::abs(h[0]) + std::abs(h[1]);
    if (l1 <= 1.0) return 0.0;
    const double r = l1 - 1.0;
    return quadratic ? r * r : r;
  };
  e.subgradient = [quadratic](const Field& h) {
    const double l1 = std::abs(h[0]) + std::abs(h[1]);
    std::vector<double> g(2, 0.0);
    if (l1 > 1.0) {
      const double slope = quadratic ? 2.0 * (l1 - 1.0) : 1.0;
      g[0] = slope * (h[0] > 0.0 ? 1.0 : (h[0] < 0.0 ? -1.0 : 0.0));
      g[1] = slope * (h[1] > 0.0 ? 1.0 : (h[1] < 0.0 ? -1.0 : 0.0));
    }
    return Field(h.space(), std::move(g));
  };
  e.domain_projection = [](const Field& h) {
    return map_field(h, [](double v) { return std::min(std::max(v, -1.0), 1.0); });
  };
  e.capability = ProxCapability::kClosedForm;
  e.closed_form_prox = [quadratic](const Field& f, double lambda) {
    const double s0 = f[0] >= 0.0 ? 1.0 : -1.0;
    const double s1 = f[1] >= 0.0 ? 1.0 : -1.0;
    const std::array<double, 2> g =
        r2_prox_reduced(quadratic, {std::abs(f[0]), std::abs(f[1])}, lambda);
    return Field(f.space(), {s0 * g[0], s1 * g[1]});
  };
  e.witness_values = {0.0, 0.0};
  e.even = true;
  e.grounded = true;
  e.translation_invariant = false;
  e.full_domain = false;
  return e;
}

}  // namespace detail

/// E(h) = 0 on |h|_1 <= 1, (|h|_1 - 1)^2 on the box collar, +inf off the
/// unit sup-norm box.  Fixed 2-point space with unit weights.
inline EnergyFunctional make_r2_quadratic_box() { return detail::make_r2_collar(true); }

/// Same with the linear collar |h|_1 - 1.
inline EnergyFunctional make_r2_linear_box() { return detail::make_r2_collar(false); }

/// One-sided slope integral on the n-node grid: E(u) = sum (u_{i+1}-u_i)_+.
/// Grounded and translation invariant but NOT even.
inline EnergyFunctional make_one_sided_slope(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_one_sided_slope: need n >= 2");
  SpacePtr space = MeasureSpace::unit_interval_grid(n);
  EnergyFunctional e;
  e.space = space;
  e.name = "one_sided_slope(n=" + std::to_string(n) + ")";
  e.evaluate = [n](const Field& u) -> EnergyValue {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) s += std::max(u[i + 1] - u[i], 0.0);
    return s;
  };
  e.subgradient = [space, n](const Field& u) {
    std::vector<double> g(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (u[i + 1] - u[i] > 0.0) {
        g[i + 1] += 1.0;
        g[i] -= 1.0;
      }
    }
    for (std::size_t i = 0; i < n; ++i) g[i] /= space->weight(i);
    return Field(u.space(), std::move(g));
  };
  e.capability = ProxCapability::kSubgradientOnly;
  e.witness_values.assign(n, 0.0);
  e.even = false;
  e.grounded = true;
  e.translation_invariant = true;
  e.full_domain = true;
  return e;
}

/// Gauge of the unit sublevel set of `base`: N(f) = inf{ l > 0 : base(f/l) <= 1 },
/// computed by bisection on the monotone feasibility predicate.
inline EnergyFunctional make_luxembourg(const EnergyFunctional& base) {
  const Field zero = zero_field(base.space);
  const EnergyValue at_zero = base.evaluate(zero);
  if (!at_zero.is_finite() || at_zero.value() > 1.0)
    throw std::invalid_argument("make_luxembourg: base must be grounded with E(0) <= 1");

  auto base_eval = base.evaluate;
  auto feasible = [base_eval](const Field& f, double l) {
    const EnergyValue v = base_eval(scale(1.0 / l, f));
    return v.is_finite() && v.value() <= 1.0;
  };

  EnergyFunctional e;
  e.space = base.space;
  e.name = "luxembourg(" + base.name + ")";
  e.evaluate = [feasible](const Field& f) -> EnergyValue {
    bool all_zero = true;
    for (double v : f.values())
      if (v != 0.0) all_zero = false;
    if (all_zero) return 0.0;
    if (feasible(f, 1e-12)) return 0.0;  // feasible at every scale
    double lo = 1e-12;
    double hi = 1e-12;
    while (!feasible(f, hi)) {
      lo = hi;
      hi *= 4.0;
      if (hi > 1e12)
        throw std::runtime_error("luxembourg: bisection bracket not found within [1e-12, 1e12]");
    }
    while (hi - lo > 1e-10 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (feasible(f, mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  if (base.subgradient) {
    auto self_eval = e.evaluate;
    auto base_grad = base.subgradient;
    e.subgradient = [self_eval, base_grad](const Field& f) {
      const double nval = self_eval(f).value();
      if (!(nval > 0.0)) return zero_field(f.space());
      const Field g = base_grad(scale(1.0 / nval, f));
      const double denom = inner(g, f);
      if (!(denom > 0.0)) return zero_field(f.space());
      return scale(nval / denom, g);
    };
  }
  e.capability = ProxCapability::kSubgradientOnly;
  e.witness_values.assign(base.space->size(), 0.0);
  e.even = base.even;
  e.grounded = true;
  e.translation_invariant = false;
  e.full_domain = true;
  return e;
}

/// u -> E(u) if u vanishes off Y, +inf otherwise.
inline EnergyFunctional restrict_to_subspace(const EnergyFunctional& base, PointSubset y) {
  y = normalize_subset(*base.space, y);
  const PointSubset yc = complement_subset(*base.space, y);

  EnergyFunctional e = base;
  e.name = "restricted(" + base.name + ")";
  auto base_eval = base.evaluate;
  e.evaluate = [base_eval, yc](const Field& u) -> EnergyValue {
    for (std::size_t i : yc)
      if (u[i] != 0.0) return EnergyValue::infinity();
    return base_eval(u);
  };
  auto base_proj = base.domain_projection;
  e.domain_projection = [base_proj, y](const Field& u) {
    const Field masked = indicator_multiply(y, u);
    return base_proj ? indicator_multiply(y, base_proj(masked)) : masked;
  };
  // The masked quadratic/smooth structure survives restriction; a closed-form
  // prox of the base does not.
  if (base.capability == ProxCapability::kClosedForm ||
      base.capability == ProxCapability::kSmoothPlusBox) {
    if (!base.subgradient)
      throw std::invalid_argument("restrict_to_subspace: base lacks a gradient oracle");
    e.capability = ProxCapability::kSmoothPlusBox;
  } else {
    e.capability = ProxCapability::kSubgradientOnly;
  }
  e.closed_form_prox = nullptr;
  e.full_domain = false;
  e.translation_invariant = false;
  e.witness_values.assign(base.space->size(), 0.0);
  if (!e.evaluate(zero_field(base.space)).is_finite())
    throw std::invalid_argument("restrict_to_subspace: zero field not in restricted domain");
  return e;
}

/// E - E(0); errors when E(0) = +inf.
inline EnergyFunctional ground_energy(const EnergyFunctional& base) {
  const EnergyValue at_zero = base.evaluate(zero_field(base.space));
  if (!at_zero.is_finite()) throw std::invalid_argument("ground_energy: E(0) is not finite");
  const double c = at_zero.value();
  if (c == 0.0 && base.grounded) return base;
  EnergyFunctional e = base;
  e.name = "grounded(" + base.name + ")";
  auto base_eval = base.evaluate;
  e.evaluate = [base_eval, c](const Field& u) -> EnergyValue {
    const EnergyValue v = base_eval(u);
    return v.is_finite() ? EnergyValue(v.value() - c) : v;
  };
  e.grounded = true;
  return e;
}

/// Spot checks for the declared invariants of a functional: properness,
/// midpoint convexity, evenness / groundedness / shift invariance where
/// flagged.  Returns per-flag maxima over `samples` seeded fields.
struct EnergySelfCheck {
  bool ok = true;
  double convexity_violation = 0.0;
  double evenness_violation = 0.0;
  double grounding_violation = 0.0;
  double shift_violation = 0.0;
  long finite_samples = 0;
};

inline EnergySelfCheck self_check(const EnergyFunctional& e, int samples, std::uint64_t seed,
                                  double magnitude = 0.5) {
  EnergySelfCheck r;
  if (!e.evaluate(e.witness()).is_finite())
    throw std::logic_error("self_check: properness witness has infinite energy");
  if (e.grounded) {
    const EnergyValue z = e.evaluate(zero_field(e.space));
    r.grounding_violation = z.is_finite() ? std::abs(z.value()) : std::numeric_limits<double>::infinity();
  }
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    Field u = rng.gaussian_field(e.space, magnitude);
    Field v = rng.gaussian_field(e.space, magnitude);
    if (e.domain_projection) {
      u = e.domain_projection(u);
      v = e.domain_projection(v);
    }
    const EnergyValue eu = e.evaluate(u);
    const EnergyValue ev = e.evaluate(v);
    if (!eu.is_finite() || !ev.is_finite()) continue;
    ++r.finite_samples;
    const EnergyValue mid = e.evaluate(axpy(scale(0.5, u), 0.5, v));
    if (mid.is_finite())
      r.convexity_violation = std::max(
          r.convexity_violation, mid.value() - 0.5 * eu.value() - 0.5 * ev.value());
    else
      r.convexity_violation = std::numeric_limits<double>::infinity();
    if (e.even) {
      const EnergyValue neg = e.evaluate(scale(-1.0, u));
      r.evenness_violation = std::max(
          r.evenness_violation,
          neg.is_finite() ? std::abs(neg.value() - eu.value()) : std::numeric_limits<double>::infinity());
    }
    if (e.translation_invariant) {
      const double c = rng.uniform(-1.0, 1.0);
      const EnergyValue sh = e.evaluate(shift(u, c));
      r.shift_violation = std::max(
          r.shift_violation,
          sh.is_finite() ? std::abs(sh.value() - eu.value()) : std::numeric_limits<double>::infinity());
    }
  }
  r.ok = r.convexity_violation <= 1e-10 && r.evenness_violation <= 1e-12 &&
         r.grounding_violation == 0.0 && r.shift_violation <= 1e-12 && r.finite_samples > 0;
  return r;
}

}  // namespace dirichlet

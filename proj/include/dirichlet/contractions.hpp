#pragma once

// Scalar 1-Lipschitz contraction families and the pair projections onto the
// order cone and the sup-norm tubes of the doubled space.  All projection
// formulas are pointwise and exact.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirichlet/core.hpp"

namespace dirichlet {

enum class ContractionClass {
  kLipschitz,          // |phi(s)-phi(t)| <= |s-t|
  kGrounded,           // additionally phi(0) = 0
  kGroundedMonotone,   // additionally non-decreasing
};

/// A real 1-Lipschitz map with a declared class.  Library families carry an
/// analytic certificate; user-supplied ones are certified on a finite grid.
class ScalarContraction {
 public:
  double operator()(double t) const { return fn_(t); }
  const std::string& name() const { return name_; }
  ContractionClass declared_class() const { return cls_; }
  bool analytic() const { return analytic_; }

  /// Max sampled difference quotient over the certification grid (1 exactly
  /// for analytic library members).
  double lipschitz_certificate() const { return certificate_; }

  bool grounded() const { return cls_ != ContractionClass::kLipschitz; }
  bool monotone() const { return cls_ == ContractionClass::kGroundedMonotone; }

  /// Certify a user-supplied map on a symmetric grid of `grid_points`
  /// points spanning [-radius, radius].  Throws if the declared class fails
  /// on the grid (Lipschitz slack 1e-12, grounding exact, monotonicity
  /// non-strict).
  static ScalarContraction certified(std::string name, std::function<double(double)> fn,
                                     ContractionClass cls, double radius,
                                     int grid_points = 2001) {
    if (!(radius > 0.0)) throw std::invalid_argument("ScalarContraction: radius must be positive");
    if (grid_points < 2) throw std::invalid_argument("ScalarContraction: need at least 2 grid points");
    const double step = 2.0 * radius / static_cast<double>(grid_points - 1);
    double prev_t = -radius;
    double prev_v = fn(prev_t);
    double max_quotient = 0.0;
    for (int k = 1; k < grid_points; ++k) {
      const double t = -radius + step * static_cast<double>(k);
      const double v = fn(t);
      const double q = std::abs(v - prev_v) / (t - prev_t);
      max_quotient = std::max(max_quotient, q);
      if (q > 1.0 + 1e-12)
        throw std::invalid_argument("ScalarContraction '" + name + "': Lipschitz check failed on grid");
      if (cls == ContractionClass::kGroundedMonotone && v < prev_v - 1e-15)
        throw std::invalid_argument("ScalarContraction '" + name + "': monotonicity check failed on grid");
      prev_t = t;
      prev_v = v;
    }
    if (cls != ContractionClass::kLipschitz && fn(0.0) != 0.0)
      throw std::invalid_argument("ScalarContraction '" + name + "': not grounded (phi(0) != 0)");
    return ScalarContraction(std::move(name), std::move(fn), cls, max_quotient, false);
  }

  /// Library constructor for parametric families whose Lipschitz property is
  /// analytic; bypasses grid certification.
  static ScalarContraction analytic_member(std::string name, std::function<double(double)> fn,
                                           ContractionClass cls) {
    return ScalarContraction(std::move(name), std::move(fn), cls, 1.0, true);
  }

 private:
  ScalarContraction(std::string name, std::function<double(double)> fn, ContractionClass cls,
                    double certificate, bool analytic)
      : name_(std::move(name)), fn_(std::move(fn)), cls_(cls),
        certificate_(certificate), analytic_(analytic) {}

  std::string name_;
  std::function<double(double)> fn_;
  ContractionClass cls_;
  double certificate_;
  bool analytic_;
};

/// Grounding: t -> phi(t) - phi(0).  Lipschitz class is preserved; the result
/// is grounded by construction.
inline ScalarContraction ground(const ScalarContraction& phi) {
  const double at_zero = phi(0.0);
  if (!std::isfinite(at_zero)) throw std::invalid_argument("ground: phi(0) not finite");
  if (at_zero == 0.0 && phi.grounded()) return phi;
  const ContractionClass cls = phi.monotone() ? ContractionClass::kGroundedMonotone
                                              : ContractionClass::kGrounded;
  auto base = phi;
  return ScalarContraction::analytic_member(
      "grounded(" + phi.name() + ")",
      [base, at_zero](double t) { return base(t) - at_zero; }, cls);
}

inline Field compose(const ScalarContraction& phi, const Field& u) {
  return map_field(u, [&phi](double t) { return phi(t); });
}

// ---------------------------------------------------------------------------
// Parametric library families.
// ---------------------------------------------------------------------------

inline ScalarContraction identity_contraction() {
  return ScalarContraction::analytic_member("identity", [](double t) { return t; },
                                            ContractionClass::kGroundedMonotone);
}

inline ScalarContraction zero_contraction() {
  return ScalarContraction::analytic_member("zero", [](double) { return 0.0; },
                                            ContractionClass::kGroundedMonotone);
}

/// t -> c*t for |c| <= 1.
inline ScalarContraction scale_contraction(double c) {
  if (std::abs(c) > 1.0) throw std::invalid_argument("scale_contraction: |c| must be <= 1");
  const ContractionClass cls = c >= 0.0 ? ContractionClass::kGroundedMonotone
                                        : ContractionClass::kGrounded;
  return ScalarContraction::analytic_member("scale(" + std::to_string(c) + ")",
                                            [c](double t) { return c * t; }, cls);
}

/// Symmetric soft clamp t -> (-a) v t ^ a, grounded monotone.
inline ScalarContraction clamp_contraction(double a) {
  if (a < 0.0) throw std::invalid_argument("clamp_contraction: a must be >= 0");
  return ScalarContraction::analytic_member(
      "clamp(" + std::to_string(a) + ")",
      [a](double t) { return std::min(std::max(t, -a), a); },
      ContractionClass::kGroundedMonotone);
}

/// psi_a(t) = |t - a| - a, grounded.
inline ScalarContraction psi_alpha(double a) {
  if (a < 0.0) throw std::invalid_argument("psi_alpha: a must be >= 0");
  return ScalarContraction::analytic_member("psi_alpha(" + std::to_string(a) + ")",
                                            [a](double t) { return std::abs(t - a) - a; },
                                            ContractionClass::kGrounded);
}

/// phi_a(t) = |t + a| - a, grounded.
inline ScalarContraction abs_shift(double a) {
  if (a < 0.0) throw std::invalid_argument("abs_shift: a must be >= 0");
  return ScalarContraction::analytic_member("abs_shift(" + std::to_string(a) + ")",
                                            [a](double t) { return std::abs(t + a) - a; },
                                            ContractionClass::kGrounded);
}

/// phi_a^+(t) = (t + a)_+ - a, grounded monotone.
inline ScalarContraction pos_shift(double a) {
  if (a < 0.0) throw std::invalid_argument("pos_shift: a must be >= 0");
  return ScalarContraction::analytic_member("pos_shift(" + std::to_string(a) + ")",
                                            [a](double t) { return std::max(t + a, 0.0) - a; },
                                            ContractionClass::kGroundedMonotone);
}

/// phi_a^-(t) = (t + a)_-  (non-negative convention), grounded, non-monotone.
inline ScalarContraction neg_shift(double a) {
  if (a < 0.0) throw std::invalid_argument("neg_shift: a must be >= 0");
  return ScalarContraction::analytic_member("neg_shift(" + std::to_string(a) + ")",
                                            [a](double t) { return std::max(-(t + a), 0.0); },
                                            ContractionClass::kGrounded);
}

inline ScalarContraction abs_contraction() {
  return ScalarContraction::analytic_member("abs", [](double t) { return std::abs(t); },
                                            ContractionClass::kGrounded);
}

inline ScalarContraction pos_part_contraction() {
  return ScalarContraction::analytic_member("pos", [](double t) { return std::max(t, 0.0); },
                                            ContractionClass::kGroundedMonotone);
}

inline ScalarContraction neg_part_contraction() {
  return ScalarContraction::analytic_member("neg", [](double t) { return std::max(-t, 0.0); },
                                            ContractionClass::kGrounded);
}

/// t -> min(t, a) for a >= 0, grounded monotone; used with disjoint-support
/// partners in locality probes.
inline ScalarContraction min_const(double a) {
  if (a < 0.0) throw std::invalid_argument("min_const: a must be >= 0");
  return ScalarContraction::analytic_member("min_const(" + std::to_string(a) + ")",
                                            [a](double t) { return std::min(t, a); },
                                            ContractionClass::kGroundedMonotone);
}

// ---------------------------------------------------------------------------
// The bivariate clamp family.
// ---------------------------------------------------------------------------

/// H_a(s, t) = (t - a) v s ^ (t + a): clamp s into the band of radius a
/// around t.
inline double H_alpha_scalar(double a, double s, double t) {
  return std::min(std::max(s, t - a), t + a);
}

/// Pointwise H_a(u, v).
inline Field apply_H(double alpha, const Field& u, const Field& v) {
  if (alpha < 0.0) throw std::invalid_argument("apply_H: alpha must be >= 0");
  return zip_fields(u, v, [alpha](double s, double t) { return H_alpha_scalar(alpha, s, t); });
}

enum class Side { kPlus, kMinus };
enum class HKRole { kH, kK };

/// The four one-sided companions:
///   h_a^-(s,t) = s v (t-a),  k_a^-(s,t) = t ^ (s+a),
///   h_a^+(s,t) = s ^ (t+a),  k_a^+(s,t) = t v (s-a),
/// satisfying k_a^{+/-}(s,t) = h_a^{-/+}(t,s) exactly.
inline double hk_scalar(Side side, HKRole role, double a, double s, double t) {
  if (role == HKRole::kH) {
    return side == Side::kPlus ? std::min(s, t + a) : std::max(s, t - a);
  }
  return side == Side::kPlus ? std::max(t, s - a) : std::min(t, s + a);
}

inline Field apply_hk(Side side, HKRole role, double alpha, const Field& u, const Field& v) {
  if (alpha < 0.0) throw std::invalid_argument("apply_hk: alpha must be >= 0");
  return zip_fields(u, v,
                    [=](double s, double t) { return hk_scalar(side, role, alpha, s, t); });
}

// ---------------------------------------------------------------------------
// Stripe sets and their projections in the doubled space.
// ---------------------------------------------------------------------------

enum class StripeKind {
  kLe,          // order cone  {(u,v) : u <= v}
  kAlpha,       // tube        {(u,v) : |u-v| <= alpha}
  kAlphaPlus,   // upper tube  {(u,v) : u-v <= alpha}
  kAlphaMinus,  // lower tube  {(u,v) : u-v >= -alpha}
};

struct StripeProjection {
  StripeKind kind;
  double alpha = std::numeric_limits<double>::infinity();  // >= 0; +inf = whole space

  static StripeProjection le() { return {StripeKind::kLe, 0.0}; }
  static StripeProjection tube(double a) { return {StripeKind::kAlpha, a}; }
  static StripeProjection upper(double a) { return {StripeKind::kAlphaPlus, a}; }
  static StripeProjection lower(double a) { return {StripeKind::kAlphaMinus, a}; }
};

/// Pointwise projection of a pair onto the requested stripe.  alpha = +inf
/// returns the input unchanged (the tube is everything).
inline FieldPair project_pair(const StripeProjection& p, const FieldPair& w) {
  if (p.kind != StripeKind::kLe && p.alpha < 0.0)
    throw std::invalid_argument("project_pair: alpha must be >= 0");
  const std::size_t n = w.first.size();
  std::vector<double> a(n), b(n);
  const double alpha = p.alpha;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = w.first[i];
    const double v = w.second[i];
    double pu = u, pv = v;
    switch (p.kind) {
      case StripeKind::kLe: {
        const double excess = u - v > 0.0 ? u - v : 0.0;
        pu = u - 0.5 * excess;
        pv = v + 0.5 * excess;
        break;
      }
      case StripeKind::kAlpha: {
        if (std::isfinite(alpha)) {
          if (u - v > alpha) {
            pu = 0.5 * (u + v + alpha);
            pv = 0.5 * (u + v - alpha);
          } else if (u - v < -alpha) {
            pu = 0.5 * (u + v - alpha);
            pv = 0.5 * (u + v + alpha);
          }
        }
        break;
      }
      case StripeKind::kAlphaPlus: {
        if (std::isfinite(alpha) && u - v > alpha) {
          pu = 0.5 * (u + v + alpha);
          pv = 0.5 * (u + v - alpha);
        }
        break;
      }
      case StripeKind::kAlphaMinus: {
        if (std::isfinite(alpha) && u - v < -alpha) {
          pu = 0.5 * (u + v - alpha);
          pv = 0.5 * (u + v + alpha);
        }
        break;
      }
    }
    a[i] = pu;
    b[i] = pv;
  }
  return FieldPair(Field(w.first.space(), std::move(a)), Field(w.first.space(), std::move(b)));
}

struct CompositionCheck {
  double max_discrepancy;   // max pointwise gap between the three routes
  FieldPair via_plus_minus; // P_a^+ after P_a^-
  FieldPair via_minus_plus; // P_a^- after P_a^+
  FieldPair direct;         // P_a
};

/// Evaluates P_a^+ o P_a^-, P_a^- o P_a^+, and P_a directly; the three must
/// agree up to floating rounding.
inline CompositionCheck compose_identity_check(double alpha, const FieldPair& w) {
  if (alpha < 0.0) throw std::invalid_argument("compose_identity_check: alpha must be >= 0");
  const FieldPair pm = project_pair(StripeProjection::upper(alpha),
                                    project_pair(StripeProjection::lower(alpha), w));
  const FieldPair mp = project_pair(StripeProjection::lower(alpha),
                                    project_pair(StripeProjection::upper(alpha), w));
  const FieldPair direct = project_pair(StripeProjection::tube(alpha), w);
  double d = 0.0;
  for (std::size_t i = 0; i < w.first.size(); ++i) {
    d = std::max(d, std::abs(pm.first[i] - direct.first[i]));
    d = std::max(d, std::abs(pm.second[i] - direct.second[i]));
    d = std::max(d, std::abs(mp.first[i] - direct.first[i]));
    d = std::max(d, std::abs(mp.second[i] - direct.second[i]));
  }
  return {d, pm, mp, direct};
}

}  // namespace dirichlet

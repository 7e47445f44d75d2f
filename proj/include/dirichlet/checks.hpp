#pragma once

// Property-based verification harness.  Every check evaluates its defining
// inequality or identity on a seeded sample stream, reports the maximal
// violation together with the witness inputs attaining it, and passes iff
// the maximum stays within the check's tolerance.  Counterexamples are
// first-class outputs, not errors.
//
// Tolerance policy: exact-arithmetic identities 1e-12, energy-only
// inequalities 1e-10, anything routed through the iterative solver 1e-6.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirichlet/contractions.hpp"
#include "dirichlet/core.hpp"
#include "dirichlet/energy.hpp"
#include "dirichlet/flow.hpp"
#include "dirichlet/prox.hpp"

namespace dirichlet {

inline constexpr double kExactIdentityTol = 1e-12;
inline constexpr double kEnergyInequalityTol = 1e-10;
inline constexpr double kSolverCheckTol = 1e-6;
inline constexpr double kInfViolation = std::numeric_limits<double>::infinity();

enum class Verdict { kPass, kFail, kIndeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kIndeterminate: return "indeterminate";
  }
  return "?";
}

struct CheckReport {
  std::string check_name;
  Verdict verdict = Verdict::kIndeterminate;
  double max_violation = 0.0;
  nlohmann::ordered_json witness;      // serialized inputs attaining max_violation
  long samples_evaluated = 0;
  double tolerance_used = 0.0;
  std::vector<double> per_sample;      // one violation per evaluated sample
  std::string note;
};

enum class SampleStrategy {
  kIidGaussian,
  kOrderedPairs,
  kStripePairs,
  kDisjointSupportPairs,
  kShiftedPairs,
};

inline const char* to_string(SampleStrategy s) {
  switch (s) {
    case SampleStrategy::kIidGaussian: return "iid_gaussian";
    case SampleStrategy::kOrderedPairs: return "ordered_pairs";
    case SampleStrategy::kStripePairs: return "stripe_pairs";
    case SampleStrategy::kDisjointSupportPairs: return "disjoint_support_pairs";
    case SampleStrategy::kShiftedPairs: return "shifted_pairs";
  }
  return "?";
}

/// Deterministic sample source: identical seed + strategy reproduce identical
/// sequences.  `support`, when non-empty, fixes the block used by the
/// disjoint-support and shifted strategies.
struct Sampler {
  std::uint64_t seed = 1;
  SampleStrategy strategy = SampleStrategy::kIidGaussian;
  int count = 100;
  double magnitude = 1.0;
  double stripe_alpha = 1.0;  // tube radius for kStripePairs
  PointSubset support;        // optional fixed split
};

struct PairSample {
  Field u;
  Field v;
  double c = 0.0;      // the shift constant of kShiftedPairs
  PointSubset block;   // the support block used, when applicable
};

class SampleStream {
 public:
  SampleStream(SpacePtr space, const Sampler& cfg) : space_(std::move(space)), cfg_(cfg), rng_(cfg.seed) {}

  Field next_field() { return rng_.gaussian_field(space_, cfg_.magnitude); }

  PairSample next_pair() {
    switch (cfg_.strategy) {
      case SampleStrategy::kIidGaussian:
        return {next_field(), next_field(), 0.0, {}};
      case SampleStrategy::kOrderedPairs: {
        Field u = next_field();
        Field delta = map_field(rng_.gaussian_field(space_, cfg_.magnitude),
                                [](double t) { return std::abs(t); });
        Field v = add(u, delta);  // u <= v by construction
        return {std::move(u), std::move(v), 0.0, {}};
      }
      case SampleStrategy::kStripePairs: {
        FieldPair w = project_pair(StripeProjection::tube(cfg_.stripe_alpha),
                                   FieldPair(next_field(), next_field()));
        return {std::move(w.first), std::move(w.second), cfg_.stripe_alpha, {}};
      }
      case SampleStrategy::kDisjointSupportPairs: {
        const PointSubset y = block();
        const PointSubset yc = complement_subset(*space_, y);
        Field u = indicator_multiply(y, next_field());
        Field v = indicator_multiply(yc, next_field());
        return {std::move(u), std::move(v), 0.0, y};
      }
      case SampleStrategy::kShiftedPairs: {
        // u free on Y and constant c off it; v vanishes on Y: (u-c)v = 0.
        const PointSubset y = block();
        const PointSubset yc = complement_subset(*space_, y);
        const double c = cfg_.magnitude * (2.0 * rng_.uniform() - 1.0);
        Field u = add(indicator_multiply(y, next_field()),
                      indicator_multiply(yc, constant_field(space_, c)));
        Field v = indicator_multiply(yc, next_field());
        return {std::move(u), std::move(v), c, y};
      }
    }
    throw std::logic_error("SampleStream: unknown strategy");
  }

 private:
  PointSubset block() {
    if (!cfg_.support.empty()) return normalize_subset(*space_, cfg_.support);
    const std::size_t n = space_->size();
    if (n < 2) throw std::invalid_argument("SampleStream: split needs at least 2 points");
    for (int attempt = 0; attempt < 64; ++attempt) {
      PointSubset y;
      for (std::size_t i = 0; i < n; ++i)
        if (rng_.next_u64() & 1u) y.push_back(i);
      if (!y.empty() && y.size() < n) return y;
    }
    return {0};
  }

  SpacePtr space_;
  Sampler cfg_;
  Rng rng_;
};

namespace detail {

inline nlohmann::ordered_json field_json(const Field& u) {
  return nlohmann::ordered_json(u.values());
}

class ReportBuilder {
 public:
  ReportBuilder(std::string name, double tol) {
    r_.check_name = std::move(name);
    r_.tolerance_used = tol;
  }

  void record(double violation, nlohmann::ordered_json witness) {
    ++r_.samples_evaluated;
    r_.per_sample.push_back(violation);
    if (r_.samples_evaluated == 1 || violation > r_.max_violation) {
      r_.max_violation = violation;
      r_.witness = std::move(witness);
    }
  }

  void note(std::string n) { r_.note = std::move(n); }

  CheckReport finish() {
    r_.verdict = r_.samples_evaluated == 0
                     ? Verdict::kIndeterminate
                     : (r_.max_violation <= r_.tolerance_used ? Verdict::kPass : Verdict::kFail);
    return r_;
  }

  CheckReport finish_indeterminate(std::string n) {
    r_.verdict = Verdict::kIndeterminate;
    r_.note = std::move(n);
    return r_;
  }

  long samples() const { return r_.samples_evaluated; }

 private:
  CheckReport r_;
};

inline double finite_or_inf(const EnergyValue& v) {
  return v.is_finite() ? v.value() : kInfViolation;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-sample violation primitives.  Domain escapes count as +inf: the paper
// properties include the domain-membership clause.
// ---------------------------------------------------------------------------

/// (E(u v v) + E(u ^ v)) - (E(u) + E(v)), positive part; requires finite
/// E(u), E(v).
inline double lattice_contraction_violation(const EnergyFunctional& e, const Field& u,
                                            const Field& v) {
  const EnergyValue a = e.evaluate(join(u, v));
  const EnergyValue b = e.evaluate(meet(u, v));
  if (!a.is_finite() || !b.is_finite()) return kInfViolation;
  const double lhs = a.value() + b.value();
  const double rhs = e.evaluate(u).value() + e.evaluate(v).value();
  return std::max(lhs - rhs, 0.0);
}

inline double unit_contraction_violation(const EnergyFunctional& e, const Field& u, const Field& v,
                                         double alpha) {
  const EnergyValue a = e.evaluate(apply_H(alpha, u, v));
  const EnergyValue b = e.evaluate(apply_H(alpha, v, u));
  if (!a.is_finite() || !b.is_finite()) return kInfViolation;
  const double lhs = a.value() + b.value();
  const double rhs = e.evaluate(u).value() + e.evaluate(v).value();
  return std::max(lhs - rhs, 0.0);
}

inline double one_sided_contraction_violation(const EnergyFunctional& e, Side side, const Field& u,
                                              const Field& v, double alpha) {
  const EnergyValue a = e.evaluate(apply_hk(side, HKRole::kH, alpha, u, v));
  const EnergyValue b = e.evaluate(apply_hk(side, HKRole::kK, alpha, u, v));
  if (!a.is_finite() || !b.is_finite()) return kInfViolation;
  const double lhs = a.value() + b.value();
  const double rhs = e.evaluate(u).value() + e.evaluate(v).value();
  return std::max(lhs - rhs, 0.0);
}

/// E(u - psi(u-v)) + E(v + psi(u-v)) - E(u) - E(v), positive part.
inline double claus_violation(const EnergyFunctional& e, const ScalarContraction& psi,
                              const Field& u, const Field& v) {
  const Field w = compose(psi, sub(u, v));
  const EnergyValue a = e.evaluate(sub(u, w));
  const EnergyValue b = e.evaluate(add(v, w));
  if (!a.is_finite() || !b.is_finite()) return kInfViolation;
  return std::max(a.value() + b.value() - e.evaluate(u).value() - e.evaluate(v).value(), 0.0);
}

/// E(u - phi(v)) + E(u + phi(v)) - E(u+v) - E(u-v), positive part; requires
/// finite E(u+v), E(u-v).
inline double puchert_violation(const EnergyFunctional& e, const ScalarContraction& phi,
                                const Field& u, const Field& v) {
  const EnergyValue p = e.evaluate(add(u, v));
  const EnergyValue m = e.evaluate(sub(u, v));
  if (!p.is_finite() || !m.is_finite()) return kInfViolation;
  const Field w = compose(phi, v);
  const EnergyValue a = e.evaluate(sub(u, w));
  const EnergyValue b = e.evaluate(add(u, w));
  if (!a.is_finite() || !b.is_finite()) return kInfViolation;
  return std::max(a.value() + b.value() - p.value() - m.value(), 0.0);
}

/// (E(phi o u) - E(u))_+ for grounded phi.
inline double lipschitz_contraction_violation(const EnergyFunctional& e,
                                              const ScalarContraction& phi, const Field& u) {
  const EnergyValue a = e.evaluate(compose(phi, u));
  if (!a.is_finite()) return kInfViolation;
  return std::max(a.value() - e.evaluate(u).value(), 0.0);
}

/// |E(|u + alpha| - alpha) - E(u)| with domain escapes as +inf.
inline double locality_l0_violation(const EnergyFunctional& e, const Field& u, double alpha) {
  const EnergyValue eu = e.evaluate(u);
  if (!eu.is_finite()) return kInfViolation;
  const EnergyValue ev =
      e.evaluate(map_field(u, [alpha](double t) { return std::abs(t + alpha) - alpha; }));
  if (!ev.is_finite()) return kInfViolation;
  return std::abs(ev.value() - eu.value());
}

/// |Egrounded(u+v) - Egrounded(u) - Egrounded(v)| given E(0) (two-sided).
inline double grounded_additivity_violation(const EnergyFunctional& e, double e_at_zero,
                                            const Field& u, const Field& v) {
  const EnergyValue s = e.evaluate(add(u, v));
  const EnergyValue a = e.evaluate(u);
  const EnergyValue b = e.evaluate(v);
  if (!s.is_finite() || !a.is_finite() || !b.is_finite()) return kInfViolation;
  return std::abs((s.value() - e_at_zero) - (a.value() - e_at_zero) - (b.value() - e_at_zero));
}

/// |E(u v v) + E(u ^ v) - E(u) - E(v)| (the equality form used by locality).
inline double lattice_equality_violation(const EnergyFunctional& e, const Field& u,
                                         const Field& v) {
  const EnergyValue a = e.evaluate(join(u, v));
  const EnergyValue b = e.evaluate(meet(u, v));
  const EnergyValue x = e.evaluate(u);
  const EnergyValue y = e.evaluate(v);
  if (!a.is_finite() || !b.is_finite() || !x.is_finite() || !y.is_finite()) return kInfViolation;
  return std::abs(a.value() + b.value() - x.value() - y.value());
}

/// |E(f) - E(1_Y f) - E(1_{Y^c} f)| (the energy-additivity invariance form).
inline double energy_additivity_violation(const EnergyFunctional& e, const PointSubset& y,
                                          const Field& f) {
  const EnergyValue ef = e.evaluate(f);
  if (!ef.is_finite()) return kInfViolation;
  const PointSubset yc = complement_subset(*f.space(), y);
  const EnergyValue a = e.evaluate(indicator_multiply(y, f));
  const EnergyValue b = e.evaluate(indicator_multiply(yc, f));
  if (!a.is_finite() || !b.is_finite()) return kInfViolation;
  return std::abs(ef.value() - a.value() - b.value());
}

// ---------------------------------------------------------------------------
// Operator-level checks.
// ---------------------------------------------------------------------------

using FieldOperator = std::function<Field(const Field&)>;

/// Order preservation: u <= v implies op(u) <= op(v); the sampler must
/// produce ordered pairs.  Violation per sample: max positive pointwise part
/// of op(u) - op(v).
inline CheckReport check_order_preserving_operator(const FieldOperator& op, const SpacePtr& space,
                                                   const Sampler& sampler,
                                                   double tol = kSolverCheckTol) {
  detail::ReportBuilder b("order_preserving_operator", tol);
  SampleStream stream(space, sampler);
  for (int k = 0; k < sampler.count; ++k) {
    PairSample s = stream.next_pair();
    try {
      const Field a = op(s.u);
      const Field c = op(s.v);
      double viol = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) viol = std::max(viol, a[i] - c[i]);
      viol = std::max(viol, 0.0);
      b.record(viol, {{"sample", k},
                      {"u", detail::field_json(s.u)},
                      {"v", detail::field_json(s.v)}});
    } catch (const std::exception& ex) {
      return b.finish_indeterminate(std::string("operator failure: ") + ex.what());
    }
  }
  return b.finish();
}

/// Sup-norm non-expansiveness: violation = |op(u)-op(v)|_inf - |u-v|_inf.
inline CheckReport check_linf_nonexpansive_operator(const FieldOperator& op, const SpacePtr& space,
                                                    const Sampler& sampler,
                                                    double tol = kSolverCheckTol) {
  detail::ReportBuilder b("linf_nonexpansive_operator", tol);
  SampleStream stream(space, sampler);
  for (int k = 0; k < sampler.count; ++k) {
    PairSample s = stream.next_pair();
    try {
      const double out = norm_linf(sub(op(s.u), op(s.v)));
      const double in = norm_linf(sub(s.u, s.v));
      b.record(std::max(out - in, 0.0), {{"sample", k},
                                         {"u", detail::field_json(s.u)},
                                         {"v", detail::field_json(s.v)}});
    } catch (const std::exception& ex) {
      return b.finish_indeterminate(std::string("operator failure: ") + ex.what());
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Energy-level Markovianity checks.
// ---------------------------------------------------------------------------

namespace detail {

/// Draws pairs with finite E(u), E(v), resampling up to 100x the requested
/// count; returns false when too few samples qualified.
template <typename Body>
inline bool for_finite_pairs(const EnergyFunctional& e, const Sampler& sampler, Body&& body) {
  SampleStream stream(e.space, sampler);
  long accepted = 0;
  const long cap = 100L * std::max(sampler.count, 1);
  for (long drawn = 0; accepted < sampler.count && drawn < cap; ++drawn) {
    PairSample s = stream.next_pair();
    if (!e.in_domain(s.u) || !e.in_domain(s.v)) continue;
    ++accepted;
    body(accepted - 1, s);
  }
  return accepted >= sampler.count;
}

}  // namespace detail

/// Lattice contraction: E(u v v) + E(u ^ v) <= E(u) + E(v).  `extra_pairs`
/// are evaluated first, before the sampled ones (used to pin counterexample
/// witnesses).
inline CheckReport check_lattice_contraction(const EnergyFunctional& e, const Sampler& sampler,
                                             const std::vector<FieldPair>& extra_pairs = {},
                                             double tol = kEnergyInequalityTol) {
  detail::ReportBuilder b("lattice_contraction", tol);
  for (std::size_t k = 0; k < extra_pairs.size(); ++k) {
    const FieldPair& p = extra_pairs[k];
    b.record(lattice_contraction_violation(e, p.first, p.second),
             {{"pinned", k}, {"u", detail::field_json(p.first)}, {"v", detail::field_json(p.second)}});
  }
  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    b.record(lattice_contraction_violation(e, s.u, s.v),
             {{"sample", k}, {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
  });
  if (!enough && b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  if (!enough) b.note("resample cap hit; evaluated fewer samples than requested");
  return b.finish();
}

/// Strong unit contraction: E(H_a(u,v)) + E(H_a(v,u)) <= E(u) + E(v) across
/// the supplied alphas.
inline CheckReport check_strong_unit_contraction(const EnergyFunctional& e, const Sampler& sampler,
                                                 const std::vector<double>& alphas,
                                                 double tol = kEnergyInequalityTol) {
  detail::ReportBuilder b("strong_unit_contraction", tol);
  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    for (double a : alphas) {
      b.record(unit_contraction_violation(e, s.u, s.v, a),
               {{"sample", k}, {"alpha", a},
                {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    }
  });
  if (!enough && b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  if (!enough) b.note("resample cap hit; evaluated fewer samples than requested");
  return b.finish();
}

/// One-sided unit contraction with the h/k family on the requested side.
inline CheckReport check_one_sided_unit_contraction(const EnergyFunctional& e, Side side,
                                                    const Sampler& sampler,
                                                    const std::vector<double>& alphas,
                                                    double tol = kEnergyInequalityTol) {
  detail::ReportBuilder b(side == Side::kPlus ? "one_sided_unit_contraction_upper"
                                              : "one_sided_unit_contraction_lower",
                          tol);
  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    for (double a : alphas) {
      b.record(one_sided_contraction_violation(e, side, s.u, s.v, a),
               {{"sample", k}, {"alpha", a},
                {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    }
  });
  if (!enough && b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  if (!enough) b.note("resample cap hit; evaluated fewer samples than requested");
  return b.finish();
}

/// Claus inequality over a family of grounded monotone contractions.
inline CheckReport check_claus(const EnergyFunctional& e, const Sampler& sampler,
                               const std::vector<ScalarContraction>& psi_list,
                               double tol = kEnergyInequalityTol) {
  for (const auto& psi : psi_list)
    if (!psi.monotone())
      throw std::invalid_argument("check_claus: '" + psi.name() + "' is not grounded monotone");
  detail::ReportBuilder b("claus", tol);
  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    for (const auto& psi : psi_list) {
      b.record(claus_violation(e, psi, s.u, s.v),
               {{"sample", k}, {"psi", psi.name()},
                {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    }
  });
  if (!enough && b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  if (!enough) b.note("resample cap hit; evaluated fewer samples than requested");
  return b.finish();
}

/// Puchert inequality over a family of grounded contractions.
inline CheckReport check_puchert(const EnergyFunctional& e, const Sampler& sampler,
                                 const std::vector<ScalarContraction>& phi_list,
                                 double tol = kEnergyInequalityTol) {
  for (const auto& phi : phi_list)
    if (!phi.grounded())
      throw std::invalid_argument("check_puchert: '" + phi.name() + "' is not grounded");
  detail::ReportBuilder b("puchert", tol);
  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    for (const auto& phi : phi_list) {
      b.record(puchert_violation(e, phi, s.u, s.v),
               {{"sample", k}, {"phi", phi.name()},
                {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    }
  });
  if (!enough && b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  if (!enough) b.note("resample cap hit; evaluated fewer samples than requested");
  return b.finish();
}

/// Lipschitz contraction property E(phi o u) <= E(u); a witness search, since
/// only even Dirichlet functionals must pass over every family member.
inline CheckReport check_lipschitz_contraction(const EnergyFunctional& e, const Sampler& sampler,
                                               const std::vector<ScalarContraction>& phi_list,
                                               double tol = kEnergyInequalityTol) {
  for (const auto& phi : phi_list)
    if (!phi.grounded())
      throw std::invalid_argument("check_lipschitz_contraction: '" + phi.name() +
                                  "' is not grounded");
  detail::ReportBuilder b("lipschitz_contraction", tol);
  SampleStream stream(e.space, sampler);
  long accepted = 0;
  const long cap = 100L * std::max(sampler.count, 1);
  for (long drawn = 0; accepted < sampler.count && drawn < cap; ++drawn) {
    Field u = stream.next_field();
    if (!e.in_domain(u)) continue;
    ++accepted;
    for (const auto& phi : phi_list) {
      b.record(lipschitz_contraction_violation(e, phi, u),
               {{"sample", accepted - 1}, {"phi", phi.name()}, {"u", detail::field_json(u)}});
    }
  }
  if (b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  return b.finish();
}

/// Dirichlet-operator pairings evaluated on the Yoshida operator A_lambda.
/// Pairs are ordered (u = join, v = meet) so that (u-v)_- vanishes
/// identically; the first pairing must be >= -tol, the second within +-tol.
inline CheckReport check_dirichlet_operator(const EnergyFunctional& e, double lambda_small,
                                            const Sampler& sampler, const ProxConfig& cfg = {},
                                            double tol = kSolverCheckTol) {
  if (!(lambda_small > 0.0))
    throw std::invalid_argument("check_dirichlet_operator: lambda_small must be positive");
  detail::ReportBuilder b("dirichlet_operator", tol);
  SampleStream stream(e.space, sampler);
  auto a_lambda = [&](const Field& x) {
    return scale(1.0 / lambda_small, sub(x, prox(e, x, lambda_small, cfg).minimizer));
  };
  for (int k = 0; k < sampler.count; ++k) {
    PairSample s = stream.next_pair();
    const Field u = join(s.u, s.v);
    const Field v = meet(s.u, s.v);
    try {
      const Field diff = sub(a_lambda(u), a_lambda(v));
      const double first = inner(diff, pos_part(sub(u, v)));
      const double second = inner(diff, neg_part(sub(u, v)));
      const double viol = std::max(std::max(-first, 0.0), std::abs(second));
      b.record(viol, {{"sample", k}, {"lambda", lambda_small},
                      {"first_pairing", first}, {"second_pairing", second},
                      {"u", detail::field_json(u)}, {"v", detail::field_json(v)}});
    } catch (const std::exception& ex) {
      return b.finish_indeterminate(std::string("solver failure: ") + ex.what());
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Locality.
// ---------------------------------------------------------------------------

namespace detail {

/// Disjoint-support grounded contraction pairs used by the locality probes;
/// `a` scales with the sampler magnitude.
inline std::vector<std::pair<ScalarContraction, ScalarContraction>> disjoint_contraction_pairs(
    double a) {
  auto shrink_pos = ScalarContraction::analytic_member(
      "shrink_pos(" + std::to_string(a) + ")",
      [a](double t) { return std::max(t - a, 0.0); }, ContractionClass::kGroundedMonotone);
  auto shrink_neg = ScalarContraction::analytic_member(
      "shrink_neg(" + std::to_string(a) + ")",
      [a](double t) { return -std::max(-t - a, 0.0); }, ContractionClass::kGroundedMonotone);
  return {{shrink_pos, shrink_neg},
          {pos_part_contraction(), shrink_neg},
          {shrink_pos, ScalarContraction::analytic_member(
                           "neg_id", [](double t) { return std::min(t, 0.0); },
                           ContractionClass::kGroundedMonotone)}};
}

}  // namespace detail

/// Weak locality on disjoint-support pairs: one sub-report per condition.
///   l0: E(|w|) = E(w) on w in {u, v, u+v};
///   l1: grounded additivity for uv = 0;
///   l2: lattice equality for uv = 0;
///   l3: grounded additivity over disjoint-support contraction sums.
inline std::vector<CheckReport> check_weak_locality(const EnergyFunctional& e,
                                                    const Sampler& sampler,
                                                    double tol = kEnergyInequalityTol) {
  const EnergyValue e0v = e.evaluate(zero_field(e.space));
  detail::ReportBuilder b0("weak_locality.l0", tol);
  detail::ReportBuilder b1("weak_locality.l1", tol);
  detail::ReportBuilder b2("weak_locality.l2", tol);
  detail::ReportBuilder b3("weak_locality.l3", tol);
  if (!e0v.is_finite()) {
    return {b0.finish_indeterminate("E(0) infinite"), b1.finish_indeterminate("E(0) infinite"),
            b2.finish_indeterminate("E(0) infinite"), b3.finish_indeterminate("E(0) infinite")};
  }
  const double e0 = e0v.value();
  const auto phi_pairs = detail::disjoint_contraction_pairs(0.5 * sampler.magnitude);

  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    const Field sum = add(s.u, s.v);
    double l0 = 0.0;
    for (const Field* w : {&s.u, &s.v, &sum})
      l0 = std::max(l0, locality_l0_violation(e, *w, 0.0));
    b0.record(l0, {{"sample", k}, {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    b1.record(grounded_additivity_violation(e, e0, s.u, s.v),
              {{"sample", k}, {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    b2.record(lattice_equality_violation(e, s.u, s.v),
              {{"sample", k}, {"u", detail::field_json(s.u)}, {"v", detail::field_json(s.v)}});
    double l3 = 0.0;
    std::string worst_pair;
    for (const auto& [phi, psi] : phi_pairs) {
      const Field a = compose(phi, sum);
      const Field b_ = compose(psi, sum);
      const double viol = grounded_additivity_violation(e, e0, a, b_);
      if (viol >= l3) {
        l3 = viol;
        worst_pair = phi.name() + "+" + psi.name();
      }
    }
    b3.record(l3, {{"sample", k}, {"contractions", worst_pair},
                   {"w", detail::field_json(sum)}});
  });
  std::vector<CheckReport> out;
  for (detail::ReportBuilder* b : {&b0, &b1, &b2, &b3}) {
    if (!enough && b->samples() == 0) {
      out.push_back(b->finish_indeterminate("too few finite-energy samples"));
    } else {
      if (!enough) b->note("resample cap hit");
      out.push_back(b->finish());
    }
  }
  return out;
}

/// Strong locality on (u-c)v = 0 pairs: sub-reports for L0 across alphas,
/// grounded additivity L1, the one-sided equalities L2 at alpha = |c| (both
/// sign choices), and the disjoint-contraction identity L3.
inline std::vector<CheckReport> check_strong_locality(const EnergyFunctional& e,
                                                      const Sampler& sampler,
                                                      const std::vector<double>& alphas,
                                                      double tol = kEnergyInequalityTol) {
  const EnergyValue e0v = e.evaluate(zero_field(e.space));
  detail::ReportBuilder b0("strong_locality.l0", tol);
  detail::ReportBuilder b1("strong_locality.l1", tol);
  detail::ReportBuilder b2p("strong_locality.l2_upper", tol);
  detail::ReportBuilder b2m("strong_locality.l2_lower", tol);
  detail::ReportBuilder b3("strong_locality.l3", tol);
  if (!e0v.is_finite()) {
    std::vector<CheckReport> out;
    for (detail::ReportBuilder* b : {&b0, &b1, &b2p, &b2m, &b3})
      out.push_back(b->finish_indeterminate("E(0) infinite"));
    return out;
  }
  const double e0 = e0v.value();

  const bool enough = detail::for_finite_pairs(e, sampler, [&](long k, const PairSample& s) {
    const Field sum = add(s.u, s.v);
    double l0 = 0.0;
    double worst_alpha = 0.0;
    for (double a : alphas) {
      for (const Field* w : {&s.u, &sum}) {
        const double viol = locality_l0_violation(e, *w, a);
        if (viol >= l0) {
          l0 = viol;
          worst_alpha = a;
        }
      }
    }
    b0.record(l0, {{"sample", k}, {"alpha", worst_alpha}, {"u", detail::field_json(s.u)},
                   {"v", detail::field_json(s.v)}});
    b1.record(grounded_additivity_violation(e, e0, s.u, s.v),
              {{"sample", k}, {"c", s.c}, {"u", detail::field_json(s.u)},
               {"v", detail::field_json(s.v)}});
    const double ac = std::abs(s.c);
    auto equality = [&](Side side) {
      const EnergyValue a = e.evaluate(apply_hk(side, HKRole::kH, ac, s.u, s.v));
      const EnergyValue b = e.evaluate(apply_hk(side, HKRole::kK, ac, s.u, s.v));
      if (!a.is_finite() || !b.is_finite()) return kInfViolation;
      return std::abs(a.value() + b.value() - e.evaluate(s.u).value() - e.evaluate(s.v).value());
    };
    b2p.record(equality(Side::kPlus), {{"sample", k}, {"c", s.c},
                                       {"u", detail::field_json(s.u)},
                                       {"v", detail::field_json(s.v)}});
    b2m.record(equality(Side::kMinus), {{"sample", k}, {"c", s.c},
                                        {"u", detail::field_json(s.u)},
                                        {"v", detail::field_json(s.v)}});
    // L3: grounded parts of general Lipschitz maps with disjoint supports.
    const double a = 0.25 + 0.5 * std::abs(s.c);
    const double bshift = a + 0.5;
    auto lower = ScalarContraction::analytic_member(
        "min_const", [a](double t) { return std::min(t, a); },
        ContractionClass::kGroundedMonotone);
    auto upper = ScalarContraction::analytic_member(
        "shrink_pos", [bshift](double t) { return std::max(t - bshift, 0.0); },
        ContractionClass::kGroundedMonotone);
    b3.record(grounded_additivity_violation(e, e0, compose(lower, sum), compose(upper, sum)),
              {{"sample", k}, {"a", a}, {"b", bshift}, {"w", detail::field_json(sum)}});
  });
  std::vector<CheckReport> out;
  for (detail::ReportBuilder* b : {&b0, &b1, &b2p, &b2m, &b3}) {
    if (!enough && b->samples() == 0) {
      out.push_back(b->finish_indeterminate("too few finite-energy samples"));
    } else {
      if (!enough) b->note("resample cap hit");
      out.push_back(b->finish());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariance.
// ---------------------------------------------------------------------------

/// Double invariance of the band Y: four sub-reports
///   (i)   P T_t = T_t P (and complement)       [L2, across t_list]
///   (ii)  P A_l = A_l P at the smallest lambda [L2]
///   (iii) P J_l = J_l P (and complement)       [L2, across lambda_list]
///   (iv)  E(f) = E(P f) + E(P' f)              [two-sided]
/// plus an aggregate whose verdict is "doubly invariant" iff all four pass.
/// `extra_probes` are evaluated before the sampled fields.
inline std::vector<CheckReport> check_invariance(const EnergyFunctional& e, const PointSubset& y,
                                                 const std::vector<double>& t_list,
                                                 const std::vector<double>& lambda_list,
                                                 const Sampler& sampler, const ProxConfig& cfg = {},
                                                 const std::vector<Field>& extra_probes = {},
                                                 double flow_tol = 1e-5) {
  if (lambda_list.empty()) throw std::invalid_argument("check_invariance: empty lambda list");
  const PointSubset yn = normalize_subset(*e.space, y);
  const PointSubset yc = complement_subset(*e.space, yn);
  auto P = [&](const Field& f) { return indicator_multiply(yn, f); };
  auto Pc = [&](const Field& f) { return indicator_multiply(yc, f); };

  detail::ReportBuilder bt("invariance.semigroup_commute", kSolverCheckTol);
  detail::ReportBuilder ba("invariance.generator_commute", kSolverCheckTol);
  detail::ReportBuilder bj("invariance.resolvent_commute", kSolverCheckTol);
  detail::ReportBuilder be("invariance.energy_additivity", kExactIdentityTol);

  const double lambda_min = *std::min_element(lambda_list.begin(), lambda_list.end());
  auto a_lambda = [&](const Field& x) {
    return scale(1.0 / lambda_min, sub(x, prox(e, x, lambda_min, cfg).minimizer));
  };

  auto eval_probe = [&](long k, const Field& f) {
    double vt = 0.0;
    for (double t : t_list) {
      // both sides evaluated at the depth the primary flow converged at:
      // the commutation identities hold level by level
      const FlowResult main = flow(e, f, t, flow_tol, cfg);
      vt = std::max(vt, norm_l2(sub(P(main.value),
                                    flow_at_depth(e, P(f), t, main.n_used, flow_tol, cfg))));
      vt = std::max(vt, norm_l2(sub(Pc(main.value),
                                    flow_at_depth(e, Pc(f), t, main.n_used, flow_tol, cfg))));
    }
    bt.record(vt, {{"sample", k}, {"f", detail::field_json(f)}});

    const Field af = a_lambda(f);
    double va = std::max(norm_l2(sub(P(af), a_lambda(P(f)))),
                         norm_l2(sub(Pc(af), a_lambda(Pc(f)))));
    ba.record(va, {{"sample", k}, {"lambda", lambda_min}, {"f", detail::field_json(f)}});

    double vj = 0.0;
    for (double lam : lambda_list) {
      const Field jf = prox(e, f, lam, cfg).minimizer;
      vj = std::max(vj, norm_l2(sub(P(jf), prox(e, P(f), lam, cfg).minimizer)));
      vj = std::max(vj, norm_l2(sub(Pc(jf), prox(e, Pc(f), lam, cfg).minimizer)));
    }
    bj.record(vj, {{"sample", k}, {"f", detail::field_json(f)}});

    be.record(energy_additivity_violation(e, yn, f), {{"sample", k}, {"f", detail::field_json(f)}});
  };

  long k = 0;
  for (const Field& f : extra_probes) eval_probe(k++, f);
  SampleStream stream(e.space, sampler);
  long accepted = 0;
  const long cap = 100L * std::max(sampler.count, 1);
  for (long drawn = 0; accepted < sampler.count && drawn < cap; ++drawn) {
    Field f = stream.next_field();
    if (!e.in_domain(f)) {
      if (e.domain_projection) f = e.domain_projection(f);
      if (!e.in_domain(f)) continue;
    }
    ++accepted;
    eval_probe(k++, f);
  }

  std::vector<CheckReport> out;
  out.push_back(bt.finish());
  out.push_back(ba.finish());
  out.push_back(bj.finish());
  out.push_back(be.finish());
  CheckReport agg;
  agg.check_name = "invariance";
  agg.samples_evaluated = out[0].samples_evaluated;
  agg.tolerance_used = kSolverCheckTol;
  bool all_pass = true, any_ind = false;
  for (const CheckReport& r : out) {
    agg.max_violation = std::max(agg.max_violation, r.max_violation);
    all_pass = all_pass && r.verdict == Verdict::kPass;
    any_ind = any_ind || r.verdict == Verdict::kIndeterminate;
  }
  agg.verdict = any_ind ? Verdict::kIndeterminate : (all_pass ? Verdict::kPass : Verdict::kFail);
  agg.note = all_pass ? "doubly invariant" : "not doubly invariant";
  agg.witness = {{"conditions", {out[0].check_name, out[1].check_name, out[2].check_name,
                                 out[3].check_name}}};
  out.push_back(std::move(agg));
  return out;
}

/// Plain invariance: the flow maps fields supported in Y into fields
/// supported in Y (leakage in L2), and E(1_Y f) <= E(f).
inline CheckReport check_plain_invariance(const EnergyFunctional& e, const PointSubset& y,
                                          const std::vector<double>& t_list,
                                          const Sampler& sampler, const ProxConfig& cfg = {},
                                          double tol = kSolverCheckTol, double flow_tol = 1e-5) {
  const PointSubset yn = normalize_subset(*e.space, y);
  const PointSubset yc = complement_subset(*e.space, yn);
  detail::ReportBuilder b("plain_invariance", tol);
  SampleStream stream(e.space, sampler);
  long accepted = 0;
  const long cap = 100L * std::max(sampler.count, 1);
  for (long drawn = 0; accepted < sampler.count && drawn < cap; ++drawn) {
    Field f = stream.next_field();
    if (!e.in_domain(f)) {
      if (e.domain_projection) f = e.domain_projection(f);
      if (!e.in_domain(f)) continue;
    }
    ++accepted;
    const Field g = indicator_multiply(yn, f);
    double leak = 0.0;
    for (double t : t_list)
      leak = std::max(leak, norm_l2(indicator_multiply(yc, flow(e, g, t, flow_tol, cfg).value)));
    const EnergyValue eg = e.evaluate(g);
    const double drop =
        eg.is_finite() ? std::max(eg.value() - e.evaluate(f).value(), 0.0) : kInfViolation;
    b.record(std::max(leak, drop),
             {{"sample", accepted - 1}, {"leakage", leak}, {"energy_excess", drop},
              {"f", detail::field_json(f)}});
  }
  if (b.samples() == 0) return b.finish_indeterminate("too few finite-energy samples");
  return b.finish();
}

/// Continuity at zero for even Dirichlet functionals:
/// E(u_+ ^ alpha) -> E(0) along a decreasing alpha schedule.
inline CheckReport check_continuity_at_zero(const EnergyFunctional& e, const Field& u,
                                            const std::vector<double>& alpha_schedule,
                                            double tol = 1e-3) {
  if (!e.even)
    throw std::invalid_argument("check_continuity_at_zero: energy is not flagged even");
  if (alpha_schedule.empty())
    throw std::invalid_argument("check_continuity_at_zero: empty schedule");
  detail::ReportBuilder b("continuity_at_zero", tol);
  if (!e.in_domain(u)) return b.finish_indeterminate("probe field outside dom E");
  const EnergyValue e0 = e.evaluate(zero_field(e.space));
  if (!e0.is_finite()) return b.finish_indeterminate("E(0) infinite");
  const Field up = pos_part(u);
  nlohmann::ordered_json seq = nlohmann::ordered_json::array();
  double last = 0.0;
  for (double a : alpha_schedule) {
    const EnergyValue v = e.evaluate(meet(up, constant_field(e.space, a)));
    last = detail::finite_or_inf(v);
    seq.push_back({{"alpha", a}, {"value", last}});
  }
  const double viol = std::isfinite(last) ? std::abs(last - e0.value()) : kInfViolation;
  b.record(viol, {{"u", detail::field_json(u)}, {"sequence", seq}, {"E0", e0.value()}});
  return b.finish();
}

/// Oddness of the flow and resolvent: max over samples of |T_t(-f) + T_t(f)|
/// and |J_l(-f) + J_l(f)|; expected to pass exactly when E is even.
inline CheckReport check_odd_even_consistency(const EnergyFunctional& e,
                                              const std::vector<double>& t_list,
                                              const std::vector<double>& lambda_list,
                                              const Sampler& sampler, const ProxConfig& cfg = {},
                                              double tol = kSolverCheckTol,
                                              double flow_tol = 1e-5) {
  detail::ReportBuilder b("odd_even_consistency", tol);
  b.note(e.even ? "energy flagged even: oddness expected"
                : "energy not flagged even: violations expected");
  SampleStream stream(e.space, sampler);
  for (int k = 0; k < sampler.count; ++k) {
    const Field f = stream.next_field();
    const Field nf = scale(-1.0, f);
    double viol = 0.0;
    for (double lam : lambda_list)
      viol = std::max(viol, norm_l2(add(prox(e, nf, lam, cfg).minimizer,
                                        prox(e, f, lam, cfg).minimizer)));
    for (double t : t_list) {
      const FlowResult main = flow(e, f, t, flow_tol, cfg);
      viol = std::max(viol, norm_l2(add(flow_at_depth(e, nf, t, main.n_used, flow_tol, cfg),
                                        main.value)));
    }
    b.record(viol, {{"sample", k}, {"f", detail::field_json(f)}});
  }
  return b.finish();
}

}  // namespace dirichlet

#include <catch2/catch_amalgamated.hpp>

#include "dirichlet/energy.hpp"
#include "dirichlet/flow.hpp"
#include "dirichlet/oracles.hpp"
#include "dirichlet/prox.hpp"

using namespace dirichlet;

namespace {

EnergyFunctional two_node_quadratic() {
  return make_graph_p_energy(MeasureSpace::uniform(2), {{0, 1, 1.0}}, 2.0);
}

EnergyFunctional zero_energy(SpacePtr s) {
  EnergyFunctional e;
  e.space = s;
  e.name = "zero";
  e.evaluate = [](const Field&) -> EnergyValue { return 0.0; };
  e.subgradient = [](const Field& u) { return zero_field(u.space()); };
  e.capability = ProxCapability::kClosedForm;
  e.closed_form_prox = [](const Field& f, double) { return f; };
  e.witness_values.assign(s->size(), 0.0);
  e.even = e.grounded = e.translation_invariant = true;
  return e;
}

}  // namespace

TEST_CASE("flow of the zero energy is the identity") {
  SpacePtr s = MeasureSpace::uniform(3);
  EnergyFunctional e = zero_energy(s);
  const Field f(s, {3, -1, 2});
  for (double t : {0.0, 0.5, 4.0}) {
    const FlowResult r = flow(e, f, t, 1e-10);
    CHECK(r.converged);
    CHECK(norm_l2(sub(r.value, f)) == 0.0);
  }
  CHECK_THROWS_AS(flow(e, f, -1.0), std::invalid_argument);
}

TEST_CASE("two-node heat flow matches the closed form") {
  EnergyFunctional e = two_node_quadratic();
  const Field f(e.space, {1.0, 0.0});
  // generator is 2L; the antisymmetric mode decays like exp(-4t)
  const FlowResult r = flow(e, f, 0.5, 1e-7);
  CHECK(r.converged);
  const double expct = 0.5 * std::exp(-2.0);
  CHECK(r.value[0] == Catch::Approx(0.5 + expct).margin(2e-6));
  CHECK(r.value[1] == Catch::Approx(0.5 - expct).margin(2e-6));
}

TEST_CASE("flow agrees with the spectral oracle on a weighted graph") {
  SpacePtr s = MeasureSpace::make({"a", "b", "c", "d"}, {0.5, 1.0, 1.5, 2.0});
  std::vector<Edge> edges{{0, 1, 0.7}, {1, 2, 1.1}, {2, 3, 0.4}, {0, 3, 0.9}};
  EnergyFunctional e = make_graph_p_energy(s, edges, 2.0);
  const Eigen::MatrixXd lap = graph_laplacian(4, edges);
  Rng rng(19);
  const Field f = rng.gaussian_field(s, 1.0);
  for (double t : {0.1, 1.0}) {
    const Field oracle = heat_flow_oracle(lap, f, t);
    const FlowResult r = flow(e, f, t, 1e-6);
    CHECK(r.converged);
    CHECK(norm_l2(sub(r.value, oracle)) <= 1e-4);
  }
}

TEST_CASE("flow at t = 0 is the domain projection") {
  EnergyFunctional e = make_box_h1(3);
  const Field f(e.space, {2.0, 0.0, -3.0});
  const FlowResult r = flow(e, f, 0.0);
  CHECK(r.value.values() == std::vector<double>{1.0, 0.0, -1.0});
  CHECK(r.n_used == 0);
}

TEST_CASE("fields in the l1 ball are flow fixed points") {
  for (EnergyFunctional e : {make_r2_quadratic_box(), make_r2_linear_box()}) {
    const Field h(e.space, {0.5, 0.3});
    for (double t : {0.1, 1.0, 10.0}) {
      const Field v = flow(e, h, t, 1e-9).value;
      CHECK(norm_l2(sub(v, h)) <= 1e-8);
    }
  }
}

TEST_CASE("semigroup property spot-check") {
  EnergyFunctional e = two_node_quadratic();
  Rng rng(5);
  const Field f = rng.gaussian_field(e.space, 1.0);
  const double tol = 1e-8;
  const Field direct = flow(e, f, 0.7, tol).value;
  const Field stepped = flow(e, flow(e, f, 0.4, tol).value, 0.3, tol).value;
  CHECK(norm_l2(sub(direct, stepped)) <= 1e-6);
}

TEST_CASE("flow non-expansiveness on random pairs") {
  SpacePtr s = MeasureSpace::uniform(5);
  std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 1.5}, {3, 4, 0.8}, {0, 4, 0.3}};
  for (double p : {2.0, 3.0}) {
    EnergyFunctional e = make_graph_p_energy(s, edges, p);
    Rng rng(31);
    for (int k = 0; k < 4; ++k) {
      const Field f = rng.gaussian_field(s, 1.0);
      const Field g = rng.gaussian_field(s, 1.0);
      const double t = rng.uniform(0.1, 1.5);
      // every resolvent composition is non-expansive, so a moderate flow
      // tolerance only feeds solver noise into the margin
      const Field tf = flow(e, f, t, 1e-4).value;
      const Field tg = flow(e, g, t, 1e-4).value;
      CHECK(norm_l2(sub(tf, tg)) <= norm_l2(sub(f, g)) + 1e-5);
    }
  }
}

TEST_CASE("generator probe approaches the gradient") {
  EnergyFunctional e = two_node_quadratic();
  const Field f(e.space, {1.0, 0.0});
  const Field target(e.space, {2.0, -2.0});  // 2 L f

  const Field p1 = generator_probe(e, f, 1e-4);
  CHECK(norm_l2(sub(p1, target)) <= 1e-2);

  // first-order Richardson behaviour: halving the step halves the error
  const Field p2 = generator_probe(e, f, 5e-5);
  const double e1 = norm_l2(sub(p1, target));
  const double e2 = norm_l2(sub(p2, target));
  CHECK(e1 / e2 == Catch::Approx(2.0).epsilon(0.2));

  // minimizers probe to zero
  CHECK(norm_l2(generator_probe(e, zero_field(e.space), 1e-4)) <= 1e-9);
}

TEST_CASE("generator probe on the r2 collar") {
  EnergyFunctional e = make_r2_quadratic_box();
  const Field h(e.space, {0.9, 0.6});
  // grad (|h|_1 - 1)^2 = 2 (0.5) (1,1) = (1,1) in the open collar
  const Field p = generator_probe(e, h, 1e-4);
  CHECK(p[0] == Catch::Approx(1.0).margin(1e-2));
  CHECK(p[1] == Catch::Approx(1.0).margin(1e-2));
}

TEST_CASE("energy recovery from the resolvent alone") {
  EnergyFunctional e = two_node_quadratic();
  const Field f(e.space, {1.0, 0.0});
  const Field f0 = zero_field(e.space);
  const std::vector<double> schedule{1.0, 0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3, 3e-4, 1e-4};
  const auto recs = recover_energy(e, {f}, schedule, f0);
  REQUIRE(recs.size() == 1);
  const EnergyRecovery& r = recs[0];
  CHECK(r.monotone);
  // estimates increase towards E(f) - E(f0) = 1
  for (std::size_t k = 1; k < r.estimates.size(); ++k)
    CHECK(r.estimates[k] >= r.estimates[k - 1] - 1e-10);
  CHECK(r.final_estimate == Catch::Approx(1.0).margin(1e-3));
  CHECK(r.quadrature_gap <= 1e-8);

  // f = f0 integrates to zero at every lambda
  const auto zero_recs = recover_energy(e, {f0}, schedule, f0);
  for (double v : zero_recs[0].estimates) CHECK(std::abs(v) <= 1e-14);

  // zero energy recovers zero
  EnergyFunctional z = zero_energy(e.space);
  const auto zrecs = recover_energy(z, {f}, schedule, f0);
  for (double v : zrecs[0].estimates) CHECK(std::abs(v) <= 1e-14);

  CHECK_THROWS_AS(recover_energy(e, {f}, {0.1, 0.5}, f0), std::invalid_argument);
  CHECK_THROWS_AS(recover_energy(e, {f}, {}, f0), std::invalid_argument);
}

TEST_CASE("envelope dissipates along the flow") {
  for (EnergyFunctional e : {two_node_quadratic(), make_r2_quadratic_box()}) {
    Field f = e.name == "r2_quadratic_box" ? Field(e.space, {0.9, 0.6})
                                           : Field(e.space, {1.0, -0.5});
    const double lam = 0.05;
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {0.0, 0.1, 0.3, 0.6, 1.0, 2.0}) {
      const Field ft = flow(e, f, t, 1e-6).value;
      const double env = prox(e, ft, lam).objective;
      CHECK(env <= prev + 1e-6);
      prev = env;
    }
  }
}

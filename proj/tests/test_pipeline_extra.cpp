#include "doctest.h"
#include "funeq/error.hpp"
#include "funeq/expr.hpp"
#include "funeq/oracle.hpp"
#include "funeq/solver_additive.hpp"
#include "funeq/solver_higher.hpp"
#include "support.hpp"

using namespace funeq;

TEST_CASE("k = 1 triangular structure: first nonzero data sum pins the top coefficient") {
  testing::Rng rng(1123);
  int exercised = 0;
  for (int iter = 0; iter < 80 && exercised < 25; ++iter) {
    ProblemSpec spec;
    spec.tower = Tower::make({"t"});
    spec.n = 3;
    spec.mode = Mode::alpha_only;
    spec.a.push_back(rng.nonzero_element(spec.tower, 1));
    spec.a.push_back(rng.poly_element(spec.tower, 2, 2, 5));
    spec.alpha.push_back(rng.poly_element(spec.tower, 2, 2, 5));
    spec.alpha.push_back(rng.poly_element(spec.tower, 2, 2, 5));
    FieldElement a3 = rng.nonzero_poly_element(spec.tower, 2, 2, 5);
    spec.alpha.push_back(a3);
    spec.a.push_back(-(spec.a[0] * spec.alpha[0] + spec.a[1] * spec.alpha[1]) / a3);

    // first index with a nonzero data sum, within a small cap
    int pivot = -1;
    for (int d = 0; d <= 3 && pivot < 0; ++d)
      if (!spec.data_sum(Side::alpha, {d}).is_zero()) pivot = d;
    if (pivot < 1) continue;  // needs rows 0..pivot-1 to vanish with pivot >= 1
    ++exercised;

    spec.bounds = {pivot};
    SolutionSpace out = solve_additive(spec, false);
    REQUIRE(out.particular.has_value());
    FieldElement sj = spec.data_sum(Side::alpha, {pivot});
    CHECK(out.particular->coeff({pivot}) == sj.inv());
    for (int d = 0; d < pivot; ++d) CHECK(out.particular->coeff({d}).is_zero());
    // every direction below the pivot is free
    CHECK(static_cast<int>(out.kernel.size()) == pivot);
    for (int d = 0; d < pivot; ++d) {
      CHECK(out.kernel[d].coeff({d}) == spec.tower->one());
      CHECK(out.kernel[d].coeff({pivot}).is_zero());
    }
  }
  CHECK(exercised >= 25);
}

TEST_CASE("pipeline over an algebraic extension") {
  // K = Q(t)(u), u^2 = t; shortcut constant 2u with particular u/(2t) x
  RatFunc r0 = -RatFunc::variable(1, 0);
  auto K = Tower::make({"t"}, "u", {r0, RatFunc(1)});
  ProblemSpec spec;
  spec.tower = K;
  spec.n = 2;
  spec.a = {K->one(), -K->one()};
  spec.alpha = {K->u(), -K->u()};
  spec.mode = Mode::alpha_only;
  spec.bounds = {1};
  SolutionSpace out = solve_additive(spec, false);
  CHECK(out.classification == SolutionSpace::Classification::identity_shortcut);
  REQUIRE(out.particular.has_value());
  CHECK(*out.c_tilde == K->u().scaled(BigRat(2)));
  CHECK(out.particular->coeff({0}) == K->u() / K->gen(0).scaled(BigRat(2)));  // 1/(2u) = u/(2t)

  // derivative data sums run through the implicit differentiation
  ProblemSpec hom;
  hom.tower = K;
  hom.n = 2;
  hom.a = {K->one(), -K->u() / K->gen(0)};  // 1, -u/t
  hom.alpha = {K->u(), K->gen(0)};          // u, t: sum = u - u = 0
  hom.mode = Mode::alpha_only;
  hom.bounds = {1};
  CHECK(hom.data_sum(Side::alpha, {0}).is_zero());
  // sum a_i d(alpha_i) = u/(2t) - u/t = -u/(2t)
  CHECK(hom.data_sum(Side::alpha, {1}) == -(K->u() / K->gen(0).scaled(BigRat(2))));
  SolutionSpace hout = solve_additive(hom, false);
  REQUIRE(hout.particular.has_value());
  CHECK(hout.particular->coeff({1}) == -(K->gen(0).scaled(BigRat(2)) / K->u()));
}

TEST_CASE("full mode with mismatched nonzero sums is empty at every bound") {
  ProblemSpec spec;
  spec.tower = Tower::make({"t"});
  spec.n = 2;
  spec.a = {spec.tower->one(), spec.tower->one()};
  spec.alpha = {parse_element("1", spec.tower), parse_element("2", spec.tower)};  // sum 3
  spec.beta = {parse_element("1", spec.tower), parse_element("4", spec.tower)};   // sum 5
  spec.mode = Mode::full;
  spec.bounds = {2};
  SolutionSpace out = solve_additive(spec);
  CHECK(out.classification == SolutionSpace::Classification::empty);
  CHECK(!out.particular.has_value());
  CHECK(out.kernel.empty());
  CHECK(out.generators.empty());
}

TEST_CASE("full mode with equal parameter families matches the separated solve") {
  ProblemSpec spec;
  spec.tower = Tower::make({"t"});
  for (const char* s : {"t^3", "-t^2", "-t", "1"}) spec.a.push_back(parse_element(s, spec.tower));
  for (const char* s : {"t", "t^2", "t^3", "t^4"})
    spec.alpha.push_back(parse_element(s, spec.tower));
  spec.beta = spec.alpha;
  spec.n = 4;
  spec.mode = Mode::full;
  spec.bounds = {2};
  SolutionSpace out = solve_additive(spec);
  CHECK(out.classification == SolutionSpace::Classification::operator_particular);
  REQUIRE(out.particular.has_value());
  CHECK(out.particular->coeff({2}) == parse_element("1/(4*t^2)", spec.tower));
  CHECK(out.kernel.size() == 2);
  CHECK(grid_check_full(AutoAction::identity_action(spec.tower), *out.particular,
                        spec.tower->one(), spec, 4));
}

TEST_CASE("apply is operator-linear and element-additive") {
  testing::Rng rng(2211);
  auto K = Tower::make({"t1", "t2"});
  for (int iter = 0; iter < 60; ++iter) {
    DiffOperator d1(K, {1, 1}), d2(K, {1, 1});
    for (const MultiIndex& m : indices_up_to(MultiIndex{1, 1})) {
      if (rng.int_in(0, 2)) d1.set_coeff(m, rng.poly_element(K, 1, 2, 4));
      if (rng.int_in(0, 2)) d2.set_coeff(m, rng.poly_element(K, 1, 2, 4));
    }
    FieldElement x = rng.element(K, 2), y = rng.element(K, 1);
    FieldElement c = rng.poly_element(K, 1, 2, 4);
    CHECK(apply(d1 + d2, x) == apply(d1, x) + apply(d2, x));
    CHECK(apply(d1.scaled(c), x) == c * apply(d1, x));
    CHECK(apply(d1, x + y) == apply(d1, x) + apply(d1, y));
  }
}

TEST_CASE("verified product witnesses solve the diagonal equation on monomial grids") {
  ProblemSpec spec;
  spec.tower = Tower::make({"t"});
  for (const char* s : {"t^6", "-t^4", "-t^2", "1"}) spec.a.push_back(parse_element(s, spec.tower));
  for (const char* s : {"t", "t^2", "t^3", "t^4"})
    spec.alpha.push_back(parse_element(s, spec.tower));
  spec.n = 4;
  spec.p = 2;
  spec.mode = Mode::alpha_only;
  spec.bounds = {1};
  spec.factor_bounds = {1, 1};
  const TowerPtr& K = spec.tower;
  const AutoAction id = AutoAction::identity_action(K);

  DiffOperator d1(K, {1}), d2(K, {1});
  d1.set_coeff({0}, parse_element("2", K));
  d1.set_coeff({1}, parse_element("1/(2*t^3)", K));
  d2.set_coeff({1}, parse_element("1/(2*t^3)", K));
  auto [ok, ct] = verify_product_solution(ProductGenerator{{{id, d1}, {id, d2}}}, spec);
  REQUIRE(ok);
  REQUIRE(ct == K->one());

  // sum_i a_i D1(alpha_i x) D2(alpha_i x) = c-tilde x^2 on the grid
  for (int e = 1; e <= 5; ++e) {
    FieldElement x = K->gen(0).pow(e);
    FieldElement lhs = K->zero();
    for (int i = 0; i < spec.n; ++i)
      lhs = lhs + spec.a[i] * apply(d1, spec.alpha[i] * x) * apply(d2, spec.alpha[i] * x);
    CHECK(lhs == ct * x * x);
  }
}

TEST_CASE("system matrix equals the oracle reconstruction columnwise") {
  testing::Rng rng(3321);
  for (int iter = 0; iter < 15; ++iter) {
    ProblemSpec spec;
    spec.tower = Tower::make({"t"});
    spec.n = 3;
    spec.mode = Mode::alpha_only;
    spec.bounds = {2};
    bool zero_a = true;
    for (int i = 0; i < spec.n; ++i) {
      spec.a.push_back(rng.poly_element(spec.tower, 2, 2, 4));
      spec.alpha.push_back(rng.poly_element(spec.tower, 2, 2, 4));
      zero_a = zero_a && spec.a.back().is_zero();
    }
    if (zero_a) continue;
    LinearSystem sys = build_system(spec);
    const AutoAction id = AutoAction::identity_action(spec.tower);
    for (size_t col = 0; col < sys.columns.size(); ++col) {
      DiffOperator unit(spec.tower, spec.bounds);
      unit.set_coeff(sys.columns[col], spec.tower->one());
      ResidualProfile prof = residual_profile(id, unit, spec, Side::alpha);
      for (const auto& row : sys.rows)
        CHECK(row.coeffs[col] == prof.lambda.at(row.m));
    }
  }
}

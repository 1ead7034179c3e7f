#include "doctest.h"
#include "funeq/error.hpp"
#include "funeq/expr.hpp"
#include "funeq/problem_file.hpp"
#include "support.hpp"

using namespace funeq;

TEST_CASE("problem file: worked single-variable fixture") {
  ProblemSpec spec = load_problem(FIXTURE_DIR "/example1.fe");
  CHECK(spec.n == 4);
  CHECK(spec.tower->k() == 1);
  CHECK(spec.mode == Mode::alpha_only);
  CHECK(spec.bounds == MultiIndex{2});
  CHECK(spec.a[0] == parse_element("t^3", spec.tower));
  CHECK(spec.a[1] == parse_element("-t^2", spec.tower));
  CHECK(spec.alpha[3] == parse_element("t^4", spec.tower));
  CHECK(spec.root_degree_cap == 1);
}

TEST_CASE("problem file: two-variable fixture") {
  ProblemSpec spec = load_problem(FIXTURE_DIR "/example2.fe");
  CHECK(spec.tower->k() == 2);
  CHECK(spec.a[0] == parse_element("t1^3 + t2^3", spec.tower));
  CHECK(spec.alpha[1] == parse_element("t1 + t2", spec.tower));
  CHECK(spec.bounds == MultiIndex{1, 1});
}

TEST_CASE("problem file: p = 2 fixture") {
  ProblemSpec spec = load_problem(FIXTURE_DIR "/example3_p2.fe");
  CHECK(spec.p == 2);
  CHECK(spec.factor_bounds == std::vector<int>{1, 1});
}

TEST_CASE("problem file: diagnostics carry the field name") {
  const char* missing_alpha =
      "vars: t\n"
      "a: 1, 2\n"
      "alpha: t\n";
  CHECK_THROWS_WITH_AS(parse_problem(missing_alpha), "alpha: expected 2 entries", FuneqError);

  CHECK_THROWS_AS(parse_problem("vars: t\na: 1\nalpha: x\n"), FuneqError);
  CHECK_THROWS_AS(parse_problem("vars: t\nalpha: t\n"), FuneqError);           // missing a
  CHECK_THROWS_AS(parse_problem("vars: t\na: 1\nalpha: t\nbogus: 1\n"), FuneqError);
  CHECK_THROWS_AS(parse_problem("vars: t\na: 1\nalpha: t\nmode: gamma\n"), FuneqError);
  CHECK_THROWS_AS(parse_problem("vars: t\na: 1\nalpha: t\nn: 3\n"), FuneqError);
  CHECK_THROWS_AS(parse_problem("vars: t\na: 0\nalpha: t\n"), FuneqError);     // all-zero a
  CHECK_THROWS_AS(parse_problem("vars: t\na: 1\nalpha: t\nbounds: 1, 2\n"), FuneqError);
  CHECK_THROWS_AS(parse_problem("vars: t\na: 1\nalpha: t\nmode: full\n"), FuneqError);
}

TEST_CASE("problem file: extension block and candidates") {
  const char* text =
      "vars: t\n"
      "extension: u\n"
      "minpoly: -t, 0\n"  // u^2 = t
      "a: u, -1\n"
      "alpha: t, t*u\n"
      "bounds: 1\n"
      "candidate: t -> t, u -> -u\n";
  ProblemSpec spec = parse_problem(text);
  CHECK(spec.tower->has_extension());
  CHECK(spec.tower->ext_degree() == 2);
  CHECK(spec.a[0] == spec.tower->u());
  REQUIRE(spec.user_candidates.size() == 1);
  // u -> -u satisfies u^2 - t = 0
  CHECK(spec.user_candidates[0].u_image == -spec.tower->u());

  // an invalid u image is rejected at load time
  const char* bad =
      "vars: t\n"
      "extension: u\n"
      "minpoly: -t, 0\n"
      "a: u, -1\n"
      "alpha: t, t*u\n"
      "candidate: t -> t, u -> u + 1\n";
  CHECK_THROWS_AS(parse_problem(bad), FuneqError);
}

TEST_CASE("candidate files parse and validate") {
  ProblemSpec spec = load_problem(FIXTURE_DIR "/example1.fe");
  CandidateSolution cand = load_candidate(FIXTURE_DIR "/example1_particular.cand", spec);
  CHECK(cand.sigma.is_identity());
  CHECK(cand.op.coeff({2}) == parse_element("1/(4*t^2)", spec.tower));
  CHECK(cand.c_tilde == spec.tower->one());

  CHECK_THROWS_AS(parse_candidate("bounds: 2\n", spec), FuneqError);  // no coefficients
  CHECK_THROWS_AS(parse_candidate("coeff[0,1]: 1\n", spec), FuneqError);
  CHECK_THROWS_AS(parse_candidate("coeff[3]: 1\nbounds: 2\n", spec), FuneqError);
}

TEST_CASE("problem loader survives junk without crashing") {
  testing::Rng rng(424242);
  const char* keys[] = {"vars", "a", "alpha", "beta", "p", "bounds", "mode",
                        "candidate", "root-cap", "minpoly", "extension", "junk"};
  const char* values[] = {"t", "t, 1", "-", "x^", "1/(t-t)", "((", "alpha",
                          "t -> ", "2", "0", ""};
  for (int iter = 0; iter < 400; ++iter) {
    std::string text;
    int lines = static_cast<int>(rng.int_in(0, 6));
    for (int l = 0; l < lines; ++l) {
      text += keys[rng.int_in(0, 11)];
      text += ": ";
      text += values[rng.int_in(0, 10)];
      text += "\n";
    }
    try {
      (void)parse_problem(text);
    } catch (const FuneqError&) {
      // structured rejection is the contract
    }
  }
}

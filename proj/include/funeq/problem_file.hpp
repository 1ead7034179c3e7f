#pragma once

#include <string>

#include "funeq/problem.hpp"

namespace funeq {

// Key-value problem file with expression-valued leaves; see README for the
// schema. Throws FuneqError with field-level diagnostics.
ProblemSpec load_problem(const std::string& path);
ProblemSpec parse_problem(const std::string& text, const std::string& origin = "<input>");

// Candidate solution file for the verify / oracle-check subcommands:
//   sigma:    t -> -t            (optional, default identity)
//   coeff[j]: expression         (operator coefficients, indices j1,..,jk)
//   bounds:   j1, .., jk         (optional, inferred from the coefficients)
//   c-tilde:  expression         (optional, default 1)
struct CandidateSolution {
  AutoAction sigma;
  DiffOperator op;
  FieldElement c_tilde;
};
CandidateSolution load_candidate(const std::string& path, const ProblemSpec& spec);
CandidateSolution parse_candidate(const std::string& text, const ProblemSpec& spec,
                                  const std::string& origin = "<input>");

}  // namespace funeq

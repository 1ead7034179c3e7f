#pragma once

#include <string>

#include "funeq/solver_additive.hpp"
#include "funeq/solver_higher.hpp"

namespace funeq {

enum class ReportFormat { text, machine };

std::string operator_to_text(const DiffOperator& d);

// Deterministic report; the machine format round-trips every field value
// through the expression grammar.
std::string emit_report(const SolutionSpace& result, const ProblemSpec& spec, ReportFormat format);

std::string emit_higher_report(const ProblemSpec& spec,
                               const std::optional<HigherShortcut>& shortcut,
                               const ProductConditionsDeg1* deg1, ReportFormat format);

// re-parse of a machine report, for round-trip checks and verification
struct ParsedReport {
  std::string classification;
  std::optional<FieldElement> c_tilde;
  std::map<MultiIndex, FieldElement> particular;
  std::vector<std::map<MultiIndex, FieldElement>> kernel;
};
ParsedReport parse_machine_report(const std::string& text, const TowerPtr& tower);

}  // namespace funeq

#include "funeq/report.hpp"

#include <sstream>

#include "funeq/error.hpp"
#include "funeq/expr.hpp"

namespace funeq {

namespace {

std::string index_to_string(const MultiIndex& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out;
}

std::string derivative_symbol(const Tower& tower, int j) {
  return tower.k() == 1 ? "d" : "d" + std::to_string(j + 1);
}

std::string classification_name(SolutionSpace::Classification c) {
  switch (c) {
    case SolutionSpace::Classification::identity_shortcut: return "identity-shortcut";
    case SolutionSpace::Classification::operator_particular: return "operator-particular";
    case SolutionSpace::Classification::homogeneous_only: return "homogeneous-only";
    case SolutionSpace::Classification::empty: return "empty";
  }
  return "?";
}

std::string provenance_name(AutoAction::Provenance p) {
  switch (p) {
    case AutoAction::Provenance::identity: return "identity";
    case AutoAction::Provenance::monomial_ansatz: return "monomial-ansatz";
    case AutoAction::Provenance::user_supplied: return "user-supplied";
  }
  return "?";
}

void emit_operator_machine(std::ostringstream& out, const std::string& prefix,
                           const DiffOperator& d) {
  out << prefix << ".bounds: " << index_to_string(d.bounds()) << "\n";
  out << prefix << ".terms: " << d.terms().size() << "\n";
  for (const auto& [m, c] : d.terms())
    out << prefix << ".coeff[" << index_to_string(m) << "]: " << print_element(c) << "\n";
}

void emit_action(std::ostringstream& out, const std::string& prefix, const AutoAction& a,
                 ReportFormat format) {
  const Tower& tw = *a.tower;
  if (format == ReportFormat::machine) {
    out << prefix << ".provenance: " << provenance_name(a.provenance) << "\n";
    for (int j = 0; j < tw.k(); ++j)
      out << prefix << ".image[" << tw.var_names()[j] << "]: " << print_element(a.t_images[j])
          << "\n";
    if (a.u_image)
      out << prefix << ".image[" << tw.u_name() << "]: " << print_element(*a.u_image) << "\n";
    out << prefix << ".invertible: " << (a.invertible_on_l ? "yes" : "no") << "\n";
  } else {
    out << "  " << a.key() << "   [" << provenance_name(a.provenance) << "]\n";
  }
}

}  // namespace

std::string operator_to_text(const DiffOperator& d) {
  if (d.is_zero()) return "0";
  const Tower& tw = *d.tower();
  std::string out;
  for (const auto& [m, c] : d.terms()) {
    std::string mono;
    for (size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += derivative_symbol(tw, static_cast<int>(j));
      if (m[j] > 1) mono += "^" + std::to_string(m[j]);
    }
    std::string term = "(" + print_element(c) + ")";
    if (!mono.empty()) term += " * " + mono;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::string emit_report(const SolutionSpace& result, const ProblemSpec& spec,
                        ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::machine) {
    out << "funeq-report: 1\n";
    out << "problem.k: " << spec.tower->k() << "\n";
    out << "problem.n: " << spec.n << "\n";
    out << "problem.p: " << spec.p << "\n";
    out << "problem.mode: " << mode_name(spec.mode) << "\n";
    out << "problem.bounds: " << index_to_string(spec.bounds) << "\n";
    out << "classification: " << classification_name(result.classification) << "\n";
    if (result.c_tilde) out << "c-tilde: " << print_element(*result.c_tilde) << "\n";
    if (result.particular) emit_operator_machine(out, "particular", *result.particular);
    out << "kernel.dim: " << result.kernel.size() << "\n";
    for (size_t i = 0; i < result.kernel.size(); ++i)
      emit_operator_machine(out, "kernel[" + std::to_string(i) + "]", result.kernel[i]);
    out << "generators.count: " << result.generators.size() << "\n";
    for (size_t i = 0; i < result.generators.size(); ++i) {
      const auto& gen = result.generators[i];
      std::string prefix = "generator[" + std::to_string(i) + "]";
      emit_action(out, prefix, gen.action, format);
      out << prefix << ".kernel.computed: " << (gen.kernel.computed ? "yes" : "no") << "\n";
      if (!gen.kernel.note.empty()) out << prefix << ".kernel.note: " << gen.kernel.note << "\n";
      out << prefix << ".kernel.dim: " << gen.kernel.kernel.size() << "\n";
      for (size_t j = 0; j < gen.kernel.kernel.size(); ++j)
        emit_operator_machine(out, prefix + ".kernel[" + std::to_string(j) + "]",
                              gen.kernel.kernel[j]);
    }
    for (size_t i = 0; i < result.notes.size(); ++i)
      out << "note[" << i << "]: " << result.notes[i] << "\n";
    return out.str();
  }

  out << "classification: " << classification_name(result.classification) << "\n";
  if (result.particular) {
    out << "particular: " << operator_to_text(*result.particular) << "\n";
    out << "  realizes c = 1";
    if (result.c_tilde && !result.c_tilde->is_one())
      out << "  (data constant c-tilde = " << print_element(*result.c_tilde) << ")";
    out << "\n";
    out << "  for general c, multiply the particular solution by c\n";
  } else {
    out << "particular: none at these bounds\n";
  }
  out << "kernel dimension " << result.kernel.size() << "\n";
  for (const auto& d : result.kernel) out << "  " << operator_to_text(d) << "\n";
  if (!result.generators.empty()) {
    out << "automorphism generators (" << result.generators.size() << "):\n";
    for (const auto& gen : result.generators) {
      emit_action(out, "", gen.action, format);
      if (gen.kernel.computed) {
        out << "    operator kernel dimension " << gen.kernel.kernel.size() << "\n";
        for (const auto& d : gen.kernel.kernel) out << "      " << operator_to_text(d) << "\n";
      } else {
        out << "    " << gen.kernel.note << "\n";
      }
    }
  }
  for (const auto& n : result.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string emit_higher_report(const ProblemSpec& spec,
                               const std::optional<HigherShortcut>& shortcut,
                               const ProductConditionsDeg1* deg1, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::machine) {
    out << "funeq-report: 1\n";
    out << "problem.k: " << spec.tower->k() << "\n";
    out << "problem.n: " << spec.n << "\n";
    out << "problem.p: " << spec.p << "\n";
    out << "problem.mode: " << mode_name(spec.mode) << "\n";
    out << "shortcut: " << (shortcut ? "yes" : "no") << "\n";
    if (shortcut) {
      out << "shortcut.c-tilde: " << print_element(shortcut->c_tilde_p) << "\n";
      out << "shortcut.coefficient: " << print_element(shortcut->coefficient) << "\n";
    }
    if (deg1) {
      out << "product.factor-bounds: " << index_to_string(deg1->factor_bounds) << "\n";
      out << "product.data-conditions: " << deg1->data_conditions.size() << "\n";
      for (size_t i = 0; i < deg1->data_conditions.size(); ++i)
        out << "product.data[" << index_to_string(deg1->data_conditions[i].first)
            << "]: " << print_element(deg1->data_conditions[i].second) << "\n";
      out << "product.main-sum: " << print_element(deg1->main_sum) << "\n";
      out << "product.feasible: " << (deg1->feasible ? "yes" : "no") << "\n";
    }
    return out.str();
  }

  if (shortcut) {
    out << "monomial shortcut: f(x) = (" << print_element(shortcut->coefficient) << ") * x^"
        << spec.p << "   (c-tilde = " << print_element(shortcut->c_tilde_p) << ")\n";
  } else {
    out << "monomial shortcut: none\n";
  }
  if (deg1) {
    out << "product generators with factor bounds (" << index_to_string(deg1->factor_bounds)
        << "):\n";
    for (const auto& [t, v] : deg1->data_conditions)
      out << "  data condition [" << index_to_string(t) << "]: " << print_element(v)
          << (v.is_zero() ? "   (ok)" : "   (violated)") << "\n";
    out << "  main sum: " << print_element(deg1->main_sum) << "\n";
    if (deg1->feasible) {
      out << "  constraint: ";
      for (int l = 0; l < spec.p; ++l) {
        if (l) out << " * ";
        out << "c'[" << (l + 1) << "][" << deg1->factor_bounds[l] << "]";
      }
      out << " = 1/(" << print_element(deg1->main_sum) << ")   (c normalized to 1)\n";
    } else {
      out << "  no product generator of exactly these factor degrees\n";
    }
  }
  return out.str();
}

ParsedReport parse_machine_report(const std::string& text, const TowerPtr& tower) {
  ParsedReport rep;
  std::istringstream in(text);
  std::string line;
  auto parse_coeff_key = [](const std::string& key, const std::string& prefix)
      -> std::optional<MultiIndex> {
    std::string want = prefix + ".coeff[";
    if (key.rfind(want, 0) != 0 || key.back() != ']') return std::nullopt;
    std::string idx = key.substr(want.size(), key.size() - want.size() - 1);
    MultiIndex m;
    for (size_t start = 0; start <= idx.size();) {
      size_t comma = idx.find(',', start);
      if (comma == std::string::npos) comma = idx.size();
      m.push_back(std::stoi(idx.substr(start, comma - start)));
      start = comma + 1;
    }
    return m;
  };
  while (std::getline(in, line)) {
    size_t colon = line.find(": ");
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 2);
    if (key == "classification") {
      rep.classification = value;
    } else if (key == "c-tilde") {
      rep.c_tilde = parse_element(value, tower);
    } else if (auto m = parse_coeff_key(key, "particular")) {
      rep.particular[*m] = parse_element(value, tower);
    } else if (key.rfind("kernel[", 0) == 0) {
      size_t close = key.find(']');
      size_t idx = std::stoul(key.substr(7, close - 7));
      if (rep.kernel.size() <= idx) rep.kernel.resize(idx + 1);
      std::string prefix = key.substr(0, close + 1);
      if (auto m = parse_coeff_key(key, prefix)) rep.kernel[idx][*m] = parse_element(value, tower);
    }
  }
  return rep;
}

}  // namespace funeq

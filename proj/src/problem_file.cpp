#include "funeq/problem_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "funeq/error.hpp"
#include "funeq/expr.hpp"

namespace funeq {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct KeyValues {
  // preserves duplicates for repeatable keys
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(const std::string& key) const {
    const std::string* hit = nullptr;
    for (const auto& [k, v] : entries)
      if (k == key) {
        if (hit) throw FuneqError(key + ": given more than once");
        hit = &v;
      }
    return hit;
  }

  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
      if (k == key) out.push_back(v);
    return out;
  }
};

KeyValues read_keyvalues(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw FuneqError("line " + std::to_string(lineno) + ": expected 'key: value'");
    kv.entries.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return kv;
}

std::vector<FieldElement> parse_list(const std::string& field, const std::string& text,
                                     const TowerPtr& tower) {
  std::vector<FieldElement> out;
  for (const std::string& part : split(text, ',')) {
    if (part.empty()) throw FuneqError(field + ": empty entry in list");
    try {
      out.push_back(parse_element(part, tower));
    } catch (const ParseError& err) {
      throw FuneqError(field + ": " + err.what() + " in '" + part + "'");
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& field, const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split(text, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw FuneqError(field + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

AutoAction parse_action(const std::string& field, const std::string& text, const TowerPtr& tower,
                        AutoAction::Provenance provenance) {
  std::vector<std::optional<FieldElement>> t_images(tower->k());
  std::optional<FieldElement> u_image;
  for (const std::string& part : split(text, ',')) {
    size_t arrow = part.find("->");
    if (arrow == std::string::npos)
      throw FuneqError(field + ": expected 'name -> expression' in '" + part + "'");
    std::string name = trim(part.substr(0, arrow));
    std::string expr = trim(part.substr(arrow + 2));
    FieldElement img = [&] {
      try {
        return parse_element(expr, tower);
      } catch (const ParseError& err) {
        throw FuneqError(field + ": " + err.what() + " in '" + part + "'");
      }
    }();
    bool matched = false;
    for (int j = 0; j < tower->k(); ++j) {
      if (tower->var_names()[j] == name) {
        t_images[j] = std::move(img);
        matched = true;
        break;
      }
    }
    if (!matched && tower->has_extension() && tower->u_name() == name) {
      u_image = std::move(img);
      matched = true;
    }
    if (!matched) throw FuneqError(field + ": unknown generator '" + name + "'");
  }
  std::vector<FieldElement> imgs;
  for (int j = 0; j < tower->k(); ++j) {
    if (!t_images[j])
      throw FuneqError(field + ": missing image for '" + tower->var_names()[j] + "'");
    imgs.push_back(std::move(*t_images[j]));
  }
  if (tower->has_extension() && !u_image) u_image = tower->u();
  try {
    return AutoAction::make(tower, std::move(imgs), std::move(u_image), provenance);
  } catch (const FuneqError& err) {
    throw FuneqError(field + ": " + err.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FuneqError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ProblemSpec parse_problem(const std::string& text, const std::string& origin) {
  KeyValues kv = read_keyvalues(text);
  for (const auto& [k, v] : kv.entries) {
    static const std::set<std::string> known{"vars", "extension", "minpoly", "n",    "a",
                                             "alpha", "beta",     "p",       "bounds",
                                             "factor-bounds", "mode", "candidate", "root-cap"};
    if (!known.count(k)) throw FuneqError(origin + ": unknown key '" + k + "'");
  }

  const std::string* vars = kv.find("vars");
  if (!vars) throw FuneqError("vars: required");
  std::vector<std::string> names = split(*vars, ',');
  for (const auto& nm : names)
    if (nm.empty()) throw FuneqError("vars: empty variable name");

  TowerPtr tower;
  const std::string* ext = kv.find("extension");
  const std::string* minpoly = kv.find("minpoly");
  if (ext) {
    if (!minpoly) throw FuneqError("minpoly: required when an extension is declared");
    TowerPtr base = Tower::make(names);
    std::vector<FieldElement> coeffs = parse_list("minpoly", *minpoly, base);
    std::vector<RatFunc> tail;
    for (const auto& c : coeffs) tail.push_back(c.coord(0));
    tower = Tower::make(names, trim(*ext), std::move(tail));
  } else {
    if (minpoly) throw FuneqError("minpoly: requires an extension declaration");
    tower = Tower::make(names);
  }

  ProblemSpec spec;
  spec.tower = tower;

  const std::string* a = kv.find("a");
  if (!a) throw FuneqError("a: required");
  spec.a = parse_list("a", *a, tower);
  spec.n = static_cast<int>(spec.a.size());
  if (const std::string* nfield = kv.find("n")) {
    std::vector<int> nv = parse_int_list("n", *nfield);
    if (nv.size() != 1 || nv[0] != spec.n)
      throw FuneqError("n: does not match the length of a");
  }

  if (const std::string* alpha = kv.find("alpha")) spec.alpha = parse_list("alpha", *alpha, tower);
  if (const std::string* beta = kv.find("beta")) spec.beta = parse_list("beta", *beta, tower);

  spec.p = 1;
  if (const std::string* pfield = kv.find("p")) {
    std::vector<int> pv = parse_int_list("p", *pfield);
    if (pv.size() != 1) throw FuneqError("p: expected a single integer");
    spec.p = pv[0];
  }

  if (const std::string* mode = kv.find("mode")) {
    if (*mode == "alpha")
      spec.mode = Mode::alpha_only;
    else if (*mode == "beta")
      spec.mode = Mode::beta_only;
    else if (*mode == "full")
      spec.mode = Mode::full;
    else
      throw FuneqError("mode: expected alpha, beta or full");
  } else {
    spec.mode = (!spec.beta.empty() && !spec.alpha.empty()) ? Mode::full
                : spec.beta.empty()                         ? Mode::alpha_only
                                                            : Mode::beta_only;
  }

  spec.bounds.assign(tower->k(), 2);
  if (const std::string* bounds = kv.find("bounds")) {
    spec.bounds = parse_int_list("bounds", *bounds);
  }

  if (spec.p >= 2) {
    spec.factor_bounds.assign(spec.p, 1);
    if (const std::string* fb = kv.find("factor-bounds"))
      spec.factor_bounds = parse_int_list("factor-bounds", *fb);
  } else if (kv.find("factor-bounds")) {
    throw FuneqError("factor-bounds: only meaningful for p >= 2");
  }

  if (const std::string* cap = kv.find("root-cap")) {
    std::vector<int> cv = parse_int_list("root-cap", *cap);
    if (cv.size() != 1) throw FuneqError("root-cap: expected a single integer");
    spec.root_degree_cap = cv[0];
  }

  for (const std::string& cand : kv.all("candidate"))
    spec.user_candidates.push_back(
        parse_action("candidate", cand, tower, AutoAction::Provenance::user_supplied));

  spec.validate();
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  return parse_problem(read_file(path), path);
}

CandidateSolution parse_candidate(const std::string& text, const ProblemSpec& spec,
                                  const std::string& origin) {
  KeyValues kv = read_keyvalues(text);
  const TowerPtr& tower = spec.tower;

  AutoAction sigma = AutoAction::identity_action(tower);
  if (const std::string* s = kv.find("sigma"))
    sigma = parse_action("sigma", *s, tower, AutoAction::Provenance::user_supplied);

  std::map<MultiIndex, FieldElement> coeffs;
  MultiIndex maxidx(tower->k(), 0);
  for (const auto& [key, value] : kv.entries) {
    if (key.rfind("coeff[", 0) != 0) continue;
    if (key.back() != ']') throw FuneqError(origin + ": malformed key '" + key + "'");
    MultiIndex m = parse_int_list(key, key.substr(6, key.size() - 7));
    if (static_cast<int>(m.size()) != tower->k())
      throw FuneqError(key + ": expected " + std::to_string(tower->k()) + " indices");
    for (int j = 0; j < tower->k(); ++j) maxidx[j] = std::max(maxidx[j], m[j]);
    try {
      coeffs[m] = parse_element(value, tower);
    } catch (const ParseError& err) {
      throw FuneqError(key + ": " + err.what());
    }
  }
  if (coeffs.empty()) throw FuneqError(origin + ": candidate needs at least one coeff[..] entry");

  MultiIndex bounds = maxidx;
  if (const std::string* b = kv.find("bounds")) {
    bounds = parse_int_list("bounds", *b);
    if (static_cast<int>(bounds.size()) != tower->k())
      throw FuneqError("bounds: expected " + std::to_string(tower->k()) + " entries");
    if (!index_leq(maxidx, bounds)) throw FuneqError("bounds: smaller than a coefficient index");
  }

  DiffOperator op(tower, bounds);
  for (auto& [m, c] : coeffs) op.set_coeff(m, std::move(c));

  FieldElement c_tilde = tower->one();
  if (const std::string* ct = kv.find("c-tilde")) {
    try {
      c_tilde = parse_element(*ct, tower);
    } catch (const ParseError& err) {
      throw FuneqError(std::string("c-tilde: ") + err.what());
    }
  }

  for (const auto& [k, v] : kv.entries) {
    if (k == "sigma" || k == "bounds" || k == "c-tilde" || k.rfind("coeff[", 0) == 0) continue;
    throw FuneqError(origin + ": unknown key '" + k + "'");
  }
  return CandidateSolution{std::move(sigma), std::move(op), std::move(c_tilde)};
}

CandidateSolution load_candidate(const std::string& path, const ProblemSpec& spec) {
  return parse_candidate(read_file(path), spec, path);
}

}  // namespace funeq

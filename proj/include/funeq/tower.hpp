#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "funeq/ratfunc.hpp"

namespace funeq {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

struct SubstImages;

// Element of K = Q(t_1..t_k)[u]/(m(u)) in coordinates over the power basis
// 1, u, ..., u^{m-1}.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(TowerPtr tower, std::vector<RatFunc> coords);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<RatFunc>& coords() const { return coords_; }
  const RatFunc& coord(int l) const { return coords_[l]; }

  bool is_zero() const;
  bool is_one() const;
  bool in_base_field() const;  // no u component
  bool is_rational_constant() const;
  BigRat rational_value() const;  // requires is_rational_constant()

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(int e) const;
  FieldElement scaled(const BigRat& c) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement partial(int j) const;
  FieldElement iterated_partial(const std::vector<int>& m) const;
  FieldElement substitute(const SubstImages& images) const;

 private:
  TowerPtr tower_;
  std::vector<RatFunc> coords_;
  void check_same_tower(const FieldElement& o) const;
};

// Substitution target: images of the generators t_1..t_k (and u when the
// tower has an algebraic part). All images must live in one tower; the
// result of a substitution lives there too.
struct SubstImages {
  std::vector<FieldElement> t_images;
  std::optional<FieldElement> u_image;
};

// Description of K = Q(t_1..t_k)[u]/(m(u)), m monic of degree ext_degree.
// ext_degree == 1 means K = Q(t_1..t_k) with no algebraic part.
class Tower : public std::enable_shared_from_this<Tower> {
 public:
  // plain rational-function field
  static std::shared_ptr<const Tower> make(std::vector<std::string> var_names);
  // simple algebraic extension; minpoly_tail = (r_0, ..., r_{m-1}) of
  // u^m + r_{m-1} u^{m-1} + ... + r_1 u + r_0 = 0, m = tail size
  static std::shared_ptr<const Tower> make(std::vector<std::string> var_names,
                                           std::string u_name,
                                           std::vector<RatFunc> minpoly_tail);

  int k() const { return static_cast<int>(var_names_.size()); }
  int ext_degree() const { return ext_degree_; }
  bool has_extension() const { return ext_degree_ > 1; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::string& u_name() const { return u_name_; }
  const std::vector<RatFunc>& minpoly_tail() const { return minpoly_tail_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const BigRat& c) const;
  FieldElement from_ratfunc(const RatFunc& r) const;
  FieldElement from_coords(std::vector<RatFunc> coords) const;
  FieldElement gen(int j) const;  // t_j, 0-based
  FieldElement u() const;

  // coordinates of d(u)/dt_j extended by implicit differentiation; nullopt
  // when m'(u) is not invertible (the error surfaces at the partial() call
  // site). Stored as raw coordinates: a cached FieldElement would hold a
  // shared_ptr back to this tower and never free it.
  const std::optional<std::vector<RatFunc>>& du_coords(int j) const { return du_[j]; }
  const std::string& du_error() const { return du_error_; }

  // u^(ext_degree + i) reduced to basis coordinates, i = 0..ext_degree-2
  const std::vector<std::vector<RatFunc>>& upow() const { return upow_; }

  // heuristic trial-root warnings for the minimal polynomial (degree <= 3)
  const std::vector<std::string>& minpoly_warnings() const { return minpoly_warnings_; }

  static bool same(const TowerPtr& a, const TowerPtr& b);

 private:
  Tower() = default;
  void init();

  std::vector<std::string> var_names_;
  std::string u_name_;
  int ext_degree_ = 1;
  std::vector<RatFunc> minpoly_tail_;
  std::vector<std::vector<RatFunc>> upow_;
  std::vector<std::optional<std::vector<RatFunc>>> du_;
  std::string du_error_;
  std::vector<std::string> minpoly_warnings_;
};

// q * t^e with integer (possibly negative) exponents, for base-field elements
std::optional<std::pair<BigRat, std::vector<int>>> as_monomial(const FieldElement& x);

// evaluate a polynomial at field-element images (all in one tower)
FieldElement eval_poly(const MultiPoly& p, const std::vector<FieldElement>& images);

}  // namespace funeq

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funeq/tower.hpp"

namespace funeq {

// Candidate automorphism of C described by its images of the tower
// generators. Images must be nonzero and not rational constants; with an
// algebraic part, the u image must satisfy the transformed minimal
// polynomial exactly.
struct AutoAction {
  enum class Provenance { identity, monomial_ansatz, user_supplied };

  TowerPtr tower;
  std::vector<FieldElement> t_images;
  std::optional<FieldElement> u_image;
  Provenance provenance = Provenance::user_supplied;

  // set when the images are monomials q * t^E with unimodular E (and u -> u
  // for extensions); then the inverse acts symbolically on L
  bool invertible_on_l = false;
  std::vector<FieldElement> inverse_t_images;

  static AutoAction identity_action(const TowerPtr& tower);
  // validates the invariants; throws FuneqError on violation
  static AutoAction make(const TowerPtr& tower, std::vector<FieldElement> t_images,
                         std::optional<FieldElement> u_image, Provenance provenance);

  bool is_identity() const;
  FieldElement apply(const FieldElement& x) const;
  FieldElement apply_inverse(const FieldElement& x) const;  // requires invertible_on_l

  SubstImages images() const;
  SubstImages inverse_images() const;  // requires invertible_on_l

  // deterministic ordering / dedup key
  std::string key() const;
};

}  // namespace funeq

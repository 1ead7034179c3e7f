#include "funeq/auto_action.hpp"

#include <cassert>

#include "funeq/error.hpp"
#include "funeq/expr.hpp"

namespace funeq {

namespace {

BigRat det_rat(std::vector<std::vector<BigRat>> a) {
  const size_t n = a.size();
  BigRat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return BigRat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    BigRat inv_p = a[col][col].inv();
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      BigRat f = a[i][col] * inv_p;
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<std::vector<std::vector<BigRat>>> invert_rat(std::vector<std::vector<BigRat>> a) {
  const size_t n = a.size();
  std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, BigRat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = BigRat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    BigRat p = a[col][col].inv();
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= p;
      inv[col][j] *= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      BigRat f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// check that the u image satisfies the sigma-transformed minimal polynomial
bool u_image_consistent(const TowerPtr& tower, const SubstImages& images) {
  const int m = tower->ext_degree();
  FieldElement val = images.u_image->pow(m);
  for (int l = 0; l < m; ++l) {
    FieldElement rl = tower->from_ratfunc(tower->minpoly_tail()[l]);
    val = val + rl.substitute(images) * images.u_image->pow(l);
  }
  return val.is_zero();
}

}  // namespace

AutoAction AutoAction::identity_action(const TowerPtr& tower) {
  std::vector<FieldElement> imgs;
  for (int j = 0; j < tower->k(); ++j) imgs.push_back(tower->gen(j));
  std::optional<FieldElement> uimg;
  if (tower->has_extension()) uimg = tower->u();
  AutoAction a = make(tower, std::move(imgs), std::move(uimg), Provenance::identity);
  return a;
}

AutoAction AutoAction::make(const TowerPtr& tower, std::vector<FieldElement> t_images,
                            std::optional<FieldElement> u_image, Provenance provenance) {
  const int k = tower->k();
  if (static_cast<int>(t_images.size()) != k)
    throw FuneqError("automorphism action must give one image per generator");
  for (const auto& img : t_images) {
    if (!Tower::same(img.tower(), tower)) throw TowerMismatch();
    if (img.is_zero()) throw FuneqError("automorphism image must be nonzero");
    if (img.is_rational_constant())
      throw FuneqError("automorphism image must not be a rational constant");
  }
  if (tower->has_extension()) {
    if (!u_image) throw FuneqError("automorphism action must give an image for " + tower->u_name());
    if (!Tower::same(u_image->tower(), tower)) throw TowerMismatch();
  } else {
    u_image.reset();
  }

  AutoAction a;
  a.tower = tower;
  a.t_images = std::move(t_images);
  a.u_image = std::move(u_image);
  a.provenance = provenance;

  if (tower->has_extension() && !u_image_consistent(tower, a.images()))
    throw FuneqError("the image of " + tower->u_name() +
                     " does not satisfy the transformed minimal polynomial");

  // monomial structure: exponent matrix and scalar factors
  std::vector<std::vector<BigRat>> emat(k, std::vector<BigRat>(k, BigRat(0)));
  std::vector<BigRat> scalars(k);
  bool all_monomial = true;
  for (int j = 0; j < k; ++j) {
    auto mono = as_monomial(a.t_images[j]);
    if (!mono) {
      all_monomial = false;
      break;
    }
    scalars[j] = mono->first;
    for (int i = 0; i < k; ++i) emat[j][i] = BigRat(mono->second[i]);
  }
  if (all_monomial) {
    BigRat det = det_rat(emat);
    if (det.is_zero())
      throw FuneqError("automorphism images are algebraically dependent monomials");
    bool unimodular = det == BigRat(1) || det == BigRat(-1);
    bool u_ok = !tower->has_extension() || *a.u_image == tower->u();
    if (unimodular && u_ok) {
      auto finv = invert_rat(emat);
      assert(finv);
      std::vector<FieldElement> inv_imgs;
      bool integral = true;
      for (int j = 0; j < k && integral; ++j) {
        BigRat scale(1);
        FieldElement img = tower->one();
        for (int i = 0; i < k; ++i) {
          const BigRat& f = (*finv)[j][i];
          if (!f.is_integer()) {
            integral = false;
            break;
          }
          int e = static_cast<int>(f.num().to_int64());
          scale *= scalars[i].pow(-e);
          img = img * tower->gen(i).pow(e);
        }
        if (integral) inv_imgs.push_back(img.scaled(scale));
      }
      if (integral) {
        SubstImages inv{inv_imgs, tower->has_extension()
                                      ? std::optional<FieldElement>(tower->u())
                                      : std::nullopt};
        bool inv_valid = !tower->has_extension() || u_image_consistent(tower, inv);
        if (inv_valid) {
          a.invertible_on_l = true;
          a.inverse_t_images = std::move(inv_imgs);
        }
      }
    }
  }
  return a;
}

bool AutoAction::is_identity() const {
  for (int j = 0; j < tower->k(); ++j)
    if (t_images[j] != tower->gen(j)) return false;
  if (tower->has_extension() && *u_image != tower->u()) return false;
  return true;
}

SubstImages AutoAction::images() const { return SubstImages{t_images, u_image}; }

SubstImages AutoAction::inverse_images() const {
  if (!invertible_on_l) throw FuneqError("automorphism action is not invertible on L");
  return SubstImages{inverse_t_images, tower->has_extension()
                                           ? std::optional<FieldElement>(tower->u())
                                           : std::nullopt};
}

FieldElement AutoAction::apply(const FieldElement& x) const { return x.substitute(images()); }

FieldElement AutoAction::apply_inverse(const FieldElement& x) const {
  return x.substitute(inverse_images());
}

std::string AutoAction::key() const {
  std::string s;
  for (int j = 0; j < tower->k(); ++j) {
    if (j) s += "; ";
    s += tower->var_names()[j] + " -> " + print_element(t_images[j]);
  }
  if (u_image) s += "; " + tower->u_name() + " -> " + print_element(*u_image);
  return s;
}

}  // namespace funeq

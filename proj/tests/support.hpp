#pragma once

#include <random>
#include <vector>

#include "funeq/tower.hpp"

namespace funeq::testing {

// deterministic generators for property tests
struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long long int_in(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(gen);
  }

  BigRat rat(long long span = 9) {
    long long num = int_in(-span, span);
    long long den = int_in(1, 4);
    return BigRat(BigInt(num), BigInt(den));
  }

  BigRat nonzero_rat(long long span = 9) {
    for (;;) {
      BigRat r = rat(span);
      if (!r.is_zero()) return r;
    }
  }

  MultiPoly poly(int nvars, int max_deg = 2, int max_terms = 3, long long span = 9) {
    MultiPoly p(nvars);
    int terms = static_cast<int>(int_in(0, max_terms));
    for (int i = 0; i < terms; ++i) {
      std::vector<int> e(nvars);
      for (int j = 0; j < nvars; ++j) e[j] = static_cast<int>(int_in(0, max_deg));
      p.add_term(e, rat(span));
    }
    return p;
  }

  MultiPoly nonzero_poly(int nvars, int max_deg = 2, int max_terms = 3, long long span = 9) {
    for (;;) {
      MultiPoly p = poly(nvars, max_deg, max_terms, span);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(int nvars, int max_deg = 2) {
    return RatFunc(poly(nvars, max_deg), nonzero_poly(nvars, 1, 2, 3));
  }

  FieldElement element(const TowerPtr& tower, int max_deg = 2) {
    std::vector<RatFunc> coords;
    for (int l = 0; l < tower->ext_degree(); ++l) coords.push_back(ratfunc(tower->k(), max_deg));
    return tower->from_coords(std::move(coords));
  }

  FieldElement nonzero_element(const TowerPtr& tower, int max_deg = 2) {
    for (;;) {
      FieldElement x = element(tower, max_deg);
      if (!x.is_zero()) return x;
    }
  }

  // polynomial element of the base field (cheap to differentiate)
  FieldElement poly_element(const TowerPtr& tower, int max_deg = 2, int max_terms = 3,
                            long long span = 9) {
    return tower->from_ratfunc(RatFunc::from_poly(poly(tower->k(), max_deg, max_terms, span)));
  }

  FieldElement nonzero_poly_element(const TowerPtr& tower, int max_deg = 2, int max_terms = 3,
                                    long long span = 9) {
    for (;;) {
      FieldElement x = poly_element(tower, max_deg, max_terms, span);
      if (!x.is_zero()) return x;
    }
  }
};

}  // namespace funeq::testing

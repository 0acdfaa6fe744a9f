#pragma once

#include <random>
#include <vector>

#include "sympow/ideal.hpp"
#include "sympow/monomial_ideal.hpp"
#include "sympow/parse.hpp"

namespace sympow::testing {

inline RingPtr ring_xy(std::uint64_t p) { return Ring::make(p, {"x", "y"}); }
inline RingPtr ring_xyz(std::uint64_t p) {
  return Ring::make(p, {"x", "y", "z"});
}
inline RingPtr ring_xyzw(std::uint64_t p) {
  return Ring::make(p, {"x", "y", "z", "w"});
}

inline Polynomial poly(const RingPtr& ring, std::string_view text) {
  return parse_polynomial(ring, text);
}

inline Ideal ideal_of(const RingPtr& ring,
                      std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(ring, g));
  return Ideal(ring, std::move(ps));
}

/// Random nonzero polynomial with total degree <= max_deg.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring,
                              int max_deg, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::uint64_t> coeff(
      1, ring->characteristic() - 1);
  Polynomial f = Polynomial::zero(ring);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Exponents u(ring->nvars(), 0);
    int budget = deg(rng);
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      u[i] = part(rng);
      budget -= u[i];
    }
    f.add_term(u, coeff(rng));
  }
  if (f.is_zero()) f.add_term(Exponents(ring->nvars(), 0), 1);
  return f;
}

inline Ideal random_ideal(std::mt19937_64& rng, const RingPtr& ring,
                          int max_deg, int max_gens = 3) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::vector<Polynomial> gens;
  const int count = ngens(rng);
  for (int i = 0; i < count; ++i)
    gens.push_back(random_poly(rng, ring, max_deg));
  return Ideal(ring, std::move(gens));
}

/// Random monomial ideal with nonzero generators.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng,
                                           const RingPtr& ring, int max_exp,
                                           int max_gens = 4) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Exponents> gens;
  const int count = ngens(rng);
  for (int i = 0; i < count; ++i) {
    Exponents u(ring->nvars(), 0);
    long long total = 0;
    for (auto& e : u) {
      e = exp(rng);
      total += e;
    }
    if (total == 0) u[0] = 1;
    gens.push_back(std::move(u));
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace sympow::testing

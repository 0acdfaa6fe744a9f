#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

/// Reduced, monic Groebner basis; unique for a fixed ideal and order.
struct GBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
};

/// Ideal in a polynomial ring, held as a generator list. Reduced Groebner
/// bases are cached per order; the cache is populated at most once per
/// (ideal, order) and computed bases are immutable.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  Ideal(const Ideal& other);
  Ideal& operator=(const Ideal& other);
  Ideal(Ideal&&) noexcept;
  Ideal& operator=(Ideal&&) noexcept;

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  bool is_zero() const;
  bool is_unit() const;

  const GBasis& groebner(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::map<std::pair<int, int>, GBasis> cache_;
  mutable std::mutex cache_mu_;
};

/// Remainder of multivariate division of f by B: no term of the result is
/// divisible by any leading term of B, and f - result lies in ideal(B).
Polynomial normal_form(const Polynomial& f, const GBasis& basis);

/// Quotient q with f = q*g exactly; throws std::domain_error if g does not
/// divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

bool ideal_member(const Polynomial& f, const Ideal& ideal);
/// true iff outer contains inner (every generator of inner is a member).
bool ideal_contains(const Ideal& outer, const Ideal& inner);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);

/// I ∩ J via a block-elimination order on an auxiliary variable t applied
/// to t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// (I : J) = {f : fJ ⊆ I}, computed as the intersection over generators g
/// of J of (I ∩ (g)) / g.
Ideal ideal_colon(const Ideal& ideal, const Ideal& divisor);

/// (I : f^∞) via elimination of a fresh variable z from I + (z*f - 1).
Ideal ideal_saturate(const Ideal& ideal, const Polynomial& f);

}  // namespace sympow

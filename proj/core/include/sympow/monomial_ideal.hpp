#pragma once

#include <vector>

#include "sympow/ideal.hpp"
#include "sympow/ring.hpp"

namespace sympow {

/// Monomial ideal kept as its unique minimal generator antichain, sorted.
/// The zero ideal has no generators; the unit ideal is generated by x^0.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Exponents> gens);

  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);
  /// The homogeneous maximal ideal m = (x_1, ..., x_n).
  static MonomialIdeal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Exponents>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool member(const Exponents& u) const;
  bool contains(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& other) const;

  MonomialIdeal intersect(const MonomialIdeal& other) const;
  MonomialIdeal sum(const MonomialIdeal& other) const;
  MonomialIdeal product(const MonomialIdeal& other) const;
  MonomialIdeal power(unsigned n) const;
  MonomialIdeal colon(const MonomialIdeal& other) const;
  MonomialIdeal colon_monomial(const Exponents& g) const;
  /// Generator-wise q-th powers, q = p^e.
  MonomialIdeal bracket(unsigned e) const;

  Ideal to_ideal() const;

 private:
  RingPtr ring_;
  std::vector<Exponents> gens_;
};

/// Drops non-minimal vectors and sorts; result is the generator antichain.
std::vector<Exponents> minimalize(std::vector<Exponents> gens);

/// Converts a general ideal whose generators are all single terms; throws
/// std::invalid_argument on non-monomial input.
MonomialIdeal as_monomial_ideal(const Ideal& ideal);

}  // namespace sympow

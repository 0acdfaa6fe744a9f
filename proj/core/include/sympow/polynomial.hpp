#pragma once

#include <map>
#include <utility>

#include "sympow/order.hpp"
#include "sympow/ring.hpp"

namespace sympow {

/// Canonical sparse polynomial over F_p: exponent vector -> nonzero residue.
/// Equal polynomials have identical term maps; the zero polynomial is the
/// empty map. All operations are pure.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, std::uint64_t>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, std::uint64_t c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Exponents exps, std::uint64_t c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t constant_coeff() const;
  long long total_degree() const;  // -1 for the zero polynomial

  /// Adds c * x^exps in place, dropping the term if it cancels.
  void add_term(const Exponents& exps, std::uint64_t c);

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  bool operator==(const Polynomial& g) const;

  Polynomial scaled(std::uint64_t c) const;
  Polynomial times_term(const Exponents& exps, std::uint64_t c) const;
  Polynomial pow(unsigned long long n) const;

  /// f^{p^e}, computed termwise (Frobenius is a ring map).
  Polynomial frobenius(unsigned e) const;

  /// Leading term under the given order; polynomial must be nonzero.
  const std::pair<const Exponents, std::uint64_t>& leading(
      const MonomialOrder& order) const;

  /// Scales so the leading coefficient under `order` is 1.
  Polynomial monic(const MonomialOrder& order) const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Throws std::invalid_argument unless f and g live in the same ring.
void require_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace sympow

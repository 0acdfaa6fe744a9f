#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "sympow/monomial_ideal.hpp"

namespace sympow {

/// H-representation of the limit of (1/m)*Newton(I^(m)): one row per
/// minimal prime S_j, stating sum_{i in S_j} v_i >= 1 over v >= 0.
struct SymbolicPolyhedron {
  std::size_t nvars = 0;
  std::vector<std::vector<int>> rows;  // each row: sorted variable indices

  /// Does the rational point (num_i/den) satisfy every row?
  bool contains(const std::vector<long long>& num, long long den) const;
};

/// Proper squarefree monomial ideal: generator antichain with 0/1 exponents,
/// minimal primes cached as sorted variable subsets.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(RingPtr ring, std::vector<Exponents> gens);

  SquarefreeIdeal(const SquarefreeIdeal& other);
  SquarefreeIdeal& operator=(const SquarefreeIdeal& other);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Exponents>& gens() const { return gens_; }
  MonomialIdeal monomial_ideal() const;
  Ideal to_ideal() const { return monomial_ideal().to_ideal(); }

  /// Minimal transversals of the generator supports = minimal primes,
  /// each a sorted list of variable indices, in sorted order.
  const std::vector<std::vector<int>>& minimal_primes() const;

  int big_height() const;    // max |S_j|
  int min_height() const;    // min |S_j| (the height of I)
  bool unmixed() const;      // all |S_j| equal

  /// I^(m) = ∩_j P_j^m: x^u is a member iff every row sum is >= m.
  MonomialIdeal symbolic_power(int m) const;

  SymbolicPolyhedron symbolic_polyhedron() const;

  /// τ(k · I^(•)) via the symbolic polyhedron: x^u is a member iff
  /// sum_{i in S_j} u_i >= k + 1 - |S_j| for every j. k = 0 gives (1).
  MonomialIdeal tau_asymptotic(int k) const;

  /// τ(t · I^(•)) for rational t = num/den >= 0: x^u is a member iff
  /// den * sum_{i in S_j}(u_i + 1) > num for every j.
  MonomialIdeal tau_asymptotic_rational(long long num, long long den) const;

  /// Largest l with τ(l · I^(•)) = R, i.e. min_j |S_j| - 1.
  int tau_threshold() const;

 private:
  RingPtr ring_;
  std::vector<Exponents> gens_;
  mutable std::optional<std::vector<std::vector<int>>> primes_;
  mutable std::mutex primes_mu_;
};

/// Minimal generators of the monomial ideal cut out by the monotone
/// constraints "sum over S_j of u_i >= threshold_j", enumerated over the
/// componentwise box [0, max positive threshold]^n.
std::vector<Exponents> constrained_monomial_generators(
    std::size_t nvars, const std::vector<std::vector<int>>& rows,
    const std::vector<long long>& thresholds);

}  // namespace sympow

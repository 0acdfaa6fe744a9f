#pragma once

#include <map>
#include <optional>

#include "sympow/ideal.hpp"
#include "sympow/monomial_ideal.hpp"

namespace sympow {

/// I^[q]: ideal generated by g^q for each generator g of I, q = p^e.
/// Generator-wise computation is valid because Frobenius is flat on the
/// ambient regular ring.
Ideal bracket_power(const Ideal& ideal, unsigned e);

struct FedderResult {
  bool f_pure = false;
  /// A generator of (I^[p] : I) outside m^[p], with the exponent vector of
  /// one of its terms that is < p in every coordinate.
  std::optional<Polynomial> witness_generator;
  std::optional<Exponents> witness_term;
};

/// Fedder's criterion: R/I is F-pure iff (I^[p] : I) is not contained in
/// m^[p]. Requires (0) != I ⊆ m.
FedderResult fedder_fpure(const Ideal& ideal);

struct TrivialityVerdict {
  enum class Status { Trivial, Inconclusive };
  Status status = Status::Inconclusive;
  unsigned witness_e = 0;  // set iff Trivial
  unsigned e_max = 0;
  /// Per tested q = p^e: (e, whether c*(I^[q]:I)*a_{kq} escaped m^[q]).
  std::vector<std::pair<unsigned, bool>> transcript;
};

/// Fedder-type triviality test for τ(k·a_•) on R/I: trivial iff
/// c*(I^[q]:I)*a_{kq} is not contained in m^[q] for some q = p^e, tested
/// for e = 1..e_max. The filtration map must supply a_{kq} for each tested
/// index; a missing level throws std::out_of_range.
TrivialityVerdict tau_triviality(const Ideal& ideal,
                                 const std::map<long long, Ideal>& filtration,
                                 long long k, const Polynomial& c,
                                 unsigned e_max);

/// Smallest monomial ideal K with J ⊆ K^[q]: componentwise floor of the
/// generator exponents by q = p^e.
MonomialIdeal frobenius_root(const MonomialIdeal& ideal, unsigned e);

struct TauChainResult {
  MonomialIdeal value;
  bool stabilized = false;
  unsigned e_reached = 0;
};

/// τ(a^t) for rational t = num/den >= 0 through the ascending chain
/// τ_e = frobenius_root(a^{ceil(t p^e)}, e); stabilization is declared when
/// three consecutive stages agree (a single repeat can be a rounding
/// accident). Returns the last stage flagged unstable if the chain has not
/// settled by e_max.
TauChainResult tau_monomial_power(const MonomialIdeal& a, long long t_num,
                                  long long t_den, unsigned e_max = 4);

/// frobenius_root(a^n, e) computed without materializing a^n when the
/// composition count is small, else by repeated squaring with
/// minimalization.
MonomialIdeal frobenius_root_of_power(const MonomialIdeal& a,
                                      unsigned long long n, unsigned e);

}  // namespace sympow

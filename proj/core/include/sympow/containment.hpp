#pragma once

#include <map>
#include <string>
#include <vector>

#include "sympow/frobenius.hpp"
#include "sympow/squarefree.hpp"

namespace sympow {

enum class Verdict { Holds, Fails, PreconditionUnmet, Inconclusive };

const char* verdict_name(Verdict v);

/// Structured verdict for one theorem instance. A Fails verdict carries a
/// concrete element of the left ideal not in the right ideal.
struct ContainmentReport {
  std::string theorem;
  std::string ideal;
  std::map<std::string, long long> params;
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;  // set on Fails
  std::string reason;   // set on PreconditionUnmet / Inconclusive
  double millis = 0.0;

  std::string to_json() const;
  std::string to_text() const;
};

enum class MainVariant { A, B, ELS };

/// Uniform symbolic-power containments, h = big height of I:
///   A:   I^(hn+kn+1) ⊆ m (I^(k+1))^n       (any proper nonzero I)
///   B:   I^(hn+kn-1) ⊆ (I^(k+1))^n          (height >= 2, R/I F-pure)
///   ELS: I^(hn+kn)   ⊆ (I^(k+1))^n
/// Variant B checks F-purity by Fedder at the ring's characteristic and
/// reports PreconditionUnmet if it fails.
ContainmentReport verify_main(const SquarefreeIdeal& ideal, int n, int k,
                              MainVariant variant);

/// Same containments for a general radical ideal with caller-supplied
/// monomial minimal primes (giving h) and a separator for symbolic powers;
/// correctness is conditional on the separator attestation.
ContainmentReport verify_main_general(const Ideal& ideal,
                                      const std::vector<std::vector<int>>& primes,
                                      const Polynomial& separator, int n, int k,
                                      MainVariant variant);

/// The four links of the proof chain behind variant A, l = tau_threshold:
///   (i)   I^(hn+kn+1) · τ(l·) ⊆ τ((hn+kn+l+1)·)
///   (ii)  τ((hn+kn+l+1)·) ⊆ τ((l+1)·) · τ((h+k)·)^n
///   (iii) τ((l+1)·) ⊆ m
///   (iv)  τ((h+k)·)^n ⊆ (I^(k+1))^n
std::vector<ContainmentReport> audit_proof_chain(const SquarefreeIdeal& ideal,
                                                 int n, int k);

/// (I^[q] : I) = ∩_i (P_i^[q] : P_i) at q = p^e; the left side is computed
/// by the Groebner colon, the right side by monomial colon/intersection
/// rules, and the two are compared as ideals.
ContainmentReport check_colon_claim(const SquarefreeIdeal& ideal, unsigned e);

/// Same claim for a radical ideal with caller-supplied monomial minimal
/// primes (each a list of variable indices).
ContainmentReport check_colon_claim(const Ideal& ideal,
                                    const std::vector<std::vector<int>>& primes,
                                    unsigned e);

/// (I^[q] : I) ⊆ I^(q) at q = p^e, for radical I with every minimal prime
/// of height >= 2 and R/I F-pure (both gated).
ContainmentReport check_fpure_colon_inclusion(const SquarefreeIdeal& ideal,
                                              unsigned e);

/// (I^m : separator^∞). Correct when the separator avoids every minimal
/// prime of I and lies in every excess associated prime of I^m; the caller
/// attests this, and the conditionality is recorded by the CLI report.
/// A separator inside I is rejected.
Ideal symbolic_power_general(const Ideal& ideal, int m,
                             const Polynomial& separator);

struct ScanSummary {
  std::vector<ContainmentReport> reports;
  int scanned = 0;
  int filtered = 0;  // corpus entries rejected by the unmixed-height-2 gate
  std::vector<std::string> counterexamples;
};

/// Checks I^(2) ⊆ m·I over the corpus; entries that are not unmixed of
/// height two are filtered and logged.
ScanSummary conjecture_scan(const std::vector<SquarefreeIdeal>& corpus);

std::string describe(const SquarefreeIdeal& ideal);
std::string describe(const Ideal& ideal);

}  // namespace sympow

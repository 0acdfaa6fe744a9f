#include "sympow/containment.hpp"

#include <chrono>
#include <sstream>

#include "sympow/parse.hpp"
#include <json.hpp>

namespace sympow {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

/// First generator of `left` not in the monomial ideal `right`, if any.
const Exponents* escape_witness(const MonomialIdeal& left,
                                const MonomialIdeal& right) {
  for (const auto& g : left.gens())
    if (!right.member(g)) return &g;
  return nullptr;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::PreconditionUnmet: return "PreconditionUnmet";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string ContainmentReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["ideal"] = ideal;
  j["params"] = params;
  j["verdict"] = verdict_name(verdict);
  if (!witness.empty()) j["witness"] = witness;
  if (!reason.empty()) j["reason"] = reason;
  j["millis"] = millis;
  return j.dump();
}

std::string ContainmentReport::to_text() const {
  std::ostringstream os;
  os << theorem << " on " << ideal;
  if (!params.empty()) {
    os << " [";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << "]";
  }
  os << " : " << verdict_name(verdict);
  if (!witness.empty()) os << " (witness " << witness << ")";
  if (!reason.empty()) os << " (" << reason << ")";
  return os.str();
}

std::string describe(const SquarefreeIdeal& ideal) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& g : ideal.gens()) {
    if (!first) os << ", ";
    os << monomial_to_string(ideal.ring(), g);
    first = false;
  }
  os << ")";
  return os.str();
}

std::string describe(const Ideal& ideal) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ", ";
    os << to_string(g);
    first = false;
  }
  os << ")";
  return os.str();
}

ContainmentReport verify_main(const SquarefreeIdeal& ideal, int n, int k,
                              MainVariant variant) {
  auto start = Clock::now();
  const int h = ideal.big_height();
  const long long p = static_cast<long long>(ideal.ring()->characteristic());

  ContainmentReport report;
  report.ideal = describe(ideal);
  report.params = {{"n", n}, {"k", k}, {"h", h}, {"p", p}};

  int left_exp = 0;
  switch (variant) {
    case MainVariant::A:
      report.theorem = "I^(hn+kn+1) ⊆ m(I^(k+1))^n";
      left_exp = h * n + k * n + 1;
      break;
    case MainVariant::B:
      report.theorem = "I^(hn+kn-1) ⊆ (I^(k+1))^n";
      left_exp = h * n + k * n - 1;
      break;
    case MainVariant::ELS:
      report.theorem = "I^(hn+kn) ⊆ (I^(k+1))^n";
      left_exp = h * n + k * n;
      break;
  }
  if (n < 1 || k < 0 || left_exp < 1) {
    report.verdict = Verdict::PreconditionUnmet;
    report.reason = "parameters out of range";
    report.millis = elapsed_ms(start);
    return report;
  }

  if (variant == MainVariant::B) {
    if (ideal.min_height() < 2) {
      report.verdict = Verdict::PreconditionUnmet;
      report.reason = "height < 2";
      report.millis = elapsed_ms(start);
      return report;
    }
    FedderResult fedder = fedder_fpure(ideal.to_ideal());
    if (!fedder.f_pure) {
      report.verdict = Verdict::PreconditionUnmet;
      report.reason = "R/I not F-pure at p=" + std::to_string(p);
      report.millis = elapsed_ms(start);
      return report;
    }
    report.params["fedder_ok"] = 1;
  }

  MonomialIdeal left = ideal.symbolic_power(left_exp);
  MonomialIdeal right =
      ideal.symbolic_power(k + 1).power(static_cast<unsigned>(n));
  if (variant == MainVariant::A)
    right = right.product(MonomialIdeal::maximal(ideal.ring()));

  if (const Exponents* w = escape_witness(left, right)) {
    report.verdict = Verdict::Fails;
    report.witness = monomial_to_string(ideal.ring(), *w);
  } else {
    report.verdict = Verdict::Holds;
  }
  report.millis = elapsed_ms(start);
  return report;
}

ContainmentReport verify_main_general(const Ideal& ideal,
                                      const std::vector<std::vector<int>>& primes,
                                      const Polynomial& separator, int n, int k,
                                      MainVariant variant) {
  auto start = Clock::now();
  if (primes.empty())
    throw std::invalid_argument("minimal primes must be supplied");
  int h = 0;
  for (const auto& s : primes) h = std::max<int>(h, s.size());
  const long long p = static_cast<long long>(ideal.ring()->characteristic());

  ContainmentReport report;
  report.ideal = describe(ideal);
  report.params = {{"n", n}, {"k", k}, {"h", h}, {"p", p}};

  int left_exp = 0;
  switch (variant) {
    case MainVariant::A:
      report.theorem = "I^(hn+kn+1) ⊆ m(I^(k+1))^n";
      left_exp = h * n + k * n + 1;
      break;
    case MainVariant::B:
      report.theorem = "I^(hn+kn-1) ⊆ (I^(k+1))^n";
      left_exp = h * n + k * n - 1;
      break;
    case MainVariant::ELS:
      report.theorem = "I^(hn+kn) ⊆ (I^(k+1))^n";
      left_exp = h * n + k * n;
      break;
  }
  if (n < 1 || k < 0 || left_exp < 1) {
    report.verdict = Verdict::PreconditionUnmet;
    report.reason = "parameters out of range";
    report.millis = elapsed_ms(start);
    return report;
  }
  if (variant == MainVariant::B) {
    std::size_t min_h = ideal.ring()->nvars() + 1;
    for (const auto& s : primes) min_h = std::min(min_h, s.size());
    if (min_h < 2) {
      report.verdict = Verdict::PreconditionUnmet;
      report.reason = "height < 2";
      report.millis = elapsed_ms(start);
      return report;
    }
    FedderResult fedder = fedder_fpure(ideal);
    if (!fedder.f_pure) {
      report.verdict = Verdict::PreconditionUnmet;
      report.reason = "R/I not F-pure at p=" + std::to_string(p);
      report.millis = elapsed_ms(start);
      return report;
    }
    report.params["fedder_ok"] = 1;
  }

  Ideal left = symbolic_power_general(ideal, left_exp, separator);
  Ideal right = ideal_power(symbolic_power_general(ideal, k + 1, separator),
                            static_cast<unsigned>(n));
  if (variant == MainVariant::A)
    right = ideal_product(MonomialIdeal::maximal(ideal.ring()).to_ideal(),
                          right);

  report.verdict = Verdict::Holds;
  for (const auto& g : left.generators()) {
    if (!ideal_member(g, right)) {
      report.verdict = Verdict::Fails;
      report.witness = to_string(g);
      break;
    }
  }
  report.reason = "conditional on the supplied separator and primes";
  report.millis = elapsed_ms(start);
  return report;
}

std::vector<ContainmentReport> audit_proof_chain(const SquarefreeIdeal& ideal,
                                                 int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1, k >= 0");
  const int h = ideal.big_height();
  const int l = ideal.tau_threshold();
  const std::string desc = describe(ideal);
  const std::map<std::string, long long> params = {
      {"n", n}, {"k", k}, {"h", h}, {"l", l}};

  auto check = [&](const std::string& name, const MonomialIdeal& left,
                   const MonomialIdeal& right) {
    auto start = Clock::now();
    ContainmentReport r;
    r.theorem = name;
    r.ideal = desc;
    r.params = params;
    if (const Exponents* w = escape_witness(left, right)) {
      r.verdict = Verdict::Fails;
      r.witness = monomial_to_string(ideal.ring(), *w);
    } else {
      r.verdict = Verdict::Holds;
    }
    r.millis = elapsed_ms(start);
    return r;
  };

  const int big = h * n + k * n + 1;
  MonomialIdeal tau_l = ideal.tau_asymptotic(l);
  MonomialIdeal tau_l1 = ideal.tau_asymptotic(l + 1);
  MonomialIdeal tau_hk_n =
      ideal.tau_asymptotic(h + k).power(static_cast<unsigned>(n));

  std::vector<ContainmentReport> out;
  out.push_back(check("(i) I^(hn+kn+1)·τ(l·) ⊆ τ((hn+kn+l+1)·)",
                      ideal.symbolic_power(big).product(tau_l),
                      ideal.tau_asymptotic(big + l)));
  out.push_back(check("(ii) τ((hn+kn+l+1)·) ⊆ τ((l+1)·)·τ((h+k)·)^n",
                      ideal.tau_asymptotic(big + l),
                      tau_l1.product(tau_hk_n)));
  out.push_back(check("(iii) τ((l+1)·) ⊆ m", tau_l1,
                      MonomialIdeal::maximal(ideal.ring())));
  out.push_back(check("(iv) τ((h+k)·)^n ⊆ (I^(k+1))^n", tau_hk_n,
                      ideal.symbolic_power(k + 1).power(
                          static_cast<unsigned>(n))));
  return out;
}

namespace {

ContainmentReport colon_claim_impl(const Ideal& ideal,
                                   const std::vector<std::vector<int>>& primes,
                                   unsigned e, const std::string& desc) {
  auto start = Clock::now();
  const RingPtr& ring = ideal.ring();
  ContainmentReport report;
  report.theorem = "(I^[q]:I) = ∩(P_i^[q]:P_i)";
  report.ideal = desc;
  report.params = {{"e", e},
                   {"p", static_cast<long long>(ring->characteristic())}};

  // left side: the Groebner colon
  Ideal left = ideal_colon(bracket_power(ideal, e), ideal);

  // right side: monomial colon/intersection rules over the supplied primes
  bool first = true;
  MonomialIdeal right = MonomialIdeal::unit(ring);
  for (const auto& s : primes) {
    std::vector<Exponents> gens;
    for (int i : s) {
      Exponents u(ring->nvars(), 0);
      u[static_cast<std::size_t>(i)] = 1;
      gens.push_back(std::move(u));
    }
    MonomialIdeal prime(ring, std::move(gens));
    MonomialIdeal part = prime.bracket(e).colon(prime);
    right = first ? part : right.intersect(part);
    first = false;
  }

  Ideal right_ideal = right.to_ideal();
  bool lr = ideal_contains(right_ideal, left);
  bool rl = ideal_contains(left, right_ideal);
  if (lr && rl) {
    report.verdict = Verdict::Holds;
  } else {
    report.verdict = Verdict::Fails;
    if (!lr) {
      for (const auto& g : left.generators())
        if (!ideal_member(g, right_ideal)) {
          report.witness = to_string(g);
          report.reason = "witness lies in (I^[q]:I) but not in the prime-wise side";
          break;
        }
    } else {
      for (const auto& g : right_ideal.generators())
        if (!ideal_member(g, left)) {
          report.witness = to_string(g);
          report.reason = "witness lies in the prime-wise side but not in (I^[q]:I)";
          break;
        }
    }
  }
  report.millis = elapsed_ms(start);
  return report;
}

}  // namespace

ContainmentReport check_colon_claim(const SquarefreeIdeal& ideal, unsigned e) {
  return colon_claim_impl(ideal.to_ideal(), ideal.minimal_primes(), e,
                          describe(ideal));
}

ContainmentReport check_colon_claim(const Ideal& ideal,
                                    const std::vector<std::vector<int>>& primes,
                                    unsigned e) {
  if (primes.empty())
    throw std::invalid_argument("minimal primes must be supplied");
  return colon_claim_impl(ideal, primes, e, describe(ideal));
}

ContainmentReport check_fpure_colon_inclusion(const SquarefreeIdeal& ideal,
                                              unsigned e) {
  auto start = Clock::now();
  const long long p = static_cast<long long>(ideal.ring()->characteristic());
  ContainmentReport report;
  report.theorem = "(I^[q]:I) ⊆ I^(q)";
  report.ideal = describe(ideal);
  report.params = {{"e", e}, {"p", p}};

  if (ideal.min_height() < 2) {
    report.verdict = Verdict::PreconditionUnmet;
    report.reason = "a minimal prime has height < 2";
    report.millis = elapsed_ms(start);
    return report;
  }
  FedderResult fedder = fedder_fpure(ideal.to_ideal());
  if (!fedder.f_pure) {
    report.verdict = Verdict::PreconditionUnmet;
    report.reason = "R/I not F-pure at p=" + std::to_string(p);
    report.millis = elapsed_ms(start);
    return report;
  }

  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= ideal.ring()->characteristic();

  MonomialIdeal base = ideal.monomial_ideal();
  MonomialIdeal left = base.bracket(e).colon(base);
  MonomialIdeal right = ideal.symbolic_power(static_cast<int>(q));
  if (const Exponents* w = escape_witness(left, right)) {
    report.verdict = Verdict::Fails;
    report.witness = monomial_to_string(ideal.ring(), *w);
  } else {
    report.verdict = Verdict::Holds;
  }
  report.millis = elapsed_ms(start);
  return report;
}

Ideal symbolic_power_general(const Ideal& ideal, int m,
                             const Polynomial& separator) {
  if (m < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  if (separator.is_zero() || ideal_member(separator, ideal))
    throw std::invalid_argument("separator must lie outside I");
  return ideal_saturate(ideal_power(ideal, static_cast<unsigned>(m)),
                        separator);
}

ScanSummary conjecture_scan(const std::vector<SquarefreeIdeal>& corpus) {
  ScanSummary summary;
  for (const auto& ideal : corpus) {
    if (!(ideal.unmixed() && ideal.big_height() == 2)) {
      ++summary.filtered;
      continue;
    }
    auto start = Clock::now();
    ContainmentReport report;
    report.theorem = "I^(2) ⊆ m·I";
    report.ideal = describe(ideal);
    report.params = {
        {"p", static_cast<long long>(ideal.ring()->characteristic())}};

    MonomialIdeal left = ideal.symbolic_power(2);
    MonomialIdeal right =
        ideal.monomial_ideal().product(MonomialIdeal::maximal(ideal.ring()));
    if (const Exponents* w = escape_witness(left, right)) {
      report.verdict = Verdict::Fails;
      report.witness = monomial_to_string(ideal.ring(), *w);
      summary.counterexamples.push_back(report.ideal);
    } else {
      report.verdict = Verdict::Holds;
    }
    report.millis = elapsed_ms(start);
    summary.reports.push_back(std::move(report));
    ++summary.scanned;
  }
  return summary;
}

}  // namespace sympow

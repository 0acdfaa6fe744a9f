#include "sympow/frobenius.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sympow {

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  if (e < 1) throw std::invalid_argument("bracket power needs e >= 1");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(e));
  return Ideal(ideal.ring(), std::move(gens));
}

namespace {

std::uint64_t q_power(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t(1) << 40) / p)
      throw std::overflow_error("p^e too large");
    q *= p;
  }
  return q;
}

// Is f outside the monomial ideal (x_1^q, ..., x_n^q)? A term escapes iff
// every exponent is < q; membership of f is termwise since m^[q] is monomial.
const Exponents* escaping_term(const Polynomial& f, std::uint64_t q) {
  for (const auto& [u, c] : f.terms()) {
    bool escapes = true;
    for (int ui : u)
      if (static_cast<std::uint64_t>(ui) >= q) {
        escapes = false;
        break;
      }
    if (escapes) return &u;
  }
  return nullptr;
}

}  // namespace

FedderResult fedder_fpure(const Ideal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("Fedder test: I = (0)");
  if (ideal.is_unit()) throw std::invalid_argument("Fedder test: I = (1)");
  for (const auto& g : ideal.generators())
    if (g.constant_coeff() != 0)
      throw std::invalid_argument("Fedder test needs I contained in m");

  const std::uint64_t p = ideal.ring()->characteristic();
  Ideal colon = ideal_colon(bracket_power(ideal, 1), ideal);

  FedderResult result;
  for (const auto& g : colon.generators()) {
    if (const Exponents* t = escaping_term(g, p)) {
      result.f_pure = true;
      result.witness_generator = g;
      result.witness_term = *t;
      break;
    }
  }
  return result;
}

TrivialityVerdict tau_triviality(const Ideal& ideal,
                                 const std::map<long long, Ideal>& filtration,
                                 long long k, const Polynomial& c,
                                 unsigned e_max) {
  if (k < 1) throw std::invalid_argument("exponent k must be >= 1");
  if (c.is_zero() || ideal_member(c, ideal))
    throw std::invalid_argument("c must lie outside I");

  const std::uint64_t p = ideal.ring()->characteristic();
  TrivialityVerdict verdict;
  verdict.e_max = e_max;

  for (unsigned e = 1; e <= e_max; ++e) {
    std::uint64_t q = q_power(p, e);
    long long level = k * static_cast<long long>(q);
    auto it = filtration.find(level);
    if (it == filtration.end())
      throw std::out_of_range("filtration level a_" + std::to_string(level) +
                              " not supplied");
    // For I = (0) the quotient is R itself and (I^[q] : I) = R, which is
    // the §3 use of the criterion: the filtration alone must escape m^[q].
    Ideal colon = ideal.is_zero()
                      ? Ideal(ideal.ring(), {Polynomial::one(ideal.ring())})
                      : ideal_colon(bracket_power(ideal, e), ideal);
    Ideal tested =
        ideal_product(Ideal(ideal.ring(), {c}), ideal_product(colon, it->second));

    bool escaped = false;
    for (const auto& g : tested.generators())
      if (escaping_term(g, q)) {
        escaped = true;
        break;
      }
    verdict.transcript.emplace_back(e, escaped);
    if (escaped) {
      verdict.status = TrivialityVerdict::Status::Trivial;
      verdict.witness_e = e;
      return verdict;
    }
  }
  verdict.status = TrivialityVerdict::Status::Inconclusive;
  return verdict;
}

MonomialIdeal frobenius_root(const MonomialIdeal& ideal, unsigned e) {
  if (e < 1) throw std::invalid_argument("Frobenius root needs e >= 1");
  const long long q =
      static_cast<long long>(q_power(ideal.ring()->characteristic(), e));
  std::vector<Exponents> gens;
  for (const auto& g : ideal.gens()) gens.push_back(exp_floor_div(g, q));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

namespace {

// Can n factors, drawn with repetition from gens, keep the exponent sum
// within budget componentwise?  Branch and bound over the generators, with
// two relaxation bounds: the sum of per-generator caps, and for each weight
// w in {1, e_1, ..., e_d} the dual bound w.budget / min_i w.gen_i (any
// weighting of the constraints caps the factor count).
bool n_factors_fit(const std::vector<Exponents>& gens, std::size_t idx,
                   unsigned long long n, std::vector<long long>& budget) {
  if (n == 0) return true;
  if (idx == gens.size()) return false;
  unsigned long long reachable = 0;
  for (std::size_t i = idx; i < gens.size() && reachable < n; ++i) {
    unsigned long long cap = n;
    for (std::size_t j = 0; j < budget.size(); ++j)
      if (gens[i][j] > 0)
        cap = std::min(
            cap, static_cast<unsigned long long>(budget[j] / gens[i][j]));
    reachable += cap;
  }
  if (reachable < n) return false;
  if (budget.size() <= 10) {
    for (std::uint32_t mask = 1; mask < (1u << budget.size()); ++mask) {
      long long min_weight = -1;
      for (std::size_t i = idx; i < gens.size() && min_weight != 0; ++i) {
        long long weight = 0;
        for (std::size_t j = 0; j < budget.size(); ++j)
          if (mask & (1u << j)) weight += gens[i][j];
        if (min_weight < 0 || weight < min_weight) min_weight = weight;
      }
      if (min_weight <= 0) continue;
      long long total = 0;
      for (std::size_t j = 0; j < budget.size(); ++j)
        if (mask & (1u << j)) total += budget[j];
      if (static_cast<unsigned long long>(total / min_weight) < n)
        return false;
    }
  }

  const Exponents& u = gens[idx];
  unsigned long long cap = n;
  for (std::size_t j = 0; j < budget.size(); ++j)
    if (u[j] > 0)
      cap = std::min(cap, static_cast<unsigned long long>(budget[j] / u[j]));
  for (long long c = static_cast<long long>(cap); c >= 0; --c) {
    for (std::size_t j = 0; j < budget.size(); ++j) budget[j] -= c * u[j];
    const bool ok = n_factors_fit(gens, idx + 1, n - c, budget);
    for (std::size_t j = 0; j < budget.size(); ++j) budget[j] += c * u[j];
    if (ok) return true;
  }
  return false;
}

}  // namespace

MonomialIdeal frobenius_root_of_power(const MonomialIdeal& a,
                                      unsigned long long n, unsigned e) {
  const long long q =
      static_cast<long long>(q_power(a.ring()->characteristic(), e));
  if (n == 0) return MonomialIdeal::unit(a.ring());
  if (a.is_zero()) return MonomialIdeal::zero(a.ring());
  if (a.is_unit()) return MonomialIdeal::unit(a.ring());

  // Minimal generators v of the root satisfy v_j <= floor(n * m_j / q),
  // m_j the largest j-exponent among the generators of a.  A candidate v
  // lies in the root iff some product of n generators divides x^(q(v+1)-1),
  // i.e. iff n factors fit under that budget; feasibility is monotone in v,
  // so sweeping the box by ascending total degree and skipping multiples of
  // accepted candidates yields exactly the minimal generators.
  const std::size_t nvars = a.ring()->nvars();
  std::vector<long long> box(nvars, 0);
  unsigned long long box_size = 1;
  bool box_small = true;
  for (std::size_t j = 0; j < nvars && box_small; ++j) {
    long long m_j = 0;
    for (const auto& u : a.gens()) m_j = std::max<long long>(m_j, u[j]);
    if (m_j > 0 && n > (std::uint64_t(1) << 50) / static_cast<unsigned long long>(m_j)) {
      box_small = false;
      break;
    }
    box[j] = static_cast<long long>(n * static_cast<unsigned long long>(m_j) /
                                    static_cast<unsigned long long>(q));
    box_size *= static_cast<unsigned long long>(box[j]) + 1;
    if (box_size > 200'000ULL) box_small = false;
  }

  if (box_small) {
    std::vector<Exponents> candidates;
    candidates.reserve(box_size);
    Exponents v(nvars, 0);
    while (true) {
      candidates.push_back(v);
      std::size_t j = 0;
      while (j < nvars && v[j] == box[j]) v[j++] = 0;
      if (j == nvars) break;
      ++v[j];
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Exponents& lhs, const Exponents& rhs) {
                long long dl = 0, dr = 0;
                for (int x : lhs) dl += x;
                for (int x : rhs) dr += x;
                if (dl != dr) return dl < dr;
                return lhs < rhs;
              });

    std::vector<Exponents> accepted;
    std::vector<long long> budget(nvars);
    for (const Exponents& cand : candidates) {
      bool dominated = false;
      for (const Exponents& w : accepted) {
        bool divides = true;
        for (std::size_t j = 0; j < nvars; ++j)
          if (w[j] > cand[j]) {
            divides = false;
            break;
          }
        if (divides) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      for (std::size_t j = 0; j < nvars; ++j)
        budget[j] = q * (cand[j] + 1) - 1;
      if (n_factors_fit(a.gens(), 0, n, budget)) accepted.push_back(cand);
    }
    return MonomialIdeal(a.ring(), std::move(accepted));
  }

  const std::size_t g = a.gens().size();
  // number of compositions of n into g parts
  unsigned long long count = 1;
  bool small = true;
  for (std::size_t i = 1; i < g && small; ++i) {
    count = count * (n + i) / i;
    if (count > 4'000'000ULL) small = false;
  }

  if (small) {
    // enumerate i_1 + ... + i_g = n; floor(sum_j i_j u_j / q) deduped
    std::set<Exponents> floors;
    Exponents acc(a.ring()->nvars(), 0);
    auto rec = [&](auto&& self, std::size_t idx,
                   unsigned long long remaining) -> void {
      if (idx + 1 == g) {
        Exponents v = acc;
        const Exponents& u = a.gens()[idx];
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] += static_cast<int>(remaining) * u[i];
        floors.insert(exp_floor_div(v, q));
        return;
      }
      for (unsigned long long i = 0; i <= remaining; ++i) {
        self(self, idx + 1, remaining - i);
        const Exponents& u = a.gens()[idx];
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += u[j];
      }
      const Exponents& u = a.gens()[idx];
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] -= static_cast<int>(remaining + 1) * u[j];
    };
    rec(rec, 0, n);
    return MonomialIdeal(a.ring(),
                         std::vector<Exponents>(floors.begin(), floors.end()));
  }

  return frobenius_root(a.power(static_cast<unsigned>(n)), e);
}

TauChainResult tau_monomial_power(const MonomialIdeal& a, long long t_num,
                                  long long t_den, unsigned e_max) {
  if (t_num < 0 || t_den <= 0)
    throw std::invalid_argument("exponent must be a non-negative rational");
  if (a.is_zero()) throw std::invalid_argument("tau of the zero ideal");
  if (t_num == 0)
    return {MonomialIdeal::unit(a.ring()), true, 0};  // τ(a^0) = τ(R) = R

  const std::uint64_t p = a.ring()->characteristic();
  auto stage = [&](unsigned e) {
    std::uint64_t q = q_power(p, e);
    unsigned long long n = static_cast<unsigned long long>(
        (static_cast<unsigned long long>(t_num) * q + t_den - 1) / t_den);
    if (e == 0) return a.power(static_cast<unsigned>(n));
    return frobenius_root_of_power(a, n, e);
  };

  // A single repeat can be a rounding accident (stages 1 and 2 may agree
  // while stage 3 still grows), so stability requires two repeats in a row.
  MonomialIdeal current = stage(0);
  unsigned repeats = 0;
  for (unsigned e = 1; e <= e_max; ++e) {
    MonomialIdeal next = stage(e);
    repeats = next == current ? repeats + 1 : 0;
    if (repeats == 2) return {std::move(current), true, e};
    current = std::move(next);
  }
  return {std::move(current), false, e_max};
}

}  // namespace sympow

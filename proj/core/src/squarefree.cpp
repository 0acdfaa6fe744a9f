#include "sympow/squarefree.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympow {

bool SymbolicPolyhedron::contains(const std::vector<long long>& num,
                                  long long den) const {
  if (num.size() != nvars || den <= 0)
    throw std::invalid_argument("bad rational point");
  for (long long v : num)
    if (v < 0) return false;
  for (const auto& row : rows) {
    long long s = 0;
    for (int i : row) s += num[static_cast<std::size_t>(i)];
    if (s < den) return false;  // sum of v_i >= 1
  }
  return true;
}

SquarefreeIdeal::SquarefreeIdeal(RingPtr ring, std::vector<Exponents> gens)
    : ring_(std::move(ring)) {
  if (gens.empty())
    throw std::invalid_argument("squarefree ideal needs generators");
  for (const auto& g : gens) {
    if (g.size() != ring_->nvars())
      throw std::invalid_argument("exponent vector length mismatch");
    bool nonzero = false;
    for (int e : g) {
      if (e != 0 && e != 1)
        throw std::invalid_argument("generators must be squarefree");
      nonzero |= e == 1;
    }
    if (!nonzero)
      throw std::invalid_argument("squarefree ideal must be proper");
  }
  std::vector<Exponents> minimal = minimalize(gens);
  if (minimal.size() != gens.size())
    throw std::invalid_argument("generators are not an antichain");
  gens_ = std::move(minimal);
}

SquarefreeIdeal::SquarefreeIdeal(const SquarefreeIdeal& other)
    : ring_(other.ring_), gens_(other.gens_) {
  std::lock_guard<std::mutex> lock(other.primes_mu_);
  primes_ = other.primes_;
}

SquarefreeIdeal& SquarefreeIdeal::operator=(const SquarefreeIdeal& other) {
  if (this == &other) return *this;
  ring_ = other.ring_;
  gens_ = other.gens_;
  std::lock_guard<std::mutex> lock(other.primes_mu_);
  primes_ = other.primes_;
  return *this;
}

MonomialIdeal SquarefreeIdeal::monomial_ideal() const {
  return MonomialIdeal(ring_, gens_);
}

namespace {

// Minimal transversals of the generator supports by branch and bound:
// pick the first uncovered generator, branch on its support variables.
void transversals(const std::vector<std::vector<int>>& supports,
                  std::vector<int>& chosen, std::size_t nvars,
                  std::vector<std::vector<int>>& out) {
  const std::vector<int>* uncovered = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (int v : s)
      if (std::binary_search(chosen.begin(), chosen.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) {
      uncovered = &s;
      break;
    }
  }
  if (!uncovered) {
    out.push_back(chosen);
    return;
  }
  for (int v : *uncovered) {
    auto it = std::lower_bound(chosen.begin(), chosen.end(), v);
    std::vector<int> next(chosen);
    next.insert(next.begin() + (it - chosen.begin()), v);
    transversals(supports, next, nvars, out);
  }
}

}  // namespace

const std::vector<std::vector<int>>& SquarefreeIdeal::minimal_primes() const {
  std::lock_guard<std::mutex> lock(primes_mu_);
  if (primes_) return *primes_;

  std::vector<std::vector<int>> supports;
  for (const auto& g : gens_) {
    std::vector<int> s;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == 1) s.push_back(static_cast<int>(i));
    supports.push_back(std::move(s));
  }

  std::vector<std::vector<int>> hits;
  std::vector<int> chosen;
  transversals(supports, chosen, ring_->nvars(), hits);

  // keep inclusion-minimal transversals, deterministically sorted
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::vector<std::vector<int>> minimal;
  for (const auto& a : hits) {
    bool dominated = false;
    for (const auto& b : hits) {
      if (a == b || b.size() >= a.size()) continue;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  primes_ = std::move(minimal);
  return *primes_;
}

int SquarefreeIdeal::big_height() const {
  std::size_t h = 0;
  for (const auto& s : minimal_primes()) h = std::max(h, s.size());
  return static_cast<int>(h);
}

int SquarefreeIdeal::min_height() const {
  std::size_t h = ring_->nvars() + 1;
  for (const auto& s : minimal_primes()) h = std::min(h, s.size());
  return static_cast<int>(h);
}

bool SquarefreeIdeal::unmixed() const { return big_height() == min_height(); }

std::vector<Exponents> constrained_monomial_generators(
    std::size_t nvars, const std::vector<std::vector<int>>& rows,
    const std::vector<long long>& thresholds) {
  long long box = 0;
  for (long long t : thresholds) box = std::max(box, t);
  if (box == 0) {
    return {Exponents(nvars, 0)};  // unit ideal
  }

  auto satisfies = [&](const Exponents& u) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      long long s = 0;
      for (int i : rows[j]) s += u[static_cast<std::size_t>(i)];
      if (s < thresholds[j]) return false;
    }
    return true;
  };

  // Odometer enumeration of the box [0, box]^n in lexicographic order; every
  // componentwise divisor of u precedes u, so keeping only undominated
  // satisfying vectors yields exactly the minimal generators.
  std::vector<Exponents> minimal;
  Exponents u(nvars, 0);
  while (true) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (exp_divides(m, u)) {
        dominated = true;
        break;
      }
    if (!dominated && satisfies(u)) minimal.push_back(u);

    // odometer increment; carry past the first digit ends the walk
    std::size_t i = nvars;
    bool carried = true;
    while (i-- > 0) {
      if (u[i] < box) {
        ++u[i];
        carried = false;
        break;
      }
      u[i] = 0;
    }
    if (carried) break;
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

MonomialIdeal SquarefreeIdeal::symbolic_power(int m) const {
  if (m < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  const auto& primes = minimal_primes();
  std::vector<long long> thresholds(primes.size(), m);
  return MonomialIdeal(
      ring_, constrained_monomial_generators(ring_->nvars(), primes, thresholds));
}

SymbolicPolyhedron SquarefreeIdeal::symbolic_polyhedron() const {
  return SymbolicPolyhedron{ring_->nvars(), minimal_primes()};
}

MonomialIdeal SquarefreeIdeal::tau_asymptotic(int k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (k == 0) return MonomialIdeal::unit(ring_);  // τ(0 · I^(•)) = τ(R) = R
  const auto& primes = minimal_primes();
  std::vector<long long> thresholds;
  for (const auto& s : primes)
    thresholds.push_back(
        std::max<long long>(0, k + 1 - static_cast<long long>(s.size())));
  return MonomialIdeal(
      ring_, constrained_monomial_generators(ring_->nvars(), primes, thresholds));
}

MonomialIdeal SquarefreeIdeal::tau_asymptotic_rational(long long num,
                                                       long long den) const {
  if (num < 0 || den <= 0) throw std::invalid_argument("bad rational exponent");
  if (num == 0) return MonomialIdeal::unit(ring_);
  const auto& primes = minimal_primes();
  std::vector<long long> thresholds;
  for (const auto& s : primes) {
    // smallest integer T with den*(T + |S_j|) > num
    long long rhs = num - den * static_cast<long long>(s.size());
    long long t;
    if (rhs < 0) {
      t = 0;
    } else {
      t = rhs / den + 1;  // rhs >= 0: floor division, strict inequality
    }
    thresholds.push_back(t);
  }
  return MonomialIdeal(
      ring_, constrained_monomial_generators(ring_->nvars(), primes, thresholds));
}

int SquarefreeIdeal::tau_threshold() const { return min_height() - 1; }

}  // namespace sympow

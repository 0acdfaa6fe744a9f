#include "sympow/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympow {

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    long long da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> minimal;
  for (auto& g : gens) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (exp_divides(m, g)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(std::move(g));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Exponents> gens)
    : ring_(std::move(ring)) {
  for (const auto& g : gens) {
    if (g.size() != ring_->nvars())
      throw std::invalid_argument("exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  Exponents e(ring->nvars(), 0);
  return MonomialIdeal(std::move(ring), {std::move(e)});
}

MonomialIdeal MonomialIdeal::maximal(RingPtr ring) {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Exponents e(ring->nvars(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && exp_total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::member(const Exponents& u) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Exponents& g) { return exp_divides(g, u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Exponents& g) { return member(g); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_ring(ring_, other.ring_) && gens_ == other.gens_;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Exponents> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const auto& g : gens_)
    for (const auto& h : other.gens_) gens.push_back(exp_lcm(g, h));
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  std::vector<Exponents> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other) const {
  std::vector<Exponents> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const auto& g : gens_)
    for (const auto& h : other.gens_) gens.push_back(exp_add(g, h));
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::power(unsigned n) const {
  if (n == 0) return unit(ring_);
  // repeated squaring; products are minimalized as they are formed
  MonomialIdeal result = unit(ring_);
  MonomialIdeal base = *this;
  while (n) {
    if (n & 1) result = result.product(base);
    n >>= 1;
    if (n) base = base.product(base);
  }
  return result;
}

MonomialIdeal MonomialIdeal::colon_monomial(const Exponents& g) const {
  std::vector<Exponents> gens;
  for (const auto& h : gens_) {
    Exponents q(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) q[i] = std::max(h[i] - g[i], 0);
    gens.push_back(std::move(q));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& other) const {
  if (other.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  MonomialIdeal result = unit(ring_);
  for (const auto& g : other.gens_) {
    MonomialIdeal part = colon_monomial(g);
    result = first ? part : result.intersect(part);
    first = false;
  }
  return result;
}

MonomialIdeal MonomialIdeal::bracket(unsigned e) const {
  const std::uint64_t p = ring_->characteristic();
  long long q = 1;
  for (unsigned i = 0; i < e; ++i) q *= static_cast<long long>(p);
  std::vector<Exponents> gens;
  for (const auto& g : gens_) gens.push_back(exp_scale(g, q));
  return MonomialIdeal(ring_, std::move(gens));
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_)
    gens.push_back(Polynomial::term(ring_, g, 1));
  if (gens.empty()) gens.push_back(Polynomial::zero(ring_));
  return Ideal(ring_, std::move(gens));
}

MonomialIdeal as_monomial_ideal(const Ideal& ideal) {
  std::vector<Exponents> gens;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    if (!g.is_monomial())
      throw std::invalid_argument("ideal is not monomial");
    gens.push_back(g.terms().begin()->first);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

}  // namespace sympow

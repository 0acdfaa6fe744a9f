#include "sympow/polynomial.hpp"

#include <stdexcept>

namespace sympow {

namespace {

int order_compare_impl(const MonomialOrder& o, const Exponents& u,
                       const Exponents& v);

}  // namespace

int MonomialOrder::compare(const Exponents& u, const Exponents& v) const {
  if (u.size() != v.size())
    throw std::invalid_argument("exponent vector length mismatch");
  return order_compare_impl(*this, u, v);
}

namespace {

int lex_compare(const Exponents& u, const Exponents& v, std::size_t lo,
                std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_compare(const Exponents& u, const Exponents& v, std::size_t lo,
                    std::size_t hi) {
  long long du = 0, dv = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du > dv ? 1 : -1;
  // ties broken by the last nonzero entry of u - v: negative means greater
  for (std::size_t i = hi; i-- > lo;) {
    if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
  }
  return 0;
}

int order_compare_impl(const MonomialOrder& o, const Exponents& u,
                       const Exponents& v) {
  switch (o.kind) {
    case OrderKind::Lex:
      return lex_compare(u, v, 0, u.size());
    case OrderKind::GrevLex:
      return grevlex_compare(u, v, 0, u.size());
    case OrderKind::Block: {
      std::size_t k = std::min<std::size_t>(o.block, u.size());
      if (int c = grevlex_compare(u, v, 0, k)) return c;
      return grevlex_compare(u, v, k, u.size());
    }
  }
  return 0;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::uint64_t c) {
  Polynomial f(ring);
  f.add_term(Exponents(ring->nvars(), 0), c);
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars())
    throw std::invalid_argument("variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  return term(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::term(RingPtr ring, Exponents exps, std::uint64_t c) {
  if (exps.size() != ring->nvars())
    throw std::invalid_argument("exponent vector length mismatch");
  Polynomial f(ring);
  f.add_term(exps, c);
  return f;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return exp_total_degree(terms_.begin()->first) == 0;
}

std::uint64_t Polynomial::constant_coeff() const {
  auto it = terms_.find(Exponents(ring_->nvars(), 0));
  return it == terms_.end() ? 0 : it->second;
}

long long Polynomial::total_degree() const {
  long long d = -1;
  for (const auto& [u, c] : terms_) d = std::max(d, exp_total_degree(u));
  return d;
}

void Polynomial::add_term(const Exponents& exps, std::uint64_t c) {
  const std::uint64_t p = ring_->characteristic();
  c %= p;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second = add_mod(it->second, c, p);
    if (it->second == 0) terms_.erase(it);
  }
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring()))
    throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(*this, g);
  Polynomial h = *this;
  for (const auto& [u, c] : g.terms_) h.add_term(u, c);
  return h;
}

Polynomial Polynomial::operator-() const {
  const std::uint64_t p = ring_->characteristic();
  Polynomial h(ring_);
  for (const auto& [u, c] : terms_) h.terms_.emplace(u, p - c);
  return h;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(*this, g);
  const std::uint64_t p = ring_->characteristic();
  Polynomial h(ring_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : g.terms_)
      h.add_term(exp_add(u, v), mul_mod(cu, cv, p));
  return h;
}

bool Polynomial::operator==(const Polynomial& g) const {
  return same_ring(ring_, g.ring_) && terms_ == g.terms_;
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  const std::uint64_t p = ring_->characteristic();
  c %= p;
  Polynomial h(ring_);
  if (c == 0) return h;
  for (const auto& [u, cu] : terms_) h.terms_.emplace(u, mul_mod(cu, c, p));
  return h;
}

Polynomial Polynomial::times_term(const Exponents& exps,
                                  std::uint64_t c) const {
  const std::uint64_t p = ring_->characteristic();
  c %= p;
  Polynomial h(ring_);
  if (c == 0) return h;
  for (const auto& [u, cu] : terms_)
    h.terms_.emplace(exp_add(u, exps), mul_mod(cu, c, p));
  return h;
}

Polynomial Polynomial::pow(unsigned long long n) const {
  Polynomial r = one(ring_);
  Polynomial b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Polynomial Polynomial::frobenius(unsigned e) const {
  const std::uint64_t p = ring_->characteristic();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t(1) << 20) / p)
      throw std::overflow_error("Frobenius exponent p^e too large");
    q *= p;
  }
  Polynomial h(ring_);
  for (const auto& [u, c] : terms_)
    h.terms_.emplace(exp_scale(u, static_cast<long long>(q)),
                     pow_mod(c, q, p));
  return h;
}

const std::pair<const Exponents, std::uint64_t>& Polynomial::leading(
    const MonomialOrder& order) const {
  if (terms_.empty())
    throw std::domain_error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  std::uint64_t lc = leading(order).second;
  return scaled(inv_mod(lc, ring_->characteristic()));
}

}  // namespace sympow

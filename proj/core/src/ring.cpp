#include "sympow/ring.hpp"

#include <algorithm>
#include <unordered_set>

namespace sympow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingPtr Ring::make(std::uint64_t characteristic,
                   std::vector<std::string> variables) {
  if (!is_prime(characteristic))
    throw std::invalid_argument("ring characteristic must be prime, got " +
                                std::to_string(characteristic));
  if (characteristic >= (std::uint64_t(1) << 32))
    throw std::invalid_argument("characteristic must fit a machine word");
  if (variables.empty())
    throw std::invalid_argument("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
  return RingPtr(new Ring(characteristic, std::move(variables)));
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

Exponents exp_add(const Exponents& u, const Exponents& v) {
  Exponents w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

Exponents exp_sub(const Exponents& u, const Exponents& v) {
  Exponents w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    w[i] = u[i] - v[i];
    if (w[i] < 0) throw std::domain_error("exponent subtraction underflow");
  }
  return w;
}

bool exp_divides(const Exponents& u, const Exponents& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

Exponents exp_lcm(const Exponents& u, const Exponents& v) {
  Exponents w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
  return w;
}

Exponents exp_scale(const Exponents& u, long long c) {
  Exponents w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    w[i] = static_cast<int>(u[i] * c);
  return w;
}

Exponents exp_floor_div(const Exponents& u, long long q) {
  Exponents w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    w[i] = static_cast<int>(u[i] / q);
  return w;
}

long long exp_total_degree(const Exponents& u) {
  long long d = 0;
  for (int e : u) d += e;
  return d;
}

}  // namespace sympow

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sympow {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient polynomial ring F_p[x_1..x_n] with a fixed variable order.
/// Instances are immutable; share them freely via RingPtr.
class Ring {
 public:
  static RingPtr make(std::uint64_t characteristic,
                      std::vector<std::string> variables);

  std::uint64_t characteristic() const { return p_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }

  /// Index of a variable name, or -1 if not declared.
  int index_of(std::string_view name) const;

  bool operator==(const Ring& other) const {
    return p_ == other.p_ && vars_ == other.vars_;
  }

 private:
  Ring(std::uint64_t p, std::vector<std::string> vars)
      : p_(p), vars_(std::move(vars)) {}

  std::uint64_t p_;
  std::vector<std::string> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool is_prime(std::uint64_t n);

// ---- residue arithmetic mod p (p < 2^32, so products fit in 64 bits) ----

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);  // Fermat; p prime
}

// ---- exponent vectors ----

using Exponents = std::vector<int>;

Exponents exp_add(const Exponents& u, const Exponents& v);
/// Componentwise difference; requires v <= u componentwise.
Exponents exp_sub(const Exponents& u, const Exponents& v);
bool exp_divides(const Exponents& u, const Exponents& v);  // x^u | x^v
Exponents exp_lcm(const Exponents& u, const Exponents& v);
Exponents exp_scale(const Exponents& u, long long c);
Exponents exp_floor_div(const Exponents& u, long long q);
long long exp_total_degree(const Exponents& u);
inline bool exp_coprime(const Exponents& u, const Exponents& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0 && v[i] > 0) return false;
  return true;
}

}  // namespace sympow

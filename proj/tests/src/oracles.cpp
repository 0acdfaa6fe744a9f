#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sympow::oracles {

namespace {

void monomials_up_to(std::size_t nvars, int budget, Exponents& cur,
                     std::size_t pos, std::vector<Exponents>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur[pos] = e;
    monomials_up_to(nvars, budget - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<Exponents> monomials_of_degree_at_most(std::size_t nvars, int d) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  monomials_up_to(nvars, d, cur, 0, out);
  return out;
}

}  // namespace

bool membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const RingPtr& ring = f.ring();
  const std::uint64_t p = ring->characteristic();
  long long max_gen_deg = 0;
  for (const auto& g : gens)
    max_gen_deg = std::max(max_gen_deg, g.total_degree());
  const long long D = f.total_degree() + max_gen_deg + 2;

  // Column index per monomial of degree <= D, assigned on first sight.
  std::map<Exponents, std::size_t> column;
  auto col = [&](const Exponents& u) {
    auto [it, fresh] = column.emplace(u, column.size());
    (void)fresh;
    return it->second;
  };

  std::vector<std::map<std::size_t, std::uint64_t>> sparse_rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const long long room = D - g.total_degree();
    if (room < 0) continue;
    for (const auto& m :
         monomials_of_degree_at_most(ring->nvars(), static_cast<int>(room))) {
      std::map<std::size_t, std::uint64_t> row;
      for (const auto& [u, c] : g.terms()) row[col(exp_add(m, u))] = c;
      sparse_rows.push_back(std::move(row));
    }
  }
  std::map<std::size_t, std::uint64_t> target;
  for (const auto& [u, c] : f.terms()) target[col(u)] = c;

  const std::size_t ncols = column.size();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(sparse_rows.size());
  for (const auto& sr : sparse_rows) {
    std::vector<std::uint64_t> row(ncols, 0);
    for (const auto& [j, c] : sr) row[j] = c;
    rows.push_back(std::move(row));
  }
  std::vector<std::uint64_t> rhs(ncols, 0);
  for (const auto& [j, c] : target) rhs[j] = c;

  // Row-reduce the generator multiples, then reduce f against the pivots.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < ncols && rank < rows.size(); ++j) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][j] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    const std::uint64_t inv = inv_mod(rows[rank][j], p);
    for (std::size_t l = j; l < ncols; ++l)
      rows[rank][l] = mul_mod(rows[rank][l], inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][j] == 0) continue;
      const std::uint64_t c = rows[i][j];
      for (std::size_t l = j; l < ncols; ++l)
        rows[i][l] = sub_mod(rows[i][l], mul_mod(c, rows[rank][l], p), p);
    }
    pivot_col.push_back(j);
    ++rank;
  }
  for (std::size_t i = 0; i < rank; ++i) {
    const std::uint64_t c = rhs[pivot_col[i]];
    if (c == 0) continue;
    for (std::size_t l = 0; l < ncols; ++l)
      rhs[l] = sub_mod(rhs[l], mul_mod(c, rows[i][l], p), p);
  }
  return std::all_of(rhs.begin(), rhs.end(),
                     [](std::uint64_t c) { return c == 0; });
}

bool fedder_principal(const Polynomial& f) {
  const std::uint64_t p = f.ring()->characteristic();
  const Polynomial g = f.pow(p - 1);
  for (const auto& [u, c] : g.terms()) {
    bool escapes = true;
    for (int e : u)
      if (static_cast<std::uint64_t>(e) >= p) escapes = false;
    if (escapes) return true;
  }
  return false;
}

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

/// Exact rational with long long parts; intermediates go through __int128.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::overflow_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = gcd_ll(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Frac make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("rational overflow");
    Frac f;
    f.num = static_cast<long long>(n);
    f.den = static_cast<long long>(d);
    return f;
  }

  Frac operator+(const Frac& o) const {
    return make(static_cast<__int128>(num) * o.den +
                    static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Frac operator-(const Frac& o) const {
    return make(static_cast<__int128>(num) * o.den -
                    static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Frac operator*(const Frac& o) const {
    return make(static_cast<__int128>(num) * o.num,
                static_cast<__int128>(den) * o.den);
  }
  Frac operator/(const Frac& o) const {
    return make(static_cast<__int128>(num) * o.den,
                static_cast<__int128>(den) * o.num);
  }
  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

/// One linear constraint sum_i coeff[i] * x_i (<= | <) rhs.
struct Constraint {
  std::vector<Frac> coeff;
  Frac rhs;
  bool strict = false;
};

/// Fourier-Motzkin feasibility of a system in `nvars` variables.
bool feasible(std::vector<Constraint> sys, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Constraint> uppers, lowers, rest;
    for (auto& c : sys) {
      const int s = c.coeff[v].sign();
      // Normalize so the eliminated coefficient is +1 or -1.
      if (s != 0) {
        const Frac scale = Frac(s) / c.coeff[v];
        for (auto& a : c.coeff) a = a * scale;
        c.rhs = c.rhs * scale;
      }
      if (s > 0)
        uppers.push_back(std::move(c));
      else if (s < 0)
        lowers.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const auto& up : uppers)
      for (const auto& lo : lowers) {
        Constraint combined;
        combined.coeff.resize(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
          combined.coeff[i] = up.coeff[i] + lo.coeff[i];
        combined.rhs = up.rhs + lo.rhs;
        combined.strict = up.strict || lo.strict;
        rest.push_back(std::move(combined));
      }
    sys = std::move(rest);
  }
  for (const auto& c : sys) {
    const int s = c.rhs.sign();
    if (s < 0 || (s == 0 && c.strict)) return false;
  }
  return true;
}

/// Is w strictly inside t * Newton(gens)? Using that the polyhedron is
/// upward closed, interior membership means some lambda >= 0 with
/// sum lambda = t puts G^T lambda strictly below w in every coordinate.
bool interior_point(const std::vector<Exponents>& gens, const Frac& t,
                    const Exponents& w) {
  const std::size_t r = gens.size();
  const std::size_t n = w.size();
  std::vector<Constraint> sys;
  for (std::size_t i = 0; i < r; ++i) {  // lambda_i >= 0
    Constraint c;
    c.coeff.assign(r, Frac(0));
    c.coeff[i] = Frac(-1);
    c.rhs = Frac(0);
    sys.push_back(std::move(c));
  }
  for (int dir : {1, -1}) {  // sum lambda_i = t as two inequalities
    Constraint c;
    c.coeff.assign(r, Frac(dir));
    c.rhs = dir > 0 ? t : Frac(0) - t;
    sys.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < n; ++j) {  // sum lambda_i gens[i][j] < w_j
    Constraint c;
    c.coeff.assign(r, Frac(0));
    for (std::size_t i = 0; i < r; ++i) c.coeff[i] = Frac(gens[i][j]);
    c.rhs = Frac(w[j]);
    c.strict = true;
    sys.push_back(std::move(c));
  }
  return feasible(std::move(sys), r);
}

}  // namespace

MonomialIdeal howald_tau(const MonomialIdeal& a, long long t_num,
                         long long t_den) {
  if (t_num < 0 || t_den <= 0) throw std::invalid_argument("t must be >= 0");
  if (a.is_zero()) throw std::invalid_argument("tau of the zero ideal");
  if (t_num == 0) return MonomialIdeal::unit(a.ring());
  const std::size_t n = a.ring()->nvars();
  const Frac t(t_num, t_den);

  // Minimal generators v satisfy v_j <= floor(t * max_i g_i[j]) + 1: the j-th
  // interior inequality is automatic beyond that, so larger v_j never helps.
  Exponents box(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    int maxg = 0;
    for (const auto& g : a.gens()) maxg = std::max(maxg, g[j]);
    box[j] = static_cast<int>(t_num * maxg / t_den) + 1;
  }

  std::vector<Exponents> members;
  Exponents v(n, 0);
  while (true) {
    Exponents w = v;
    for (auto& e : w) ++e;
    if (interior_point(a.gens(), t, w)) members.push_back(v);
    std::size_t i = n;
    bool carried = true;
    while (i-- > 0) {
      if (v[i] < box[i]) {
        ++v[i];
        carried = false;
        break;
      }
      v[i] = 0;
    }
    if (carried) break;
  }
  return MonomialIdeal(a.ring(), minimalize(std::move(members)));
}

}  // namespace sympow::oracles

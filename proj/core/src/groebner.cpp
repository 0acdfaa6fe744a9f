#include <algorithm>
#include <set>
#include <stdexcept>

#include "sympow/ideal.hpp"

namespace sympow {

namespace {

// Working polynomial kept sorted by the active order (descending leading
// term at rbegin is awkward; we use greater-than comparator so begin() is
// the leading term).
struct OrderGreater {
  MonomialOrder order;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return order.compare(a, b) > 0;
  }
};
using WorkPoly = std::map<Exponents, std::uint64_t, OrderGreater>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& order) {
  WorkPoly w{OrderGreater{order}};
  for (const auto& [u, c] : f.terms()) w.emplace(u, c);
  return w;
}

Polynomial from_work(const RingPtr& ring, const WorkPoly& w) {
  Polynomial f(ring);
  for (const auto& [u, c] : w) f.add_term(u, c);
  return f;
}

void work_axpy(WorkPoly& w, std::uint64_t scale, const Exponents& shift,
               const Polynomial& g, std::uint64_t p) {
  // w -= scale * x^shift * g
  for (const auto& [u, c] : g.terms()) {
    Exponents v = exp_add(u, shift);
    std::uint64_t sub = mul_mod(scale, c, p);
    auto [it, inserted] = w.try_emplace(std::move(v), 0);
    it->second = sub_mod(it->second, sub, p);
    if (it->second == 0) w.erase(it);
  }
}

struct Reducer {
  const std::vector<Polynomial>& basis;
  std::vector<const Exponents*> lead;
  std::vector<std::uint64_t> lead_coeff;
  MonomialOrder order;
  std::uint64_t p;

  Reducer(const std::vector<Polynomial>& b, const MonomialOrder& o,
          std::uint64_t p)
      : basis(b), order(o), p(p) {
    for (const auto& g : basis) {
      const auto& lt = g.leading(order);
      lead.push_back(&lt.first);
      lead_coeff.push_back(lt.second);
    }
  }

  // Full reduction: returns the normal form of f.
  Polynomial reduce(const Polynomial& f) const {
    WorkPoly work = to_work(f, order);
    Polynomial remainder(f.ring());
    while (!work.empty()) {
      const auto& [u, c] = *work.begin();
      bool reduced = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (exp_divides(*lead[i], u)) {
          std::uint64_t factor = mul_mod(c, inv_mod(lead_coeff[i], p), p);
          work_axpy(work, factor, exp_sub(u, *lead[i]), basis[i], p);
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        remainder.add_term(u, c);
        work.erase(work.begin());
      }
    }
    return remainder;
  }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  const std::uint64_t p = f.ring()->characteristic();
  const auto& [uf, cf] = f.leading(order);
  const auto& [ug, cg] = g.leading(order);
  Exponents l = exp_lcm(uf, ug);
  Polynomial a = f.times_term(exp_sub(l, uf), inv_mod(cf, p));
  Polynomial b = g.times_term(exp_sub(l, ug), inv_mod(cg, p));
  return a - b;
}

struct Pair {
  Exponents lcm;
  long long degree;
  std::size_t i, j;
};

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("ideal needs generators");
  for (const auto& g : gens_)
    if (!same_ring(g.ring(), ring_))
      throw std::invalid_argument("generator ring mismatch");
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
  std::lock_guard<std::mutex> lock(other.cache_mu_);
  cache_ = other.cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
  if (this == &other) return *this;
  ring_ = other.ring_;
  gens_ = other.gens_;
  std::lock_guard<std::mutex> lock(other.cache_mu_);
  cache_ = other.cache_;
  return *this;
}

Ideal::Ideal(Ideal&& other) noexcept
    : ring_(std::move(other.ring_)),
      gens_(std::move(other.gens_)),
      cache_(std::move(other.cache_)) {}

Ideal& Ideal::operator=(Ideal&& other) noexcept {
  ring_ = std::move(other.ring_);
  gens_ = std::move(other.gens_);
  cache_ = std::move(other.cache_);
  return *this;
}

bool Ideal::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_zero(); });
}

bool Ideal::is_unit() const {
  if (is_zero()) return false;
  const GBasis& gb = groebner();
  return gb.elements.size() == 1 && gb.elements[0].is_constant();
}

const GBasis& Ideal::groebner(const MonomialOrder& order) const {
  std::pair<int, int> key{static_cast<int>(order.kind), order.block};
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  const std::uint64_t p = ring_->characteristic();

  // Seed basis: drop zeros, make monic, sort by leading term for
  // determinism under generator permutation.
  std::vector<Polynomial> basis;
  for (const auto& g : gens_)
    if (!g.is_zero()) basis.push_back(g.monic(order));
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              int c = order.compare(a.leading(order).first,
                                    b.leading(order).first);
              if (c != 0) return c < 0;
              return a.terms().size() < b.terms().size();
            });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  GBasis result{order, {}};
  if (basis.empty()) {
    std::lock_guard<std::mutex> lock(cache_mu_);
    return cache_.try_emplace(key, std::move(result)).first->second;
  }

  // Buchberger with normal pair selection (minimal lcm) plus the coprime
  // and chain criteria.
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  auto make_pair = [&](std::size_t i, std::size_t j) {
    Exponents l =
        exp_lcm(basis[i].leading(order).first, basis[j].leading(order).first);
    long long d = exp_total_degree(l);
    return Pair{std::move(l), d, i, j};
  };

  std::vector<Pair> queue;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.push_back(make_pair(i, j));
  std::set<std::pair<std::size_t, std::size_t>> done;

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = std::move(*it);
    queue.erase(it);
    done.insert({pr.i, pr.j});

    const Exponents& li = basis[pr.i].leading(order).first;
    const Exponents& lj = basis[pr.j].leading(order).first;
    if (exp_coprime(li, lj)) continue;  // Buchberger's first criterion
    bool chained = false;               // chain criterion
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!exp_divides(basis[k].leading(order).first, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) &&
          done.count({key2.first, key2.second}))
        chained = true;
    }
    if (chained) continue;

    Reducer red(basis, order, p);
    Polynomial s = red.reduce(s_polynomial(basis[pr.i], basis[pr.j], order));
    if (s.is_zero()) continue;
    basis.push_back(s.monic(order));
    std::size_t j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i) queue.push_back(make_pair(i, j));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Exponents& li = basis[i].leading(order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents& lj = basis[j].leading(order).first;
      if (exp_divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce to the unique reduced basis.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    if (others.empty()) {
      reduced.push_back(minimal[i]);
    } else {
      Reducer red(others, order, p);
      Polynomial r = red.reduce(minimal[i]);
      reduced.push_back(r.monic(order));
    }
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading(order).first,
                                b.leading(order).first);
            });
  result.elements = std::move(reduced);

  std::lock_guard<std::mutex> lock(cache_mu_);
  return cache_.try_emplace(key, std::move(result)).first->second;
}

Polynomial normal_form(const Polynomial& f, const GBasis& basis) {
  if (f.is_zero() || basis.elements.empty()) return f;
  require_same_ring(f, basis.elements.front());
  Reducer red(basis.elements, basis.order,
              f.ring()->characteristic());
  return red.reduce(f);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  require_same_ring(f, g);
  const std::uint64_t p = f.ring()->characteristic();
  MonomialOrder order = MonomialOrder::grevlex();
  const auto& [lg, cg] = g.leading(order);
  std::uint64_t cg_inv = inv_mod(cg, p);

  WorkPoly work = to_work(f, order);
  Polynomial quotient(f.ring());
  while (!work.empty()) {
    const auto& [u, c] = *work.begin();
    if (!exp_divides(lg, u))
      throw std::domain_error("inexact polynomial division");
    Exponents shift = exp_sub(u, lg);
    std::uint64_t factor = mul_mod(c, cg_inv, p);
    quotient.add_term(shift, factor);
    work_axpy(work, factor, shift, g, p);
  }
  return quotient;
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return normal_form(f, ideal.groebner()).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  return std::all_of(
      inner.generators().begin(), inner.generators().end(),
      [&](const Polynomial& g) { return ideal_member(g, outer); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.groebner().elements == b.groebner().elements;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  if (n == 0) return Ideal(a.ring(), {Polynomial::one(a.ring())});
  Ideal r = a;
  for (unsigned i = 1; i < n; ++i) r = ideal_product(r, a);
  return r;
}

namespace {

// Fresh variable prepended at index 0 of a new ring.
RingPtr extend_ring(const RingPtr& ring) {
  std::string fresh = "aux_t";
  while (ring->index_of(fresh) >= 0) fresh += "_";
  std::vector<std::string> vars;
  vars.push_back(fresh);
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return Ring::make(ring->characteristic(), std::move(vars));
}

Polynomial lift(const Polynomial& f, const RingPtr& ext) {
  Polynomial h(ext);
  for (const auto& [u, c] : f.terms()) {
    Exponents v(u.size() + 1, 0);
    std::copy(u.begin(), u.end(), v.begin() + 1);
    h.add_term(v, c);
  }
  return h;
}

Polynomial project(const Polynomial& f, const RingPtr& base) {
  Polynomial h(base);
  for (const auto& [u, c] : f.terms()) {
    if (u[0] != 0)
      throw std::logic_error("projection of a polynomial involving aux var");
    h.add_term(Exponents(u.begin() + 1, u.end()), c);
  }
  return h;
}

bool involves_first_var(const Polynomial& f) {
  for (const auto& [u, c] : f.terms())
    if (u[0] != 0) return true;
  return false;
}

// Elements of the GB free of the first (block-eliminated) variable, mapped
// back down to the base ring.
std::vector<Polynomial> eliminate_first(const Ideal& extended,
                                        const RingPtr& base) {
  const GBasis& gb = extended.groebner(MonomialOrder::block_elim(1));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements)
    if (!involves_first_var(g)) kept.push_back(project(g, base));
  return kept;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("ideal ring mismatch");
  if (a.is_zero() || b.is_zero())
    return Ideal(a.ring(), {Polynomial::zero(a.ring())});

  RingPtr ext = extend_ring(a.ring());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    if (!f.is_zero()) gens.push_back(t * lift(f, ext));
  for (const auto& g : b.generators())
    if (!g.is_zero()) gens.push_back(one_minus_t * lift(g, ext));

  std::vector<Polynomial> kept =
      eliminate_first(Ideal(ext, std::move(gens)), a.ring());
  if (kept.empty()) kept.push_back(Polynomial::zero(a.ring()));
  return Ideal(a.ring(), std::move(kept));
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& divisor) {
  if (!same_ring(ideal.ring(), divisor.ring()))
    throw std::invalid_argument("ideal ring mismatch");
  if (divisor.is_zero())
    throw std::invalid_argument("colon by the zero ideal");

  bool first = true;
  Ideal result(ideal.ring(), {Polynomial::one(ideal.ring())});
  for (const auto& f : divisor.generators()) {
    if (f.is_zero()) continue;
    Ideal meet = ideal_intersect(ideal, Ideal(ideal.ring(), {f}));
    std::vector<Polynomial> quotients;
    for (const auto& g : meet.generators())
      quotients.push_back(g.is_zero() ? g : divide_exact(g, f));
    Ideal part(ideal.ring(), std::move(quotients));
    result = first ? part : ideal_intersect(result, part);
    first = false;
  }
  return result;
}

Ideal ideal_saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  RingPtr ext = extend_ring(ideal.ring());
  Polynomial z = Polynomial::variable(ext, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(lift(g, ext));
  gens.push_back(z * lift(f, ext) - Polynomial::one(ext));

  std::vector<Polynomial> kept =
      eliminate_first(Ideal(ext, std::move(gens)), ideal.ring());
  if (kept.empty()) kept.push_back(Polynomial::zero(ideal.ring()));
  return Ideal(ideal.ring(), std::move(kept));
}

}  // namespace sympow

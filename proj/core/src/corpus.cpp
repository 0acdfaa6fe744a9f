#include "sympow/corpus.hpp"

#include <algorithm>

namespace sympow {

namespace {

std::vector<Exponents> subset_to_exponents(std::size_t nvars, unsigned mask) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i)
    if (mask & (1u << i)) e[i] = 1;
  out.push_back(std::move(e));
  return out;
}

bool subset_of(unsigned a, unsigned b) { return (a & ~b) == 0; }

}  // namespace

std::vector<SquarefreeIdeal> all_squarefree_ideals(const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  if (n > 4)
    throw std::invalid_argument(
        "exhaustive squarefree enumeration supported for n <= 4");
  const unsigned nsubsets = (1u << n) - 1;  // nonempty variable subsets

  std::vector<SquarefreeIdeal> out;
  // A squarefree ideal is a nonempty antichain of nonempty supports.
  for (unsigned long long pick = 1; pick < (1ull << nsubsets); ++pick) {
    std::vector<unsigned> chosen;
    for (unsigned s = 1; s <= nsubsets; ++s)
      if (pick & (1ull << (s - 1))) chosen.push_back(s);
    bool antichain = true;
    for (std::size_t i = 0; i < chosen.size() && antichain; ++i)
      for (std::size_t j = 0; j < chosen.size() && antichain; ++j)
        if (i != j && subset_of(chosen[i], chosen[j])) antichain = false;
    if (!antichain) continue;

    std::vector<Exponents> gens;
    for (unsigned s : chosen) {
      auto e = subset_to_exponents(n, s);
      gens.push_back(std::move(e.front()));
    }
    out.emplace_back(ring, std::move(gens));
  }
  return out;
}

std::vector<SquarefreeIdeal> edge_ideals(const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  std::vector<std::pair<int, int>> all_edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      all_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));

  std::vector<SquarefreeIdeal> out;
  for (unsigned long long mask = 1; mask < (1ull << all_edges.size()); ++mask) {
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      if (!(mask & (1ull << i))) continue;
      Exponents e(n, 0);
      e[static_cast<std::size_t>(all_edges[i].first)] = 1;
      e[static_cast<std::size_t>(all_edges[i].second)] = 1;
      gens.push_back(std::move(e));
    }
    out.emplace_back(ring, std::move(gens));
  }
  return out;
}

std::vector<SquarefreeIdeal> unmixed_height2_ideals(const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  std::vector<std::pair<int, int>> all_edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      all_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));

  std::vector<SquarefreeIdeal> out;
  for (unsigned long long mask = 1; mask < (1ull << all_edges.size()); ++mask) {
    MonomialIdeal meet = MonomialIdeal::unit(ring);
    bool first = true;
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      if (!(mask & (1ull << i))) continue;
      Exponents ea(n, 0), eb(n, 0);
      ea[static_cast<std::size_t>(all_edges[i].first)] = 1;
      eb[static_cast<std::size_t>(all_edges[i].second)] = 1;
      MonomialIdeal prime(ring, {ea, eb});
      meet = first ? prime : meet.intersect(prime);
      first = false;
    }
    out.emplace_back(ring, meet.gens());
  }
  return out;
}

std::vector<SquarefreeIdeal> filter_corpus(
    std::vector<SquarefreeIdeal> corpus,
    const std::function<bool(const SquarefreeIdeal&)>& keep) {
  std::vector<SquarefreeIdeal> out;
  for (auto& ideal : corpus)
    if (keep(ideal)) out.push_back(std::move(ideal));
  return out;
}

}  // namespace sympow

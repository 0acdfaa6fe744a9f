#pragma once

#include <functional>
#include <vector>

#include "sympow/squarefree.hpp"

namespace sympow {

/// All proper squarefree monomial ideals on the ring's variables: one per
/// nonempty antichain of nonempty variable subsets. Exhaustive and
/// duplicate-free; intended for n <= 4.
std::vector<SquarefreeIdeal> all_squarefree_ideals(const RingPtr& ring);

/// Edge ideals (x_a x_b : ab ∈ E) of all graphs with at least one edge.
std::vector<SquarefreeIdeal> edge_ideals(const RingPtr& ring);

/// Cover ideals ∩_{ab ∈ E} (x_a, x_b) of all graphs with at least one
/// edge: exactly the unmixed height-2 squarefree ideals.
std::vector<SquarefreeIdeal> unmixed_height2_ideals(const RingPtr& ring);

std::vector<SquarefreeIdeal> filter_corpus(
    std::vector<SquarefreeIdeal> corpus,
    const std::function<bool(const SquarefreeIdeal&)>& keep);

}  // namespace sympow

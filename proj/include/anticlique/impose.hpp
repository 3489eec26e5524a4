#pragma once

#include "anticlique/row.hpp"

#include <variant>

namespace anticlique {

struct Unchanged {};

struct Mutated {
  Row row;
};

/// The two disjoint halves of a split: position t is Zero in zero_son and
/// One in one_son.
struct Split {
  Row zero_son;
  Row one_son;
};

using ImpositionOutcome = std::variant<Unchanged, Mutated, Split>;

/**
 * Impose the anti-implication t -> not-B on a row.
 *
 * The outcome denotes exactly {X in r : t in X implies B ∩ X = ∅}. The
 * symbol at t must be 0, 2 or an anticonclusion; a premise or a 1 there
 * means the caller broke increasing-order processing and throws
 * std::logic_error. No position other than t receives a premise or a 1.
 *
 * Dispatch on the symbol at t and the symbols found on B:
 *   0, or B all 0 (B empty included)      -> unchanged
 *   2, a 1 on B                           -> t := 0
 *   2, B only 0/2                         -> t becomes a new premise over the 2's of B
 *   2, no 1, some premise/anti on B       -> split
 *   anti of h, a 1 on B                   -> t := 0, t leaves h
 *   anti of h, no 1 on B                  -> split
 */
ImpositionOutcome impose(const Row& row, Vertex t, const VertexSet& neighbors);

}  // namespace anticlique

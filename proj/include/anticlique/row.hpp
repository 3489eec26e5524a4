#pragma once

#include "anticlique/polynomial.hpp"
#include "anticlique/types.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace anticlique {

enum class Symbol : std::uint8_t { zero, one, two, prem, anti };

/// One anti-implication residue inside a row: prem in X forces every anti
/// position out of X.
struct Group {
  int id;
  Vertex prem;
  VertexSet anti;  ///< non-empty, sorted, excludes prem
};

/**
 * 5-valued row over positions 1..v, denoting a family of vertex subsets.
 *
 * X is a member iff ones ⊆ X, X ∩ zeros = ∅ and, for every group g,
 * prem(g) ∈ X implies anti(g) ∩ X = ∅. Twos are unconstrained.
 *
 * Rows are plain values. Each row owns its group table; group ids are
 * allocated from a per-row counter and never reused while the row and its
 * copies live.
 */
class Row {
public:
  /// (2,2,...,2) with no groups and pending index 0. Throws ConfigError on v < 1.
  static Row full(int v);

  /// Parse the debug form, e.g. "(a1,0,2,b1,b1)". Throws ConfigError if the
  /// text is malformed or the groups are inconsistent.
  static Row parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(cells_.size()); }

  Symbol symbol(Vertex p) const { return cells_.at(index(p)).symbol; }

  /// Group id at a prem/anti position, -1 elsewhere.
  int group_at(Vertex p) const { return cells_.at(index(p)).group; }

  /// Groups sorted by id.
  const std::vector<Group>& groups() const noexcept { return groups_; }
  const Group& group(int id) const;

  /// Index of the next pending anti-implication in the imposition order.
  std::size_t pending() const noexcept { return pending_; }
  void set_pending(std::size_t pa) noexcept { pending_ = pa; }

  VertexSet zeros() const { return positions_of(Symbol::zero); }
  VertexSet ones() const { return positions_of(Symbol::one); }
  VertexSet twos() const { return positions_of(Symbol::two); }
  VertexSet premset() const { return positions_of(Symbol::prem); }
  /// Anti set of the group whose premise sits at position k.
  const VertexSet& anticonc(Vertex k) const;

  std::size_t zero_count() const noexcept { return zero_count_; }

  /// max |X| over members: v - |zeros| - |premset|.
  int w_max() const noexcept {
    return size() - static_cast<int>(zero_count_) - static_cast<int>(groups_.size());
  }

  /// Number of members: 2^|twos| * prod over groups (1 + 2^|anti|).
  BigInt member_count() const;

  /// Size distribution of the members:
  /// x^|ones| (1+x)^|twos| prod over groups (x + (1+x)^|anti|).
  Polynomial spectrum() const;

  /// V - zeros - premset, a maximum-cardinality member.
  VertexSet max_member() const;

  bool contains(const VertexSet& x) const;

  /// Every member of size >= min_size, once each. Depth-first: the twos in
  /// ascending position (out before in), then the groups in id order (prem in
  /// first, then the anti subsets in binary counting order).
  void expand(int min_size, const std::function<void(const VertexSet&)>& emit) const;
  std::vector<VertexSet> expand(int min_size = 0) const;

  /// Upper bound on weight(X) over members, exact for positive weights:
  /// sum over ones and twos plus, per group, max(w(prem), w(anti)).
  /// `weights[p - 1]` is the weight of position p.
  std::int64_t weighted_bound(const std::vector<std::int64_t>& weights) const;

  /// A member attaining weighted_bound; ties within a group keep the anti set.
  VertexSet weighted_max_member(const std::vector<std::int64_t>& weights) const;

  // Editing primitives used by the imposition engine. Each keeps the
  // symbol/group tables consistent; misuse throws std::logic_error.

  /// Write Zero, One or Two on a position that belongs to no group.
  void set_free(Vertex p, Symbol s);

  /// New group; prem and every anti position must currently be Two.
  int create_group(Vertex prem, VertexSet anti);

  /// Remove anti position p from its group and write `s` (Zero/One/Two) there.
  /// A group left without anti positions is dissolved and its prem becomes Two.
  void detach_anti(Vertex p, Symbol s);

  /// Delete a group, writing `prem_to` on its premise and `anti_to` on each
  /// anti position.
  void dissolve_group(int id, Symbol prem_to, Symbol anti_to);

  /// Throws std::logic_error describing the first broken invariant.
  void check_invariants() const;

  /// "(a1,0,2,b1,b1)"
  std::string to_string() const;

  friend bool operator==(const Row& a, const Row& b);

private:
  struct Cell {
    Symbol symbol = Symbol::two;
    int group = -1;
  };

  explicit Row(int v);

  std::size_t index(Vertex p) const {
    if (p < 1 || p > size()) throw std::out_of_range("row position " + std::to_string(p));
    return static_cast<std::size_t>(p - 1);
  }
  std::size_t group_slot(int id) const;
  VertexSet positions_of(Symbol s) const;
  void write(Vertex p, Symbol s, int group);

  std::vector<Cell> cells_;
  std::vector<Group> groups_;
  int next_group_id_ = 1;
  std::size_t zero_count_ = 0;
  std::size_t pending_ = 0;
};

}  // namespace anticlique

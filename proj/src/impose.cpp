#include "anticlique/impose.hpp"

namespace anticlique {

namespace {

// Force every B-position out of X, propagating into the groups met on B: a
// premise on B frees its anticonclusion, an anticonclusion emptied by B
// frees its premise.
void zero_out(Row& row, const VertexSet& neighbors) {
  for (Vertex p : neighbors) {
    switch (row.symbol(p)) {
      case Symbol::zero: break;
      case Symbol::two: row.set_free(p, Symbol::zero); break;
      case Symbol::prem: row.dissolve_group(row.group_at(p), Symbol::zero, Symbol::two); break;
      case Symbol::anti: row.detach_anti(p, Symbol::zero); break;
      case Symbol::one: throw std::logic_error("zero_out met a 1 on the neighbourhood");
    }
  }
}

}  // namespace

ImpositionOutcome impose(const Row& row, Vertex t, const VertexSet& neighbors) {
  const Symbol rho = row.symbol(t);
  if (rho == Symbol::prem || rho == Symbol::one)
    throw std::logic_error("impose at " + std::to_string(t) + " on " + row.to_string() +
                           ": position already holds a premise or a 1");

  bool has_one = false, all_zero = true, has_group = false;
  for (Vertex p : neighbors) {
    const Symbol s = row.symbol(p);
    has_one |= s == Symbol::one;
    all_zero &= s == Symbol::zero;
    has_group |= s == Symbol::prem || s == Symbol::anti;
  }

  if (rho == Symbol::zero || all_zero) return Unchanged{};

  if (rho == Symbol::two) {
    Row out = row;
    if (has_one) {
      out.set_free(t, Symbol::zero);
      return Mutated{std::move(out)};
    }
    if (!has_group) {
      VertexSet anti;
      for (Vertex p : neighbors)
        if (row.symbol(p) == Symbol::two) anti.push_back(p);
      out.create_group(t, std::move(anti));
      return Mutated{std::move(out)};
    }
    Row one_son = row;
    out.set_free(t, Symbol::zero);
    one_son.set_free(t, Symbol::one);
    zero_out(one_son, neighbors);
    return Split{std::move(out), std::move(one_son)};
  }

  // rho is an anticonclusion position of group h.
  Row zero_son = row;
  zero_son.detach_anti(t, Symbol::zero);
  if (has_one) return Mutated{std::move(zero_son)};

  Row one_son = row;
  one_son.dissolve_group(row.group_at(t), Symbol::zero, Symbol::two);
  one_son.set_free(t, Symbol::one);
  zero_out(one_son, neighbors);
  return Split{std::move(zero_son), std::move(one_son)};
}

}  // namespace anticlique

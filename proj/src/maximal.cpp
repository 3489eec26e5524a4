#include "anticlique/maximal.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace anticlique {

std::vector<VertexSet> row_maximal_members(const Row& row) {
  VertexSet base = row.ones();
  const VertexSet twos = row.twos();
  base.insert(base.end(), twos.begin(), twos.end());

  const auto& groups = row.groups();
  if (groups.size() >= 63) throw std::length_error("too many groups to list row-wise maximal members");
  std::vector<VertexSet> out;
  const std::uint64_t combos = std::uint64_t{1} << groups.size();
  out.reserve(combos);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    VertexSet x = base;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      // bit set: take the anticonclusion; the last group varies fastest
      const bool take_anti = mask >> (groups.size() - 1 - i) & 1U;
      if (take_anti)
        x.insert(x.end(), groups[i].anti.begin(), groups[i].anti.end());
      else
        x.push_back(groups[i].prem);
    }
    std::sort(x.begin(), x.end());
    out.push_back(std::move(x));
  }
  return out;
}

ContainIndex::ContainIndex(int v) : v_(v), contain_(static_cast<std::size_t>(v)) {}

bool ContainIndex::offer(const VertexSet& x) {
  if (x.empty()) {
    if (live_.any()) {
      ++dominated_;
      return false;
    }
  } else {
    Bits supersets = live_;
    for (Vertex a : x) {
      supersets &= contain_.at(static_cast<std::size_t>(a - 1));
      if (supersets.none()) break;
    }
    if (supersets.any()) {
      ++dominated_;
      return false;
    }

    // Live sets avoiding every vertex outside x are subsets of x.
    Bits outside(live_.size());
    std::size_t j = 0;
    for (Vertex a = 1; a <= v_; ++a) {
      if (j < x.size() && x[j] == a) {
        ++j;
        continue;
      }
      outside |= contain_[static_cast<std::size_t>(a - 1)];
    }
    Bits subsets = live_ - outside;
    for (auto i = subsets.find_first(); i != Bits::npos; i = subsets.find_next(i)) {
      live_.reset(i);
      for (Vertex a : pile_[i]) contain_[static_cast<std::size_t>(a - 1)].reset(i);
      ++evicted_;
    }
  }

  const std::size_t index = pile_.size();
  pile_.push_back(x);
  live_.push_back(true);
  for (auto& bits : contain_) bits.push_back(false);
  for (Vertex a : x) contain_[static_cast<std::size_t>(a - 1)].set(index);
  return true;
}

std::vector<VertexSet> ContainIndex::sets() const {
  std::vector<VertexSet> out;
  for (auto i = live_.find_first(); i != Bits::npos; i = live_.find_next(i)) out.push_back(pile_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> sieve_maximal(const std::vector<VertexSet>& sets, int v) {
  ContainIndex index(v);
  for (const auto& x : sets) index.offer(x);
  return index.sets();
}

MaximalResult maximal_anticliques(const Graph& g) {
  MaximalResult result;
  ContainIndex index(g.vertex_count());
  result.stats = run_standard(g, [&](const Row& r) {
    for (const auto& x : row_maximal_members(r)) {
      ++result.candidates;
      index.offer(x);
    }
  });
  result.sets = index.sets();
  result.cross_row_dominations = index.dominated() + index.evicted();
  return result;
}

namespace {

using Mask = std::uint64_t;

VertexSet to_set(Mask m) {
  VertexSet out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i + 1);
  return out;
}

class CoverSearch {
public:
  CoverSearch(int v, std::vector<Mask> candidates) : v_(v), candidates_(std::move(candidates)) {
    covering_.resize(static_cast<std::size_t>(v));
    for (std::size_t c = 0; c < candidates_.size(); ++c)
      for (int y = 0; y < v; ++y)
        if (candidates_[c] >> y & 1U) covering_[static_cast<std::size_t>(y)].push_back(c);
  }

  std::vector<Mask> solve() {
    const Mask all = v_ == 64 ? ~Mask{0} : (Mask{1} << v_) - 1;
    best_size_ = std::numeric_limits<std::size_t>::max();
    dfs(all);
    return best_;
  }

private:
  void dfs(Mask uncovered) {
    if (!uncovered) {
      if (chosen_.size() < best_size_) {
        best_size_ = chosen_.size();
        best_ = chosen_;
      }
      return;
    }
    int widest = 0;
    for (Mask c : candidates_) widest = std::max(widest, std::popcount(c & uncovered));
    const std::size_t need = (static_cast<std::size_t>(std::popcount(uncovered)) + widest - 1) / widest;
    if (chosen_.size() + need >= best_size_) return;

    int pick = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (int y = 0; y < v_; ++y)
      if ((uncovered >> y & 1U) && covering_[static_cast<std::size_t>(y)].size() < fewest) {
        fewest = covering_[static_cast<std::size_t>(y)].size();
        pick = y;
      }
    for (std::size_t c : covering_[static_cast<std::size_t>(pick)]) {
      chosen_.push_back(candidates_[c]);
      dfs(uncovered & ~candidates_[c]);
      chosen_.pop_back();
    }
  }

  int v_;
  std::vector<Mask> candidates_;            // lexicographic order of the vertex sets
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_;
  std::size_t best_size_ = 0;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, int max_vertices) {
  const int v = g.vertex_count();
  if (v > std::min(max_vertices, 64))
    throw GuardError("chromatic number refused: " + std::to_string(v) + " vertices exceeds the guard of " +
                     std::to_string(std::min(max_vertices, 64)));

  std::vector<VertexSet> sets;
  run_standard(g, [&](const Row& r) {
    for (auto& x : row_maximal_members(r)) sets.push_back(std::move(x));
  });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& x : sets) {
    Mask m = 0;
    for (Vertex y : x) m |= Mask{1} << (y - 1);
    masks.push_back(m);
  }

  ChromaticResult result;
  for (Mask m : CoverSearch(v, std::move(masks)).solve()) result.cover.push_back(to_set(m));
  result.chi = static_cast<int>(result.cover.size());
  return result;
}

}  // namespace anticlique

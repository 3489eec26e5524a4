#include "anticlique/row.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace anticlique {

Row::Row(int v) : cells_(static_cast<std::size_t>(v)) {}

Row Row::full(int v) {
  if (v < 1) throw ConfigError("a row needs at least one position");
  return Row(v);
}

Row Row::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> ConfigError {
    return ConfigError("bad row '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw fail("expected parentheses");
  text = text.substr(1, text.size() - 2);

  std::vector<std::string_view> tokens;
  while (true) {
    auto comma = text.find(',');
    tokens.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }

  Row row(static_cast<int>(tokens.size()));
  if (tokens.empty() || row.size() < 1) throw fail("empty row");
  std::map<int, Vertex> prem_of;
  std::map<int, VertexSet> anti_of;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto tok = tokens[i];
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Vertex p = static_cast<Vertex>(i + 1);
    if (tok == "0") {
      row.write(p, Symbol::zero, -1);
    } else if (tok == "1") {
      row.write(p, Symbol::one, -1);
    } else if (tok == "2") {
      row.write(p, Symbol::two, -1);
    } else if (tok.size() >= 2 && (tok[0] == 'a' || tok[0] == 'b')) {
      int id = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), id);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || id < 1) throw fail("bad group label");
      if (tok[0] == 'a') {
        if (prem_of.count(id)) throw fail("group " + std::to_string(id) + " has two premises");
        prem_of[id] = p;
      } else {
        anti_of[id].push_back(p);
      }
    } else {
      throw fail("unknown symbol '" + std::string(tok) + "'");
    }
  }
  for (auto& [id, anti] : anti_of)
    if (!prem_of.count(id)) throw fail("group " + std::to_string(id) + " has no premise");
  for (auto& [id, prem] : prem_of) {
    auto it = anti_of.find(id);
    if (it == anti_of.end()) throw fail("group " + std::to_string(id) + " has an empty anticonclusion");
    row.groups_.push_back(Group{id, prem, it->second});
    row.write(prem, Symbol::prem, id);
    for (Vertex q : it->second) row.write(q, Symbol::anti, id);
    row.next_group_id_ = std::max(row.next_group_id_, id + 1);
  }
  return row;
}

std::size_t Row::group_slot(int id) const {
  auto it = std::lower_bound(groups_.begin(), groups_.end(), id, [](const Group& g, int key) { return g.id < key; });
  if (it == groups_.end() || it->id != id) throw std::logic_error("row has no group " + std::to_string(id));
  return static_cast<std::size_t>(it - groups_.begin());
}

const Group& Row::group(int id) const { return groups_[group_slot(id)]; }

const VertexSet& Row::anticonc(Vertex k) const {
  if (symbol(k) != Symbol::prem) throw std::invalid_argument("position " + std::to_string(k) + " holds no premise");
  return group(group_at(k)).anti;
}

VertexSet Row::positions_of(Symbol s) const {
  VertexSet out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].symbol == s) out.push_back(static_cast<Vertex>(i + 1));
  return out;
}

void Row::write(Vertex p, Symbol s, int group) {
  auto& cell = cells_[index(p)];
  if (cell.symbol == Symbol::zero) --zero_count_;
  if (s == Symbol::zero) ++zero_count_;
  cell.symbol = s;
  cell.group = group;
}

BigInt Row::member_count() const {
  BigInt count = 1;
  count <<= static_cast<unsigned>(std::count_if(cells_.begin(), cells_.end(),
                                                [](const Cell& c) { return c.symbol == Symbol::two; }));
  for (const auto& g : groups_) {
    BigInt factor = 1;
    factor <<= static_cast<unsigned>(g.anti.size());
    count *= factor + 1;
  }
  return count;
}

Polynomial Row::spectrum() const {
  std::size_t ones = 0, twos = 0;
  for (const auto& c : cells_) {
    if (c.symbol == Symbol::one) ++ones;
    if (c.symbol == Symbol::two) ++twos;
  }
  Polynomial result = Polynomial::monomial(ones) * Polynomial::binomial(twos);
  for (const auto& g : groups_) result = result * (Polynomial::monomial(1) + Polynomial::binomial(g.anti.size()));
  return result;
}

VertexSet Row::max_member() const {
  VertexSet out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].symbol != Symbol::zero && cells_[i].symbol != Symbol::prem) out.push_back(static_cast<Vertex>(i + 1));
  return out;
}

bool Row::contains(const VertexSet& x) const {
  std::vector<bool> in(cells_.size() + 1, false);
  for (Vertex p : x) in[index(p) + 1] = true;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].symbol == Symbol::zero && in[i + 1]) return false;
    if (cells_[i].symbol == Symbol::one && !in[i + 1]) return false;
  }
  for (const auto& g : groups_)
    if (in[g.prem] && std::any_of(g.anti.begin(), g.anti.end(), [&](Vertex q) { return in[q]; })) return false;
  return true;
}

namespace {

// One independent choice point of a row during expansion.
struct Unit {
  bool is_group;
  Vertex prem;     // group premise, or the free position itself
  VertexSet anti;  // empty for a free position
  int max_gain;    // largest number of vertices this unit can contribute
};

void expand_units(const std::vector<Unit>& units, std::size_t at, int remaining_gain, int min_size, VertexSet& current,
                  const std::function<void(const VertexSet&)>& emit) {
  if (static_cast<int>(current.size()) + remaining_gain < min_size) return;
  if (at == units.size()) {
    VertexSet out = current;
    std::sort(out.begin(), out.end());
    emit(out);
    return;
  }
  const Unit& u = units[at];
  const int rest = remaining_gain - u.max_gain;
  if (!u.is_group) {
    expand_units(units, at + 1, rest, min_size, current, emit);
    current.push_back(u.prem);
    expand_units(units, at + 1, rest, min_size, current, emit);
    current.pop_back();
    return;
  }
  current.push_back(u.prem);
  expand_units(units, at + 1, rest, min_size, current, emit);
  current.pop_back();
  const std::size_t beta = u.anti.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << beta); ++mask) {
    std::size_t pushed = 0;
    for (std::size_t i = 0; i < beta; ++i)
      if (mask >> i & 1U) {
        current.push_back(u.anti[i]);
        ++pushed;
      }
    expand_units(units, at + 1, rest, min_size, current, emit);
    current.resize(current.size() - pushed);
  }
}

}  // namespace

void Row::expand(int min_size, const std::function<void(const VertexSet&)>& emit) const {
  std::vector<Unit> units;
  VertexSet current;
  int gain = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].symbol == Symbol::one) current.push_back(static_cast<Vertex>(i + 1));
    if (cells_[i].symbol == Symbol::two) {
      units.push_back(Unit{false, static_cast<Vertex>(i + 1), {}, 1});
      ++gain;
    }
  }
  for (const auto& g : groups_) {
    if (g.anti.size() >= 63) throw std::length_error("anticonclusion too long to expand");
    int max_gain = std::max<int>(1, static_cast<int>(g.anti.size()));
    units.push_back(Unit{true, g.prem, g.anti, max_gain});
    gain += max_gain;
  }
  expand_units(units, 0, gain, min_size, current, emit);
}

std::vector<VertexSet> Row::expand(int min_size) const {
  std::vector<VertexSet> out;
  expand(min_size, [&](const VertexSet& x) { out.push_back(x); });
  return out;
}

std::int64_t Row::weighted_bound(const std::vector<std::int64_t>& weights) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].symbol == Symbol::one || cells_[i].symbol == Symbol::two) total += weights.at(i);
  for (const auto& g : groups_) {
    std::int64_t anti = 0;
    for (Vertex q : g.anti) anti += weights.at(static_cast<std::size_t>(q - 1));
    total += std::max(weights.at(static_cast<std::size_t>(g.prem - 1)), anti);
  }
  return total;
}

VertexSet Row::weighted_max_member(const std::vector<std::int64_t>& weights) const {
  VertexSet out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].symbol == Symbol::one || cells_[i].symbol == Symbol::two) out.push_back(static_cast<Vertex>(i + 1));
  for (const auto& g : groups_) {
    std::int64_t anti = 0;
    for (Vertex q : g.anti) anti += weights.at(static_cast<std::size_t>(q - 1));
    if (weights.at(static_cast<std::size_t>(g.prem - 1)) > anti)
      out.push_back(g.prem);
    else
      out.insert(out.end(), g.anti.begin(), g.anti.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Row::set_free(Vertex p, Symbol s) {
  if (s != Symbol::zero && s != Symbol::one && s != Symbol::two)
    throw std::logic_error("set_free only writes 0, 1 or 2");
  if (cells_[index(p)].group != -1)
    throw std::logic_error("position " + std::to_string(p) + " belongs to a group");
  write(p, s, -1);
}

int Row::create_group(Vertex prem, VertexSet anti) {
  if (anti.empty()) throw std::logic_error("group needs a non-empty anticonclusion");
  std::sort(anti.begin(), anti.end());
  if (symbol(prem) != Symbol::two) throw std::logic_error("group premise must sit on a 2");
  for (Vertex q : anti)
    if (q == prem || symbol(q) != Symbol::two) throw std::logic_error("anticonclusion must sit on 2's");
  const int id = next_group_id_++;
  write(prem, Symbol::prem, id);
  for (Vertex q : anti) write(q, Symbol::anti, id);
  groups_.push_back(Group{id, prem, std::move(anti)});
  return id;
}

void Row::detach_anti(Vertex p, Symbol s) {
  if (symbol(p) != Symbol::anti) throw std::logic_error("position " + std::to_string(p) + " is not an anticonclusion");
  const std::size_t slot = group_slot(group_at(p));
  auto& anti = groups_[slot].anti;
  anti.erase(std::lower_bound(anti.begin(), anti.end(), p));
  write(p, Symbol::two, -1);
  set_free(p, s);
  if (anti.empty()) {
    write(groups_[slot].prem, Symbol::two, -1);
    groups_.erase(groups_.begin() + static_cast<long>(slot));
  }
}

void Row::dissolve_group(int id, Symbol prem_to, Symbol anti_to) {
  const std::size_t slot = group_slot(id);
  Group g = std::move(groups_[slot]);
  groups_.erase(groups_.begin() + static_cast<long>(slot));
  write(g.prem, Symbol::two, -1);
  set_free(g.prem, prem_to);
  for (Vertex q : g.anti) {
    write(q, Symbol::two, -1);
    set_free(q, anti_to);
  }
}

void Row::check_invariants() const {
  auto fail = [&](const std::string& why) { throw std::logic_error("row " + to_string() + ": " + why); };
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& c = cells_[i];
    const Vertex p = static_cast<Vertex>(i + 1);
    if (c.symbol == Symbol::zero) ++zeros;
    const bool grouped = c.symbol == Symbol::prem || c.symbol == Symbol::anti;
    if (grouped != (c.group != -1)) fail("group tag mismatch at " + std::to_string(p));
    if (!grouped) continue;
    const auto& g = group(c.group);
    if (c.symbol == Symbol::prem && g.prem != p) fail("premise mismatch at " + std::to_string(p));
    if (c.symbol == Symbol::anti && !std::binary_search(g.anti.begin(), g.anti.end(), p))
      fail("anticonclusion mismatch at " + std::to_string(p));
  }
  if (zeros != zero_count_) fail("stale zero count");
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    const auto& g = groups_[i];
    if (i && groups_[i - 1].id >= g.id) fail("groups out of id order");
    if (g.id >= next_group_id_) fail("group id ahead of allocator");
    if (g.anti.empty()) fail("empty anticonclusion in group " + std::to_string(g.id));
    if (!std::is_sorted(g.anti.begin(), g.anti.end())) fail("unsorted anticonclusion");
    if (group_at(g.prem) != g.id || symbol(g.prem) != Symbol::prem) fail("premise not marked");
    for (Vertex q : g.anti)
      if (group_at(q) != g.id || symbol(q) != Symbol::anti) fail("anticonclusion not marked");
  }
}

std::string Row::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) out += ",";
    switch (cells_[i].symbol) {
      case Symbol::zero: out += "0"; break;
      case Symbol::one: out += "1"; break;
      case Symbol::two: out += "2"; break;
      case Symbol::prem: out += "a" + std::to_string(cells_[i].group); break;
      case Symbol::anti: out += "b" + std::to_string(cells_[i].group); break;
    }
  }
  return out + ")";
}

// Structural equality: same symbols, same premise/anticonclusion pairing.
// Group ids and the pending index are ignored.
bool operator==(const Row& a, const Row& b) {
  if (a.cells_.size() != b.cells_.size() || a.groups_.size() != b.groups_.size()) return false;
  for (std::size_t i = 0; i < a.cells_.size(); ++i)
    if (a.cells_[i].symbol != b.cells_[i].symbol) return false;
  for (const auto& g : a.groups_) {
    const auto& h = b.group(b.group_at(g.prem));
    if (h.anti != g.anti) return false;
  }
  return true;
}

}  // namespace anticlique

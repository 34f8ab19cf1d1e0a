#include "covsim/lts.hpp"

#include <algorithm>
#include <numeric>

#include "covsim/error.hpp"

namespace covsim {

const std::string& Lts::name(StateId s) const {
  check_state(s);
  return names_[s];
}

std::optional<StateId> Lts::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

void Lts::check_state(StateId p) const {
  if (p >= names_.size()) throw InvalidSystem("unknown state #" + std::to_string(p));
}

std::span<const StateId> Lts::successors(StateId p, ActionId a) const {
  check_state(p);
  if (a >= alphabet_.size()) throw InvalidSystem("unknown action #" + std::to_string(a));
  return successors_[p * alphabet_.size() + a];
}

std::vector<ActionId> Lts::initials(StateId p) const {
  check_state(p);
  std::vector<ActionId> out;
  for (ActionId a = 0; a < alphabet_.size(); ++a)
    if (!successors_[p * alphabet_.size() + a].empty()) out.push_back(a);
  return out;
}

std::vector<Transition> Lts::transitions() const {
  std::vector<Transition> out;
  const auto width = alphabet_.size();
  for (StateId p = 0; p < names_.size(); ++p)
    for (ActionId a = 0; a < width; ++a)
      for (StateId t : successors_[p * width + a]) out.push_back({p, a, t});
  return out;
}

std::size_t Lts::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : successors_) n += s.size();
  return n;
}

Lts build_lts(Alphabet alphabet, std::vector<std::string> states,
              std::vector<Transition> transitions) {
  const auto n = states.size();
  for (const auto& t : transitions) {
    if (t.source >= n || t.target >= n)
      throw InvalidSystem("transition endpoint out of range");
    if (t.action >= alphabet.size()) throw InvalidSystem("transition label out of range");
  }

  std::vector<StateId> order(n);
  std::iota(order.begin(), order.end(), StateId{0});
  std::sort(order.begin(), order.end(),
            [&](StateId x, StateId y) { return states[x] < states[y]; });
  std::vector<StateId> rank(n);
  for (StateId i = 0; i < n; ++i) rank[order[i]] = i;

  Lts lts;
  lts.names_.reserve(n);
  for (StateId i = 0; i < n; ++i) {
    auto& name = states[order[i]];
    if (name.empty()) throw InvalidSystem("empty state name");
    if (!lts.names_.empty() && lts.names_.back() == name)
      throw InvalidSystem("duplicate state '" + name + "'");
    lts.names_.push_back(std::move(name));
  }

  const auto width = alphabet.size();
  lts.successors_.resize(n * width);
  for (const auto& t : transitions)
    lts.successors_[rank[t.source] * width + t.action].push_back(rank[t.target]);
  for (auto& succ : lts.successors_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  lts.alphabet_ = std::move(alphabet);
  return lts;
}

Lts build_lts(Alphabet alphabet, std::vector<std::string> states,
              const std::vector<NamedTransition>& transitions) {
  std::vector<std::string> sorted = states;
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](const std::string& name) -> StateId {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
    if (it == sorted.end() || *it != name) throw InvalidSystem("unknown state '" + name + "'");
    return static_cast<StateId>(it - sorted.begin());
  };

  std::vector<Transition> indexed;
  indexed.reserve(transitions.size());
  for (const auto& t : transitions) {
    auto action = alphabet.find(t.action);
    if (!action) throw InvalidSystem("unknown action '" + t.action + "'");
    indexed.push_back({index_of(t.source), *action, index_of(t.target)});
  }
  return build_lts(std::move(alphabet), std::move(sorted), std::move(indexed));
}

DisjointUnion disjoint_union(const Lts& left, const Lts& right) {
  if (!(left.alphabet() == right.alphabet()))
    throw AlphabetMismatch("systems are over different alphabets or partitions");

  std::vector<std::string> names;
  names.reserve(left.size() + right.size());
  for (const auto& s : left.names()) names.push_back("l_" + s);
  for (const auto& s : right.names()) names.push_back("r_" + s);

  const auto offset = static_cast<StateId>(left.size());
  std::vector<Transition> transitions = left.transitions();
  for (auto t : right.transitions()) {
    t.source += offset;
    t.target += offset;
    transitions.push_back(t);
  }

  // Every "l_" name sorts before every "r_" name, so indices are preserved.
  DisjointUnion result{build_lts(left.alphabet(), std::move(names), std::move(transitions)), {}, {}};
  result.left.resize(left.size());
  std::iota(result.left.begin(), result.left.end(), StateId{0});
  result.right.resize(right.size());
  std::iota(result.right.begin(), result.right.end(), offset);
  return result;
}

Restriction restrict_to_reachable(const Lts& lts, std::span<const StateId> roots) {
  std::vector<bool> seen(lts.size(), false);
  std::vector<StateId> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    StateId p = stack.back();
    stack.pop_back();
    if (seen.at(p)) continue;
    seen[p] = true;
    for (ActionId a = 0; a < lts.alphabet().size(); ++a)
      for (StateId t : lts.successors(p, a))
        if (!seen[t]) stack.push_back(t);
  }

  Restriction result;
  result.map.resize(lts.size());
  std::vector<std::string> names;
  for (StateId p = 0; p < lts.size(); ++p) {
    if (!seen[p]) continue;
    result.map[p] = static_cast<StateId>(names.size());
    names.push_back(lts.name(p));
  }
  std::vector<Transition> transitions;
  for (const auto& t : lts.transitions())
    if (seen[t.source]) transitions.push_back({*result.map[t.source], t.action, *result.map[t.target]});
  // Names were taken in sorted order, so indices survive canonicalisation.
  result.lts = build_lts(lts.alphabet(), std::move(names), std::move(transitions));
  return result;
}

}  // namespace covsim

#include "covsim/check.hpp"

#include <array>

#include "covsim/distinguisher.hpp"

namespace covsim {

namespace {

std::vector<bool> reachable(const Lts& lts, StateId root) {
  const std::array<StateId, 1> roots{root};
  auto restricted = restrict_to_reachable(lts, roots);
  std::vector<bool> out(lts.size());
  for (StateId s = 0; s < lts.size(); ++s) out[s] = restricted.map[s].has_value();
  return out;
}

}  // namespace

CheckResult holds(PreorderKind kind, std::shared_ptr<const Lts> lts, StateId p, StateId q) {
  const Lts& system = *lts;
  system.name(p);  // validates
  system.name(q);

  auto relation = greatest_relation(kind, system);
  CheckResult result;
  result.kind = kind;
  result.left = p;
  result.right = q;
  result.holds = relation.alive.contains(p, q);

  if (result.holds) {
    const auto from_left = reachable(system, p);
    const auto from_right = reachable(system, q);
    result.witness = Relation(system.size());
    for (const auto& [x, y] : relation.alive.pairs())
      if (from_left[x] && from_right[y]) result.witness.insert(x, y);
  } else {
    result.reason = relation.removal(p, q);
    if (kind != PreorderKind::Sim) result.formula = distinguish(system, relation, p, q);
  }
  result.system = std::move(lts);
  return result;
}

CheckResult holds(PreorderKind kind, const StateRef& p, const StateRef& q) {
  if (p.system == q.system) return holds(kind, p.system, p.state, q.state);
  auto joined = disjoint_union(*p.system, *q.system);
  const StateId left = joined.left.at(p.state);
  const StateId right = joined.right.at(q.state);
  return holds(kind, std::make_shared<const Lts>(std::move(joined.lts)), left, right);
}

bool equiv(PreorderKind kind, const StateRef& p, const StateRef& q) {
  return holds(kind, p, q).holds && holds(kind, q, p).holds;
}

}  // namespace covsim

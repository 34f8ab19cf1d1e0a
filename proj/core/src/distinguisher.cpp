#include "covsim/distinguisher.hpp"

#include "covsim/error.hpp"

namespace covsim {

Distinguisher::Distinguisher(const Lts& lts, const AnnotatedRelation& relation)
    : lts_(lts), relation_(relation) {
  if (relation.kind == PreorderKind::Sim)
    throw Error("distinguishing formulas are produced for cc and conf only");
}

std::optional<Formula> Distinguisher::operator()(StateId p, StateId q) {
  if (relation_.alive.contains(p, q)) return std::nullopt;
  return build(p, q);
}

Formula Distinguisher::build(StateId p, StateId q) {
  if (auto it = memo_.find({p, q}); it != memo_.end()) return it->second;

  const auto& removal = relation_.removal(p, q);
  if (!removal) throw Error("pair was never examined by the refinement");
  const Violation& v = removal->violation;
  const ActionId a = v.action;

  Formula result;
  switch (v.clause) {
    case Clause::Covariant: {
      std::vector<Formula> parts;
      for (StateId q1 : lts_.successors(q, a)) parts.push_back(build(*v.move, q1));
      result = Formula::diamond(a, Formula::conj(std::move(parts)));
      break;
    }
    case Clause::Contravariant: {
      std::vector<Formula> parts;
      for (StateId p1 : lts_.successors(p, a)) parts.push_back(build(p1, *v.move));
      result = Formula::box(a, Formula::disj(std::move(parts)));
      break;
    }
    case Clause::Initials:
      result = Formula::conformance(a, Formula::tt());
      break;
    case Clause::Matching: {
      std::vector<Formula> parts;
      for (StateId p1 : lts_.successors(p, a)) parts.push_back(build(p1, *v.move));
      result = Formula::conformance(a, Formula::disj(std::move(parts)));
      break;
    }
  }
  memo_.emplace(std::make_pair(p, q), result);
  return result;
}

std::optional<Formula> distinguish(const Lts& lts, const AnnotatedRelation& relation, StateId p,
                                   StateId q) {
  Distinguisher d(lts, relation);
  return d(p, q);
}

}  // namespace covsim

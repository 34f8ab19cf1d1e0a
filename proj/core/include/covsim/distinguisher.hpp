#pragma once

#include <map>
#include <optional>
#include <utility>

#include "covsim/formula.hpp"
#include "covsim/preorders.hpp"

namespace covsim {

/// Builds distinguishing formulas from the removal records of a CC or Conf
/// refinement.
///
/// For a removed pair (p, q) the formula is true at p, false at q, and lies in
/// the fragment matching the kind (CC or CS). It is assembled from the
/// violation recorded for the pair:
///
///   covariant via p -a-> p0:      <a> AND { distinguish(p0, q1) | q -a-> q1 }
///   contravariant via q -a-> q0:  [a] OR  { distinguish(p1, q0) | p -a-> p1 }
///   initials via a:               {a} tt
///   matching via q -a-> q0:       {a} OR  { distinguish(p1, q0) | p -a-> p1 }
///
/// Every recursive pair was already dead in the round that killed (p, q), so
/// the recursion descends strictly through rounds and the modal depth of the
/// result is at most the pair's removal round.
class Distinguisher {
 public:
  /// Throws Error for PreorderKind::Sim.
  Distinguisher(const Lts& lts, const AnnotatedRelation& relation);

  /// nullopt iff (p, q) survived the refinement.
  std::optional<Formula> operator()(StateId p, StateId q);

 private:
  Formula build(StateId p, StateId q);

  const Lts& lts_;
  const AnnotatedRelation& relation_;
  std::map<std::pair<StateId, StateId>, Formula> memo_;
};

/// One-shot form of Distinguisher.
std::optional<Formula> distinguish(const Lts& lts, const AnnotatedRelation& relation, StateId p,
                                   StateId q);

}  // namespace covsim

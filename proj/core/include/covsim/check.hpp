#pragma once

#include <memory>
#include <optional>

#include "covsim/formula.hpp"
#include "covsim/lts.hpp"
#include "covsim/preorders.hpp"

namespace covsim {

/// Answer to "is p below q?".
///
/// When the preorder holds, `witness` is a relation of the requested kind
/// containing (left, right): the surviving pairs between states reachable from
/// left and states reachable from right. When it fails, `reason` is the
/// recorded removal of (left, right) and, for CC and Conf, `formula` is a
/// distinguishing formula (true at left, false at right).
struct CheckResult {
  PreorderKind kind = PreorderKind::Sim;
  bool holds = false;
  std::shared_ptr<const Lts> system;  // where left/right live
  StateId left = 0;
  StateId right = 0;
  Relation witness;
  std::optional<Formula> formula;
  std::optional<Removal> reason;
};

/// Both states in one system.
CheckResult holds(PreorderKind kind, std::shared_ptr<const Lts> lts, StateId p, StateId q);

/// States of possibly different systems; distinct systems are compared in
/// their disjoint union. Throws AlphabetMismatch when the alphabets differ.
CheckResult holds(PreorderKind kind, const StateRef& p, const StateRef& q);

/// holds(kind, p, q) and holds(kind, q, p).
bool equiv(PreorderKind kind, const StateRef& p, const StateRef& q);

}  // namespace covsim

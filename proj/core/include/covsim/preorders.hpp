#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covsim/lts.hpp"

namespace covsim {

/// Which simulation notion to compute.
///   Sim:  plain simulation, every action covariant.
///   CC:   covariant-contravariant simulation, driven by the alphabet's partition.
///   Conf: conformance simulation; ignores the partition.
enum class PreorderKind : std::uint8_t { Sim, CC, Conf };

std::string_view to_string(PreorderKind k);

/// Binary relation over the states of one system, stored as a bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t states, bool full = false);
  static Relation identity(std::size_t states);

  std::size_t states() const noexcept { return n_; }
  bool contains(StateId p, StateId q) const { return bits_[p * n_ + q] != 0; }
  void insert(StateId p, StateId q) { bits_[p * n_ + q] = 1; }
  void erase(StateId p, StateId q) { bits_[p * n_ + q] = 0; }

  std::size_t count() const;
  /// Pairs in (p, q) lexicographic order.
  std::vector<std::pair<StateId, StateId>> pairs() const;

  Relation inverse() const;
  bool subset_of(const Relation& other) const;
  Relation& operator|=(const Relation& other);

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

enum class Clause : std::uint8_t {
  Covariant,      // a move of the left state has no related answer on the right
  Contravariant,  // a move of the right state has no related answer on the left
  Initials,       // the left state enables an action the right one does not
  Matching,       // both enable a; some right a-move has no related left a-move
};

std::string_view to_string(Clause c);

/// One violated clause at a pair (p, q). `move` is the unmatched successor:
/// of p for Covariant, of q for Contravariant and Matching, unset for Initials.
struct Violation {
  Clause clause;
  ActionId action;
  std::optional<StateId> move;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Human-readable rendering, e.g. "contravariant clause: q -lemonade-> q3 unmatched".
std::string describe(const Violation& v, const Lts& lts, StateId p, StateId q);

/// The first violated clause of (p, q), with continuations judged against
/// `against`. Tie-break: covariant before contravariant, initials before
/// matching; then the smallest action; then the smallest successor.
std::optional<Violation> find_violation(PreorderKind kind, const Lts& lts, StateId p, StateId q,
                                        const Relation& against);

struct Removal {
  std::size_t round;  // >= 1
  Violation violation;
};

/// Outcome of the refinement: the surviving pairs and, for every removed
/// pair, the round in which it failed and why.
struct AnnotatedRelation {
  PreorderKind kind = PreorderKind::Sim;
  Relation alive;
  std::vector<std::optional<Removal>> removals;  // indexed p * n + q
  std::size_t rounds = 0;  // refinement rounds until nothing changed

  const std::optional<Removal>& removal(StateId p, StateId q) const {
    return removals[p * alive.states() + q];
  }
};

/// Greatest relation of the given kind on `lts`. Starts from all pairs; round
/// k keeps the pairs of round k-1 that have no violation against round k-1.
AnnotatedRelation greatest_relation(PreorderKind kind, const Lts& lts);

/// Same refinement started from `start` instead of all pairs: the greatest
/// relation of the kind contained in `start`. Pairs outside `start` carry no
/// removal record.
AnnotatedRelation greatest_relation_within(PreorderKind kind, const Lts& lts, Relation start);

struct Counterexample {
  StateId p;
  StateId q;
  Violation violation;
};

struct SimulationCheck {
  bool ok = true;
  std::optional<Counterexample> counterexample;  // first failing pair in (p, q) order
};

/// Whether `relation` satisfies every clause of the kind at every pair.
SimulationCheck check_is_simulation(PreorderKind kind, const Lts& lts, const Relation& relation);

}  // namespace covsim

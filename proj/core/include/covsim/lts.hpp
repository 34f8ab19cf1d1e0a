#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covsim/alphabet.hpp"

namespace covsim {

using StateId = std::uint32_t;

struct Transition {
  StateId source;
  ActionId action;
  StateId target;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Named transition triple, as read from a file or written by hand.
struct NamedTransition {
  std::string source;
  std::string action;
  std::string target;
};

/// Finitary labelled transition system over an Alphabet.
///
/// Immutable once built. States are interned names kept in lexicographic
/// order; StateId is the index in that order. Successor sets are sorted and
/// duplicate-free, which makes every iteration over the system deterministic.
class Lts {
 public:
  Lts() = default;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(StateId s) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<StateId> find(std::string_view name) const;

  /// The a-successors of p. Throws InvalidSystem on an unknown state or action.
  std::span<const StateId> successors(StateId p, ActionId a) const;
  bool can(StateId p, ActionId a) const { return !successors(p, a).empty(); }

  /// Actions p can perform immediately, in canonical order.
  std::vector<ActionId> initials(StateId p) const;

  /// All transitions ordered by (source, action, target).
  std::vector<Transition> transitions() const;
  std::size_t transition_count() const noexcept;

  friend bool operator==(const Lts&, const Lts&) = default;

 private:
  friend Lts build_lts(Alphabet alphabet, std::vector<std::string> states,
                       const std::vector<NamedTransition>& transitions);
  friend Lts build_lts(Alphabet alphabet, std::vector<std::string> states,
                       std::vector<Transition> transitions);

  void check_state(StateId p) const;

  Alphabet alphabet_;
  std::vector<std::string> names_;
  // Indexed by state * |alphabet| + action.
  std::vector<std::vector<StateId>> successors_;
};

/// Validates and canonicalises a system given by names. Duplicate triples
/// collapse; unknown states or actions and duplicate state names throw.
Lts build_lts(Alphabet alphabet, std::vector<std::string> states,
              const std::vector<NamedTransition>& transitions);

/// Same as above with transitions given by index into `states` (before
/// sorting) and into the alphabet.
Lts build_lts(Alphabet alphabet, std::vector<std::string> states,
              std::vector<Transition> transitions);

/// Result of placing two systems side by side.
struct DisjointUnion {
  Lts lts;
  std::vector<StateId> left;   // left state -> union state
  std::vector<StateId> right;  // right state -> union state
};

/// Disjoint union of two systems over the same alphabet. States are renamed
/// `l_<name>` and `r_<name>`. Throws AlphabetMismatch if the alphabets or
/// their partitions differ.
DisjointUnion disjoint_union(const Lts& left, const Lts& right);

struct Restriction {
  Lts lts;
  std::vector<std::optional<StateId>> map;  // original state -> restricted state
};

/// The subsystem reachable from `roots`, keeping state names.
Restriction restrict_to_reachable(const Lts& lts, std::span<const StateId> roots);

/// A state of a shared, immutable system.
struct StateRef {
  std::shared_ptr<const Lts> system;
  StateId state = 0;

  const std::string& name() const { return system->name(state); }
};

}  // namespace covsim

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covsim/formula.hpp"
#include "covsim/modal_logic.hpp"
#include "covsim/preorders.hpp"

namespace covsim {

/// Brute-force computation of logical preorders.
///
/// A fragment's formulas are enumerated level by level and identified by
/// their satisfaction vector over the system, so each level holds at most one
/// formula per distinct vector. Level 0 is {tt} (plus ff where the fragment has
/// it); level k+1 adds every modality of the fragment applied to a level-k
/// formula and every binary And/Or (where allowed) of two level-k formulas.
/// When a level adds no new vector the set is closed under every operator of
/// the fragment, so it contains the vector of every formula of the fragment.

struct LevelEntry {
  Formula formula;
  SatVector vector;
};

struct Saturation {
  std::vector<LevelEntry> entries;     // first-found formula per vector, in discovery order
  std::vector<std::size_t> level_sizes;  // entries known at each level (cumulative)
  bool saturated = false;              // a level added nothing before max_level ran out

  std::size_t levels() const noexcept { return level_sizes.size(); }
  std::span<const LevelEntry> level(std::size_t k) const {
    return std::span<const LevelEntry>(entries).first(level_sizes.at(k));
  }
};

Saturation saturate(const Lts& lts, Fragment fragment, std::size_t max_level);

/// Default level budget: 2 * |states|^2.
std::size_t default_max_level(const Lts& lts);

struct LogicalPreorder {
  Relation relation;  // (p, q) iff every enumerated formula true at p is true at q
  bool saturated = false;
  Saturation saturation;

  /// An enumerated formula true at p and false at q, if any.
  std::optional<Formula> separating(StateId p, StateId q) const;
};

LogicalPreorder logical_preorder(const Lts& lts, Fragment fragment, std::size_t max_level);

struct Mismatch {
  StateId p;
  StateId q;
  bool simulation_holds;
  bool logic_holds;
  std::optional<Formula> separating;  // when only the simulation holds
  std::optional<Removal> failing;     // when only the logic holds
};

struct AgreementReport {
  PreorderKind kind;
  Fragment fragment;
  bool saturated = false;
  std::size_t levels = 0;
  std::size_t vectors = 0;
  std::vector<Mismatch> mismatches;

  bool agrees() const noexcept { return saturated && mismatches.empty(); }
};

/// Compares the greatest relation of `kind` with the logical preorder of
/// `fragment` on every pair of states.
AgreementReport agreement_report(const Lts& lts, PreorderKind kind, Fragment fragment,
                                 std::size_t max_level);

/// The pairings that should coincide: (sim, s), (sim, sbar), (cc, cc), (conf, cs).
struct Pairing {
  PreorderKind kind;
  Fragment fragment;
};
std::span<const Pairing> characterization_pairings();

std::string render(const AgreementReport& report, const Lts& lts);

}  // namespace covsim

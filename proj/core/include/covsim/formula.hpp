#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "covsim/alphabet.hpp"

namespace covsim {

enum class FormulaKind : std::uint8_t {
  True,
  False,
  And,
  Or,
  Diamond,      // <a>phi: some a-successor satisfies phi
  Box,          // [a]phi: every a-successor satisfies phi
  Conformance,  // {a}phi: a is enabled and every a-successor satisfies phi
};

/// Immutable modal formula. Copies share structure.
///
/// And/Or are n-ary; an empty And means tt and an empty Or means ff. The
/// factory functions collapse those cases (and singletons) so that built
/// formulas print and re-parse to the same tree.
class Formula {
 public:
  Formula();  // tt

  static Formula tt();
  static Formula ff();
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula diamond(ActionId a, Formula body);
  static Formula box(ActionId a, Formula body);
  static Formula conformance(ActionId a, Formula body);

  /// Raw n-ary node without collapsing; used by the parser and tests that
  /// need the empty conventions.
  static Formula make(FormulaKind kind, std::vector<Formula> children, ActionId action = 0);

  FormulaKind kind() const noexcept { return node_->kind; }
  ActionId action() const noexcept { return node_->action; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }
  /// The single operand of a modality.
  const Formula& body() const { return node_->children.front(); }
  bool is_modal() const noexcept;

  /// Identity of the shared node, for memoisation.
  const void* id() const noexcept { return node_.get(); }

  std::size_t depth() const;  // modal depth
  std::size_t size() const;   // node count

  friend bool operator==(const Formula& x, const Formula& y);

 private:
  struct Node {
    FormulaKind kind;
    ActionId action;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Renders a formula in the concrete syntax accepted by parse_formula:
/// tt, ff, <a>f, [a]f, {a}f, f & g, f | g with `&` binding tighter than `|`
/// and modalities tighter than both.
std::string to_string(const Formula& f, const Alphabet& alphabet);

}  // namespace covsim

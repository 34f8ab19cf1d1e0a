#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covsim {

using ActionId = std::uint32_t;

/// How a simulation treats moves labelled by an action.
///   Covariant:     moves of the smaller process must be matched by the larger one.
///   Contravariant: moves of the larger process must be matched by the smaller one.
///   Bivariant:     both obligations.
enum class Variance : std::uint8_t { Covariant, Contravariant, Bivariant };

std::string_view to_string(Variance v);

/// A finite set of action names together with a partition into variance classes.
///
/// Actions are stored in lexicographic order and addressed by their index in
/// that order, so ActionId order coincides with name order.
class Alphabet {
 public:
  Alphabet() = default;

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(ActionId a) const { return names_.at(a); }
  Variance variance(ActionId a) const { return variances_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<ActionId> find(std::string_view name) const;

  /// Actions with the covariant obligation (covariant or bivariant).
  bool is_covariant(ActionId a) const { return variance(a) != Variance::Contravariant; }
  /// Actions with the contravariant obligation (contravariant or bivariant).
  bool is_contravariant(ActionId a) const { return variance(a) != Variance::Covariant; }

  /// Action names of one variance class, in canonical order.
  std::vector<std::string> names_with(Variance v) const;

  /// Same action set, every action reassigned to `v`.
  Alphabet with_uniform_variance(Variance v) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  friend Alphabet make_alphabet(std::vector<std::pair<std::string, Variance>> entries);

  std::vector<std::string> names_;
  std::vector<Variance> variances_;
};

/// Builds an alphabet from (name, variance) entries given in any order.
/// Throws InvalidSystem on an empty or duplicate name.
Alphabet make_alphabet(std::vector<std::pair<std::string, Variance>> entries);

}  // namespace covsim

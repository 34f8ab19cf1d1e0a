#include "covsim/alphabet.hpp"

#include <algorithm>

#include "covsim/error.hpp"

namespace covsim {

std::string_view to_string(Variance v) {
  switch (v) {
    case Variance::Covariant:
      return "covariant";
    case Variance::Contravariant:
      return "contravariant";
    case Variance::Bivariant:
      return "bivariant";
  }
  return "?";
}

Alphabet make_alphabet(std::vector<std::pair<std::string, Variance>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Alphabet result;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [name, variance] = entries[i];
    if (name.empty()) throw InvalidSystem("empty action name");
    if (i > 0 && entries[i - 1].first == name)
      throw InvalidSystem("duplicate action '" + name + "'");
    result.names_.push_back(name);
    result.variances_.push_back(variance);
  }
  return result;
}

std::optional<ActionId> Alphabet::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<ActionId>(it - names_.begin());
}

std::vector<std::string> Alphabet::names_with(Variance v) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (variances_[i] == v) out.push_back(names_[i]);
  return out;
}

Alphabet Alphabet::with_uniform_variance(Variance v) const {
  Alphabet copy = *this;
  std::fill(copy.variances_.begin(), copy.variances_.end(), v);
  return copy;
}

}  // namespace covsim

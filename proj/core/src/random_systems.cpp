#include "covsim/random_systems.hpp"

#include <algorithm>
#include <string>

namespace covsim {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the incomplete final block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

std::string action_name(std::size_t i) {
  std::string name(1, static_cast<char>('a' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

}  // namespace

Alphabet uniform_alphabet(std::size_t actions, Variance v) {
  std::vector<std::pair<std::string, Variance>> entries;
  for (std::size_t i = 0; i < actions; ++i) entries.emplace_back(action_name(i), v);
  return make_alphabet(std::move(entries));
}

Alphabet random_alphabet(std::uint64_t seed, std::size_t actions) {
  Rng rng(seed);
  std::vector<std::pair<std::string, Variance>> entries;
  for (std::size_t i = 0; i < actions; ++i)
    entries.emplace_back(action_name(i), static_cast<Variance>(rng.below(3)));
  return make_alphabet(std::move(entries));
}

Lts random_lts(std::uint64_t seed, std::size_t states, const Alphabet& alphabet, double density) {
  Rng rng(seed);
  const std::size_t width = std::to_string(states > 0 ? states - 1 : 0).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("s" + std::string(width - digits.size(), '0') + digits);
  }

  const double p = states == 0 ? 0.0 : std::min(1.0, density / static_cast<double>(states));
  std::vector<Transition> transitions;
  for (StateId s = 0; s < states; ++s)
    for (ActionId a = 0; a < alphabet.size(); ++a)
      for (StateId t = 0; t < states; ++t)
        if (rng.chance(p)) transitions.push_back({s, a, t});
  return build_lts(alphabet, std::move(names), std::move(transitions));
}

namespace {

class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, Fragment fragment, const Alphabet& alphabet,
                   std::size_t max_width)
      : rng_(seed), fragment_(fragment), alphabet_(alphabet), max_width_(std::max<std::size_t>(2, max_width)) {}

  Formula generate(std::size_t depth) {
    if (depth == 0) return atom();
    switch (rng_.below(4)) {
      case 0:
        return atom();
      case 1:
        return junction(depth);
      default:
        return alphabet_.empty() ? junction(depth) : modality(depth);
    }
  }

 private:
  bool has_ff() const {
    return fragment_ == Fragment::SBar || fragment_ == Fragment::CC || fragment_ == Fragment::Any;
  }
  bool has_or() const { return fragment_ != Fragment::S; }

  Formula atom() {
    if (has_ff() && rng_.chance(0.5)) return Formula::ff();
    return Formula::tt();
  }

  Formula junction(std::size_t depth) {
    const auto width = 2 + rng_.below(max_width_ - 1);
    const bool is_or = has_or() && rng_.chance(0.5);
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < width; ++i) parts.push_back(generate(depth - 1));
    return Formula::make(is_or ? FormulaKind::Or : FormulaKind::And, std::move(parts));
  }

  Formula modality(std::size_t depth) {
    const auto a = static_cast<ActionId>(rng_.below(alphabet_.size()));
    std::vector<FormulaKind> options;
    switch (fragment_) {
      case Fragment::S:
      case Fragment::SBar:
        options = {FormulaKind::Diamond};
        break;
      case Fragment::CC:
        if (alphabet_.is_covariant(a)) options.push_back(FormulaKind::Diamond);
        if (alphabet_.is_contravariant(a)) options.push_back(FormulaKind::Box);
        break;
      case Fragment::CS:
        options = {FormulaKind::Conformance};
        break;
      case Fragment::Any:
        options = {FormulaKind::Diamond, FormulaKind::Box, FormulaKind::Conformance};
        break;
    }
    const auto kind = options[rng_.below(options.size())];
    return Formula::make(kind, {generate(depth - 1)}, a);
  }

  Rng rng_;
  Fragment fragment_;
  const Alphabet& alphabet_;
  std::size_t max_width_;
};

}  // namespace

Formula random_formula(std::uint64_t seed, Fragment fragment, const Alphabet& alphabet,
                       std::size_t max_depth, std::size_t max_width) {
  return FormulaGenerator(seed, fragment, alphabet, max_width).generate(max_depth);
}

Relation random_relation(std::uint64_t seed, std::size_t states, double keep) {
  Rng rng(seed);
  Relation r(states);
  for (StateId p = 0; p < states; ++p)
    for (StateId q = 0; q < states; ++q)
      if (rng.chance(keep)) r.insert(p, q);
  return r;
}

Relation random_valid_relation(std::uint64_t seed, PreorderKind kind, const Lts& lts, double keep) {
  return greatest_relation_within(kind, lts, random_relation(seed, lts.size(), keep)).alive;
}

}  // namespace covsim

#pragma once

#include <cstdint>
#include <random>

#include "covsim/formula.hpp"
#include "covsim/lts.hpp"
#include "covsim/modal_logic.hpp"
#include "covsim/preorders.hpp"

namespace covsim {

/// Platform-stable random source.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distributions do not, so bounded integers and unit reals are derived here:
/// `below(n)` by rejection sampling on the top of the 64-bit range, `unit()`
/// from the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound > 0
  double unit();                             // uniform in [0, 1)
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Actions "a", "b", ... (then "a1", ...) all with variance `v`.
Alphabet uniform_alphabet(std::size_t actions, Variance v);

/// Actions named as above with variances drawn uniformly.
Alphabet random_alphabet(std::uint64_t seed, std::size_t actions);

/// States "s0".."s<n-1>" (zero-padded so name order is index order). Each
/// possible transition (p, a, t) is present independently with probability
/// min(1, density / n), giving `density` expected successors per state and
/// action when density <= n.
Lts random_lts(std::uint64_t seed, std::size_t states, const Alphabet& alphabet, double density);

/// A formula of `fragment` with modal depth <= max_depth and junctions of
/// 2..max_width operands. Depth 0 yields tt, or ff where the fragment has it.
Formula random_formula(std::uint64_t seed, Fragment fragment, const Alphabet& alphabet,
                       std::size_t max_depth, std::size_t max_width);

/// Each pair independently with probability `keep`.
Relation random_relation(std::uint64_t seed, std::size_t states, double keep);

/// A relation of the given kind: a random relation pruned to the greatest
/// relation of that kind inside it.
Relation random_valid_relation(std::uint64_t seed, PreorderKind kind, const Lts& lts, double keep);

}  // namespace covsim

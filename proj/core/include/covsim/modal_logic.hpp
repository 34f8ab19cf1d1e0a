#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "covsim/formula.hpp"
#include "covsim/lts.hpp"

namespace covsim {

/// Logic fragments, by the operators they admit:
///   S:     tt, And, <a> for every a
///   SBar:  S plus ff and Or
///   CC:    tt, ff, And, Or, <a> for covariant/bivariant a, [a] for contravariant/bivariant a
///   CS:    tt, And, Or, {a} for every a (no ff)
///   Any:   every operator
enum class Fragment : std::uint8_t { S, SBar, CC, CS, Any };

std::string_view to_string(Fragment f);

bool fragment_member(const Formula& f, Fragment fragment, const Alphabet& alphabet);

/// One bit per state of a system.
class SatVector {
 public:
  SatVector() = default;
  explicit SatVector(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  std::size_t count() const;
  bool all() const { return count() == size_; }

  /// Every set bit of *this is set in `other`.
  bool subset_of(const SatVector& other) const;

  SatVector& operator&=(const SatVector& other);
  SatVector& operator|=(const SatVector& other);
  friend SatVector operator&(SatVector x, const SatVector& y) { return x &= y; }
  friend SatVector operator|(SatVector x, const SatVector& y) { return x |= y; }
  friend bool operator==(const SatVector&, const SatVector&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SatVectorHash {
  std::size_t operator()(const SatVector& v) const noexcept { return v.hash(); }
};

/// p |= f, by direct structural recursion on f.
bool eval(const Lts& lts, StateId p, const Formula& f);

/// The satisfaction vector of f over all states: one bottom-up pass, each
/// shared subformula evaluated once.
SatVector sat_vector(const Lts& lts, const Formula& f);

/// Vectors of modalities applied to an already-computed body vector.
SatVector diamond_vector(const Lts& lts, ActionId a, const SatVector& body);
SatVector box_vector(const Lts& lts, ActionId a, const SatVector& body);
SatVector conformance_vector(const Lts& lts, ActionId a, const SatVector& body);

}  // namespace covsim

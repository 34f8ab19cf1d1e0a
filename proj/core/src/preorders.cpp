#include "covsim/preorders.hpp"

#include <algorithm>

namespace covsim {

std::string_view to_string(PreorderKind k) {
  switch (k) {
    case PreorderKind::Sim: return "sim";
    case PreorderKind::CC: return "cc";
    case PreorderKind::Conf: return "conf";
  }
  return "?";
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::Covariant: return "covariant";
    case Clause::Contravariant: return "contravariant";
    case Clause::Initials: return "initials";
    case Clause::Matching: return "matching";
  }
  return "?";
}

Relation::Relation(std::size_t states, bool full)
    : n_(states), bits_(states * states, full ? 1 : 0) {}

Relation Relation::identity(std::size_t states) {
  Relation r(states);
  for (StateId p = 0; p < states; ++p) r.insert(p, p);
  return r;
}

std::size_t Relation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<StateId, StateId>> Relation::pairs() const {
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId p = 0; p < n_; ++p)
    for (StateId q = 0; q < n_; ++q)
      if (contains(p, q)) out.emplace_back(p, q);
  return out;
}

Relation Relation::inverse() const {
  Relation r(n_);
  for (StateId p = 0; p < n_; ++p)
    for (StateId q = 0; q < n_; ++q)
      if (contains(p, q)) r.insert(q, p);
  return r;
}

bool Relation::subset_of(const Relation& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

Relation& Relation::operator|=(const Relation& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

std::string describe(const Violation& v, const Lts& lts, StateId p, StateId q) {
  const auto& a = lts.alphabet().name(v.action);
  std::string out(to_string(v.clause));
  out += " clause: ";
  switch (v.clause) {
    case Clause::Covariant:
      out += lts.name(p) + " -" + a + "-> " + lts.name(*v.move) + " has no related answer from " +
             lts.name(q);
      break;
    case Clause::Contravariant:
    case Clause::Matching:
      out += lts.name(q) + " -" + a + "-> " + lts.name(*v.move) + " has no related answer from " +
             lts.name(p);
      break;
    case Clause::Initials:
      out += lts.name(p) + " enables " + a + " but " + lts.name(q) + " does not";
      break;
  }
  return out;
}

namespace {

bool answered_on_right(const Lts& lts, StateId left_move, StateId q, ActionId a,
                       const Relation& against) {
  for (StateId q1 : lts.successors(q, a))
    if (against.contains(left_move, q1)) return true;
  return false;
}

bool answered_on_left(const Lts& lts, StateId p, StateId right_move, ActionId a,
                      const Relation& against) {
  for (StateId p1 : lts.successors(p, a))
    if (against.contains(p1, right_move)) return true;
  return false;
}

std::optional<Violation> covariant_violation(const Lts& lts, StateId p, StateId q, ActionId a,
                                             const Relation& against) {
  for (StateId p1 : lts.successors(p, a))
    if (!answered_on_right(lts, p1, q, a, against)) return Violation{Clause::Covariant, a, p1};
  return std::nullopt;
}

std::optional<Violation> right_move_violation(Clause clause, const Lts& lts, StateId p, StateId q,
                                              ActionId a, const Relation& against) {
  for (StateId q1 : lts.successors(q, a))
    if (!answered_on_left(lts, p, q1, a, against)) return Violation{clause, a, q1};
  return std::nullopt;
}

}  // namespace

std::optional<Violation> find_violation(PreorderKind kind, const Lts& lts, StateId p, StateId q,
                                        const Relation& against) {
  const auto& alphabet = lts.alphabet();
  const auto width = static_cast<ActionId>(alphabet.size());
  switch (kind) {
    case PreorderKind::Sim:
      for (ActionId a = 0; a < width; ++a)
        if (auto v = covariant_violation(lts, p, q, a, against)) return v;
      return std::nullopt;

    case PreorderKind::CC:
      for (ActionId a = 0; a < width; ++a)
        if (alphabet.is_covariant(a))
          if (auto v = covariant_violation(lts, p, q, a, against)) return v;
      for (ActionId a = 0; a < width; ++a)
        if (alphabet.is_contravariant(a))
          if (auto v = right_move_violation(Clause::Contravariant, lts, p, q, a, against)) return v;
      return std::nullopt;

    case PreorderKind::Conf:
      for (ActionId a = 0; a < width; ++a)
        if (lts.can(p, a) && !lts.can(q, a)) return Violation{Clause::Initials, a, std::nullopt};
      for (ActionId a = 0; a < width; ++a)
        if (lts.can(p, a))
          if (auto v = right_move_violation(Clause::Matching, lts, p, q, a, against)) return v;
      return std::nullopt;
  }
  return std::nullopt;
}

AnnotatedRelation greatest_relation_within(PreorderKind kind, const Lts& lts, Relation start) {
  const auto n = lts.size();
  AnnotatedRelation result;
  result.kind = kind;
  result.alive = std::move(start);
  result.removals.assign(n * n, std::nullopt);

  // Every pair still alive is re-examined each round against the previous
  // round's relation; removals are applied only once the round is complete.
  for (std::size_t round = 1;; ++round) {
    std::vector<std::pair<std::size_t, Violation>> failed;
    for (StateId p = 0; p < n; ++p)
      for (StateId q = 0; q < n; ++q)
        if (result.alive.contains(p, q))
          if (auto v = find_violation(kind, lts, p, q, result.alive))
            failed.emplace_back(p * n + q, *v);
    if (failed.empty()) break;
    for (auto& [index, violation] : failed) {
      result.alive.erase(static_cast<StateId>(index / n), static_cast<StateId>(index % n));
      result.removals[index] = Removal{round, violation};
    }
    result.rounds = round;
  }
  return result;
}

AnnotatedRelation greatest_relation(PreorderKind kind, const Lts& lts) {
  return greatest_relation_within(kind, lts, Relation(lts.size(), true));
}

SimulationCheck check_is_simulation(PreorderKind kind, const Lts& lts, const Relation& relation) {
  for (const auto& [p, q] : relation.pairs())
    if (auto v = find_violation(kind, lts, p, q, relation))
      return SimulationCheck{false, Counterexample{p, q, *v}};
  return SimulationCheck{};
}

}  // namespace covsim

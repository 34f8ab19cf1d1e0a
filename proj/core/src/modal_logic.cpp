#include "covsim/modal_logic.hpp"

#include <bit>
#include <unordered_map>

namespace covsim {

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::S: return "s";
    case Fragment::SBar: return "sbar";
    case Fragment::CC: return "cc";
    case Fragment::CS: return "cs";
    case Fragment::Any: return "any";
  }
  return "?";
}

bool fragment_member(const Formula& f, Fragment fragment, const Alphabet& alphabet) {
  bool allowed = true;
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::And:
      break;
    case FormulaKind::False:
    case FormulaKind::Or:
      allowed = fragment == Fragment::SBar || fragment == Fragment::CC ||
                fragment == Fragment::Any ||
                (fragment == Fragment::CS && f.kind() == FormulaKind::Or);
      break;
    case FormulaKind::Diamond:
      allowed = fragment == Fragment::S || fragment == Fragment::SBar || fragment == Fragment::Any ||
                (fragment == Fragment::CC && alphabet.is_covariant(f.action()));
      break;
    case FormulaKind::Box:
      allowed = fragment == Fragment::Any ||
                (fragment == Fragment::CC && alphabet.is_contravariant(f.action()));
      break;
    case FormulaKind::Conformance:
      allowed = fragment == Fragment::CS || fragment == Fragment::Any;
      break;
  }
  if (!allowed) return false;
  if (f.is_modal() && f.action() >= alphabet.size()) return false;
  for (const auto& c : f.children())
    if (!fragment_member(c, fragment, alphabet)) return false;
  return true;
}

SatVector::SatVector(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && size % 64 != 0) words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
}

void SatVector::set(std::size_t i, bool value) {
  const auto mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::size_t SatVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SatVector::subset_of(const SatVector& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

SatVector& SatVector::operator&=(const SatVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SatVector& SatVector::operator|=(const SatVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::size_t SatVector::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool eval(const Lts& lts, StateId p, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True:
      return true;
    case FormulaKind::False:
      return false;
    case FormulaKind::And:
      for (const auto& c : f.children())
        if (!eval(lts, p, c)) return false;
      return true;
    case FormulaKind::Or:
      for (const auto& c : f.children())
        if (eval(lts, p, c)) return true;
      return false;
    case FormulaKind::Diamond:
      for (StateId s : lts.successors(p, f.action()))
        if (eval(lts, s, f.body())) return true;
      return false;
    case FormulaKind::Box:
      for (StateId s : lts.successors(p, f.action()))
        if (!eval(lts, s, f.body())) return false;
      return true;
    case FormulaKind::Conformance: {
      auto succ = lts.successors(p, f.action());
      if (succ.empty()) return false;
      for (StateId s : succ)
        if (!eval(lts, s, f.body())) return false;
      return true;
    }
  }
  return false;
}

SatVector diamond_vector(const Lts& lts, ActionId a, const SatVector& body) {
  SatVector out(lts.size());
  for (StateId p = 0; p < lts.size(); ++p)
    for (StateId s : lts.successors(p, a))
      if (body.test(s)) {
        out.set(p);
        break;
      }
  return out;
}

SatVector box_vector(const Lts& lts, ActionId a, const SatVector& body) {
  SatVector out(lts.size(), true);
  for (StateId p = 0; p < lts.size(); ++p)
    for (StateId s : lts.successors(p, a))
      if (!body.test(s)) {
        out.set(p, false);
        break;
      }
  return out;
}

SatVector conformance_vector(const Lts& lts, ActionId a, const SatVector& body) {
  SatVector out = box_vector(lts, a, body);
  for (StateId p = 0; p < lts.size(); ++p)
    if (!lts.can(p, a)) out.set(p, false);
  return out;
}

namespace {

class VectorEvaluator {
 public:
  explicit VectorEvaluator(const Lts& lts) : lts_(lts) {}

  const SatVector& operator()(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    SatVector v = compute(f);
    return memo_.emplace(f.id(), std::move(v)).first->second;
  }

 private:
  SatVector compute(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::True:
        return SatVector(lts_.size(), true);
      case FormulaKind::False:
        return SatVector(lts_.size(), false);
      case FormulaKind::And: {
        SatVector v(lts_.size(), true);
        for (const auto& c : f.children()) v &= (*this)(c);
        return v;
      }
      case FormulaKind::Or: {
        SatVector v(lts_.size(), false);
        for (const auto& c : f.children()) v |= (*this)(c);
        return v;
      }
      case FormulaKind::Diamond:
        return diamond_vector(lts_, f.action(), SatVector((*this)(f.body())));
      case FormulaKind::Box:
        return box_vector(lts_, f.action(), SatVector((*this)(f.body())));
      case FormulaKind::Conformance:
        return conformance_vector(lts_, f.action(), SatVector((*this)(f.body())));
    }
    return SatVector(lts_.size());
  }

  const Lts& lts_;
  // Node identity is stable while the root formula is alive.
  std::unordered_map<const void*, SatVector> memo_;
};

}  // namespace

SatVector sat_vector(const Lts& lts, const Formula& f) {
  VectorEvaluator evaluate(lts);
  return evaluate(f);
}

}  // namespace covsim

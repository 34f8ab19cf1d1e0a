#include "covsim/formula.hpp"

#include <algorithm>

namespace covsim {

Formula::Formula() : Formula(tt()) {}

Formula Formula::make(FormulaKind kind, std::vector<Formula> children, ActionId action) {
  return Formula(std::make_shared<const Node>(Node{kind, action, std::move(children)}));
}

Formula Formula::tt() {
  static const Formula value(std::make_shared<const Node>(Node{FormulaKind::True, 0, {}}));
  return value;
}

Formula Formula::ff() {
  static const Formula value(std::make_shared<const Node>(Node{FormulaKind::False, 0, {}}));
  return value;
}

namespace {

Formula junction(FormulaKind kind, std::vector<Formula> parts) {
  std::vector<Formula> flat;
  for (auto& p : parts) {
    if (p.kind() == kind) {
      flat.insert(flat.end(), p.children().begin(), p.children().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return kind == FormulaKind::And ? Formula::tt() : Formula::ff();
  if (flat.size() == 1) return flat.front();
  return Formula::make(kind, std::move(flat));
}

}  // namespace

Formula Formula::conj(std::vector<Formula> parts) {
  return junction(FormulaKind::And, std::move(parts));
}

Formula Formula::disj(std::vector<Formula> parts) {
  return junction(FormulaKind::Or, std::move(parts));
}

Formula Formula::diamond(ActionId a, Formula body) {
  return make(FormulaKind::Diamond, {std::move(body)}, a);
}

Formula Formula::box(ActionId a, Formula body) {
  return make(FormulaKind::Box, {std::move(body)}, a);
}

Formula Formula::conformance(ActionId a, Formula body) {
  return make(FormulaKind::Conformance, {std::move(body)}, a);
}

bool Formula::is_modal() const noexcept {
  auto k = kind();
  return k == FormulaKind::Diamond || k == FormulaKind::Box || k == FormulaKind::Conformance;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : children()) d = std::max(d, c.depth());
  return is_modal() ? d + 1 : d;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  if (x.is_modal() && x.action() != y.action()) return false;
  return x.children() == y.children();
}

namespace {

// Binding strength: Or < And < modality/atom.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Or:
      return f.children().empty() ? 3 : 1;
    case FormulaKind::And:
      return f.children().empty() ? 3 : 2;
    default:
      return 3;
  }
}

void print(const Formula& f, const Alphabet& alphabet, std::string& out);

void print_operand(const Formula& f, int min_precedence, const Alphabet& alphabet,
                   std::string& out) {
  if (precedence(f) < min_precedence) {
    out += '(';
    print(f, alphabet, out);
    out += ')';
  } else {
    print(f, alphabet, out);
  }
}

void print(const Formula& f, const Alphabet& alphabet, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::True:
      out += "tt";
      return;
    case FormulaKind::False:
      out += "ff";
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const bool is_and = f.kind() == FormulaKind::And;
      if (f.children().empty()) {
        out += is_and ? "tt" : "ff";
        return;
      }
      // Nested same-kind operands are bracketed so the printed tree re-parses
      // to itself (the parser flattens unbracketed chains only).
      const int operand_precedence = is_and ? 3 : 2;
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += is_and ? " & " : " | ";
        first = false;
        print_operand(c, c.kind() == f.kind() ? 4 : operand_precedence, alphabet, out);
      }
      return;
    }
    case FormulaKind::Diamond:
      out += '<' + alphabet.name(f.action()) + '>';
      break;
    case FormulaKind::Box:
      out += '[' + alphabet.name(f.action()) + ']';
      break;
    case FormulaKind::Conformance:
      out += '{' + alphabet.name(f.action()) + '}';
      break;
  }
  print_operand(f.body(), 3, alphabet, out);
}

}  // namespace

std::string to_string(const Formula& f, const Alphabet& alphabet) {
  std::string out;
  print(f, alphabet, out);
  return out;
}

}  // namespace covsim

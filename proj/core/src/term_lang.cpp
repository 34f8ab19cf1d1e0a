#include "covsim/term_lang.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>

#include "covsim/error.hpp"

namespace covsim {

namespace {

enum class Tok {
  Ident,
  Zero,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Less,
  Greater,
  Colon,
  Semi,
  Comma,
  Equals,
  Dot,
  Plus,
  Dash,
  Arrow,
  Amp,
  Bar,
  End,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::Dash: return "'-'";
    case Tok::Arrow: return "'->'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, col = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (c == '0' && !(i + 1 < src.size() && ident_char(src[i + 1]))) {
      out.push_back({Tok::Zero, "0", l, col});
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", l, col});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '<': kind = Tok::Less; break;
      case '>': kind = Tok::Greater; break;
      case ':': kind = Tok::Colon; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      case '.': kind = Tok::Dot; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Dash; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      default:
        throw ParseError(l, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok kind) {
    if (!at(kind)) fail("expected " + std::string(describe(kind)));
    return take();
  }

  void expect_keyword(std::string_view word) {
    if (!at_keyword(word)) fail("expected '" + std::string(word) + "'");
    take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, message + ", found " + found);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Process terms

struct Term {
  enum Kind { Nil, Prefix, Choice, Ref } kind;
  std::string name;  // action for Prefix, target for Ref
  std::vector<std::unique_ptr<Term>> children;
  std::size_t line;
  std::size_t column;
};

using TermPtr = std::unique_ptr<Term>;

TermPtr make_term(Term::Kind kind, const Token& at, std::string name = {}) {
  auto t = std::make_unique<Term>();
  t->kind = kind;
  t->name = std::move(name);
  t->line = at.line;
  t->column = at.column;
  return t;
}

TermPtr parse_proc(Cursor& in);

// Prefix binds tighter than '+'.
TermPtr parse_summand(Cursor& in) {
  const Token& t = in.peek();
  if (t.kind == Tok::Zero) return make_term(Term::Nil, in.take());
  if (t.kind == Tok::LParen) {
    in.take();
    auto inner = parse_proc(in);
    in.expect(Tok::RParen);
    return inner;
  }
  if (t.kind == Tok::Ident) {
    Token name = in.take();
    if (in.at(Tok::Dot)) {
      in.take();
      auto prefix = make_term(Term::Prefix, name, name.text);
      prefix->children.push_back(parse_summand(in));
      return prefix;
    }
    return make_term(Term::Ref, name, name.text);
  }
  in.fail("expected process term");
}

TermPtr parse_proc(Cursor& in) {
  auto left = parse_summand(in);
  while (in.at(Tok::Plus)) {
    Token plus = in.take();
    auto choice = make_term(Term::Choice, plus);
    choice->children.push_back(std::move(left));
    choice->children.push_back(parse_summand(in));
    left = std::move(choice);
  }
  return left;
}

// ---------------------------------------------------------------------------
// System files

struct Definition {
  Token name;
  TermPtr body;
};

struct StateDecl {
  std::vector<Token> names;
};

struct TransitionDecl {
  Token source, action, target;
};

struct FileAst {
  Alphabet alphabet;
  // Items in file order; exactly one of the three is set.
  struct Item {
    std::unique_ptr<Definition> definition;
    std::unique_ptr<StateDecl> states;
    std::unique_ptr<TransitionDecl> transition;
  };
  std::vector<Item> items;
};

std::vector<Token> parse_names(Cursor& in) {
  std::vector<Token> names;
  if (!in.at(Tok::Ident)) return names;
  names.push_back(in.take());
  while (in.at(Tok::Comma)) {
    in.take();
    names.push_back(in.expect(Tok::Ident));
  }
  return names;
}

Alphabet parse_header(Cursor& in) {
  in.expect_keyword("alphabet");
  in.expect(Tok::LBrace);
  std::vector<std::pair<std::string, Variance>> entries;
  std::set<std::string> seen;
  const std::pair<std::string_view, Variance> sections[] = {
      {"covariant", Variance::Covariant},
      {"contravariant", Variance::Contravariant},
      {"bivariant", Variance::Bivariant},
  };
  for (const auto& [keyword, variance] : sections) {
    in.expect_keyword(keyword);
    in.expect(Tok::Colon);
    for (const auto& name : parse_names(in)) {
      if (!seen.insert(name.text).second)
        throw ParseError(name.line, name.column, "duplicate action '" + name.text + "'");
      entries.emplace_back(name.text, variance);
    }
    in.expect(Tok::Semi);
  }
  in.expect(Tok::RBrace);
  return make_alphabet(std::move(entries));
}

FileAst parse_file_ast(std::string_view text) {
  Cursor in(tokenize(text));
  FileAst ast;
  ast.alphabet = parse_header(in);
  while (!in.at(Tok::End)) {
    FileAst::Item item;
    if (in.at_keyword("states") && in.peek(1).kind == Tok::Colon) {
      in.take();
      in.take();
      auto decl = std::make_unique<StateDecl>();
      decl->names = parse_names(in);
      if (decl->names.empty()) in.fail("expected state name");
      in.expect(Tok::Semi);
      item.states = std::move(decl);
    } else if (in.at(Tok::Ident) && in.peek(1).kind == Tok::Equals) {
      auto def = std::make_unique<Definition>();
      def->name = in.take();
      in.take();
      def->body = parse_proc(in);
      in.expect(Tok::Semi);
      item.definition = std::move(def);
    } else if (in.at(Tok::Ident) && in.peek(1).kind == Tok::Dash) {
      auto tr = std::make_unique<TransitionDecl>();
      tr->source = in.take();
      in.take();
      tr->action = in.expect(Tok::Ident);
      in.expect(Tok::Arrow);
      tr->target = in.expect(Tok::Ident);
      in.expect(Tok::Semi);
      item.transition = std::move(tr);
    } else {
      in.fail("expected definition, state declaration or transition");
    }
    ast.items.push_back(std::move(item));
  }
  return ast;
}

// Turns the file's items into one transition system.
class SystemBuilder {
 public:
  SystemBuilder(const Alphabet& alphabet, std::set<std::string> reserved)
      : alphabet_(alphabet), reserved_(std::move(reserved)) {}

  void declare_state(const Token& name) {
    if (scope_.count(name.text))
      throw ParseError(name.line, name.column, "duplicate name '" + name.text + "'");
    const StateId s = new_state(name.text);
    scope_[name.text] = s;
    declared_.insert(name.text);
    named_.push_back({name.text, s});
  }

  void add_transition(const TransitionDecl& tr) {
    const StateId source = declared(tr.source);
    const ActionId action = action_of(tr.action);
    const StateId target = declared(tr.target);
    edges_[source].emplace_back(action, target);
  }

  void define(const Token& name, const Term& body) {
    if (scope_.count(name.text))
      throw ParseError(name.line, name.column, "duplicate name '" + name.text + "'");
    owner_ = name.text;
    counter_ = 0;
    const StateId root = new_state(name.text);
    edges_[root] = edges_of(body);
    scope_[name.text] = root;
    named_.push_back({name.text, root});
  }

  void define_extra(std::string display, const Term& body) {
    std::swap(counter_, extra_counter_);
    owner_ = fresh_name("term");
    std::swap(counter_, extra_counter_);
    counter_ = 0;
    const StateId root = new_state(owner_);
    edges_[root] = edges_of(body);
    named_.push_back({std::move(display), root});
  }

  SystemFile finish() && {
    std::vector<Transition> transitions;
    for (StateId s = 0; s < edges_.size(); ++s)
      for (const auto& [a, t] : edges_[s]) transitions.push_back({s, a, t});
    SystemFile file;
    file.alphabet = alphabet_;
    // build_lts sorts states by name; remap the named roots accordingly.
    std::vector<std::string> names = names_;
    file.lts = build_lts(alphabet_, std::move(names), std::move(transitions));
    for (auto& n : named_) file.named.push_back({n.name, *file.lts.find(names_[n.state])});
    return file;
  }

 private:
  using Edges = std::vector<std::pair<ActionId, StateId>>;

  StateId new_state(const std::string& name) {
    reserved_.insert(name);
    names_.push_back(name);
    edges_.emplace_back();
    return static_cast<StateId>(names_.size() - 1);
  }

  std::string fresh_name(const std::string& stem) {
    std::string candidate;
    do {
      candidate = stem + "_" + std::to_string(++counter_);
    } while (reserved_.count(candidate));
    return candidate;
  }

  ActionId action_of(const Token& t) const {
    auto a = alphabet_.find(t.text);
    if (!a) throw ParseError(t.line, t.column, "undeclared action '" + t.text + "'");
    return *a;
  }

  StateId declared(const Token& t) const {
    if (!declared_.count(t.text))
      throw ParseError(t.line, t.column, "unknown state '" + t.text + "'");
    return scope_.at(t.text);
  }

  StateId resolve(const std::string& name, std::size_t line, std::size_t column) const {
    auto it = scope_.find(name);
    if (it == scope_.end()) throw ParseError(line, column, "undefined name '" + name + "'");
    return it->second;
  }

  // Outgoing transitions of a state that behaves as `term`.
  Edges edges_of(const Term& term) {
    switch (term.kind) {
      case Term::Nil:
        return {};
      case Term::Prefix: {
        const ActionId a = action_of(Token{Tok::Ident, term.name, term.line, term.column});
        return {{a, target_of(*term.children.front())}};
      }
      case Term::Choice: {
        Edges out = edges_of(*term.children[0]);
        Edges right = edges_of(*term.children[1]);
        out.insert(out.end(), right.begin(), right.end());
        return out;
      }
      case Term::Ref:
        return edges_[resolve(term.name, term.line, term.column)];
    }
    return {};
  }

  // State reached after a prefix.
  StateId target_of(const Term& term) {
    if (term.kind == Term::Ref) return resolve(term.name, term.line, term.column);
    const StateId s = new_state(fresh_name(owner_));
    Edges e = edges_of(term);
    edges_[s] = std::move(e);
    return s;
  }

  const Alphabet& alphabet_;
  std::set<std::string> reserved_;
  std::vector<std::string> names_;
  std::vector<Edges> edges_;
  std::map<std::string, StateId> scope_;
  std::set<std::string> declared_;
  std::vector<NamedState> named_;
  std::string owner_;
  std::size_t counter_ = 0;
  std::size_t extra_counter_ = 0;
};

}  // namespace

std::optional<StateId> SystemFile::find(std::string_view name) const {
  for (const auto& n : named)
    if (n.name == name) return n.state;
  return std::nullopt;
}

SystemFile parse_system_file(std::string_view text, std::span<const std::string> extra_terms) {
  FileAst ast = parse_file_ast(text);

  std::set<std::string> reserved;
  for (const auto& item : ast.items) {
    if (item.definition) reserved.insert(item.definition->name.text);
    if (item.states)
      for (const auto& n : item.states->names) reserved.insert(n.text);
  }

  SystemBuilder builder(ast.alphabet, std::move(reserved));
  // Declared states and their transitions first: definitions may use them as
  // summands, and their outgoing transitions must be complete by then.
  for (const auto& item : ast.items)
    if (item.states)
      for (const auto& n : item.states->names) builder.declare_state(n);
  for (const auto& item : ast.items)
    if (item.transition) builder.add_transition(*item.transition);
  for (const auto& item : ast.items)
    if (item.definition) builder.define(item.definition->name, *item.definition->body);

  for (const auto& extra : extra_terms) {
    Cursor in(tokenize(extra));
    auto term = parse_proc(in);
    in.expect(Tok::End);
    builder.define_extra(extra, *term);
  }
  return std::move(builder).finish();
}

SystemFile parse_process_file(std::string_view text) { return parse_system_file(text); }

SystemFile parse_lts_file(std::string_view text) { return parse_system_file(text); }

namespace {

Formula parse_disjunction(Cursor& in, const Alphabet& alphabet);

ActionId bound_action(Cursor& in, const Alphabet& alphabet, Tok close) {
  Token name = in.expect(Tok::Ident);
  auto a = alphabet.find(name.text);
  if (!a) throw ParseError(name.line, name.column, "unknown action '" + name.text + "'");
  in.expect(close);
  return *a;
}

Formula parse_unary(Cursor& in, const Alphabet& alphabet) {
  if (in.at_keyword("tt")) {
    in.take();
    return Formula::tt();
  }
  if (in.at_keyword("ff")) {
    in.take();
    return Formula::ff();
  }
  if (in.at(Tok::LParen)) {
    in.take();
    Formula inner = parse_disjunction(in, alphabet);
    in.expect(Tok::RParen);
    return inner;
  }
  FormulaKind kind;
  Tok close;
  if (in.at(Tok::Less)) {
    kind = FormulaKind::Diamond;
    close = Tok::Greater;
  } else if (in.at(Tok::LBracket)) {
    kind = FormulaKind::Box;
    close = Tok::RBracket;
  } else if (in.at(Tok::LBrace)) {
    kind = FormulaKind::Conformance;
    close = Tok::RBrace;
  } else {
    in.fail("expected formula");
  }
  in.take();
  const ActionId a = bound_action(in, alphabet, close);
  return Formula::make(kind, {parse_unary(in, alphabet)}, a);
}

Formula parse_conjunction(Cursor& in, const Alphabet& alphabet) {
  std::vector<Formula> parts{parse_unary(in, alphabet)};
  while (in.at(Tok::Amp)) {
    in.take();
    parts.push_back(parse_unary(in, alphabet));
  }
  return parts.size() == 1 ? parts.front() : Formula::make(FormulaKind::And, std::move(parts));
}

Formula parse_disjunction(Cursor& in, const Alphabet& alphabet) {
  std::vector<Formula> parts{parse_conjunction(in, alphabet)};
  while (in.at(Tok::Bar)) {
    in.take();
    parts.push_back(parse_conjunction(in, alphabet));
  }
  return parts.size() == 1 ? parts.front() : Formula::make(FormulaKind::Or, std::move(parts));
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text, const Alphabet& alphabet) {
  Cursor in(tokenize(text));
  Formula f = parse_disjunction(in, alphabet);
  if (!in.at(Tok::End)) in.fail("unexpected trailing input");
  return f;
}

std::string to_alphabet_header(const Alphabet& alphabet) {
  std::string out = "alphabet {\n";
  out += "  covariant: " + join(alphabet.names_with(Variance::Covariant)) + ";\n";
  out += "  contravariant: " + join(alphabet.names_with(Variance::Contravariant)) + ";\n";
  out += "  bivariant: " + join(alphabet.names_with(Variance::Bivariant)) + ";\n";
  out += "}\n";
  return out;
}

std::string to_lts_file(const Lts& lts) {
  std::string out = to_alphabet_header(lts.alphabet());
  if (lts.size() > 0) out += "states: " + join(lts.names()) + ";\n";
  for (const auto& t : lts.transitions())
    out += lts.name(t.source) + " -" + lts.alphabet().name(t.action) + "-> " + lts.name(t.target) + ";\n";
  return out;
}

}  // namespace covsim

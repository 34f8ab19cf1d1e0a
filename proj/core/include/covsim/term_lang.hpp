#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covsim/formula.hpp"
#include "covsim/lts.hpp"

namespace covsim {

/// A state the file gave a name to: a process definition, a declared state,
/// or an extra term compiled on request.
struct NamedState {
  std::string name;
  StateId state;
};

/// A parsed system file. One Lts holds every definition and every declared
/// state of the file.
struct SystemFile {
  Alphabet alphabet;
  Lts lts;
  std::vector<NamedState> named;  // in file order, extra terms last

  std::optional<StateId> find(std::string_view name) const;
};

/// Parses a system file:
///
///   alphabet { covariant: coin; contravariant: coke, lemonade; bivariant: ; }
///   onecoke = coin.coke.0;
///   states: s, t;
///   s -a-> t;
///
/// Each definition becomes a state named after it; every prefix continuation
/// gets a fresh state named `<definition>_<k>`. A name used as a prefix
/// continuation reuses that state; a name used as a summand contributes its
/// outgoing transitions. A definition may use earlier definitions and any
/// declared state, never itself. Transition endpoints must be declared with
/// `states:`.
///
/// `extra_terms` are process terms (e.g. "0" or "a.p + b.0") compiled after
/// the file's definitions; each is registered in `named` under its own text.
/// Throws ParseError with a 1-based position.
SystemFile parse_system_file(std::string_view text, std::span<const std::string> extra_terms = {});

/// Process-term files: the system-file grammar, used for definitions.
SystemFile parse_process_file(std::string_view text);

/// Flat files: the system-file grammar, used for declared states and
/// transitions (cycles allowed).
SystemFile parse_lts_file(std::string_view text);

/// Parses a formula and binds its actions against `alphabet`.
///   phi := tt | ff | <a>phi | [a]phi | {a}phi | phi & phi | phi | phi | (phi)
/// `&` binds tighter than `|`; modalities bind tightest. Unbracketed chains
/// of one operator become a single n-ary node.
Formula parse_formula(std::string_view text, const Alphabet& alphabet);

/// The alphabet header in file syntax.
std::string to_alphabet_header(const Alphabet& alphabet);

/// Writes `lts` in the flat file format; parse_lts_file reads it back to an
/// identical system.
std::string to_lts_file(const Lts& lts);

}  // namespace covsim

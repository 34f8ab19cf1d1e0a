#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "covsim/check.hpp"
#include "covsim/distinguisher.hpp"
#include "covsim/error.hpp"
#include "covsim/modal_logic.hpp"
#include "covsim/oracle.hpp"
#include "covsim/random_systems.hpp"
#include "covsim/term_lang.hpp"

namespace covsim::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string left;
  std::string right;
  std::vector<std::string> states;
  std::string formula;
  std::string kind = "cc";
  std::optional<std::string> fragment;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> depth;
  std::size_t state_count = 4;
  std::size_t actions = 2;
  double density = 1.0;
  std::string variance = "mixed";
  bool random_formula = false;
  std::size_t width = 2;
};

const std::map<std::string, PreorderKind> kKinds{
    {"sim", PreorderKind::Sim}, {"cc", PreorderKind::CC}, {"conf", PreorderKind::Conf}};

const std::map<std::string, Fragment> kFragments{{"s", Fragment::S},
                                                 {"sbar", Fragment::SBar},
                                                 {"cc", Fragment::CC},
                                                 {"cs", Fragment::CS},
                                                 {"any", Fragment::Any}};

// A system file plus the states named on the command line.
struct Loaded {
  std::shared_ptr<const Lts> lts;
  std::vector<StateId> states;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Resolves each argument as a named definition or declared state, then as any
// state of the system, and otherwise compiles it as a process term ("0",
// "a.p + b.0", ...).
Loaded load(const std::string& path, const std::vector<std::string>& names) {
  const std::string text = read_file(path);
  SystemFile file = parse_system_file(text);

  auto lookup = [](const SystemFile& f, const std::string& name) -> std::optional<StateId> {
    if (auto s = f.find(name)) return s;
    return f.lts.find(name);
  };

  std::vector<std::string> extra;
  for (const auto& n : names)
    if (!lookup(file, n) && std::find(extra.begin(), extra.end(), n) == extra.end())
      extra.push_back(n);
  if (!extra.empty()) file = parse_system_file(text, extra);

  Loaded loaded;
  for (const auto& n : names) loaded.states.push_back(*lookup(file, n));
  loaded.lts = std::make_shared<const Lts>(std::move(file.lts));
  return loaded;
}

PreorderKind kind_of(const Options& o) { return kKinds.at(o.kind); }

json pairs_json(const Lts& lts, const Relation& r) {
  json out = json::array();
  for (const auto& [p, q] : r.pairs()) out.push_back({lts.name(p), lts.name(q)});
  return out;
}

std::string reason_text(const CheckResult& r) {
  if (!r.reason) return {};
  return "round " + std::to_string(r.reason->round) + ", " +
         describe(r.reason->violation, *r.system, r.left, r.right);
}

int cmd_parse(const Options& o, std::ostream& out) {
  const SystemFile file = parse_system_file(read_file(o.file));
  if (o.json) {
    json transitions = json::array();
    for (const auto& t : file.lts.transitions())
      transitions.push_back({file.lts.name(t.source), file.alphabet.name(t.action),
                             file.lts.name(t.target)});
    json named = json::object();
    for (const auto& n : file.named) named[n.name] = file.lts.name(n.state);
    out << json{{"alphabet",
                 {{"covariant", file.alphabet.names_with(Variance::Covariant)},
                  {"contravariant", file.alphabet.names_with(Variance::Contravariant)},
                  {"bivariant", file.alphabet.names_with(Variance::Bivariant)}}},
                {"states", file.lts.names()},
                {"transitions", transitions},
                {"named", named}}
               .dump()
        << '\n';
  } else {
    out << to_lts_file(file.lts);
    for (const auto& n : file.named) out << "# " << n.name << " = " << file.lts.name(n.state) << '\n';
  }
  return kHolds;
}

int cmd_preorder(const Options& o, std::ostream& out) {
  const auto loaded = load(o.file, {o.left, o.right});
  const auto result = holds(kind_of(o), loaded.lts, loaded.states[0], loaded.states[1]);
  const Lts& lts = *result.system;
  if (o.json) {
    json doc{{"kind", o.kind}, {"left", o.left}, {"right", o.right}, {"holds", result.holds}};
    if (result.holds) {
      doc["witness"] = pairs_json(lts, result.witness);
    } else {
      doc["formula"] = result.formula ? json(to_string(*result.formula, lts.alphabet())) : json(nullptr);
      doc["round"] = result.reason->round;
      doc["violation"] = describe(result.reason->violation, lts, result.left, result.right);
    }
    out << doc.dump() << '\n';
  } else if (result.holds) {
    out << "holds: " << o.left << " <=" << o.kind << " " << o.right << '\n';
    out << "witness:\n";
    for (const auto& [p, q] : result.witness.pairs())
      out << "  " << lts.name(p) << " " << lts.name(q) << '\n';
  } else {
    out << "fails: " << o.left << " <=" << o.kind << " " << o.right << '\n';
    if (result.formula) out << "formula: " << to_string(*result.formula, lts.alphabet()) << '\n';
    out << "reason: " << reason_text(result) << '\n';
  }
  return result.holds ? kHolds : kFails;
}

int cmd_distinguish(const Options& o, std::ostream& out) {
  if (kind_of(o) == PreorderKind::Sim) throw CLI::ValidationError("--kind", "distinguish supports cc and conf");
  const auto loaded = load(o.file, {o.left, o.right});
  const auto result = holds(kind_of(o), loaded.lts, loaded.states[0], loaded.states[1]);
  const auto& alphabet = result.system->alphabet();
  if (o.json) {
    out << json{{"kind", o.kind},
                {"left", o.left},
                {"right", o.right},
                {"formula", result.formula ? json(to_string(*result.formula, alphabet)) : json(nullptr)}}
               .dump()
        << '\n';
  } else if (result.formula) {
    out << to_string(*result.formula, alphabet) << '\n';
  } else {
    out << "none: " << o.left << " <=" << o.kind << " " << o.right << '\n';
  }
  return result.holds ? kHolds : kFails;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const auto loaded = load(o.file, {o.left, o.right});
  const auto forward = holds(kind_of(o), loaded.lts, loaded.states[0], loaded.states[1]);
  const auto backward = holds(kind_of(o), loaded.lts, loaded.states[1], loaded.states[0]);
  const bool equivalent = forward.holds && backward.holds;
  const auto& alphabet = loaded.lts->alphabet();
  auto direction = [&](const CheckResult& r) {
    json d{{"holds", r.holds}};
    d["formula"] = r.formula ? json(to_string(*r.formula, alphabet)) : json(nullptr);
    return d;
  };
  if (o.json) {
    out << json{{"kind", o.kind},
                {"left", o.left},
                {"right", o.right},
                {"equivalent", equivalent},
                {"forward", direction(forward)},
                {"backward", direction(backward)}}
               .dump()
        << '\n';
  } else {
    out << (equivalent ? "equivalent" : "not equivalent") << " (" << o.kind << ")\n";
    for (const auto* r : {&forward, &backward}) {
      const auto& l = r == &forward ? o.left : o.right;
      const auto& g = r == &forward ? o.right : o.left;
      out << "  " << l << " <=" << o.kind << " " << g << ": " << (r->holds ? "holds" : "fails");
      if (r->formula) out << ", formula " << to_string(*r->formula, alphabet);
      out << '\n';
    }
  }
  return equivalent ? kHolds : kFails;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto loaded = load(o.file, {o.left});
  const Lts& lts = *loaded.lts;
  const Formula f = parse_formula(o.formula, lts.alphabet());
  if (o.fragment && !fragment_member(f, kFragments.at(*o.fragment), lts.alphabet()))
    throw Error("formula is not in fragment " + *o.fragment);
  const bool value = eval(lts, loaded.states[0], f);
  if (o.json) {
    out << json{{"state", o.left}, {"formula", to_string(f, lts.alphabet())}, {"value", value}}.dump()
        << '\n';
  } else {
    out << (value ? "true" : "false") << '\n';
  }
  return value ? kHolds : kFails;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto loaded = load(o.file, o.states);
  Lts lts = *loaded.lts;
  if (!loaded.states.empty()) lts = restrict_to_reachable(lts, loaded.states).lts;
  const std::size_t max_level = o.depth.value_or(default_max_level(lts));

  std::vector<Pairing> pairings;
  for (const auto& p : characterization_pairings()) {
    if (o.fragment && p.fragment != kFragments.at(*o.fragment)) continue;
    if (o.kind != "all" && p.kind != kind_of(o)) continue;
    pairings.push_back(p);
  }
  if (pairings.empty()) throw CLI::ValidationError("--kind/--fragment", "no such pairing");

  bool saturated = true;
  json reports = json::array();
  json mismatches = json::array();
  std::string text;
  for (const auto& p : pairings) {
    const auto report = agreement_report(lts, p.kind, p.fragment, max_level);
    saturated = saturated && report.saturated;
    text += render(report, lts);
    reports.push_back({{"kind", to_string(p.kind)},
                       {"fragment", to_string(p.fragment)},
                       {"saturated", report.saturated},
                       {"levels", report.levels},
                       {"vectors", report.vectors}});
    for (const auto& m : report.mismatches) {
      json entry{{"kind", to_string(p.kind)},
                 {"fragment", to_string(p.fragment)},
                 {"left", lts.name(m.p)},
                 {"right", lts.name(m.q)},
                 {"simulation", m.simulation_holds},
                 {"logic", m.logic_holds}};
      if (m.separating) entry["formula"] = to_string(*m.separating, lts.alphabet());
      if (m.failing) entry["violation"] = describe(m.failing->violation, lts, m.p, m.q);
      mismatches.push_back(std::move(entry));
    }
  }
  if (o.json) {
    out << json{{"saturated", saturated}, {"mismatches", mismatches}, {"reports", reports}}.dump()
        << '\n';
  } else {
    out << text;
    out << (saturated && mismatches.empty() ? "agreement" : "NO agreement") << '\n';
  }
  return saturated && mismatches.empty() ? kHolds : kFails;
}

int cmd_random(const Options& o, std::ostream& out) {
  Alphabet alphabet;
  if (o.variance == "mixed") {
    alphabet = random_alphabet(o.seed, o.actions);
  } else {
    const std::map<std::string, Variance> variances{
        {"cov", Variance::Covariant}, {"contra", Variance::Contravariant}, {"bi", Variance::Bivariant}};
    alphabet = uniform_alphabet(o.actions, variances.at(o.variance));
  }

  std::string text;
  if (o.random_formula) {
    const Fragment fragment = kFragments.at(o.fragment.value_or("any"));
    text = to_string(random_formula(o.seed, fragment, alphabet, o.depth.value_or(3), o.width),
                     alphabet);
    if (o.json) {
      out << json{{"seed", o.seed}, {"fragment", to_string(fragment)}, {"formula", text}}.dump() << '\n';
    } else {
      out << text << '\n';
    }
  } else {
    text = to_lts_file(random_lts(o.seed, o.state_count, alphabet, o.density));
    if (o.json) {
      out << json{{"seed", o.seed}, {"lts", text}}.dump() << '\n';
    } else {
      out << text;
    }
  }
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulation preorders, modal logics and distinguishing formulas", "simcheck"};
  app.require_subcommand(1);
  Options o;

  auto kind_option = [&](CLI::App* cmd, bool allow_all = false) {
    std::vector<std::string> choices{"sim", "cc", "conf"};
    if (allow_all) choices.push_back("all");
    cmd->add_option("--kind", o.kind, "Preorder kind")->check(CLI::IsMember(choices));
  };
  auto fragment_option = [&](CLI::App* cmd) {
    cmd->add_option("--fragment", o.fragment, "Logic fragment")
        ->check(CLI::IsMember({"s", "sbar", "cc", "cs", "any"}));
  };
  auto json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "Machine-readable output"); };
  auto pair_command = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    kind_option(cmd);
    json_flag(cmd);
    cmd->add_option("file", o.file, "System file")->required();
    cmd->add_option("left", o.left, "Left state, definition or process term")->required();
    cmd->add_option("right", o.right, "Right state, definition or process term")->required();
    return cmd;
  };

  auto* parse = app.add_subcommand("parse", "Parse a system file and print it in flat form");
  parse->add_option("file", o.file)->required();
  json_flag(parse);

  auto* preorder = pair_command("preorder", "Decide left <= right; print a witness or a formula");
  auto* distinguish = pair_command("distinguish", "Print a formula separating left from right");
  auto* equivalence = pair_command("equiv", "Decide left <= right and right <= left");

  auto* evaluate = app.add_subcommand("eval", "Evaluate a formula at a state");
  evaluate->add_option("file", o.file)->required();
  evaluate->add_option("state", o.left)->required();
  evaluate->add_option("--formula", o.formula)->required();
  fragment_option(evaluate);
  json_flag(evaluate);

  auto* oracle = app.add_subcommand("oracle", "Compare fixed-point preorders with logical preorders");
  o.kind = "cc";
  oracle->add_option("file", o.file)->required();
  oracle->add_option("states", o.states, "Restrict to states reachable from these");
  kind_option(oracle, true);
  fragment_option(oracle);
  oracle->add_option("--depth", o.depth, "Maximum enumeration level (default 2*n^2)");
  json_flag(oracle);

  auto* random = app.add_subcommand("random", "Print a seeded random system or formula");
  random->add_option("--seed", o.seed);
  random->add_option("--states", o.state_count)->check(CLI::PositiveNumber);
  random->add_option("--actions", o.actions);
  random->add_option("--density", o.density)->check(CLI::NonNegativeNumber);
  random->add_option("--variance", o.variance)->check(CLI::IsMember({"cov", "contra", "bi", "mixed"}));
  random->add_flag("--formula", o.random_formula, "Generate a formula instead of a system");
  fragment_option(random);
  random->add_option("--depth", o.depth, "Formula depth");
  random->add_option("--width", o.width, "Maximum junction width");
  json_flag(random);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    // The oracle default covers every pairing unless --kind narrows it.
    const bool oracle_kind_given = std::any_of(args.begin(), args.end(), [](const std::string& a) {
      return a == "--kind" || a.rfind("--kind=", 0) == 0;
    });
    app.parse(reversed);
    if (oracle->parsed() && !oracle_kind_given) o.kind = "all";

    if (parse->parsed()) return cmd_parse(o, out);
    if (preorder->parsed()) return cmd_preorder(o, out);
    if (distinguish->parsed()) return cmd_distinguish(o, out);
    if (equivalence->parsed()) return cmd_equiv(o, out);
    if (evaluate->parsed()) return cmd_eval(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (random->parsed()) return cmd_random(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kBadInput;
  } catch (const std::exception& e) {
    err << "simcheck: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace covsim::cli

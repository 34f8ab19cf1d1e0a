// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "covsim/check.hpp"
#include "covsim/distinguisher.hpp"
#include "covsim/modal_logic.hpp"
#include "covsim/oracle.hpp"
#include "covsim/random_systems.hpp"
#include "covsim/term_lang.hpp"
#include "fixtures.hpp"

using namespace covsim;

namespace {

// Corpus sizes and bounds. All checks are exact; there is no numeric slack.
constexpr std::size_t kDegenerateSystems = 200;
constexpr std::size_t kDegenerateMaxStates = 4;
constexpr std::size_t kDegenerateMaxActions = 3;
constexpr double kMaxDensity = 1.5;
constexpr std::size_t kOracleSystems = 100;
constexpr std::size_t kOracleMaxStates = 4;
constexpr std::size_t kOracleMaxActions = 2;
constexpr std::size_t kExtraFailingPairs = 1000;  // per kind
constexpr std::size_t kModalityTriples = 1000;
constexpr std::size_t kCandidateRelations = 100;  // per kind

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Pairs removed by a refinement, kept for the distinguisher criterion.
struct FailingPair {
  std::shared_ptr<const Lts> lts;
  PreorderKind kind;
  StateId p, q;
};
std::vector<FailingPair> g_failing;

void collect_failing(const std::shared_ptr<const Lts>& lts, PreorderKind kind) {
  if (kind == PreorderKind::Sim) return;
  const auto rel = greatest_relation(kind, *lts);
  for (StateId p = 0; p < lts->size(); ++p)
    for (StateId q = 0; q < lts->size(); ++q)
      if (!rel.alive.contains(p, q)) g_failing.push_back({lts, kind, p, q});
}

// Random system with between 1 and max_states states and 1..max_actions actions.
Lts random_system(std::uint64_t seed, std::size_t max_states, std::size_t max_actions) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::size_t n = 1 + rng.below(max_states);
  const std::size_t k = 1 + rng.below(max_actions);
  const double density = kMaxDensity * rng.unit();
  return random_lts(seed, n, random_alphabet(seed + 1, k), density);
}

Lts with_variance(const Lts& lts, Variance v) {
  return build_lts(lts.alphabet().with_uniform_variance(v), lts.names(), lts.transitions());
}

// Plain bisimulation clauses, written out without the library's checker.
bool is_bisimulation(const Lts& lts, const Relation& r) {
  for (const auto& [p, q] : r.pairs())
    for (ActionId a = 0; a < lts.alphabet().size(); ++a) {
      for (StateId p1 : lts.successors(p, a)) {
        bool matched = false;
        for (StateId q1 : lts.successors(q, a)) matched = matched || r.contains(p1, q1);
        if (!matched) return false;
      }
      for (StateId q1 : lts.successors(q, a)) {
        bool matched = false;
        for (StateId p1 : lts.successors(p, a)) matched = matched || r.contains(p1, q1);
        if (!matched) return false;
      }
    }
  return true;
}

// Bisimilarity by naive partition refinement on state signatures.
Relation bisimilarity(const Lts& lts) {
  const auto n = lts.size();
  std::vector<std::size_t> block(n, 0);
  for (;;) {
    std::vector<std::vector<std::vector<std::size_t>>> signature(n);
    for (StateId p = 0; p < n; ++p) {
      signature[p].push_back({block[p]});
      for (ActionId a = 0; a < lts.alphabet().size(); ++a) {
        std::vector<std::size_t> targets;
        for (StateId t : lts.successors(p, a)) targets.push_back(block[t]);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        signature[p].push_back(targets);
      }
    }
    std::vector<std::size_t> next(n);
    std::vector<std::vector<std::vector<std::size_t>>> seen;
    for (StateId p = 0; p < n; ++p) {
      auto it = std::find(seen.begin(), seen.end(), signature[p]);
      next[p] = static_cast<std::size_t>(it - seen.begin());
      if (it == seen.end()) seen.push_back(signature[p]);
    }
    const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                        std::set<std::size_t>(block.begin(), block.end()).size();
    block = next;
    if (stable) break;
  }
  Relation r(n);
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q)
      if (block[p] == block[q]) r.insert(p, q);
  return r;
}

Outcome vending_cc_facts() {
  Outcome o;
  const auto file = testing::vending();
  const auto lts = std::make_shared<const Lts>(file.lts);
  auto s = [&](const char* n) { return testing::state(file, n); };
  o.expect(holds(PreorderKind::CC, lts, s("cokeorlemonade"), s("onecoke")).holds,
           "cokeorlemonade <=cc onecoke should hold");
  o.expect(!holds(PreorderKind::CC, lts, s("onecoke"), s("cokeorlemonade")).holds,
           "onecoke <=cc cokeorlemonade should fail");
  o.expect(holds(PreorderKind::Sim, lts, s("onecoke"), s("cokeorlemonade")).holds,
           "onecoke <=sim cokeorlemonade should hold");
  g_failing.push_back({lts, PreorderKind::CC, s("onecoke"), s("cokeorlemonade")});
  return o;
}

Outcome formula_goldens() {
  Outcome o;
  const auto file = testing::vending();
  const auto& lts = file.lts;
  const struct {
    const char* state;
    const char* formula;
    bool value;
  } cases[] = {
      {"onecoke", "<coin>[lemonade]ff", true},
      {"cokeorlemonade", "<coin>[lemonade]ff", false},
      {"choice_coke_lemonade", "<coin><lemonade>tt", true},
      {"onecoke", "<coin><lemonade>tt", false},
      {"0", "[coin]ff", true},
      {"onecoke", "[coin]ff", false},
  };
  for (const auto& c : cases)
    o.expect(eval(lts, testing::state(file, c.state), parse_formula(c.formula, lts.alphabet())) == c.value,
             std::string(c.state) + " |= " + c.formula);
  return o;
}

Outcome conformance_facts() {
  Outcome o;
  const auto vending = testing::vending();
  const auto offers = testing::offers();
  const auto v = std::make_shared<const Lts>(vending.lts);
  const auto f = std::make_shared<const Lts>(offers.lts);
  auto vs = [&](const char* n) { return testing::state(vending, n); };
  auto fs = [&](const char* n) { return testing::state(offers, n); };
  const struct {
    std::shared_ptr<const Lts> lts;
    StateId p, q;
    const char* what;
  } cases[] = {
      {v, vs("choice_coke_lemonade"), vs("onecoke"), "choice_coke_lemonade <=conf onecoke"},
      {v, vs("onecoke"), vs("cokeorlemonade"), "onecoke <=conf cokeorlemonade"},
      {v, vs("0"), vs("onecoke"), "0 <=conf onecoke"},
      {f, fs("a_only"), fs("a_or_b"), "a.0 <=conf a.0 + b.0"},
      {f, fs("ap_aq"), fs("ap"), "a.p + a.q <=conf a.p"},
  };
  for (const auto& c : cases) o.expect(holds(PreorderKind::Conf, c.lts, c.p, c.q).holds, c.what);
  o.expect(equiv(PreorderKind::Conf, {v, vs("slot_machine")}, {v, vs("pluff_machine")}),
           "slot_machine ~conf pluff_machine");
  collect_failing(v, PreorderKind::Conf);
  collect_failing(f, PreorderKind::Conf);
  return o;
}

Outcome degenerate_partitions() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < kDegenerateSystems; ++seed) {
    const auto lts = random_system(seed, kDegenerateMaxStates, kDegenerateMaxActions);
    const auto tag = " (seed " + std::to_string(seed) + ")";
    const auto sim = greatest_relation(PreorderKind::Sim, lts).alive;

    auto cov = std::make_shared<const Lts>(with_variance(lts, Variance::Covariant));
    auto contra = std::make_shared<const Lts>(with_variance(lts, Variance::Contravariant));
    auto bi = std::make_shared<const Lts>(with_variance(lts, Variance::Bivariant));
    o.expect(greatest_relation(PreorderKind::CC, *cov).alive == sim, "all covariant != sim" + tag);
    o.expect(greatest_relation(PreorderKind::CC, *contra).alive == sim.inverse(),
             "all contravariant != sim inverse" + tag);
    const auto b = greatest_relation(PreorderKind::CC, *bi).alive;
    o.expect(b == b.inverse(), "all bivariant not symmetric" + tag);
    o.expect(is_bisimulation(*bi, b), "all bivariant fails bisimulation clauses" + tag);
    o.expect(b == bisimilarity(*bi), "all bivariant differs from bisimilarity" + tag);
    for (const auto& s : {cov, contra, bi}) collect_failing(s, PreorderKind::CC);
  }
  return o;
}

Outcome characterization() {
  Outcome o;
  std::vector<std::shared_ptr<const Lts>> systems{std::make_shared<const Lts>(testing::vending().lts),
                                                  std::make_shared<const Lts>(testing::offers().lts)};
  for (std::uint64_t seed = 0; seed < kOracleSystems; ++seed)
    systems.push_back(std::make_shared<const Lts>(random_system(1000 + seed, kOracleMaxStates, kOracleMaxActions)));

  for (std::size_t i = 0; i < systems.size(); ++i) {
    const Lts& lts = *systems[i];
    const auto budget = default_max_level(lts);
    const auto tag = " (instance " + std::to_string(i) + ")";
    for (const auto& pair : characterization_pairings()) {
      const auto report = agreement_report(lts, pair.kind, pair.fragment, budget);
      o.expect(report.saturated, "not saturated for " + std::string(to_string(pair.fragment)) + tag);
      o.expect(report.mismatches.empty(), render(report, lts) + tag);
    }
    o.expect(logical_preorder(lts, Fragment::S, budget).relation ==
                 logical_preorder(lts, Fragment::SBar, budget).relation,
             "s and sbar preorders differ" + tag);
    collect_failing(systems[i], PreorderKind::CC);
    collect_failing(systems[i], PreorderKind::Conf);
  }
  return o;
}

Outcome distinguisher_soundness() {
  Outcome o;
  // Additional random failing pairs, drawn one per system until enough.
  for (auto kind : {PreorderKind::CC, PreorderKind::Conf}) {
    std::size_t added = 0;
    for (std::uint64_t seed = 50000; added < kExtraFailingPairs; ++seed) {
      auto lts = std::make_shared<const Lts>(random_system(seed, 6, 3));
      const auto rel = greatest_relation(kind, *lts);
      std::vector<std::pair<StateId, StateId>> dead;
      for (StateId p = 0; p < lts->size(); ++p)
        for (StateId q = 0; q < lts->size(); ++q)
          if (!rel.alive.contains(p, q)) dead.emplace_back(p, q);
      if (dead.empty()) continue;
      Rng rng(seed);
      const auto [p, q] = dead[rng.below(dead.size())];
      g_failing.push_back({lts, kind, p, q});
      ++added;
    }
  }

  const Lts* cached = nullptr;
  PreorderKind cached_kind{};
  std::unique_ptr<AnnotatedRelation> rel;
  std::unique_ptr<Distinguisher> dist;
  for (const auto& f : g_failing) {
    if (cached != f.lts.get() || cached_kind != f.kind) {
      cached = f.lts.get();
      cached_kind = f.kind;
      dist.reset();
      rel = std::make_unique<AnnotatedRelation>(greatest_relation(f.kind, *f.lts));
      dist = std::make_unique<Distinguisher>(*f.lts, *rel);
    }
    const auto formula = (*dist)(f.p, f.q);
    const auto where = f.lts->name(f.p) + " vs " + f.lts->name(f.q) + " (" + std::string(to_string(f.kind)) + ")";
    o.expect(formula.has_value(), "no formula for " + where);
    if (!formula) continue;
    const auto fragment = f.kind == PreorderKind::CC ? Fragment::CC : Fragment::CS;
    const auto text = to_string(*formula, f.lts->alphabet());
    o.expect(fragment_member(*formula, fragment, f.lts->alphabet()), "outside fragment: " + text);
    o.expect(eval(*f.lts, f.p, *formula), "false at left: " + text + " for " + where);
    o.expect(!eval(*f.lts, f.q, *formula), "true at right: " + text + " for " + where);
  }
  o.detail = o.ok ? std::to_string(g_failing.size()) + " failing pairs" : o.detail;
  return o;
}

Outcome modality_identities() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < kModalityTriples; ++seed) {
    const auto lts = random_system(70000 + seed, 4, 3);
    Rng rng(seed);
    const auto p = static_cast<StateId>(rng.below(lts.size()));
    const auto a = static_cast<ActionId>(rng.below(lts.alphabet().size()));
    const auto phi = random_formula(seed, Fragment::Any, lts.alphabet(), 3, 3);
    const bool lhs = eval(lts, p, Formula::conformance(a, phi));
    const bool rhs = eval(lts, p, Formula::diamond(a, phi)) && eval(lts, p, Formula::box(a, phi));
    o.expect(lhs == rhs, "{a} decomposition, seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < kModalityTriples; ++seed) {
    const auto lts = random_system(80000 + seed, 4, 3);
    Rng rng(seed + 1);
    const auto p = static_cast<StateId>(rng.below(lts.size()));
    const auto a = static_cast<ActionId>(rng.below(lts.alphabet().size()));
    const auto phi = random_formula(2 * seed, Fragment::Any, lts.alphabet(), 3, 3);
    const auto psi = random_formula(2 * seed + 1, Fragment::Any, lts.alphabet(), 3, 3);
    const bool lhs = eval(lts, p, Formula::diamond(a, Formula::disj({phi, psi})));
    const bool rhs = eval(lts, p, Formula::disj({Formula::diamond(a, phi), Formula::diamond(a, psi)}));
    o.expect(lhs == rhs, "diamond distribution, seed " + std::to_string(seed));
  }
  return o;
}

Outcome preorder_sanity() {
  Outcome o;
  std::size_t accepted = 0;
  for (std::uint64_t seed = 0; seed < kDegenerateSystems; ++seed) {
    const auto lts = random_system(seed, kDegenerateMaxStates, kDegenerateMaxActions);
    const auto n = lts.size();
    for (auto kind : {PreorderKind::Sim, PreorderKind::CC, PreorderKind::Conf}) {
      const auto& r = greatest_relation(kind, lts).alive;
      const auto tag = std::string(to_string(kind)) + ", seed " + std::to_string(seed);
      for (StateId p = 0; p < n; ++p) o.expect(r.contains(p, p), "not reflexive: " + tag);
      for (StateId p = 0; p < n; ++p)
        for (StateId q = 0; q < n; ++q)
          for (StateId t = 0; t < n; ++t)
            if (r.contains(p, q) && r.contains(q, t)) o.expect(r.contains(p, t), "not transitive: " + tag);
    }
  }
  for (auto kind : {PreorderKind::Sim, PreorderKind::CC, PreorderKind::Conf}) {
    for (std::uint64_t i = 0; i < kCandidateRelations; ++i) {
      const auto lts = random_system(90000 + i, kDegenerateMaxStates, kDegenerateMaxActions);
      const auto alive = greatest_relation(kind, lts).alive;
      // Alternate plain random relations (mostly rejected) with pruned ones.
      const auto candidate = i % 2 == 0 ? random_relation(i, lts.size(), 0.5)
                                        : random_valid_relation(i, kind, lts, 0.7);
      if (!check_is_simulation(kind, lts, candidate).ok) continue;
      ++accepted;
      o.expect(candidate.subset_of(alive), "accepted candidate outside alive set, " +
                                               std::string(to_string(kind)) + " " + std::to_string(i));
    }
  }
  if (o.ok) o.detail = std::to_string(accepted) + " accepted candidates";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"vending machine cc and sim facts", vending_cc_facts},
      {"formula golden judgements", formula_goldens},
      {"conformance facts", conformance_facts},
      {"degenerate partitions", degenerate_partitions},
      {"logical characterization", characterization},
      {"distinguisher soundness", distinguisher_soundness},
      {"modality identities", modality_identities},
      {"preorder sanity", preorder_sanity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %zu %s: %zu checks%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.checks, o.detail.empty() ? "" : ", ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

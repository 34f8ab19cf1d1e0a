#include "covsim/oracle.hpp"

#include <array>
#include <unordered_map>

namespace covsim {

namespace {

bool has_ff_and_or(Fragment f) { return f != Fragment::S; }

bool has_ff(Fragment f) { return f == Fragment::SBar || f == Fragment::CC || f == Fragment::Any; }

class Enumerator {
 public:
  Enumerator(const Lts& lts, Fragment fragment) : lts_(lts), fragment_(fragment) {}

  void add(const Formula& f, SatVector v) {
    if (index_.count(v)) return;
    index_.emplace(v, out_.entries.size());
    out_.entries.push_back({f, std::move(v)});
  }

  Saturation run(std::size_t max_level) {
    add(Formula::tt(), SatVector(lts_.size(), true));
    if (has_ff(fragment_)) add(Formula::ff(), SatVector(lts_.size(), false));
    out_.level_sizes.push_back(out_.entries.size());

    std::size_t frontier = 0;
    for (std::size_t level = 1; level <= max_level; ++level) {
      const std::size_t known = out_.entries.size();
      // Only combinations involving an entry new at the previous level can
      // produce anything not already present.
      apply_modalities(frontier, known);
      combine(frontier, known);
      if (out_.entries.size() == known) {
        out_.saturated = true;
        break;
      }
      out_.level_sizes.push_back(out_.entries.size());
      frontier = known;
    }
    return std::move(out_);
  }

 private:
  void apply_modalities(std::size_t from, std::size_t to) {
    const auto& alphabet = lts_.alphabet();
    for (ActionId a = 0; a < alphabet.size(); ++a) {
      const bool diamond = fragment_ == Fragment::S || fragment_ == Fragment::SBar ||
                           fragment_ == Fragment::Any ||
                           (fragment_ == Fragment::CC && alphabet.is_covariant(a));
      const bool box = fragment_ == Fragment::Any ||
                       (fragment_ == Fragment::CC && alphabet.is_contravariant(a));
      const bool conformance = fragment_ == Fragment::CS || fragment_ == Fragment::Any;
      for (std::size_t i = from; i < to; ++i) {
        // Copy: add() may reallocate entries.
        const LevelEntry e = out_.entries[i];
        if (diamond) add(Formula::diamond(a, e.formula), diamond_vector(lts_, a, e.vector));
        if (box) add(Formula::box(a, e.formula), box_vector(lts_, a, e.vector));
        if (conformance)
          add(Formula::conformance(a, e.formula), conformance_vector(lts_, a, e.vector));
      }
    }
  }

  void combine(std::size_t from, std::size_t to) {
    const bool with_or = has_ff_and_or(fragment_);
    for (std::size_t j = from; j < to; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const LevelEntry x = out_.entries[i];
        const LevelEntry y = out_.entries[j];
        add(Formula::make(FormulaKind::And, {x.formula, y.formula}), x.vector & y.vector);
        if (with_or) add(Formula::make(FormulaKind::Or, {x.formula, y.formula}), x.vector | y.vector);
      }
    }
  }

  const Lts& lts_;
  Fragment fragment_;
  Saturation out_;
  std::unordered_map<SatVector, std::size_t, SatVectorHash> index_;
};

}  // namespace

Saturation saturate(const Lts& lts, Fragment fragment, std::size_t max_level) {
  return Enumerator(lts, fragment).run(max_level);
}

std::size_t default_max_level(const Lts& lts) { return 2 * lts.size() * lts.size(); }

std::optional<Formula> LogicalPreorder::separating(StateId p, StateId q) const {
  for (const auto& e : saturation.entries)
    if (e.vector.test(p) && !e.vector.test(q)) return e.formula;
  return std::nullopt;
}

LogicalPreorder logical_preorder(const Lts& lts, Fragment fragment, std::size_t max_level) {
  LogicalPreorder result;
  result.saturation = saturate(lts, fragment, max_level);
  result.saturated = result.saturation.saturated;

  const auto n = lts.size();
  result.relation = Relation(n);
  for (StateId p = 0; p < n; ++p) {
    // States satisfying everything p satisfies.
    SatVector above(n, true);
    for (const auto& e : result.saturation.entries)
      if (e.vector.test(p)) above &= e.vector;
    for (StateId q = 0; q < n; ++q)
      if (above.test(q)) result.relation.insert(p, q);
  }
  return result;
}

AgreementReport agreement_report(const Lts& lts, PreorderKind kind, Fragment fragment,
                                 std::size_t max_level) {
  const auto simulation = greatest_relation(kind, lts);
  const auto logic = logical_preorder(lts, fragment, max_level);

  AgreementReport report;
  report.kind = kind;
  report.fragment = fragment;
  report.saturated = logic.saturated;
  report.levels = logic.saturation.levels();
  report.vectors = logic.saturation.entries.size();
  for (StateId p = 0; p < lts.size(); ++p) {
    for (StateId q = 0; q < lts.size(); ++q) {
      const bool by_simulation = simulation.alive.contains(p, q);
      const bool by_logic = logic.relation.contains(p, q);
      if (by_simulation == by_logic) continue;
      Mismatch m{p, q, by_simulation, by_logic, std::nullopt, std::nullopt};
      if (by_simulation) {
        m.separating = logic.separating(p, q);
      } else {
        m.failing = simulation.removal(p, q);
      }
      report.mismatches.push_back(std::move(m));
    }
  }
  return report;
}

std::span<const Pairing> characterization_pairings() {
  static constexpr std::array<Pairing, 4> pairings{{
      {PreorderKind::Sim, Fragment::S},
      {PreorderKind::Sim, Fragment::SBar},
      {PreorderKind::CC, Fragment::CC},
      {PreorderKind::Conf, Fragment::CS},
  }};
  return pairings;
}

std::string render(const AgreementReport& report, const Lts& lts) {
  std::string out = std::string(to_string(report.kind)) + " vs " +
                    std::string(to_string(report.fragment)) + ": ";
  out += report.saturated ? "saturated" : "NOT saturated";
  out += " after " + std::to_string(report.levels) + " levels, " +
         std::to_string(report.vectors) + " vectors, " +
         std::to_string(report.mismatches.size()) + " mismatches\n";
  for (const auto& m : report.mismatches) {
    out += "  (" + lts.name(m.p) + ", " + lts.name(m.q) + "): ";
    if (m.simulation_holds) {
      out += "simulation holds, logic separates";
      if (m.separating) out += " with " + to_string(*m.separating, lts.alphabet());
    } else {
      out += "logic relates, simulation fails";
      if (m.failing) out += " at round " + std::to_string(m.failing->round) + ": " +
                            describe(m.failing->violation, lts, m.p, m.q);
    }
    out += '\n';
  }
  return out;
}

}  // namespace covsim

#include "coordgen/oracle.hpp"

#include <set>

namespace coordgen {

namespace {

SemElement plain_copy(const SemElement& e) {
  SemElement out = e;
  out.status = Status::Plain;
  for (auto& m : out.mods) m = plain_copy(m);
  return out;
}

}  // namespace

Proposition leaf_to_proposition(const SimpleUnit& unit, const LeafRecord& leaf) {
  Proposition p;
  p.id = leaf.prop_id;
  for (const auto& [slot, filler] : unit.slots) {
    if (const auto* elem = std::get_if<SemElement>(&filler)) {
      p.slots[slot] = plain_copy(*elem);
      continue;
    }
    const auto& members = std::get<CoordList>(filler).members;
    auto it = leaf.choice.find(slot);
    size_t idx = it == leaf.choice.end() ? 0 : static_cast<size_t>(it->second);
    p.slots[slot] = plain_copy(members.at(idx));
  }
  return p;
}

std::vector<std::string> expand_unit(const CoordUnit& unit, const Lexicon& lex,
                                     const LayoutPolicy& layout) {
  std::vector<std::string> clauses;
  auto expand_simple = [&](const SimpleUnit& s) {
    for (const auto& leaf : s.leaves)
      clauses.push_back(
          realize_proposition(leaf_to_proposition(s, leaf), lex, layout));
  };
  if (const auto* s = std::get_if<SimpleUnit>(&unit))
    expand_simple(*s);
  else
    for (const auto& conj : std::get<MultiUnit>(unit).conjuncts)
      expand_simple(conj);
  return clauses;
}

EquivalenceReport check_equivalence(const std::vector<Proposition>& props,
                                    const std::vector<CoordUnit>& units,
                                    const Lexicon& lex,
                                    const LayoutPolicy& layout) {
  std::set<std::string> baseline;
  for (const auto& p : props)
    baseline.insert(realize_proposition(p, lex, layout));
  std::set<std::string> expanded;
  for (const auto& u : units)
    for (auto& clause : expand_unit(u, lex, layout))
      expanded.insert(std::move(clause));

  EquivalenceReport report;
  for (const auto& s : baseline)
    if (!expanded.count(s)) report.missing.push_back(s);
  for (const auto& s : expanded)
    if (!baseline.count(s)) report.unexpected.push_back(s);
  report.pass = report.missing.empty() && report.unexpected.empty();
  return report;
}

}  // namespace coordgen

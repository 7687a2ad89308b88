#ifndef COORDGEN_ORACLE_HPP
#define COORDGEN_ORACLE_HPP

#include <string>
#include <vector>

#include "coordgen/lexicon.hpp"
#include "coordgen/realizer.hpp"
#include "coordgen/semrep.hpp"

namespace coordgen {

// Rebuilds the atomic proposition a leaf contributed, by replaying its
// recorded CoordList member choices against the unit's final structure.
Proposition leaf_to_proposition(const SimpleUnit& unit, const LeafRecord& leaf);

// Undoes the unit's coordination: every leaf becomes one plain clause,
// realized on its own (recurring deletions re-inserted by construction).
std::vector<std::string> expand_unit(const CoordUnit& unit, const Lexicon& lex,
                                     const LayoutPolicy& layout);

struct EquivalenceReport {
  bool pass = false;
  std::vector<std::string> missing;     // in the baseline, not in the expansion
  std::vector<std::string> unexpected;  // in the expansion, not in the baseline
};

// Segregatory equivalence: the union of unit expansions must cover exactly
// the clauses of the input propositions realized one by one (duplicates
// collapse on both sides, mirroring the combiner's duplicate absorption).
EquivalenceReport check_equivalence(const std::vector<Proposition>& props,
                                    const std::vector<CoordUnit>& units,
                                    const Lexicon& lex,
                                    const LayoutPolicy& layout);

}  // namespace coordgen

#endif  // COORDGEN_ORACLE_HPP

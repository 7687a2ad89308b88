#ifndef COORDGEN_GROUPER_HPP
#define COORDGEN_GROUPER_HPP

#include <map>
#include <optional>
#include <vector>

#include "coordgen/lexicon.hpp"
#include "coordgen/semrep.hpp"

namespace coordgen {

// Per-slot count of distinct element classes across a proposition group.
// A slot absent from some propositions contributes one extra ABSENT class.
using NdeTable = std::map<Slot, int>;

NdeTable compute_nde(const std::vector<Proposition>& props);

// Deterministic total order over elements: lexicon rank first (ranked
// elements sort before unranked), then concept identifier, etype, features
// (numeric-aware value comparison) and nested mods, recursively.
class ElementOrder {
 public:
  explicit ElementOrder(const Lexicon* lexicon = nullptr) : lexicon_(lexicon) {}

  // <0, 0, >0
  int compare(const SemElement& a, const SemElement& b) const;
  bool less(const SemElement& a, const SemElement& b) const {
    return compare(a, b) < 0;
  }

 private:
  const Lexicon* lexicon_;
};

// Stage 1: one stable sorting pass per sortable slot, from largest NDE to
// smallest (ties in canonical slot order), so that similar propositions end
// up adjacent. A slot is sortable when it holds >= 2 distinct present
// elements; within a pass, absent slots sort after all present values.
// Propositions flagged `fixed` keep their input positions.
std::vector<Proposition> order_propositions(const std::vector<Proposition>& props,
                                            const ElementOrder& order);

// The effective top-level grouping slot of the sort above: the last sorting
// pass applied, i.e. the sortable slot with the smallest NDE (canonically
// latest on ties). Empty when no slot is sortable.
std::optional<Slot> primary_grouping_slot(const std::vector<Proposition>& props);

// Adjacent pairs agreeing at `slot` (absent counts as a class of its own).
int adjacency_score(const std::vector<Proposition>& props, Slot slot);

}  // namespace coordgen

#endif  // COORDGEN_GROUPER_HPP

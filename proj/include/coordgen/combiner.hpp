#ifndef COORDGEN_COMBINER_HPP
#define COORDGEN_COMBINER_HPP

#include <optional>
#include <set>
#include <vector>

#include "coordgen/semrep.hpp"

namespace coordgen {

struct Thresholds {
  int max_multi_distinct = 2;      // conjuncts joined by multiple-distinct coordination
  int max_props_per_sentence = 6;  // propositions folded into one sentence
  bool parallel_override = true;   // parallel structures may exceed max_multi_distinct
};

// Slots where `next` differs from the result clause. Absent-vs-present is
// distinct; a CoordList slot is non-distinct when the element already
// belongs to the list.
using DistinctReport = std::set<Slot>;

DistinctReport diff_slots(const SimpleUnit& result, const Proposition& next);

// The slot at which `next` can extend `result` by 1-distinct coordination,
// if any: exactly one distinct slot, no CoordList at a different slot, and
// matching member etypes.
std::optional<Slot> one_distinct_slot(const SimpleUnit& result,
                                      const Proposition& next);

// Conjoins the distinct elements at `slot` into a CoordList (creating or
// extending it). Elements already present are not appended again. Throws
// ContractError when the propositions are not 1-distinct at `slot` or the
// unit holds a CoordList elsewhere.
SimpleUnit combine_one_distinct(SimpleUnit result, const Proposition& next,
                                Slot slot);

// Appends `next` as a new final conjunct and re-marks RECURRING status on
// every slot where all conjuncts agree. No deletion happens here.
MultiUnit combine_multiple_distinct(CoordUnit result, const Proposition& next);

// Re-derives the RECURRING marks of a MultiUnit from cross-conjunct agreement.
void recompute_recurring(MultiUnit& unit);

enum class MergeEvent {
  Base,                   // proposition opened a new unit
  CoordExtend,            // 1-distinct merge into a simple unit
  CoordIntoFinalConjunct, // 1-distinct merge into a MULTI's last conjunct
  ConjunctAppend,         // multiple-distinct merge
  AbsorbDuplicate,        // empty distinct report
  Boundary                // thresholds closed the sentence before this one
};

struct MergeLogEntry {
  int unit = 0;
  MergeEvent event = MergeEvent::Base;
  int prop_id = 0;
  std::optional<Slot> slot;
  DistinctReport distinct;  // report that drove the decision; empty for Base
};

struct PlanResult {
  std::vector<CoordUnit> units;
  std::vector<MergeLogEntry> log;
};

// Stages 2-3: fold the ordered propositions left to right, combining two at a
// time (1-distinct preferred, multiple-distinct otherwise) and cutting a
// sentence boundary when thresholds would be exceeded. Full duplicates are
// absorbed without change.
PlanResult plan_sentences(const std::vector<Proposition>& ordered,
                          const Thresholds& thresholds);

}  // namespace coordgen

#endif  // COORDGEN_COMBINER_HPP

#ifndef COORDGEN_ELIDER_HPP
#define COORDGEN_ELIDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "coordgen/semrep.hpp"

namespace coordgen {

enum class SurfacePosition { Front, Medial, End };

enum class Direction { Unresolved, DeleteForward, DeleteBackward };

std::string_view direction_name(Direction d);

// One realized slot of one conjunct, in surface order.
struct Constituent {
  Slot slot = Slot::Pred;
  std::vector<std::string> tokens;            // plain surface tokens
  std::vector<std::string> annotated_tokens;  // with phrase-internal [deletions]
  bool is_coord = false;                      // filler was a CoordList
  bool fronted = false;                       // fronted adverbial (takes a comma)
  int layout_rank = 0;                        // position in the layout template
  SurfacePosition position = SurfacePosition::Medial;
  bool deleted = false;
};

// A RECURRING equivalence group spanning every conjunct at `slot`.
struct DeletionGroup {
  Slot slot = Slot::Pred;
  Direction resolution = Direction::Unresolved;
};

struct SurfacePlan {
  std::vector<std::vector<Constituent>> conjuncts;
  std::vector<DeletionGroup> groups;

  Constituent* find(int conjunct, Slot s);
  const Constituent* find(int conjunct, Slot s) const;
};

// Stamps FRONT/MEDIAL/END on every constituent (per conjunct) and collects a
// deletion group per recurring slot of the unit. A one-constituent clause
// counts as END. Throws ContractError when a unit slot is missing from the
// laid-out constituents.
SurfacePlan assign_positions(const MultiUnit& unit,
                             std::vector<std::vector<Constituent>> laid_out);

// Extended directionality constraint: sweeps the surface from right to left;
// a recurring group whose non-final occurrences are clause-final (END, or
// MEDIAL with the whole suffix already deleted) deletes backward, keeping the
// last occurrence; every other group deletes forward, keeping the first.
// Idempotent; runs to fixpoint.
SurfacePlan resolve_deletions(SurfacePlan plan);

}  // namespace coordgen

#endif  // COORDGEN_ELIDER_HPP

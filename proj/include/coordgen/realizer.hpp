#ifndef COORDGEN_REALIZER_HPP
#define COORDGEN_REALIZER_HPP

#include <set>
#include <string>
#include <vector>

#include "coordgen/elider.hpp"
#include "coordgen/lexicon.hpp"
#include "coordgen/semrep.hpp"

namespace coordgen {

// Constituent-order template: [fronted time] [fronted place] ARG1 PRED ARG2
// ARG3 MOD-MANNER MOD-PLACE MOD-TIME. Comma flags are surface style only.
struct LayoutPolicy {
  bool front_time = false;
  bool front_place = false;
  bool serial_comma = true;  // "a, b, and c" for three or more conjuncts
  bool gap_comma = true;     // ", and" after a conjunct truncated to its verb
  bool list_upgrade = true;  // clause-final list + elided-front conjunct read
                             // as one serial list ("was X, of Y, and spoke Z")
};

// The unit's present slots in emission order.
std::vector<Slot> layout_slots(const std::set<Slot>& present,
                               const LayoutPolicy& layout);

struct PhraseStyle {
  bool comma_list = false;   // join members with commas instead of "and"
  bool serial_comma = true;
};

// Coordinates member token sequences, eliding shared material under the
// directionality constraint: a common prefix survives only in the first
// member, a common suffix only in the last. The annotated form keeps elided
// runs as single "[...]" tokens.
struct CoordinatedPhrase {
  std::vector<std::string> tokens;
  std::vector<std::string> annotated;
};
CoordinatedPhrase coordinate_phrase(
    const std::vector<std::vector<std::string>>& members,
    const PhraseStyle& style);

// Noun-phrase tokens: determiner (policy plus possessive/count features),
// attribute premodifiers, lemma, index feature, postmodifier token.
std::vector<std::string> realize_np(const SemElement& elem, const Lexicon& lex);

// Any element: verbs inflect, prepositions build a PP, the rest are NPs.
std::vector<std::string> realize_element(const SemElement& elem,
                                         const Lexicon& lex);

struct DeletionRecord {
  Slot slot = Slot::Pred;
  Direction direction = Direction::Unresolved;
  int kept_conjunct = 0;
};

struct Realization {
  std::string text;
  std::string annotated;  // deleted occurrences kept as [bracketed] material
  std::vector<DeletionRecord> deletions;
};

Realization realize_unit(const CoordUnit& unit, const Lexicon& lex,
                         const LayoutPolicy& layout);

// One proposition on its own, no coordination. The oracle's baseline.
std::string realize_proposition(const Proposition& prop, const Lexicon& lex,
                                const LayoutPolicy& layout);

// The elider-facing surface plan for a MultiUnit, deletions unresolved.
// realize_unit uses exactly this plan; exposed so tests can probe it.
SurfacePlan build_surface_plan(const MultiUnit& unit, const Lexicon& lex,
                               const LayoutPolicy& layout);

// Removes "[...]" runs and renormalizes spacing; maps an annotated
// realization back to its plain text.
std::string strip_annotations(const std::string& annotated);

}  // namespace coordgen

#endif  // COORDGEN_REALIZER_HPP

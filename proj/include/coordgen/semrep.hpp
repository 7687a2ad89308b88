#ifndef COORDGEN_SEMREP_HPP
#define COORDGEN_SEMREP_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace coordgen {

// Clause-level roles. Enum order doubles as the canonical tie-break order.
enum class Slot { Pred, Arg1, Arg2, Arg3, ModPlace, ModTime, ModManner };

inline constexpr std::array<Slot, 7> kAllSlots = {
    Slot::Pred,     Slot::Arg1,    Slot::Arg2,     Slot::Arg3,
    Slot::ModPlace, Slot::ModTime, Slot::ModManner};

std::string_view slot_name(Slot s);
std::optional<Slot> slot_from_name(std::string_view name);
bool slot_is_mod(Slot s);

enum class EType { Event, Thing, Time, Place, Attribute, TimeThing };

std::string_view etype_name(EType t);
std::optional<EType> etype_from_name(std::string_view name);

enum class Status { Plain, Recurring };

// A concept-bearing node. Features are string-valued; nested mods carry
// attributes/possessors on NPs and the object NP of a prepositional mod.
struct SemElement {
  std::string concept_id;
  EType etype = EType::Thing;
  std::map<std::string, std::string> features;
  std::vector<SemElement> mods;
  Status status = Status::Plain;
};

// Structural identity: concept, etype, features and mods, recursively.
// `status` never participates.
bool elements_equal(const SemElement& a, const SemElement& b);

struct Proposition {
  std::map<Slot, SemElement> slots;
  int id = 0;
  bool fixed = false;  // pins the proposition to its input position in Stage 1

  bool has(Slot s) const { return slots.count(s) != 0; }
  const SemElement* find(Slot s) const;
};

// --- ingestion -------------------------------------------------------------

// Parses a JSON array of proposition objects. Throws ParseError for malformed
// JSON (message includes the byte offset) and ValidationError for schema
// violations (message names the proposition index and slot).
std::vector<Proposition> parse_propositions(const std::string& json_text);

// Canonical JSON form; parse(serialize(p)) is structurally identical to p.
nlohmann::json proposition_to_json(const Proposition& p);
nlohmann::json propositions_to_json(const std::vector<Proposition>& props);

// --- sentence-plan units ---------------------------------------------------

// Ordered coordination of 2+ pairwise-distinct elements sharing an etype.
struct CoordList {
  std::vector<SemElement> members;
};

using Filler = std::variant<SemElement, CoordList>;

bool fillers_equal(const Filler& a, const Filler& b);
bool filler_recurring(const Filler& f);
void set_filler_status(Filler& f, Status st);

// One absorbed input proposition: which CoordList member it contributed (or
// matched) per coordinated slot. Replayed by the expansion oracle.
struct LeafRecord {
  int prop_id = 0;
  std::map<Slot, int> choice;
  bool absorbed = false;  // full duplicate, folded in without structural change
};

// A single clause whose slots may hold coordinated fillers.
struct SimpleUnit {
  std::map<Slot, Filler> slots;
  std::vector<LeafRecord> leaves;

  static SimpleUnit from_proposition(const Proposition& p);

  bool has(Slot s) const { return slots.count(s) != 0; }
  const Filler* find(Slot s) const;
  // The slot holding a CoordList, if any. At most one per unit.
  std::optional<Slot> coord_slot() const;
  // Propositions folded in, not counting absorbed duplicates.
  int merged_count() const;
};

// Conjoined clauses with cross-conjunct recurring marks.
struct MultiUnit {
  std::vector<SimpleUnit> conjuncts;
  std::set<Slot> distinct_signature;

  // Slots marked RECURRING across every conjunct.
  std::set<Slot> recurring_slots() const;
  int merged_count() const;
};

using CoordUnit = std::variant<SimpleUnit, MultiUnit>;

int unit_merged_count(const CoordUnit& u);
std::vector<int> unit_leaf_ids(const CoordUnit& u);  // includes absorbed duplicates

}  // namespace coordgen

#endif  // COORDGEN_SEMREP_HPP

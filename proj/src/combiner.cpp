#include "coordgen/combiner.hpp"

#include <algorithm>

#include "coordgen/errors.hpp"

namespace coordgen {

namespace {

EType filler_etype(const Filler& f) {
  if (const auto* e = std::get_if<SemElement>(&f)) return e->etype;
  return std::get<CoordList>(f).members.front().etype;
}

// Index of `e` in the list, or -1.
int member_index(const CoordList& list, const SemElement& e) {
  for (size_t i = 0; i < list.members.size(); ++i)
    if (elements_equal(list.members[i], e)) return static_cast<int>(i);
  return -1;
}

bool slot_matches(const Filler& f, const SemElement& e) {
  if (const auto* single = std::get_if<SemElement>(&f))
    return elements_equal(*single, e);
  return member_index(std::get<CoordList>(f), e) >= 0;
}

}  // namespace

DistinctReport diff_slots(const SimpleUnit& result, const Proposition& next) {
  DistinctReport report;
  for (Slot s : kAllSlots) {
    const Filler* f = result.find(s);
    const SemElement* e = next.find(s);
    if (!f && !e) continue;
    if (!f || !e) {
      report.insert(s);
      continue;
    }
    if (!slot_matches(*f, *e)) report.insert(s);
  }
  return report;
}

std::optional<Slot> one_distinct_slot(const SimpleUnit& result,
                                      const Proposition& next) {
  DistinctReport d = diff_slots(result, next);
  if (d.size() != 1) return std::nullopt;
  Slot slot = *d.begin();
  auto coord = result.coord_slot();
  if (coord && *coord != slot) return std::nullopt;
  const Filler* f = result.find(slot);
  const SemElement* e = next.find(slot);
  if (!f || !e) return std::nullopt;  // presence mismatch cannot coordinate
  if (filler_etype(*f) != e->etype) return std::nullopt;
  return slot;
}

SimpleUnit combine_one_distinct(SimpleUnit result, const Proposition& next,
                                Slot slot) {
  DistinctReport d = diff_slots(result, next);
  if (d.empty()) {
    // Already-covered element; nothing to conjoin.
    LeafRecord leaf{next.id, {}, true};
    for (const auto& [s, f] : result.slots)
      if (const auto* list = std::get_if<CoordList>(&f))
        leaf.choice[s] = std::max(0, member_index(*list, *next.find(s)));
    result.leaves.push_back(std::move(leaf));
    return result;
  }
  if (d != DistinctReport{slot})
    throw ContractError("combine_one_distinct: propositions are not 1-distinct at " +
                        std::string(slot_name(slot)));
  auto coord = result.coord_slot();
  if (coord && *coord != slot)
    throw ContractError("combine_one_distinct: unit already coordinates " +
                        std::string(slot_name(*coord)));

  const SemElement& incoming = *next.find(slot);
  Filler& filler = result.slots.at(slot);
  int chosen;
  if (auto* single = std::get_if<SemElement>(&filler)) {
    if (single->etype != incoming.etype)
      throw ContractError("combine_one_distinct: etype mismatch at " +
                          std::string(slot_name(slot)));
    CoordList list;
    list.members.push_back(*single);
    list.members.push_back(incoming);
    chosen = 1;
    filler = std::move(list);
    // Everyone already on board contributed the original element.
    for (auto& l : result.leaves) l.choice[slot] = 0;
  } else {
    auto& list = std::get<CoordList>(filler);
    int idx = member_index(list, incoming);
    if (idx < 0) {
      list.members.push_back(incoming);
      idx = static_cast<int>(list.members.size()) - 1;
    }
    chosen = idx;
  }
  LeafRecord leaf{next.id, {}, false};
  leaf.choice[slot] = chosen;
  result.leaves.push_back(std::move(leaf));
  return result;
}

void recompute_recurring(MultiUnit& unit) {
  for (Slot s : kAllSlots) {
    bool all = !unit.conjuncts.empty();
    const Filler* first = nullptr;
    for (const auto& c : unit.conjuncts) {
      const Filler* f = c.find(s);
      if (!f) {
        all = false;
        break;
      }
      if (!first)
        first = f;
      else if (!fillers_equal(*first, *f)) {
        all = false;
        break;
      }
    }
    Status st = all ? Status::Recurring : Status::Plain;
    for (auto& c : unit.conjuncts) {
      auto it = c.slots.find(s);
      if (it != c.slots.end()) set_filler_status(it->second, st);
    }
  }
}

MultiUnit combine_multiple_distinct(CoordUnit result, const Proposition& next) {
  MultiUnit unit;
  DistinctReport signature;
  if (auto* simple = std::get_if<SimpleUnit>(&result)) {
    signature = diff_slots(*simple, next);
    unit.conjuncts.push_back(std::move(*simple));
  } else {
    unit = std::move(std::get<MultiUnit>(result));
    signature = diff_slots(unit.conjuncts.back(), next);
  }
  unit.conjuncts.push_back(SimpleUnit::from_proposition(next));
  unit.distinct_signature = signature;
  recompute_recurring(unit);
  return unit;
}

PlanResult plan_sentences(const std::vector<Proposition>& ordered,
                          const Thresholds& th) {
  PlanResult out;
  std::optional<CoordUnit> current;

  auto unit_index = [&] { return static_cast<int>(out.units.size()); };
  auto flush = [&] {
    if (current) {
      out.units.push_back(std::move(*current));
      current.reset();
    }
  };

  for (const Proposition& p : ordered) {
    if (!current) {
      current = SimpleUnit::from_proposition(p);
      out.log.push_back({unit_index(), MergeEvent::Base, p.id, std::nullopt, {}});
      continue;
    }

    SimpleUnit* tail = nullptr;
    bool is_multi = std::holds_alternative<MultiUnit>(*current);
    if (is_multi)
      tail = &std::get<MultiUnit>(*current).conjuncts.back();
    else
      tail = &std::get<SimpleUnit>(*current);

    DistinctReport d = diff_slots(*tail, p);
    if (d.empty()) {
      *tail = combine_one_distinct(std::move(*tail), p, Slot::Pred);
      out.log.push_back(
          {unit_index(), MergeEvent::AbsorbDuplicate, p.id, std::nullopt, {}});
      continue;
    }

    bool room = unit_merged_count(*current) + 1 <= th.max_props_per_sentence;
    std::optional<Slot> one = one_distinct_slot(*tail, p);

    if (room && one) {
      bool needs_remark = is_multi;
      *tail = combine_one_distinct(std::move(*tail), p, *one);
      if (needs_remark) recompute_recurring(std::get<MultiUnit>(*current));
      out.log.push_back({unit_index(),
                         is_multi ? MergeEvent::CoordIntoFinalConjunct
                                  : MergeEvent::CoordExtend,
                         p.id, one, d});
      continue;
    }

    // Multiple-distinct coordination needs a slot where both clauses hold
    // differing elements; a pair differing only in slot presence would leave
    // one conjunct with nothing but recurring (hence deletable) material.
    bool shared_distinct = false;
    for (Slot s : d)
      if (tail->has(s) && p.has(s)) shared_distinct = true;

    if (room && shared_distinct) {
      int conjuncts = is_multi
                          ? static_cast<int>(std::get<MultiUnit>(*current).conjuncts.size())
                          : 1;
      bool within_limit = conjuncts + 1 <= th.max_multi_distinct;
      bool parallel =
          th.parallel_override && is_multi &&
          d == std::get<MultiUnit>(*current).distinct_signature;
      if (within_limit || parallel) {
        current = combine_multiple_distinct(std::move(*current), p);
        out.log.push_back(
            {unit_index(), MergeEvent::ConjunctAppend, p.id, std::nullopt, d});
        continue;
      }
    }

    out.log.push_back({unit_index(), MergeEvent::Boundary, p.id, std::nullopt, d});
    flush();
    current = SimpleUnit::from_proposition(p);
    out.log.push_back({unit_index(), MergeEvent::Base, p.id, std::nullopt, {}});
  }
  flush();
  return out;
}

}  // namespace coordgen

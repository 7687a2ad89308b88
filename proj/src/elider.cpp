#include "coordgen/elider.hpp"

#include <algorithm>

#include "coordgen/errors.hpp"

namespace coordgen {

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::Unresolved: return "unresolved";
    case Direction::DeleteForward: return "forward";
    case Direction::DeleteBackward: return "backward";
  }
  return "?";
}

Constituent* SurfacePlan::find(int conjunct, Slot s) {
  for (auto& c : conjuncts[conjunct])
    if (c.slot == s) return &c;
  return nullptr;
}

const Constituent* SurfacePlan::find(int conjunct, Slot s) const {
  for (const auto& c : conjuncts[conjunct])
    if (c.slot == s) return &c;
  return nullptr;
}

SurfacePlan assign_positions(const MultiUnit& unit,
                             std::vector<std::vector<Constituent>> laid_out) {
  if (laid_out.size() != unit.conjuncts.size())
    throw ContractError("assign_positions: layout/conjunct count mismatch");
  SurfacePlan plan;
  plan.conjuncts = std::move(laid_out);
  for (size_t i = 0; i < plan.conjuncts.size(); ++i) {
    auto& row = plan.conjuncts[i];
    for (const auto& [slot, filler] : unit.conjuncts[i].slots)
      if (!plan.find(static_cast<int>(i), slot))
        throw ContractError("assign_positions: slot " +
                            std::string(slot_name(slot)) +
                            " missing from layout");
    for (size_t k = 0; k < row.size(); ++k) {
      if (row.size() == 1)
        row[k].position = SurfacePosition::End;  // degenerate clause
      else if (k == 0)
        row[k].position = SurfacePosition::Front;
      else if (k + 1 == row.size())
        row[k].position = SurfacePosition::End;
      else
        row[k].position = SurfacePosition::Medial;
    }
  }
  for (Slot s : unit.recurring_slots())
    plan.groups.push_back(DeletionGroup{s, Direction::Unresolved});
  return plan;
}

namespace {

// True when nothing survives to the right of `target` in its conjunct.
bool clause_final(const std::vector<Constituent>& row, const Constituent& target) {
  bool seen = false;
  for (const auto& c : row) {
    if (&c == &target) {
      seen = true;
      continue;
    }
    if (seen && !c.deleted) return false;
  }
  return seen;
}

}  // namespace

SurfacePlan resolve_deletions(SurfacePlan plan) {
  const int n = static_cast<int>(plan.conjuncts.size());
  if (n == 0) return plan;

  // Right-to-left over the surface so that backward deletions expose
  // medial material as clause-final before it is considered.
  std::vector<DeletionGroup*> order;
  for (auto& g : plan.groups) order.push_back(&g);
  std::sort(order.begin(), order.end(), [&](DeletionGroup* a, DeletionGroup* b) {
    auto rank = [&](Slot s) {
      const Constituent* c = plan.find(0, s);
      return c ? c->layout_rank : 0;
    };
    return rank(a->slot) > rank(b->slot);
  });

  bool changed = true;
  while (changed) {
    changed = false;
    for (DeletionGroup* g : order) {
      if (g->resolution != Direction::Unresolved) continue;
      bool all_final = true;
      for (int i = 0; i + 1 < n; ++i) {
        const Constituent* c = plan.find(i, g->slot);
        if (!c)
          throw ContractError("resolve_deletions: group slot missing from conjunct");
        if (!clause_final(plan.conjuncts[i], *c)) all_final = false;
      }
      g->resolution =
          all_final ? Direction::DeleteBackward : Direction::DeleteForward;
      int keep = all_final ? n - 1 : 0;
      for (int i = 0; i < n; ++i)
        if (i != keep) plan.find(i, g->slot)->deleted = true;
      changed = true;
    }
  }
  return plan;
}

}  // namespace coordgen

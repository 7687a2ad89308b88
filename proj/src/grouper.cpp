#include "coordgen/grouper.hpp"

#include <algorithm>
#include <cstdlib>

#include "coordgen/errors.hpp"

namespace coordgen {

namespace {

// Distinct present elements at `slot`, ignoring absence.
int present_classes(const std::vector<Proposition>& props, Slot slot) {
  std::vector<const SemElement*> classes;
  for (const auto& p : props) {
    const SemElement* e = p.find(slot);
    if (!e) continue;
    bool known = false;
    for (const auto* c : classes)
      if (elements_equal(*c, *e)) {
        known = true;
        break;
      }
    if (!known) classes.push_back(e);
  }
  return static_cast<int>(classes.size());
}

bool any_absent(const std::vector<Proposition>& props, Slot slot) {
  for (const auto& p : props)
    if (!p.has(slot)) return true;
  return false;
}

bool any_present(const std::vector<Proposition>& props, Slot slot) {
  for (const auto& p : props)
    if (p.has(slot)) return true;
  return false;
}

// Sorting passes in application order: NDE descending, canonical slot order
// on ties. Only slots with >= 2 distinct present elements participate;
// presence alone is not comparable.
std::vector<Slot> sort_passes(const std::vector<Proposition>& props,
                              const NdeTable& nde) {
  std::vector<Slot> passes;
  for (Slot s : kAllSlots)
    if (nde.count(s) && present_classes(props, s) >= 2) passes.push_back(s);
  std::stable_sort(passes.begin(), passes.end(), [&](Slot a, Slot b) {
    return nde.at(a) > nde.at(b);
  });
  return passes;
}

bool numeric(const std::string& s, long long& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) return false;
  out = v;
  return true;
}

int compare_feature_values(const std::string& a, const std::string& b) {
  long long na = 0, nb = 0;
  if (numeric(a, na) && numeric(b, nb))
    return na < nb ? -1 : (na > nb ? 1 : 0);
  return a < b ? -1 : (a > b ? 1 : 0);
}

int compare_feature_maps(const std::map<std::string, std::string>& a,
                         const std::map<std::string, std::string>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = compare_feature_values(ia->second, ib->second);
    if (c != 0) return c;
    ++ia, ++ib;
  }
  if (ia != a.end()) return 1;
  if (ib != b.end()) return -1;
  return 0;
}

}  // namespace

NdeTable compute_nde(const std::vector<Proposition>& props) {
  if (props.empty()) throw ContractError("compute_nde: empty group");
  NdeTable table;
  for (Slot s : kAllSlots) {
    if (!any_present(props, s)) continue;
    table[s] = present_classes(props, s) + (any_absent(props, s) ? 1 : 0);
  }
  return table;
}

int ElementOrder::compare(const SemElement& a, const SemElement& b) const {
  std::optional<int> ra, rb;
  if (lexicon_) {
    ra = lexicon_->rank(a.concept_id);
    rb = lexicon_->rank(b.concept_id);
  }
  if (ra.has_value() != rb.has_value()) return ra ? -1 : 1;
  if (ra && rb && *ra != *rb) return *ra < *rb ? -1 : 1;
  if (a.concept_id != b.concept_id) return a.concept_id < b.concept_id ? -1 : 1;
  if (a.etype != b.etype) return a.etype < b.etype ? -1 : 1;
  if (int c = compare_feature_maps(a.features, b.features)) return c;
  size_t n = std::min(a.mods.size(), b.mods.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare(a.mods[i], b.mods[i])) return c;
  if (a.mods.size() != b.mods.size())
    return a.mods.size() < b.mods.size() ? -1 : 1;
  return 0;
}

std::vector<Proposition> order_propositions(const std::vector<Proposition>& props,
                                            const ElementOrder& order) {
  if (props.empty()) throw ContractError("order_propositions: empty group");

  std::vector<Proposition> movable;
  for (const auto& p : props)
    if (!p.fixed) movable.push_back(p);

  if (movable.size() > 1) {
    NdeTable nde = compute_nde(props);
    for (Slot slot : sort_passes(props, nde)) {
      std::stable_sort(movable.begin(), movable.end(),
                       [&](const Proposition& a, const Proposition& b) {
                         const SemElement* ea = a.find(slot);
                         const SemElement* eb = b.find(slot);
                         if (!ea || !eb) return eb == nullptr && ea != nullptr;
                         return order.less(*ea, *eb);
                       });
    }
  }

  // Re-insert pinned propositions at their original positions.
  std::vector<Proposition> out;
  out.reserve(props.size());
  size_t next = 0;
  for (const auto& p : props) {
    if (p.fixed)
      out.push_back(p);
    else
      out.push_back(movable[next++]);
  }
  return out;
}

std::optional<Slot> primary_grouping_slot(const std::vector<Proposition>& props) {
  if (props.empty()) return std::nullopt;
  NdeTable nde = compute_nde(props);
  std::vector<Slot> passes = sort_passes(props, nde);
  if (passes.empty()) return std::nullopt;
  return passes.back();
}

int adjacency_score(const std::vector<Proposition>& props, Slot slot) {
  int score = 0;
  for (size_t i = 0; i + 1 < props.size(); ++i) {
    const SemElement* a = props[i].find(slot);
    const SemElement* b = props[i + 1].find(slot);
    if (!a && !b)
      ++score;
    else if (a && b && elements_equal(*a, *b))
      ++score;
  }
  return score;
}

}  // namespace coordgen

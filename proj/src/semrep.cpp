#include "coordgen/semrep.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "coordgen/errors.hpp"

namespace coordgen {

using nlohmann::json;

std::string_view slot_name(Slot s) {
  switch (s) {
    case Slot::Pred: return "pred";
    case Slot::Arg1: return "arg1";
    case Slot::Arg2: return "arg2";
    case Slot::Arg3: return "arg3";
    case Slot::ModPlace: return "mod-place";
    case Slot::ModTime: return "mod-time";
    case Slot::ModManner: return "mod-manner";
  }
  return "?";
}

std::optional<Slot> slot_from_name(std::string_view name) {
  for (Slot s : kAllSlots)
    if (slot_name(s) == name) return s;
  return std::nullopt;
}

bool slot_is_mod(Slot s) {
  return s == Slot::ModPlace || s == Slot::ModTime || s == Slot::ModManner;
}

std::string_view etype_name(EType t) {
  switch (t) {
    case EType::Event: return "EVENT";
    case EType::Thing: return "THING";
    case EType::Time: return "TIME";
    case EType::Place: return "PLACE";
    case EType::Attribute: return "ATTRIBUTE";
    case EType::TimeThing: return "TIME-THING";
  }
  return "?";
}

std::optional<EType> etype_from_name(std::string_view name) {
  for (EType t : {EType::Event, EType::Thing, EType::Time, EType::Place,
                  EType::Attribute, EType::TimeThing})
    if (etype_name(t) == name) return t;
  return std::nullopt;
}

bool elements_equal(const SemElement& a, const SemElement& b) {
  if (a.concept_id != b.concept_id || a.etype != b.etype || a.features != b.features)
    return false;
  if (a.mods.size() != b.mods.size()) return false;
  for (size_t i = 0; i < a.mods.size(); ++i)
    if (!elements_equal(a.mods[i], b.mods[i])) return false;
  return true;
}

const SemElement* Proposition::find(Slot s) const {
  auto it = slots.find(s);
  return it == slots.end() ? nullptr : &it->second;
}

// --- parsing ----------------------------------------------------------------

namespace {

std::string feature_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  return v.dump();
}

std::string ctx(int index, std::string_view where) {
  return "proposition " + std::to_string(index) + ": " + std::string(where);
}

SemElement parse_element(const json& j, int index, std::string_view where,
                         EType default_etype) {
  if (!j.is_object())
    throw ValidationError(ctx(index, where) + " must be an object");
  SemElement e;
  e.etype = default_etype;
  if (!j.contains("concept") || !j.at("concept").is_string())
    throw ValidationError(ctx(index, where) + " requires a string \"concept\"");
  e.concept_id = j.at("concept").get<std::string>();
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "concept") continue;
    if (key == "etype") {
      if (!it.value().is_string())
        throw ValidationError(ctx(index, where) + " etype must be a string");
      auto t = etype_from_name(it.value().get<std::string>());
      if (!t)
        throw ValidationError(ctx(index, where) + " unknown etype '" +
                              it.value().get<std::string>() + "'");
      e.etype = *t;
    } else if (key == "mods") {
      if (!it.value().is_array())
        throw ValidationError(ctx(index, where) + " mods must be an array");
      for (const auto& m : it.value())
        e.mods.push_back(parse_element(m, index, where, EType::Attribute));
    } else if (it.value().is_structured()) {
      throw ValidationError(ctx(index, where) + " unexpected nested key '" +
                            key + "'");
    } else {
      e.features[key] = feature_to_string(it.value());
    }
  }
  return e;
}

struct ModKind {
  Slot slot;
  EType mod_etype;
  EType arg_etype;
};

std::optional<ModKind> mod_kind_from_name(std::string_view name) {
  if (name == "time")
    return ModKind{Slot::ModTime, EType::Time, EType::TimeThing};
  if (name == "place")
    return ModKind{Slot::ModPlace, EType::Place, EType::Thing};
  if (name == "manner")
    return ModKind{Slot::ModManner, EType::Attribute, EType::Thing};
  return std::nullopt;
}

SemElement parse_mod(const json& j, int index) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ValidationError(ctx(index, "mods entries need a string \"kind\""));
  auto kind = mod_kind_from_name(j.at("kind").get<std::string>());
  if (!kind)
    throw ValidationError(ctx(index, "unknown mod kind '" +
                                         j.at("kind").get<std::string>() +
                                         "'"));
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "kind" && it.key() != "prep" && it.key() != "arg")
      throw ValidationError(ctx(index, "unexpected mod key '" + it.key() + "'"));
  if (!j.contains("arg"))
    throw ValidationError(ctx(index, "mod requires an \"arg\" element"));
  SemElement arg =
      parse_element(j.at("arg"), index, "mod arg", kind->arg_etype);
  if (j.contains("prep")) {
    if (!j.at("prep").is_string())
      throw ValidationError(ctx(index, "mod prep must be a concept string"));
    SemElement pp;
    pp.concept_id = j.at("prep").get<std::string>();
    pp.etype = kind->mod_etype;
    pp.mods.push_back(std::move(arg));
    return pp;
  }
  // Bare adverbial: the arg stands alone under the mod's etype. Nested
  // non-attribute structure would be indistinguishable from the prep form
  // after a round trip, so it is rejected.
  for (const auto& m : arg.mods)
    if (m.etype != EType::Attribute)
      throw ValidationError(
          ctx(index, "bare mod arg may only carry ATTRIBUTE mods"));
  arg.etype = kind->mod_etype;
  return arg;
}

Proposition parse_proposition(const json& j, int index) {
  if (!j.is_object())
    throw ValidationError(ctx(index, "must be an object"));
  Proposition p;
  p.id = index;
  static const char* kArgKeys[] = {"pred", "arg1", "arg2", "arg3"};
  static const Slot kArgSlots[] = {Slot::Pred, Slot::Arg1, Slot::Arg2,
                                   Slot::Arg3};
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known = key == "mods" || key == "fixed";
    for (const char* k : kArgKeys) known = known || key == k;
    if (!known)
      throw ValidationError(ctx(index, "unknown slot '" + key + "'"));
  }
  for (int i = 0; i < 4; ++i) {
    if (!j.contains(kArgKeys[i])) continue;
    EType dflt = (i == 0) ? EType::Event : EType::Thing;
    p.slots[kArgSlots[i]] = parse_element(j.at(kArgKeys[i]), index, kArgKeys[i], dflt);
  }
  if (!p.has(Slot::Pred))
    throw ValidationError(ctx(index, "PRED required"));
  if (!p.has(Slot::Arg1))
    throw ValidationError(ctx(index, "ARG1 required"));
  if (p.slots.at(Slot::Pred).etype != EType::Event)
    throw ValidationError(ctx(index, "PRED element must have etype EVENT"));
  if (j.contains("mods")) {
    if (!j.at("mods").is_array())
      throw ValidationError(ctx(index, "mods must be an array"));
    for (const auto& m : j.at("mods")) {
      auto kind = mod_kind_from_name(
          m.is_object() && m.contains("kind") && m.at("kind").is_string()
              ? m.at("kind").get<std::string>()
              : "");
      SemElement elem = parse_mod(m, index);
      Slot slot = kind ? kind->slot : Slot::ModTime;
      if (p.has(slot))
        throw ValidationError(ctx(index, "duplicate mod kind '" +
                                             m.at("kind").get<std::string>() +
                                             "'"));
      p.slots[slot] = std::move(elem);
    }
  }
  if (j.contains("fixed")) {
    if (!j.at("fixed").is_boolean())
      throw ValidationError(ctx(index, "fixed must be a boolean"));
    p.fixed = j.at("fixed").get<bool>();
  }
  return p;
}

}  // namespace

std::vector<Proposition> parse_propositions(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_array())
    throw ValidationError("input must be a JSON array of propositions");
  std::vector<Proposition> out;
  out.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i)
    out.push_back(parse_proposition(doc[i], static_cast<int>(i)));
  return out;
}

// --- serialization ----------------------------------------------------------

namespace {

json element_to_json(const SemElement& e, std::optional<EType> implied) {
  json j = json::object();
  j["concept"] = e.concept_id;
  if (!implied || *implied != e.etype) j["etype"] = std::string(etype_name(e.etype));
  for (const auto& [k, v] : e.features) j[k] = v;
  if (!e.mods.empty()) {
    json arr = json::array();
    for (const auto& m : e.mods)
      arr.push_back(element_to_json(m, EType::Attribute));
    j["mods"] = arr;
  }
  return j;
}

json mod_to_json(Slot slot, const SemElement& e) {
  json j = json::object();
  const char* kind = slot == Slot::ModTime    ? "time"
                     : slot == Slot::ModPlace ? "place"
                                              : "manner";
  j["kind"] = kind;
  EType arg_dflt = slot == Slot::ModTime ? EType::TimeThing : EType::Thing;
  bool prep_form =
      e.mods.size() == 1 && e.mods.front().etype != EType::Attribute;
  if (prep_form) {
    j["prep"] = e.concept_id;
    j["arg"] = element_to_json(e.mods.front(), arg_dflt);
  } else {
    SemElement bare = e;
    // etype is implied by the kind; drop it from the arg form.
    json arg = json::object();
    arg["concept"] = bare.concept_id;
    for (const auto& [k, v] : bare.features) arg[k] = v;
    if (!bare.mods.empty()) {
      json arr = json::array();
      for (const auto& m : bare.mods)
        arr.push_back(element_to_json(m, EType::Attribute));
      arg["mods"] = arr;
    }
    j["arg"] = arg;
  }
  return j;
}

}  // namespace

json proposition_to_json(const Proposition& p) {
  json j = json::object();
  if (const auto* e = p.find(Slot::Pred))
    j["pred"] = element_to_json(*e, EType::Event);
  if (const auto* e = p.find(Slot::Arg1))
    j["arg1"] = element_to_json(*e, EType::Thing);
  if (const auto* e = p.find(Slot::Arg2))
    j["arg2"] = element_to_json(*e, EType::Thing);
  if (const auto* e = p.find(Slot::Arg3))
    j["arg3"] = element_to_json(*e, EType::Thing);
  json mods = json::array();
  for (Slot s : {Slot::ModPlace, Slot::ModTime, Slot::ModManner})
    if (const auto* e = p.find(s)) mods.push_back(mod_to_json(s, *e));
  if (!mods.empty()) j["mods"] = mods;
  if (p.fixed) j["fixed"] = true;
  return j;
}

json propositions_to_json(const std::vector<Proposition>& props) {
  json arr = json::array();
  for (const auto& p : props) arr.push_back(proposition_to_json(p));
  return arr;
}

// --- units ------------------------------------------------------------------

bool fillers_equal(const Filler& a, const Filler& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<SemElement>(a))
    return elements_equal(std::get<SemElement>(a), std::get<SemElement>(b));
  const auto& la = std::get<CoordList>(a).members;
  const auto& lb = std::get<CoordList>(b).members;
  if (la.size() != lb.size()) return false;
  for (size_t i = 0; i < la.size(); ++i)
    if (!elements_equal(la[i], lb[i])) return false;
  return true;
}

bool filler_recurring(const Filler& f) {
  if (const auto* e = std::get_if<SemElement>(&f))
    return e->status == Status::Recurring;
  const auto& members = std::get<CoordList>(f).members;
  return !members.empty() && members.front().status == Status::Recurring;
}

void set_filler_status(Filler& f, Status st) {
  if (auto* e = std::get_if<SemElement>(&f)) {
    e->status = st;
    return;
  }
  for (auto& m : std::get<CoordList>(f).members) m.status = st;
}

SimpleUnit SimpleUnit::from_proposition(const Proposition& p) {
  SimpleUnit u;
  for (const auto& [slot, elem] : p.slots) u.slots.emplace(slot, elem);
  u.leaves.push_back(LeafRecord{p.id, {}, false});
  return u;
}

const Filler* SimpleUnit::find(Slot s) const {
  auto it = slots.find(s);
  return it == slots.end() ? nullptr : &it->second;
}

std::optional<Slot> SimpleUnit::coord_slot() const {
  for (const auto& [slot, filler] : slots)
    if (std::holds_alternative<CoordList>(filler)) return slot;
  return std::nullopt;
}

int SimpleUnit::merged_count() const {
  int n = 0;
  for (const auto& l : leaves) n += l.absorbed ? 0 : 1;
  return n;
}

std::set<Slot> MultiUnit::recurring_slots() const {
  std::set<Slot> out;
  if (conjuncts.empty()) return out;
  for (Slot s : kAllSlots) {
    bool all = true;
    for (const auto& c : conjuncts) {
      const Filler* f = c.find(s);
      if (!f || !filler_recurring(*f)) {
        all = false;
        break;
      }
    }
    if (all) out.insert(s);
  }
  return out;
}

int MultiUnit::merged_count() const {
  int n = 0;
  for (const auto& c : conjuncts) n += c.merged_count();
  return n;
}

int unit_merged_count(const CoordUnit& u) {
  if (const auto* s = std::get_if<SimpleUnit>(&u)) return s->merged_count();
  return std::get<MultiUnit>(u).merged_count();
}

std::vector<int> unit_leaf_ids(const CoordUnit& u) {
  std::vector<int> ids;
  auto add = [&](const SimpleUnit& s) {
    for (const auto& l : s.leaves) ids.push_back(l.prop_id);
  };
  if (const auto* s = std::get_if<SimpleUnit>(&u))
    add(*s);
  else
    for (const auto& c : std::get<MultiUnit>(u).conjuncts) add(c);
  return ids;
}

}  // namespace coordgen

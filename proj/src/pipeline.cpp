#include "coordgen/pipeline.hpp"

#include <nlohmann/json.hpp>

namespace coordgen {

using nlohmann::json;

PipelineResult run_pipeline(std::vector<Proposition> props, const Lexicon& lex,
                            const PipelineConfig& config) {
  PipelineResult result;
  result.input = std::move(props);
  if (result.input.empty()) return result;

  result.nde = compute_nde(result.input);
  result.ordered = order_propositions(result.input, ElementOrder(&lex));
  result.plan = plan_sentences(result.ordered, config.thresholds);
  result.sentences.reserve(result.plan.units.size());
  for (const auto& unit : result.plan.units)
    result.sentences.push_back(realize_unit(unit, lex, config.layout));
  return result;
}

namespace {

const char* merge_event_name(MergeEvent e) {
  switch (e) {
    case MergeEvent::Base: return "base";
    case MergeEvent::CoordExtend: return "coord";
    case MergeEvent::CoordIntoFinalConjunct: return "coord-final-conjunct";
    case MergeEvent::ConjunctAppend: return "conjunct";
    case MergeEvent::AbsorbDuplicate: return "absorb";
    case MergeEvent::Boundary: return "boundary";
  }
  return "?";
}

json simple_unit_json(const SimpleUnit& u) {
  json j = json::object();
  json leaves = json::array();
  for (const auto& l : u.leaves) leaves.push_back(l.prop_id);
  j["leaves"] = leaves;
  if (auto coord = u.coord_slot()) {
    j["coordSlot"] = std::string(slot_name(*coord));
    j["coordSize"] =
        std::get<CoordList>(u.slots.at(*coord)).members.size();
  }
  return j;
}

}  // namespace

json trace_json(const PipelineResult& result) {
  json j = json::object();
  j["traceVersion"] = 1;

  json sentences = json::array();
  json annotated = json::array();
  for (const auto& s : result.sentences) {
    sentences.push_back(s.text);
    annotated.push_back(s.annotated);
  }
  j["sentences"] = sentences;
  j["annotated"] = annotated;

  json nde = json::object();
  for (const auto& [slot, count] : result.nde)
    nde[std::string(slot_name(slot))] = count;
  j["nde"] = nde;

  json order = json::object();
  json input_ids = json::array();
  for (const auto& p : result.input) input_ids.push_back(p.id);
  json sorted_ids = json::array();
  for (const auto& p : result.ordered) sorted_ids.push_back(p.id);
  order["input"] = input_ids;
  order["sorted"] = sorted_ids;
  j["order"] = order;

  json units = json::array();
  for (size_t i = 0; i < result.plan.units.size(); ++i) {
    const CoordUnit& u = result.plan.units[i];
    json ju = json::object();
    if (const auto* simple = std::get_if<SimpleUnit>(&u)) {
      ju["kind"] = "simple";
      ju["clause"] = simple_unit_json(*simple);
    } else {
      const auto& multi = std::get<MultiUnit>(u);
      ju["kind"] = "multi";
      json conjs = json::array();
      for (const auto& c : multi.conjuncts) conjs.push_back(simple_unit_json(c));
      ju["conjuncts"] = conjs;
      json sig = json::array();
      for (Slot s : multi.distinct_signature)
        sig.push_back(std::string(slot_name(s)));
      ju["distinctSignature"] = sig;
      json rec = json::array();
      for (Slot s : multi.recurring_slots())
        rec.push_back(std::string(slot_name(s)));
      ju["recurring"] = rec;
      json dels = json::array();
      if (i < result.sentences.size()) {
        for (const auto& d : result.sentences[i].deletions) {
          json jd = json::object();
          jd["slot"] = std::string(slot_name(d.slot));
          jd["direction"] = std::string(direction_name(d.direction));
          jd["keptConjunct"] = d.kept_conjunct;
          dels.push_back(jd);
        }
      }
      ju["deletions"] = dels;
    }
    units.push_back(ju);
  }
  j["units"] = units;

  json log = json::array();
  for (const auto& e : result.plan.log) {
    json je = json::object();
    je["unit"] = e.unit;
    je["event"] = merge_event_name(e.event);
    je["prop"] = e.prop_id;
    if (e.slot) je["slot"] = std::string(slot_name(*e.slot));
    if (!e.distinct.empty()) {
      json d = json::array();
      for (Slot s : e.distinct) d.push_back(std::string(slot_name(s)));
      je["distinct"] = d;
    }
    log.push_back(je);
  }
  j["mergeLog"] = log;
  return j;
}

}  // namespace coordgen

#include "coordgen/fuzz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coordgen/grouper.hpp"
#include "coordgen/oracle.hpp"
#include "coordgen/pipeline.hpp"

namespace coordgen {

namespace {

Lexicon build_fuzz_lexicon() {
  Lexicon lex;
  auto verb = [&](const char* c, const char* lemma, const char* past) {
    LexiconEntry e;
    e.concept_id = c;
    e.lemma = lemma;
    e.category = Category::Verb;
    e.inflections["past"] = past;
    lex.add(e);
  };
  auto proper = [&](const char* c, const char* lemma) {
    LexiconEntry e;
    e.concept_id = c;
    e.lemma = lemma;
    e.category = Category::Proper;
    lex.add(e);
  };
  auto noun = [&](const char* c, const char* lemma,
                  DeterminerPolicy det = DeterminerPolicy::None) {
    LexiconEntry e;
    e.concept_id = c;
    e.lemma = lemma;
    e.category = Category::Noun;
    e.determiner = det;
    lex.add(e);
  };
  auto prep = [&](const char* c, const char* lemma) {
    LexiconEntry e;
    e.concept_id = c;
    e.lemma = lemma;
    e.category = Category::Prep;
    lex.add(e);
  };
  auto timeword = [&](const char* c, const char* lemma, int rank) {
    LexiconEntry e;
    e.concept_id = c;
    e.lemma = lemma;
    e.category = Category::Timeword;
    e.rank = rank;
    lex.add(e);
  };
  verb("c-restock", "re-stock", "re-stocked");
  verb("c-remove", "remove", "removed");
  verb("c-rearrange", "rearrange", "rearranged");
  verb("c-deliver", "deliver", "delivered");
  verb("c-inspect", "inspect", "inspected");
  proper("c-al", "Al");
  proper("c-john", "John");
  proper("c-mary", "Mary");
  proper("c-bill", "Bill");
  noun("c-milk", "milk");
  noun("c-coffee", "coffee");
  noun("c-tea", "tea");
  noun("c-bread", "bread");
  noun("c-cereal", "cereal");
  noun("c-sign", "sign", DeterminerPolicy::Definite);
  noun("c-aisle", "Aisle");
  noun("c-shelf", "shelf", DeterminerPolicy::Definite);
  noun("c-care", "care");
  noun("c-haste", "haste");
  {
    LexiconEntry e;
    e.concept_id = "c-rotten";
    e.lemma = "rotten";
    e.category = Category::Adj;
    lex.add(e);
    e.concept_id = "c-fresh";
    e.lemma = "fresh";
    lex.add(e);
  }
  prep("c-in", "in");
  prep("c-on", "on");
  prep("c-at", "at");
  prep("c-with", "with");
  timeword("c-monday", "Monday", 1);
  timeword("c-tuesday", "Tuesday", 2);
  timeword("c-wednesday", "Wednesday", 3);
  timeword("c-thursday", "Thursday", 4);
  timeword("c-friday", "Friday", 5);
  return lex;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& pool) {
  std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

bool chance(std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  return d(rng) < p;
}

SemElement make_pp(const std::string& prep, EType etype, SemElement arg) {
  SemElement pp;
  pp.concept_id = prep;
  pp.etype = etype;
  pp.mods.push_back(std::move(arg));
  return pp;
}

Proposition random_proposition(std::mt19937_64& rng, int id) {
  static const std::vector<std::string> verbs = {
      "c-restock", "c-remove", "c-rearrange", "c-deliver", "c-inspect"};
  static const std::vector<std::string> agents = {"c-al", "c-john", "c-mary",
                                                  "c-bill"};
  static const std::vector<std::string> goods = {"c-milk", "c-coffee", "c-tea",
                                                 "c-bread", "c-cereal"};
  static const std::vector<std::string> days = {
      "c-monday", "c-tuesday", "c-wednesday", "c-thursday", "c-friday"};
  static const std::vector<std::string> manners = {"c-care", "c-haste"};

  Proposition p;
  p.id = id;
  SemElement pred;
  pred.concept_id = pick(rng, verbs);
  pred.etype = EType::Event;
  pred.features["tense"] = "past";
  p.slots[Slot::Pred] = pred;

  SemElement agent;
  agent.concept_id = pick(rng, agents);
  p.slots[Slot::Arg1] = agent;

  if (chance(rng, 0.75)) {
    SemElement obj;
    obj.concept_id = pick(rng, goods);
    if (chance(rng, 0.2)) {
      SemElement attr;
      attr.concept_id = chance(rng, 0.5) ? "c-rotten" : "c-fresh";
      attr.etype = EType::Attribute;
      obj.mods.push_back(std::move(attr));
    }
    p.slots[Slot::Arg2] = obj;
  }
  if (chance(rng, 0.2)) {
    SemElement shelf;
    shelf.concept_id = "c-shelf";
    p.slots[Slot::Arg3] = make_pp("c-on", EType::Thing, shelf);
  }
  if (chance(rng, 0.5)) {
    SemElement aisle;
    aisle.concept_id = "c-aisle";
    std::uniform_int_distribution<int> d(1, 6);
    aisle.features["index"] = std::to_string(d(rng));
    p.slots[Slot::ModPlace] = make_pp("c-in", EType::Place, aisle);
  }
  if (chance(rng, 0.6)) {
    SemElement day;
    day.concept_id = pick(rng, days);
    day.etype = EType::TimeThing;
    p.slots[Slot::ModTime] = make_pp("c-on", EType::Time, day);
  }
  if (chance(rng, 0.1)) {
    SemElement manner;
    manner.concept_id = pick(rng, manners);
    p.slots[Slot::ModManner] = make_pp("c-with", EType::Attribute, manner);
  }
  return p;
}

}  // namespace

const Lexicon& fuzz_lexicon() {
  static const Lexicon lex = build_fuzz_lexicon();
  return lex;
}

FuzzCase random_case(std::mt19937_64& rng) {
  FuzzCase c;
  std::uniform_int_distribution<int> count(1, 10);
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    if (i > 0 && chance(rng, 0.15)) {
      Proposition dup = c.props[static_cast<size_t>(rng() % c.props.size())];
      dup.id = i;
      c.props.push_back(std::move(dup));
      continue;
    }
    Proposition p = random_proposition(rng, i);
    p.fixed = chance(rng, 0.06);
    c.props.push_back(std::move(p));
  }
  std::uniform_int_distribution<int> md(1, 4);
  std::uniform_int_distribution<int> mp(1, 8);
  c.thresholds.max_multi_distinct = md(rng);
  c.thresholds.max_props_per_sentence = mp(rng);
  c.thresholds.parallel_override = chance(rng, 0.5);
  c.layout.front_time = chance(rng, 0.5);
  c.layout.front_place = chance(rng, 0.25);
  return c;
}

namespace {

std::string dump_case(const FuzzCase& c) {
  std::ostringstream out;
  out << propositions_to_json(c.props).dump() << " thresholds{md="
      << c.thresholds.max_multi_distinct
      << ", props=" << c.thresholds.max_props_per_sentence
      << ", override=" << c.thresholds.parallel_override << "} layout{ft="
      << c.layout.front_time << ", fp=" << c.layout.front_place << "}";
  return out.str();
}

std::optional<std::string> check_ordering(const FuzzCase& c) {
  ElementOrder order(&fuzz_lexicon());
  auto sorted = order_propositions(c.props, order);
  if (sorted.size() != c.props.size()) return "ordering changed group size";

  std::multiset<int> in_ids, out_ids;
  for (const auto& p : c.props) in_ids.insert(p.id);
  for (const auto& p : sorted) out_ids.insert(p.id);
  if (in_ids != out_ids) return "ordering is not a permutation";

  auto twice = order_propositions(sorted, order);
  for (size_t i = 0; i < sorted.size(); ++i)
    if (twice[i].id != sorted[i].id) return "ordering is not idempotent";

  bool any_fixed = false;
  for (const auto& p : c.props) any_fixed = any_fixed || p.fixed;
  for (size_t i = 0; i < c.props.size(); ++i)
    if (c.props[i].fixed && sorted[i].id != c.props[i].id)
      return "fixed proposition moved";
  if (any_fixed) return std::nullopt;  // pins may split grouping runs

  if (auto primary = primary_grouping_slot(c.props)) {
    // The primary grouping slot must form contiguous runs.
    std::vector<const SemElement*> seen;
    const SemElement* prev = nullptr;
    auto same_class = [&](const SemElement* a, const SemElement* b) {
      if (!a || !b) return !a && !b;
      return elements_equal(*a, *b);
    };
    for (const auto& p : sorted) {
      const SemElement* e = p.find(*primary);
      if (&p != &sorted.front() && same_class(e, prev)) continue;
      for (const auto* s : seen)
        if (same_class(e, s)) return "primary grouping slot has split runs";
      seen.push_back(e);
      prev = e;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_plan(const FuzzCase& c,
                                      const PipelineResult& result) {
  std::multiset<int> in_ids, leaf_ids;
  for (const auto& p : result.input) in_ids.insert(p.id);
  for (const auto& u : result.plan.units)
    for (int id : unit_leaf_ids(u)) leaf_ids.insert(id);
  if (in_ids != leaf_ids)
    return "plan does not preserve the proposition multiset";

  for (const auto& u : result.plan.units) {
    const auto* multi = std::get_if<MultiUnit>(&u);
    if (!multi) continue;
    if (!c.thresholds.parallel_override &&
        static_cast<int>(multi->conjuncts.size()) >
            c.thresholds.max_multi_distinct)
      return "conjunct count exceeds threshold without override";
    // RECURRING marks iff cross-conjunct agreement.
    for (Slot s : kAllSlots) {
      bool agreed = true;
      const Filler* first = nullptr;
      for (const auto& conj : multi->conjuncts) {
        const Filler* f = conj.find(s);
        if (!f) {
          agreed = false;
          break;
        }
        if (!first)
          first = f;
        else if (!fillers_equal(*first, *f))
          agreed = false;
      }
      for (const auto& conj : multi->conjuncts) {
        const Filler* f = conj.find(s);
        if (f && filler_recurring(*f) != agreed)
          return "recurring marks disagree with cross-conjunct agreement";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_surface(const FuzzCase& c,
                                         const PipelineResult& result,
                                         const Lexicon& lex) {
  for (size_t i = 0; i < result.plan.units.size(); ++i) {
    const Realization& r = result.sentences[i];
    if (strip_annotations(r.annotated) != r.text)
      return "annotated form does not strip to the plain text: '" +
             r.annotated + "' vs '" + r.text + "'";

    const auto* multi = std::get_if<MultiUnit>(&result.plan.units[i]);
    if (!multi) continue;
    SurfacePlan plan =
        resolve_deletions(build_surface_plan(*multi, lex, c.layout));
    for (const auto& g : plan.groups) {
      if (g.resolution == Direction::Unresolved)
        return "deletion group left unresolved";
      int survivors = 0;
      for (size_t k = 0; k < plan.conjuncts.size(); ++k) {
        const Constituent* occ = plan.find(static_cast<int>(k), g.slot);
        if (!occ) return "recurring group missing an occurrence";
        if (!occ->deleted) ++survivors;
      }
      if (survivors != 1) return "recurring group does not keep exactly one occurrence";
    }
    // Fixpoint.
    SurfacePlan again = resolve_deletions(plan);
    for (size_t k = 0; k < plan.conjuncts.size(); ++k)
      for (size_t m = 0; m < plan.conjuncts[k].size(); ++m)
        if (plan.conjuncts[k][m].deleted != again.conjuncts[k][m].deleted)
          return "resolve_deletions is not idempotent";
    // Every conjunct must keep some surface material.
    for (const auto& row : plan.conjuncts) {
      bool any = false;
      for (const auto& con : row) any = any || !con.deleted;
      if (!any) return "deletion emptied a conjunct";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FuzzFailure> run_fuzz_case(const FuzzCase& c, const Lexicon& lex) {
  auto fail = [&](const std::string& what) {
    return FuzzFailure{0, what, dump_case(c)};
  };
  try {
    // Ingestion round trip over the generated group.
    auto reparsed = parse_propositions(propositions_to_json(c.props).dump());
    if (reparsed.size() != c.props.size())
      return fail("serialization round trip changed the group size");
    for (size_t i = 0; i < c.props.size(); ++i) {
      if (reparsed[i].fixed != c.props[i].fixed ||
          reparsed[i].slots.size() != c.props[i].slots.size())
        return fail("serialization round trip changed a proposition");
      for (const auto& [slot, elem] : c.props[i].slots)
        if (!reparsed[i].has(slot) ||
            !elements_equal(elem, *reparsed[i].find(slot)))
          return fail("serialization round trip changed slot " +
                      std::string(slot_name(slot)));
    }

    if (auto err = check_ordering(c)) return fail(*err);

    PipelineConfig config{c.thresholds, c.layout};
    PipelineResult result = run_pipeline(c.props, lex, config);
    if (auto err = check_plan(c, result)) return fail(*err);
    if (auto err = check_surface(c, result, lex)) return fail(*err);

    EquivalenceReport eq =
        check_equivalence(result.input, result.plan.units, lex, c.layout);
    if (!eq.pass) {
      std::string detail = dump_case(c);
      for (const auto& s : eq.missing) detail += "\n  missing: " + s;
      for (const auto& s : eq.unexpected) detail += "\n  unexpected: " + s;
      return FuzzFailure{0, "segregatory equivalence failed", detail};
    }

    // Determinism: a second run must reproduce the sentences byte for byte.
    PipelineResult rerun = run_pipeline(c.props, lex, config);
    if (rerun.sentences.size() != result.sentences.size())
      return fail("pipeline is not deterministic");
    for (size_t i = 0; i < rerun.sentences.size(); ++i)
      if (rerun.sentences[i].text != result.sentences[i].text)
        return fail("pipeline is not deterministic");
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
  return std::nullopt;
}

std::vector<FuzzFailure> run_fuzz(uint64_t seed, int count, int max_failures) {
  std::vector<FuzzFailure> failures;
  std::mt19937_64 rng(seed);
  const Lexicon& lex = fuzz_lexicon();
  for (int i = 0; i < count; ++i) {
    FuzzCase c = random_case(rng);
    if (auto failure = run_fuzz_case(c, lex)) {
      failure->case_index = i;
      failures.push_back(std::move(*failure));
      if (static_cast<int>(failures.size()) >= max_failures) break;
    }
  }
  return failures;
}

}  // namespace coordgen

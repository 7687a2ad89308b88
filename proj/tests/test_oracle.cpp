#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coordgen/grouper.hpp"
#include "coordgen/oracle.hpp"
#include "coordgen/pipeline.hpp"
#include "test_util.hpp"

using namespace coordgen;

TEST_CASE("a coordinated object expands to one clause per member") {
  auto props = testutil::load_fixture("likes.json");
  Lexicon lex = testutil::load_lexicon("linguistics.json");
  PipelineResult result = run_pipeline(props, lex, PipelineConfig{});
  REQUIRE(result.sentences.size() == 1);
  CHECK(result.sentences[0].text == "John likes Mary and Nancy.");

  auto clauses = expand_unit(result.plan.units[0], lex, LayoutPolicy{});
  std::sort(clauses.begin(), clauses.end());
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0] == "John likes Mary.");
  CHECK(clauses[1] == "John likes Nancy.");
}

TEST_CASE("the supermarket unit expands to its three source clauses") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  PipelineResult result = run_pipeline(props, lex, PipelineConfig{});
  REQUIRE(result.plan.units.size() == 2);

  auto clauses = expand_unit(result.plan.units[0], lex, LayoutPolicy{});
  std::multiset<std::string> got(clauses.begin(), clauses.end());

  // Independent route: realize the three member propositions one by one.
  std::multiset<std::string> expected;
  for (int id : {1, 2, 0})
    expected.insert(realize_proposition(props[static_cast<size_t>(id)], lex,
                                        LayoutPolicy{}));
  CHECK(got == expected);
  CHECK(got.count("Al re-stocked coffee in Aisle 2 on Monday.") == 1);
  CHECK(got.count("Al re-stocked tea in Aisle 2 on Monday.") == 1);
  CHECK(got.count("Al re-stocked milk in Aisle 5 on Monday.") == 1);
}

TEST_CASE("a simple unit expands to exactly its own realization") {
  auto props = testutil::load_fixture("plandoc1.json");
  Lexicon lex = testutil::load_lexicon("plandoc.json");
  CoordUnit unit = SimpleUnit::from_proposition(props[0]);
  auto clauses = expand_unit(unit, lex, LayoutPolicy{});
  REQUIRE(clauses.size() == 1);
  CHECK(clauses[0] == realize_proposition(props[0], lex, LayoutPolicy{}));
}

TEST_CASE("leaf replay rebuilds the exact source propositions") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  PipelineResult result = run_pipeline(props, lex, PipelineConfig{});
  const auto& multi = std::get<MultiUnit>(result.plan.units[0]);
  for (const auto& conj : multi.conjuncts)
    for (const auto& leaf : conj.leaves) {
      Proposition rebuilt = leaf_to_proposition(conj, leaf);
      const Proposition& original = props[static_cast<size_t>(leaf.prop_id)];
      REQUIRE(rebuilt.slots.size() == original.slots.size());
      for (const auto& [slot, elem] : original.slots)
        CHECK(elements_equal(elem, *rebuilt.find(slot)));
    }
}

TEST_CASE("check_equivalence passes on a full run") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  PipelineResult result = run_pipeline(props, lex, PipelineConfig{});
  EquivalenceReport report =
      check_equivalence(result.input, result.plan.units, lex, LayoutPolicy{});
  CHECK(report.pass);
  CHECK(report.missing.empty());
  CHECK(report.unexpected.empty());
}

TEST_CASE("a dropped conjunct shows up as one missing clause") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  PipelineResult result = run_pipeline(props, lex, PipelineConfig{});
  auto& multi = std::get<MultiUnit>(result.plan.units[0]);
  multi.conjuncts.pop_back();  // lose "milk in Aisle 5"
  EquivalenceReport report =
      check_equivalence(result.input, result.plan.units, lex, LayoutPolicy{});
  CHECK_FALSE(report.pass);
  REQUIRE(report.missing.size() == 1);
  CHECK(report.missing[0] == "Al re-stocked milk in Aisle 5 on Monday.");
  CHECK(report.unexpected.empty());
}

TEST_CASE("empty input is vacuously equivalent") {
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  EquivalenceReport report = check_equivalence({}, {}, lex, LayoutPolicy{});
  CHECK(report.pass);
}

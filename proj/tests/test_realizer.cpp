#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coordgen/errors.hpp"
#include "coordgen/grouper.hpp"
#include "coordgen/pipeline.hpp"
#include "coordgen/realizer.hpp"
#include "test_util.hpp"

using namespace coordgen;

namespace {

std::vector<std::string> aggregate(const std::string& fixture,
                                   const std::string& lexicon,
                                   LayoutPolicy layout = {},
                                   Thresholds thresholds = {}) {
  auto props = testutil::load_fixture(fixture);
  Lexicon lex = testutil::load_lexicon(lexicon);
  PipelineResult result =
      run_pipeline(std::move(props), lex, PipelineConfig{thresholds, layout});
  std::vector<std::string> out;
  for (const auto& s : result.sentences) out.push_back(s.text);
  return out;
}

std::string joined(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty() && t != ",") s += ' ';
    s += t;
  }
  return s;
}

}  // namespace

TEST_CASE("noun phrases: determiners, premodifiers, indices") {
  Lexicon lex = testutil::load_lexicon("linguistics.json");
  SemElement laptop{"c-laptop", EType::Thing, {{"specific", "no"}},
                    {SemElement{"c-expensive", EType::Attribute, {}, {}, {}}},
                    {}};
  CHECK(joined(realize_np(laptop, lex)) == "an expensive laptop");

  SemElement dog{"c-dog", EType::Thing, {},
                 {SemElement{"c-rabid", EType::Attribute, {}, {}, {}}}, {}};
  CHECK(joined(realize_np(dog, lex)) == "the rabid dog");

  SemElement forties{"c-forties", EType::Thing, {{"possessive", "his"}}, {}, {}};
  CHECK(joined(realize_np(forties, lex)) == "his forties");

  SemElement book{"c-book", EType::Thing, {}, {}, {}};
  CHECK(joined(realize_np(book, lex)) == "a book");

  Lexicon market = testutil::load_lexicon("supermarket.json");
  SemElement milk{"c-milk", EType::Thing, {}, {}, {}};
  CHECK(joined(realize_np(milk, market)) == "milk");
  SemElement al{"c-al", EType::Thing, {}, {}, {}};
  CHECK(joined(realize_np(al, market)) == "Al");
  SemElement aisle{"c-aisle", EType::Thing, {{"index", "5"}}, {}, {}};
  CHECK(joined(realize_np(aisle, market)) == "Aisle 5");

  Lexicon plandoc = testutil::load_lexicon("plandoc.json");
  SemElement activation{"c-fiber-activation",
                        EType::Thing,
                        {{"count", "one"}},
                        {SemElement{"c-new", EType::Attribute, {}, {}, {}}},
                        {}};
  CHECK(joined(realize_np(activation, plandoc)) == "one new fiber activation");
}

TEST_CASE("missing lexicon entries and inflections name the concept") {
  Lexicon lex = testutil::load_lexicon("linguistics.json");
  SemElement ghost{"c-ghost", EType::Thing, {}, {}, {}};
  try {
    realize_np(ghost, lex);
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(std::string(e.what()).find("c-ghost") != std::string::npos);
  }
  SemElement verb{"c-sleep", EType::Event, {{"tense", "future"}}, {}, {}};
  CHECK_THROWS_AS(realize_element(verb, lex), LexiconError);
}

TEST_CASE("phrase coordination elides shared prefixes forward") {
  PhraseStyle style;
  CoordinatedPhrase p = coordinate_phrase(
      {{"in", "Aisle", "3"}, {"in", "Aisle", "4"}}, style);
  CHECK(joined(p.tokens) == "in Aisle 3 and 4");
  CHECK(joined(p.annotated) == "in Aisle 3 and [in Aisle] 4");
}

TEST_CASE("phrase coordination elides shared suffixes backward") {
  PhraseStyle style;
  CoordinatedPhrase p =
      coordinate_phrase({{"at", "3", "PM"}, {"at", "9", "PM"}}, style);
  CHECK(joined(p.tokens) == "at 3 and 9 PM");
  CHECK(joined(p.annotated) == "at 3 [PM] and [at] 9 PM");
}

TEST_CASE("members sharing nothing keep their full forms") {
  PhraseStyle style;
  CoordinatedPhrase p =
      coordinate_phrase({{"coffee"}, {"tea"}}, style);
  CHECK(joined(p.tokens) == "coffee and tea");
}

TEST_CASE("comma-list style strings members with commas only") {
  PhraseStyle style;
  style.comma_list = true;
  CoordinatedPhrase p = coordinate_phrase(
      {{"in", "his", "forties"}, {"of", "average", "build"}}, style);
  CHECK(joined(p.tokens) == "in his forties, of average build");
}

TEST_CASE("supermarket aggregates to the two worked sentences") {
  auto lines = aggregate("supermarket.json", "supermarket.json");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "Al re-stocked coffee and tea in Aisle 2 and milk in Aisle 5 on "
        "Monday.");
  CHECK(lines[1] == "Al re-stocked bread in Aisle 3 on Friday.");
}

TEST_CASE("two-way multiple-distinct keeps both distinct tails") {
  auto lines = aggregate("fig4.json", "supermarket.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "Al re-stocked tea on Monday and milk on Friday.");
}

TEST_CASE("non-constituent coordination: the spy sentence") {
  auto lines = aggregate("spy.json", "linguistics.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] ==
        "The spy was in his forties, of average build, and spoke with a "
        "slightly foreign accent.");
}

TEST_CASE("clause coordination with a shared subject elides the repeat") {
  auto lines = aggregate("finish_home.json", "linguistics.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "John finished his work and went home.");
}

TEST_CASE("three 3-distinct propositions stay in one parallel sentence") {
  auto lines = aggregate("threedist.json", "linguistics.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] ==
        "John played tennis on Monday, drove to school on Tuesday, and won "
        "the lottery on Wednesday.");
}

TEST_CASE("shared-verb inputs coordinate their subjects") {
  auto lines = aggregate("vpd.json", "linguistics.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "John and Peter slept.");
}

TEST_CASE("a single proposition realizes plainly") {
  auto lines = aggregate("laptop.json", "linguistics.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "John lost an expensive laptop yesterday.");
}

TEST_CASE("medial recurring place deletes forward, times survive") {
  auto lines = aggregate("intro.json", "supermarket.json");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] ==
        "John rearranged cereals in Aisle 2 on Monday and candies on "
        "Tuesday.");
}

TEST_CASE("fronting the time adverbial flips the deleted occurrence") {
  auto at_end = aggregate("frontpair.json", "supermarket.json");
  REQUIRE(at_end.size() == 1);
  CHECK(at_end[0] ==
        "John rearranged cereals in Aisle 2 and cookies in Aisle 4 on "
        "Monday.");

  LayoutPolicy fronted;
  fronted.front_time = true;
  auto at_front = aggregate("frontpair.json", "supermarket.json", fronted);
  REQUIRE(at_front.size() == 1);
  CHECK(at_front[0] ==
        "On Monday, John rearranged cereals in Aisle 2 and cookies in Aisle "
        "4.");
}

TEST_CASE("annotate mode brackets exactly what was deleted") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  PipelineResult result = run_pipeline(std::move(props), lex, PipelineConfig{});
  REQUIRE(result.sentences.size() == 2);
  CHECK(result.sentences[0].annotated ==
        "Al re-stocked coffee and tea in Aisle 2 [on Monday] and [Al] "
        "[re-stocked] milk in Aisle 5 on Monday.");
  for (const auto& s : result.sentences)
    CHECK(strip_annotations(s.annotated) == s.text);
}

TEST_CASE("1-distinct verbs coordinate inside one clause") {
  auto props = parse_propositions(R"([
    {"pred": {"concept": "c-restock", "tense": "past"},
     "arg1": {"concept": "c-al"},
     "arg2": {"concept": "c-milk"},
     "mods": [{"kind": "time", "prep": "c-on", "arg": {"concept": "c-monday"}}]},
    {"pred": {"concept": "c-remove", "tense": "past"},
     "arg1": {"concept": "c-al"},
     "arg2": {"concept": "c-milk"},
     "mods": [{"kind": "time", "prep": "c-on", "arg": {"concept": "c-monday"}}]}
  ])");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  PipelineResult result = run_pipeline(props, lex, PipelineConfig{});
  REQUIRE(result.sentences.size() == 1);
  // Stage 1 orders the verbs by concept identifier.
  CHECK(result.sentences[0].text ==
        "Al removed and re-stocked milk on Monday.");
}

TEST_CASE("realization is deterministic") {
  auto a = aggregate("supermarket.json", "supermarket.json");
  auto b = aggregate("supermarket.json", "supermarket.json");
  CHECK(a == b);
}

TEST_CASE("serial commas can be turned off") {
  LayoutPolicy layout;
  layout.serial_comma = false;
  auto lines = aggregate("pills.json", "linguistics.json", layout);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] ==
        "John took aspirin on Monday, penicillin on Tuesday and Tylenol on "
        "Wednesday.");
}

TEST_CASE("empty units are contract errors") {
  Lexicon lex = testutil::load_lexicon("linguistics.json");
  CHECK_THROWS_AS(realize_unit(SimpleUnit{}, lex, LayoutPolicy{}),
                  ContractError);
  CHECK_THROWS_AS(realize_unit(MultiUnit{}, lex, LayoutPolicy{}),
                  ContractError);
}

TEST_CASE("plandoc surface forms") {
  auto one = aggregate("plandoc1.json", "plandoc.json");
  REQUIRE(one.size() == 1);
  CHECK(one[0] ==
        "The Base Plan called for one new fiber activation at CSA 1061 in "
        "1995 Q2.");

  auto two = aggregate("plandoc2.json", "plandoc.json");
  REQUIRE(two.size() == 1);
  CHECK(two[0] ==
        "New 150mb_mux multiplexor placements were projected at CSA 1160 and "
        "1335 in 1995 Q2.");

  auto three = aggregate("plandoc3.json", "plandoc.json");
  REQUIRE(three.size() == 1);
  CHECK(three[0] ==
        "New 150mb_mux multiplexors were placed at CSA 1178 in 1995 Q4 and "
        "at CSA 1835 in 1997 Q1.");

  LayoutPolicy fronted;
  fronted.front_place = true;
  auto five = aggregate("plandoc5.json", "plandoc.json", fronted);
  REQUIRE(five.size() == 1);
  CHECK(five[0] ==
        "At CSA 2113, the Base Plan called for 32 working-pair transfers in "
        "1997 Q1 and four working-pair transfers in 1997 Q2 and Q3.");
}

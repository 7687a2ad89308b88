#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coordgen/fuzz.hpp"
#include "coordgen/grouper.hpp"
#include "test_util.hpp"

using namespace coordgen;

TEST_CASE("NDE for the supermarket group") {
  auto props = testutil::load_fixture("supermarket.json");
  NdeTable nde = compute_nde(props);
  CHECK(nde.at(Slot::Pred) == 1);
  CHECK(nde.at(Slot::Arg1) == 1);
  CHECK(nde.at(Slot::Arg2) == 4);
  CHECK(nde.at(Slot::ModPlace) == 3);
  CHECK(nde.at(Slot::ModTime) == 2);
  CHECK(nde.count(Slot::Arg3) == 0);
}

TEST_CASE("NDE trivial groups") {
  auto props = testutil::load_fixture("supermarket.json");
  std::vector<Proposition> one = {props[0]};
  for (const auto& [slot, count] : compute_nde(one)) CHECK(count == 1);

  std::vector<Proposition> twins = {props[0], props[0]};
  for (const auto& [slot, count] : compute_nde(twins)) CHECK(count == 1);
}

TEST_CASE("absence contributes one distinct class") {
  auto props = testutil::load_fixture("threedist.json");
  NdeTable nde = compute_nde(props);
  CHECK(nde.at(Slot::ModPlace) == 2);  // "to school" + absent
  CHECK(nde.at(Slot::Arg2) == 3);      // tennis, lottery, absent
  CHECK(nde.at(Slot::Pred) == 3);
}

TEST_CASE("stage 1 reproduces the surface order of the worked example") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  auto sorted = order_propositions(props, ElementOrder(&lex));
  REQUIRE(sorted.size() == 4);
  CHECK(sorted[0].find(Slot::Arg2)->concept_id == "c-coffee");
  CHECK(sorted[1].find(Slot::Arg2)->concept_id == "c-tea");
  CHECK(sorted[2].find(Slot::Arg2)->concept_id == "c-milk");
  CHECK(sorted[3].find(Slot::Arg2)->concept_id == "c-bread");
  CHECK(sorted[0].id == 1);
  CHECK(sorted[1].id == 2);
  CHECK(sorted[2].id == 0);
  CHECK(sorted[3].id == 3);
}

TEST_CASE("sorting is idempotent and permutes") {
  auto props = testutil::load_fixture("supermarket.json");
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  ElementOrder order(&lex);
  auto once = order_propositions(props, order);
  auto twice = order_propositions(once, order);
  REQUIRE(once.size() == twice.size());
  for (size_t i = 0; i < once.size(); ++i) CHECK(once[i].id == twice[i].id);

  std::multiset<int> in, out;
  for (const auto& p : props) in.insert(p.id);
  for (const auto& p : once) out.insert(p.id);
  CHECK(in == out);
}

TEST_CASE("fixed propositions keep their input position") {
  auto props = testutil::load_fixture("supermarket.json");
  props[0].fixed = true;  // milk stays first
  Lexicon lex = testutil::load_lexicon("supermarket.json");
  auto sorted = order_propositions(props, ElementOrder(&lex));
  CHECK(sorted[0].id == 0);
  CHECK(sorted[1].id == 1);
  CHECK(sorted[2].id == 2);
  CHECK(sorted[3].id == 3);
}

TEST_CASE("absent slots sort after present values within a pass") {
  auto props = testutil::load_fixture("spy.json");
  Lexicon lex = testutil::load_lexicon("linguistics.json");
  auto sorted = order_propositions(props, ElementOrder(&lex));
  // "spoke ..." lacks ARG2 and must come last.
  CHECK(sorted[0].id == 0);
  CHECK(sorted[1].id == 1);
  CHECK(sorted[2].id == 2);
}

namespace {

// Best achievable adjacency for `slot` over all permutations, brute force.
int oracle_best_adjacency(std::vector<Proposition> props, Slot slot) {
  std::sort(props.begin(), props.end(),
            [](const Proposition& a, const Proposition& b) {
              return a.id < b.id;
            });
  std::vector<int> idx(props.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  int best = 0;
  do {
    std::vector<Proposition> arranged;
    for (int i : idx) arranged.push_back(props[static_cast<size_t>(i)]);
    best = std::max(best, adjacency_score(arranged, slot));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

}  // namespace

TEST_CASE("sorted order groups the primary slot as well as any permutation") {
  std::mt19937_64 rng(11);
  const Lexicon& lex = fuzz_lexicon();
  ElementOrder order(&lex);
  for (int round = 0; round < 40; ++round) {
    FuzzCase c = random_case(rng);
    if (c.props.size() > 8) continue;
    for (auto& p : c.props) p.fixed = false;
    auto primary = primary_grouping_slot(c.props);
    if (!primary) continue;
    auto sorted = order_propositions(c.props, order);
    int achieved = adjacency_score(sorted, *primary);
    int best = oracle_best_adjacency(c.props, *primary);
    CHECK_MESSAGE(achieved == best,
                  "round " << round << " slot " << slot_name(*primary)
                           << " achieved " << achieved << " best " << best);
  }
}

TEST_CASE("sorting never loses adjacency on the primary slot") {
  std::mt19937_64 rng(13);
  const Lexicon& lex = fuzz_lexicon();
  ElementOrder order(&lex);
  for (int round = 0; round < 200; ++round) {
    FuzzCase c = random_case(rng);
    for (auto& p : c.props) p.fixed = false;
    auto primary = primary_grouping_slot(c.props);
    if (!primary) continue;
    auto sorted = order_propositions(c.props, order);
    CHECK(adjacency_score(sorted, *primary) >=
          adjacency_score(c.props, *primary));
  }
}

TEST_CASE("runs of the primary slot stay contiguous") {
  std::mt19937_64 rng(17);
  const Lexicon& lex = fuzz_lexicon();
  ElementOrder order(&lex);
  for (int round = 0; round < 200; ++round) {
    FuzzCase c = random_case(rng);
    for (auto& p : c.props) p.fixed = false;
    auto primary = primary_grouping_slot(c.props);
    if (!primary) continue;
    auto sorted = order_propositions(c.props, order);
    // Each class of the primary slot must appear as one contiguous run.
    std::vector<const SemElement*> seen;
    for (size_t i = 0; i < sorted.size(); ++i) {
      const SemElement* e = sorted[i].find(*primary);
      if (i > 0) {
        const SemElement* prev = sorted[i - 1].find(*primary);
        bool same = (!e && !prev) || (e && prev && elements_equal(*e, *prev));
        if (same) continue;
      }
      for (const auto* s : seen) {
        bool repeat = (!s && !e) || (s && e && elements_equal(*s, *e));
        CHECK_FALSE_MESSAGE(repeat, "split run in round " << round);
      }
      seen.push_back(e);
    }
  }
}

#ifndef COORDGEN_FUZZ_HPP
#define COORDGEN_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coordgen/combiner.hpp"
#include "coordgen/lexicon.hpp"
#include "coordgen/realizer.hpp"
#include "coordgen/semrep.hpp"

namespace coordgen {

// Self-contained vocabulary for randomized runs.
const Lexicon& fuzz_lexicon();

struct FuzzCase {
  std::vector<Proposition> props;
  Thresholds thresholds;
  LayoutPolicy layout;
};

FuzzCase random_case(std::mt19937_64& rng);

struct FuzzFailure {
  int case_index = 0;
  std::string what;
  std::string detail;
};

// Runs one random case end to end and checks every structural invariant plus
// segregatory equivalence. Returns the first violation, if any.
std::optional<FuzzFailure> run_fuzz_case(const FuzzCase& c, const Lexicon& lex);

// `count` seeded cases; collects up to `max_failures` violations.
std::vector<FuzzFailure> run_fuzz(uint64_t seed, int count,
                                  int max_failures = 5);

}  // namespace coordgen

#endif  // COORDGEN_FUZZ_HPP

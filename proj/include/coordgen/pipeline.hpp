#ifndef COORDGEN_PIPELINE_HPP
#define COORDGEN_PIPELINE_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "coordgen/combiner.hpp"
#include "coordgen/grouper.hpp"
#include "coordgen/lexicon.hpp"
#include "coordgen/oracle.hpp"
#include "coordgen/realizer.hpp"
#include "coordgen/semrep.hpp"

namespace coordgen {

struct PipelineConfig {
  Thresholds thresholds;
  LayoutPolicy layout;
};

struct PipelineResult {
  std::vector<Proposition> input;
  std::vector<Proposition> ordered;
  NdeTable nde;
  PlanResult plan;
  std::vector<Realization> sentences;
};

PipelineResult run_pipeline(std::vector<Proposition> props, const Lexicon& lex,
                            const PipelineConfig& config);

// Versioned machine-readable account of a run: sentences plus the per-stage
// trace (NDE table, orderings, recurring marks, deletions, merge log).
nlohmann::json trace_json(const PipelineResult& result);

}  // namespace coordgen

#endif  // COORDGEN_PIPELINE_HPP

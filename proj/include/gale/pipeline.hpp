#ifndef GALE_PIPELINE_HPP
#define GALE_PIPELINE_HPP

#include "gale/solver.hpp"
#include "gale/unwrap.hpp"

namespace gale {

struct PipelineOptions {
    std::vector<std::size_t> param_cols;   // empty = automatic
    std::vector<IntVector> forced_basis;   // empty = kernel computation
    TrackerConfig tracker;
    bool refine = true;
    int refine_iters = 2;
};

struct PipelineResult {
    GaleSystem G;
    SolutionSet gale;
    /// Positive fewnomial solutions, refined when requested.
    std::vector<std::vector<BigFloat>> positive;
    std::vector<SoftCertificate> certificates;  // empty unless refined
};

/// transform -> Khovanskii-Rolle solve -> unwrap (+ Newton refinement).
PipelineResult run_pipeline(const FewnomialSystem& F, const PipelineOptions& opt = {});

}  // namespace gale

#endif

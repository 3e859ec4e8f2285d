#include "gale/pipeline.hpp"

namespace gale {

PipelineResult run_pipeline(const FewnomialSystem& F, const PipelineOptions& opt) {
    PipelineResult out;
    out.G = gale_transform(F, opt.param_cols, opt.forced_basis);
    out.gale = khovanskii_rolle_solve(out.G, opt.tracker);
    UnwrapContext ctx = unwrap_context(F, out.G);
    for (const auto& y : out.gale.solutions) {
        std::vector<BigFloat> t = unwrap_point(y, ctx, opt.tracker.precision_bits);
        if (opt.refine) {
            auto [refined, cert] =
                newton_refine(F, t, opt.refine_iters, opt.tracker.precision_bits);
            out.positive.push_back(std::move(refined));
            out.certificates.push_back(std::move(cert));
        } else {
            out.positive.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace gale

#ifndef GALE_SOLVER_HPP
#define GALE_SOLVER_HPP

#include <string>
#include <vector>

#include "gale/chamber.hpp"
#include "gale/jacobians.hpp"
#include "gale/system.hpp"

namespace gale {

enum class PointKind { S0, S1, S2, T1, T2 };

struct TrackedPoint {
    std::vector<BigFloat> coords;  // 2
    PointKind kind = PointKind::S0;
    BigFloat residual = 0;
    std::size_t discovery_count = 1;
    std::vector<std::string> provenance;
    /// T1: index of the edge's form; T2: index of the chamber vertex.
    int aux = -1;
};

struct TrackerConfig {
    double initial_step = 1e-2;
    double min_step = 1e-12;
    double corrector_tol = 1e-10;
    int max_corrector_iters = 8;
    double boundary_margin = 1e-6;
    double dedup_tol = 1e-6;
    int precision_bits = 212;
    int max_steps = 40000;
};

/// Common zeros of (J~_1, J~_2) strictly inside the chamber: Sylvester
/// resultants in both directions, Sturm isolation, Newton-validated pairing,
/// exact chamber membership at a rational snapshot.
std::vector<TrackedPoint> solve_S0(const JacobianChain& chain, const Chamber& ch,
                                   const TrackerConfig& cfg);

/// Zeros of J~_2 on the open edges of the chamber.
std::vector<TrackedPoint> boundary_T1(const JacobianChain& chain, const Chamber& ch,
                                      const TrackerConfig& cfg);

/// The chamber vertices flagged by classify_faces (no polynomial condition
/// remains at dimension zero).
std::vector<TrackedPoint> boundary_T2(const Chamber& ch, const IntMatrix& B);

enum class TrackEnd { Arrived, Exited, Stalled, MaxSteps };

struct TrackResult {
    std::vector<std::vector<BigFloat>> events;  // zeros of `detect` along the path
    TrackEnd end = TrackEnd::MaxSteps;
    std::vector<BigFloat> final_point;
    std::string note;
};

/// Arclength predictor-corrector along {curve = 0} from `start`, direction
/// +1/-1 relative to the right-hand perpendicular of the gradient. Sign
/// changes of `detect` are localized by a 2x2 Newton and emitted. Terminates
/// on chamber exit, arrival near a registered start, or step underflow.
TrackResult track(const SparsePoly& curve, const SparsePoly& detect,
                  const std::vector<AffineForm>& forms, const std::vector<BigFloat>& start,
                  int direction, const std::vector<std::vector<BigFloat>>& registered,
                  const TrackerConfig& cfg);

struct SolveReport {
    std::size_t n_s0 = 0, n_t1 = 0, n_t2 = 0, n_s1 = 0, n_s2 = 0;
    bool kr_inequality_ok = true;
    bool discovery_ok = true;   // every S1/S2 point reached at least twice
    bool incomplete = false;    // some path stalled; result may be a subset
    std::size_t stalled_paths = 0;
    std::vector<std::string> path_errors;
    double wall_seconds = 0;
};

struct SolutionSet {
    GaleSystem system;  // the system actually tracked (possibly compactified)
    std::vector<TrackedPoint> s0, t1, t2, s1, s2;
    /// Final polished solutions in the original Gale coordinates.
    std::vector<std::vector<BigFloat>> solutions;
    SolveReport report;
};

/// Full Khovanskii-Rolle pipeline for ell = 2. Unbounded chambers are
/// compactified automatically; reported solutions are mapped back.
SolutionSet khovanskii_rolle_solve(const GaleSystem& G, const TrackerConfig& cfg = {});

}  // namespace gale

#endif

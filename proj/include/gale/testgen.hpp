#ifndef GALE_TESTGEN_HPP
#define GALE_TESTGEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gale/system.hpp"

namespace gale {

struct SuiteSpec {
    std::vector<std::size_t> n_values{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    std::size_t instances_per_n = 100;
    Rat annulus_inner = 1;
    Rat annulus_outer = 2;
    int magnitude_lo = 1;
    int magnitude_hi = 10;
    std::uint64_t seed = 0;
    /// denominator used when rationalizing sampled coordinates
    long denominator = 1000;
    std::size_t attempt_cap = 100000;
};

using Rng = std::mt19937_64;

/// n+2 rational points in strictly convex position inside the annulus,
/// counterclockwise, by rejection sampling with exact predicates. Throws
/// SamplingExhaustedError when the attempt cap is hit.
std::vector<RatVector> random_polygon(std::size_t n, const SuiteSpec& spec, Rng& rng);

/// Inward-positive primitive integer edge forms of a counterclockwise convex
/// polygon; forms[k] vanishes on the edge from vertex k to vertex k+1.
std::vector<AffineForm> polygon_to_forms(const std::vector<RatVector>& vertices);

struct ExponentPair {
    std::vector<Int> beta_plus;  // all positive
    std::vector<Int> beta_pm;    // signs strictly alternating up to parity
};

ExponentPair random_exponents(std::size_t edge_count, const SuiteSpec& spec, Rng& rng);

struct SuiteInstance {
    std::size_t n = 0;
    std::uint64_t seed = 0;  // per-instance derived seed
    GaleSystem plus_first;   // B columns (beta_plus, beta_pm)
    GaleSystem pm_first;     // B columns (beta_pm, beta_plus)
};

/// Builds an ell=2 Gale system on the polygon's edge forms with the two
/// exponent vectors as the columns of B, in the given order.
GaleSystem assemble_gale(const std::vector<AffineForm>& forms,
                         const std::vector<Int>& col0, const std::vector<Int>& col1);

std::vector<SuiteInstance> generate_suite(const SuiteSpec& spec);

}  // namespace gale

#endif

#ifndef GALE_CHAMBER_HPP
#define GALE_CHAMBER_HPP

#include <string>
#include <utility>
#include <vector>

#include "gale/system.hpp"

namespace gale {

struct ChamberVertex {
    RatVector point;  // 2
    std::pair<std::size_t, std::size_t> incident;
};

struct ChamberEdge {
    std::size_t form;  // vanishes along this edge
    std::size_t v0, v1;
};

/// Positive chamber of an ell=2 arrangement with exact vertex/edge structure.
struct Chamber {
    std::vector<AffineForm> forms;
    std::size_t ell = 2;
    bool bounded = false;
    std::vector<ChamberVertex> vertices;  // counterclockwise boundary order
    std::vector<ChamberEdge> edges;
    /// Assumption violations (a vertex on more than ell forms, etc.);
    /// reported, not fatal.
    std::vector<std::string> warnings;
    RatVector inner;  // a strict interior point
};

/// Enumerates the chamber by pairwise form intersection with exact rational
/// predicates. Throws EmptyChamberError when the open chamber is empty.
/// For ell != 2 only `bounded` and `inner` are populated.
Chamber build_chamber(const std::vector<AffineForm>& forms, std::size_t ell);

struct AssumptionReport {
    bool simple_vertices = true;        // exactly ell forms vanish per vertex
    bool faces_nonneg_kernel_ok = true;  // no face submatrix kills a nonneg vector
    std::vector<std::string> violations;
};

/// Checks the genericity assumptions against the exponent matrix B (rows
/// aligned with the chamber's forms). The curve condition is not checkable
/// here and is surfaced at solve time instead.
AssumptionReport check_assumptions(const Chamber& ch, const IntMatrix& B);

struct FaceReport {
    std::vector<bool> vertex_meets_mu;       // aligned with ch.vertices
    std::vector<std::size_t> t2_vertices;    // indices with meets_mu true
    std::size_t M0 = 0;                      // qualifying vertices (j = 2)
    std::size_t M1 = 0;                      // facets; all qualify (j = 1)
};

/// Sign-condition classification of the faces that can carry T_j points:
/// a vertex qualifies iff the first-column B entries of its two incident
/// forms have opposite signs or one is zero.
FaceReport classify_faces(const Chamber& ch, const IntMatrix& B);

}  // namespace gale

#endif

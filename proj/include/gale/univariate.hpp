#ifndef GALE_UNIVARIATE_HPP
#define GALE_UNIVARIATE_HPP

#include <vector>

#include "gale/matrix.hpp"
#include "gale/numeric.hpp"

namespace gale {

/// Univariate polynomials are coefficient vectors, degree ascending.

RatVector uni_trim(RatVector p);
int uni_degree(const RatVector& p);
RatVector uni_derivative(const RatVector& p);
Rat uni_eval(const RatVector& p, const Rat& x);
BigFloat uni_eval_f(const RatVector& p, const BigFloat& x);

/// Positive rescaling to integer coefficients with content 1 (sign preserved).
RatVector uni_primitive(const RatVector& p);

/// Primitive gcd with positive leading coefficient (subresultant PRS).
RatVector uni_gcd(const RatVector& a, const RatVector& b);

/// p / gcd(p, p'); primitive.
RatVector uni_squarefree(const RatVector& p);

/// All real roots lie in [-bound, bound].
Rat cauchy_bound(const RatVector& p);

/// Sturm chain of p (entries kept primitive; signs scaled positively only).
std::vector<RatVector> sturm_chain(const RatVector& p);

/// Sign variation count of the chain at x; sign = -1/+1 selects -inf/+inf
/// when at_infinity is true.
int sturm_variations(const std::vector<RatVector>& chain, const Rat& x);
int sturm_variations_inf(const std::vector<RatVector>& chain, int sign);

/// Number of distinct real roots of the chain's polynomial in (a, b].
int sturm_count(const std::vector<RatVector>& chain, const Rat& a, const Rat& b);

struct RootInterval {
    Rat lo, hi;
    bool exact;  // lo == hi is a rational root
};

/// Isolating intervals for the distinct real roots of p in (a, b), sorted.
/// Non-exact intervals satisfy p(lo) p(hi) < 0 for the squarefree part.
/// Throws ZeroPolynomialError when p is identically zero.
std::vector<RootInterval> isolate_roots(const RatVector& p, const Rat& a, const Rat& b);

/// Same contract as isolate_roots, but trusts p to be squarefree on (a, b)
/// instead of computing the exact squarefree part first. Throws GaleError if
/// subdivision fails to separate (a multiple root inside the interval).
std::vector<RootInterval> isolate_roots_squarefree(const RatVector& p, const Rat& a,
                                                   const Rat& b);

/// Isolating intervals for all distinct real roots of p.
std::vector<RootInterval> isolate_all_roots(const RatVector& p);

/// Shrinks a (squarefree-certified) isolating interval below the given width
/// by sign bisection.
RootInterval refine_root(const RatVector& squarefree, RootInterval iv, const Rat& width);

}  // namespace gale

#endif

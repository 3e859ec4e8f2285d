#ifndef GALE_SYSTEM_HPP
#define GALE_SYSTEM_HPP

#include <optional>
#include <vector>

#include "gale/lattice.hpp"
#include "gale/matrix.hpp"
#include "gale/poly.hpp"

namespace gale {

/// Fewnomial system: sum_j C_ij x^{a_j} + b_i = 0 for i = 1..n, where a_j are
/// the columns of A.
struct FewnomialSystem {
    std::size_t n = 0, ell = 0;
    IntMatrix A;  // n x (n+ell), exponent columns
    RatMatrix C;  // n x (n+ell)
    RatVector b;  // n
};

/// Throws on shape mismatch, a zero exponent column, or rank A < n.
void validate_fewnomial(const FewnomialSystem& F);

struct AffineForm {
    RatVector linear;  // length ell
    Rat constant;

    Rat eval(const RatVector& y) const {
        Rat acc = constant;
        for (std::size_t k = 0; k < linear.size(); ++k) acc += linear[k] * y[k];
        return acc;
    }
    BigFloat eval(const std::vector<BigFloat>& y) const {
        BigFloat acc = to_bigfloat(constant);
        for (std::size_t k = 0; k < linear.size(); ++k) acc += to_bigfloat(linear[k]) * y[k];
        return acc;
    }
    SparsePoly poly() const { return SparsePoly::affine(linear, constant); }
    bool operator==(const AffineForm& o) const {
        return linear == o.linear && constant == o.constant;
    }
};

enum class MasterFunctionForm { Rational, Logarithmic, Polynomial };

/// System of ell master functions prod_i Lambda_i(y)^{B_ij} = 1 on the
/// positive chamber of the forms.
struct GaleSystem {
    std::size_t n = 0, ell = 0;
    std::vector<AffineForm> forms;  // n+ell, one more when compactified
    IntMatrix B;                    // forms.size() x ell
    bool compactified = false;
    /// perm[k] = original monomial column at slot k (parameter monomials last).
    std::vector<std::size_t> perm;
    /// Interior translation applied before compactification (empty if none).
    RatVector shift;
};

/// Algorithm: pick parameter monomials, echelon-reduce [C|b], build the
/// affine forms, and take an optimized integer kernel basis of A as B.
/// param_choice (original column indices, order respected) defaults to the
/// first ell-subset whose complement gives an invertible block of C.
/// forced_basis (in original column order) overrides the kernel computation.
GaleSystem gale_transform(const FewnomialSystem& F,
                          const std::vector<std::size_t>& param_choice = {},
                          const std::vector<IntVector>& forced_basis = {});

/// Direction d != 0 with L_i . d >= 0 for all forms (recession cone ray), if any.
std::optional<RatVector> recession_direction(const std::vector<AffineForm>& forms);

inline bool chamber_is_bounded(const std::vector<AffineForm>& forms) {
    return !recession_direction(forms).has_value();
}

/// A rational point with every form strictly positive; throws EmptyChamberError.
RatVector interior_point(const std::vector<AffineForm>& forms);

/// Projective change of coordinates making the chamber bounded; returns the
/// input unchanged when it is already bounded. Appends the form 1 - L(ybar)
/// and the exponent row beta_0 = -sum beta_i.
GaleSystem compactify(const GaleSystem& G);

/// Maps compactified coordinates back to the original ones (identity when the
/// system was not compactified).
RatVector original_coords(const GaleSystem& G, const RatVector& ybar);
std::vector<BigFloat> original_coords(const GaleSystem& G, const std::vector<BigFloat>& ybar);

/// Value of equation j at y in the requested form at `bits` working precision.
BigFloat evaluate(const GaleSystem& G, std::size_t j, const std::vector<BigFloat>& y,
                  MasterFunctionForm form, int bits);

/// Polynomial form prod Lambda^{beta+} - prod Lambda^{beta-} with the forms
/// used verbatim (rational coefficients).
SparsePoly gale_polynomial_raw(const GaleSystem& G, std::size_t j);

/// Polynomial form built from the primitive integer rescalings p_i of the
/// forms (first nonzero coefficient positive):
///   prod p^{beta+} - (prod sigma^beta) prod p^{beta-},  p_i = sigma_i Lambda_i.
/// Same zero set as the raw form; integer-leaning coefficients.
SparsePoly gale_polynomial(const GaleSystem& G, std::size_t j);

/// Dual fewnomial system: A = saturated kernel of B^T, C = annihilator of the
/// forms' linear parts, b = -C lambda.
FewnomialSystem inverse_gale(const GaleSystem& G);

}  // namespace gale

#endif

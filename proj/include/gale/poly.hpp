#ifndef GALE_POLY_HPP
#define GALE_POLY_HPP

#include <map>
#include <vector>

#include "gale/matrix.hpp"
#include "gale/numeric.hpp"

namespace gale {

/// Exact multivariate polynomial over the rationals. Terms are kept in a
/// lex-ordered map from exponent tuple to nonzero coefficient.
class SparsePoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    SparsePoly() : nvars_(0) {}
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, const Rat& c);
    static SparsePoly variable(std::size_t nvars, std::size_t idx);
    /// coeffs . y + c
    static SparsePoly affine(const RatVector& coeffs, const Rat& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    int degree_in(std::size_t var) const;

    void add_term(const Exponents& e, const Rat& c);

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& s) const;
    bool operator==(const SparsePoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    SparsePoly pow(unsigned e) const;
    SparsePoly derivative(std::size_t var) const;

    Rat eval(const RatVector& y) const;
    BigFloat eval(const std::vector<BigFloat>& y) const;
    double eval(const std::vector<double>& y) const;

    /// Substitutes y_var := point (a rational), producing a polynomial in the
    /// remaining variables (variable count unchanged; var's exponent becomes 0).
    SparsePoly substitute(std::size_t var, const Rat& point) const;

    /// Restriction to the parameterized line y = base + t * dir; returns the
    /// coefficients of the univariate polynomial in t (degree ascending).
    RatVector restrict_line(const RatVector& base, const RatVector& dir) const;

    /// Coefficients of this as a univariate polynomial in `var`, each a
    /// SparsePoly in the remaining variables; index = exponent of var.
    std::vector<SparsePoly> coeffs_in(std::size_t var) const;

    /// Exact division; throws GaleError when the division leaves a remainder.
    SparsePoly divide_exact(const SparsePoly& divisor) const;

    /// Largest |coefficient| and smallest |coefficient| over nonzero terms.
    Rat max_abs_coeff() const;
    Rat min_abs_coeff() const;

    /// Multiplies by the positive rational making the coefficients integers
    /// with content 1, then flips sign so the lex-leading coefficient is
    /// positive. Returns the normalized polynomial.
    SparsePoly primitive_normalized() const;

    /// True when q is a rational multiple of this (both nonzero, same support).
    bool proportional_to(const SparsePoly& q) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    std::size_t nvars_;
    TermMap terms_;
};

SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& m);

}  // namespace gale

#endif

#ifndef GALE_NUMERIC_HPP
#define GALE_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gale {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Arbitrary-precision float; precision is set globally via set_float_bits().
using BigFloat = boost::multiprecision::mpfr_float;

inline int bits_to_digits10(int bits) {
    return static_cast<int>(std::ceil(bits * 0.30103)) + 2;
}

/// Sets the working precision of BigFloat, in bits. Returns the previous
/// precision in decimal digits (for save/restore).
inline unsigned set_float_bits(int bits) {
    unsigned old = BigFloat::default_precision();
    BigFloat::default_precision(bits_to_digits10(bits));
    return old;
}

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(int bits) : saved(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved); }
};

inline BigFloat to_bigfloat(const Rat& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

/// Best rational approximation with denominator 2^bits (dyadic snapshot of a float).
inline Rat to_rational(const BigFloat& x, int bits = 256) {
    Int den = Int(1) << bits;
    BigFloat scaled = x * BigFloat(den);
    Int num = static_cast<Int>(boost::multiprecision::round(scaled));
    return Rat(num, den);
}

class GaleError : public std::runtime_error {
  public:
    explicit GaleError(const std::string& what) : std::runtime_error(what) {}
};

class SingularBlockError : public GaleError {
  public:
    explicit SingularBlockError(const std::string& what) : GaleError(what) {}
};

class SingularMatrixError : public GaleError {
  public:
    explicit SingularMatrixError(const std::string& what) : GaleError(what) {}
};

class RankDeficientError : public GaleError {
  public:
    explicit RankDeficientError(const std::string& what) : GaleError(what) {}
};

class EmptyChamberError : public GaleError {
  public:
    explicit EmptyChamberError(const std::string& what) : GaleError(what) {}
};

class OutsideChamberError : public GaleError {
  public:
    explicit OutsideChamberError(const std::string& what) : GaleError(what) {}
};

class PoleHitError : public GaleError {
  public:
    explicit PoleHitError(const std::string& what) : GaleError(what) {}
};

class ZeroPolynomialError : public GaleError {
  public:
    explicit ZeroPolynomialError(const std::string& what) : GaleError(what) {}
};

class DegreeOverflowError : public GaleError {
  public:
    explicit DegreeOverflowError(const std::string& what) : GaleError(what) {}
};

class PositiveDimensionalError : public GaleError {
  public:
    explicit PositiveDimensionalError(const std::string& what) : GaleError(what) {}
};

class NonPositiveCoordinateError : public GaleError {
  public:
    explicit NonPositiveCoordinateError(const std::string& what) : GaleError(what) {}
};

class DivergenceError : public GaleError {
  public:
    explicit DivergenceError(const std::string& what) : GaleError(what) {}
};

class SamplingExhaustedError : public GaleError {
  public:
    explicit SamplingExhaustedError(const std::string& what) : GaleError(what) {}
};

class ParseError : public GaleError {
  public:
    explicit ParseError(const std::string& what) : GaleError(what) {}
};

}  // namespace gale

#endif

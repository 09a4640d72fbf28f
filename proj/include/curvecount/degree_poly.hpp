#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace curvecount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Polynomial in the formal degree symbol d, with exact rational
/// coefficients. Counts that arise as symmetry quotients (e.g. the
/// two-node and three-node families) are integer-valued but not
/// integer-coefficient, hence Rat rather than Int.
///
/// Canonical form: no stored zero coefficients. A constant polynomial
/// represents a numeric-degree run.
class DegreePoly {
public:
    DegreePoly() = default;

    static DegreePoly constant(Rat v);
    static DegreePoly constant(long v) { return constant(Rat(v)); }
    /// The formal symbol d itself.
    static DegreePoly symbol();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    /// Degree in d; 0 for constants (including zero).
    unsigned degree() const;

    /// Value of a constant polynomial. Throws on non-constant input.
    Rat as_constant() const;

    Rat eval(const Rat& d) const;
    /// Evaluate at an integer degree; throws if the value is not an integer.
    Int eval_int(const Int& d) const;

    /// True if every coefficient is an integer.
    bool integer_coefficients() const;
    /// True if eval at every integer in [lo, hi] gives an integer.
    bool integer_valued(long lo, long hi) const;

    DegreePoly operator-() const;
    DegreePoly& operator+=(const DegreePoly& o);
    DegreePoly& operator-=(const DegreePoly& o);
    DegreePoly operator+(const DegreePoly& o) const;
    DegreePoly operator-(const DegreePoly& o) const;
    DegreePoly operator*(const DegreePoly& o) const;
    DegreePoly operator*(const Rat& s) const;
    DegreePoly pow(int k) const;
    /// Exact division of every coefficient; stays in Q[d].
    DegreePoly operator/(const Rat& s) const;

    bool operator==(const DegreePoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DegreePoly& o) const { return !(*this == o); }

    /// Canonical string: descending powers, explicit signs,
    /// e.g. "9*d^3 - 27*d^2 - d + 30". Non-integer coefficients are
    /// rendered over a common denominator: "(9*d^4 - ... - 66)/2".
    std::string str() const;

    const std::map<unsigned, Rat>& coefficients() const { return coeffs_; }

private:
    void set(unsigned e, Rat v);
    std::map<unsigned, Rat> coeffs_;  // exponent -> coefficient, no zeros
};

inline DegreePoly operator*(const Rat& s, const DegreePoly& p) { return p * s; }

}  // namespace curvecount

#pragma once

#include "curvecount/degree_poly.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace curvecount {

class CohClass;

/// Exponent vector, one slot per ring generator in declaration order.
using Exponents = std::vector<int>;
using TermMap = std::map<Exponents, DegreePoly>;

/// A truncated graded commutative polynomial ring modeling the cohomology
/// of a product of projective spaces, optionally extended by tautological
/// classes of projectivized rank-r bundles.
///
/// Two relation kinds:
///   Nilpotent(m):  x^m = 0            (hyperplane class of P^{m-1})
///   ProjBundle(c1..cr): x^r = -(c1 x^{r-1} + ... + cr)
///
/// Every generator has (complex) degree one; all classes used here are
/// of even real degree, so the ring is honestly commutative.
///
/// Rings and classes are immutable after construction and freely
/// shareable across threads.
class Ring {
public:
    struct NilpotentGen {
        std::string name;
        int order;  // x^order = 0
    };

    /// Build a ring of nilpotent generators only.
    /// Errors: duplicate generator names, order < 2.
    static Ring make(const std::vector<NilpotentGen>& gens);

    /// Extend by a rank-r ProjBundle generator whose relation coefficients
    /// c1..cr are classes of *this* ring with deg(c_i) = i.
    /// The new generator comes last in declaration order.
    Ring extend_proj(const std::string& name, const std::vector<CohClass>& rel) const;

    /// Extend by one more nilpotent generator, appended last.
    Ring extend_nilpotent(const std::string& name, int order) const;

    std::size_t generator_count() const;
    /// Total complex dimension: sum of (order-1) resp. (rank-1).
    int dimension() const;
    bool same_ring(const Ring& o) const { return impl_ == o.impl_; }

    CohClass zero() const;
    CohClass one() const;
    CohClass gen(const std::string& name) const;
    CohClass monomial(Exponents exps, DegreePoly coeff) const;

    /// Lift a class from a ring this one was built from by extension.
    CohClass lift(const CohClass& x) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    friend class CohClass;
    Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Element of a Ring: finite sum of reduced monomials with DegreePoly
/// coefficients. Inhomogeneous classes are legal (total Chern classes).
class CohClass {
public:
    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Degree of a homogeneous class; throws if inhomogeneous or zero.
    int homogeneous_degree() const;

    CohClass operator-() const;
    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator*(const CohClass& o) const;
    CohClass operator*(const DegreePoly& s) const;
    CohClass pow(int k) const;

    bool operator==(const CohClass& o) const;
    bool operator!=(const CohClass& o) const { return !(*this == o); }

    /// Component of total degree k (sum of exponents).
    CohClass graded_part(int k) const;
    /// Highest degree with a nonzero component (0 for the zero class).
    int top_degree() const;

    /// Coefficient of the unique top-degree monomial: full nilpotent
    /// exponents and r-1 on ProjBundle generators (the fiber integral of
    /// lambda^{r-1} is 1). Lower-degree terms contribute 0.
    DegreePoly integrate() const;

    std::string str() const;  // debug form

private:
    friend class Ring;
    CohClass(Ring ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
    Ring ring_;
    TermMap terms_;  // reduced, no zero coefficients
};

inline CohClass operator*(const DegreePoly& s, const CohClass& x) { return x * s; }

}  // namespace curvecount

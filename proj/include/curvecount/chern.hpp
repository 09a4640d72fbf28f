#pragma once

#include "curvecount/ring.hpp"

namespace curvecount {

/// A formal vector bundle: rank plus total Chern class. The Chern class
/// has constant term 1 and no components above the rank.
class FormalBundle {
public:
    FormalBundle(int rank, CohClass chern);

    static FormalBundle trivial(const Ring& r, int rank = 0);
    /// Rank-one bundle with first Chern class c1 (homogeneous of degree 1,
    /// or zero for the trivial line).
    static FormalBundle line(const CohClass& c1);

    int rank() const { return rank_; }
    const CohClass& chern() const { return chern_; }

    /// Sign rule c_i -> (-1)^i c_i.
    FormalBundle dual() const;
    /// Tensor by a line bundle L: c_k(E (x) L) = sum binom(r-i, k-i) c_i t^{k-i}.
    FormalBundle twist(const FormalBundle& l) const;
    /// Whitney sum: ranks add, Chern classes multiply.
    FormalBundle sum(const FormalBundle& o) const;
    /// Top Chern class (degree = rank component).
    CohClass euler() const;
    /// Multiplicative inverse of the total Chern class in the truncated
    /// ring. Not a bundle's Chern class, hence a bare CohClass.
    CohClass chern_inverse() const;

private:
    int rank_;
    CohClass chern_;
};

/// Pairing against a fixed cycle: weights on the reduced monomials of the
/// cycle's complementary degree. Lower-degree terms pair to zero;
/// higher-degree terms are an error.
class CycleFunctional {
public:
    CycleFunctional(Ring ring, TermMap weights);

    int degree() const { return degree_; }
    const Ring& ring() const { return ring_; }

    DegreePoly pair(const CohClass& x) const;

private:
    Ring ring_;
    int degree_;
    TermMap weights_;
};

}  // namespace curvecount

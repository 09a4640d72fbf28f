#include "curvecount/chern.hpp"

#include <numeric>

namespace curvecount {

namespace {

long small_binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int exp_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

FormalBundle::FormalBundle(int rank, CohClass chern)
    : rank_(rank), chern_(std::move(chern)) {
    if (rank_ < 0) throw std::invalid_argument("FormalBundle: negative rank");
    if (chern_.graded_part(0) != chern_.ring().one())
        throw std::invalid_argument("FormalBundle: total Chern class must have constant term 1");
    if (chern_.top_degree() > rank_)
        throw std::invalid_argument("FormalBundle: Chern components above the rank");
}

FormalBundle FormalBundle::trivial(const Ring& r, int rank) {
    return FormalBundle(rank, r.one());
}

FormalBundle FormalBundle::line(const CohClass& c1) {
    if (!c1.is_zero() && c1.homogeneous_degree() != 1)
        throw std::invalid_argument("FormalBundle::line: c1 must be homogeneous of degree 1");
    return FormalBundle(1, c1.ring().one() + c1);
}

FormalBundle FormalBundle::dual() const {
    CohClass c = chern_.ring().zero();
    for (int i = 0; i <= rank_; ++i) {
        CohClass ci = chern_.graded_part(i);
        c = c + (i % 2 ? -ci : ci);
    }
    return FormalBundle(rank_, std::move(c));
}

FormalBundle FormalBundle::twist(const FormalBundle& l) const {
    if (l.rank() != 1) throw std::invalid_argument("FormalBundle::twist: twisting bundle not rank 1");
    CohClass t = l.chern().graded_part(1);
    CohClass c = chern_.ring().zero();
    for (int k = 0; k <= rank_; ++k) {
        CohClass ck = chern_.ring().zero();
        for (int i = 0; i <= k; ++i) {
            long b = small_binom(rank_ - i, k - i);
            if (b == 0) continue;
            ck = ck + chern_.graded_part(i) * t.pow(k - i) * DegreePoly::constant(b);
        }
        c = c + ck;
    }
    return FormalBundle(rank_, std::move(c));
}

FormalBundle FormalBundle::sum(const FormalBundle& o) const {
    return FormalBundle(rank_ + o.rank_, chern_ * o.chern_);
}

CohClass FormalBundle::euler() const { return chern_.graded_part(rank_); }

CohClass FormalBundle::chern_inverse() const {
    // Geometric series in the nilpotent part; terminates at ring dimension.
    CohClass n = chern_ - chern_.ring().one();
    CohClass acc = chern_.ring().one();
    CohClass p = chern_.ring().one();
    for (int k = 1; k <= chern_.ring().dimension(); ++k) {
        p = p * -n;
        acc = acc + p;
    }
    return acc;
}

CycleFunctional::CycleFunctional(Ring ring, TermMap weights)
    : ring_(std::move(ring)), degree_(0), weights_(std::move(weights)) {
    if (weights_.empty())
        throw std::invalid_argument("CycleFunctional: no weight monomials");
    degree_ = exp_degree(weights_.begin()->first);
    for (const auto& [e, w] : weights_) {
        if (e.size() != ring_.generator_count())
            throw std::invalid_argument("CycleFunctional: exponent vector has wrong length");
        if (exp_degree(e) != degree_)
            throw std::invalid_argument("CycleFunctional: weight monomials of unequal degree");
    }
}

DegreePoly CycleFunctional::pair(const CohClass& x) const {
    if (!x.ring().same_ring(ring_))
        throw std::invalid_argument("CycleFunctional: ring mismatch");
    DegreePoly acc;
    for (const auto& [e, c] : x.terms()) {
        int d = exp_degree(e);
        if (d < degree_) continue;
        if (d > degree_)
            throw std::domain_error("CycleFunctional: class component of degree " +
                                    std::to_string(d) + " exceeds cycle degree " +
                                    std::to_string(degree_));
        auto it = weights_.find(e);
        if (it != weights_.end()) acc += it->second * c;
    }
    return acc;
}

}  // namespace curvecount

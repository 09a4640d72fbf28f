#include "curvecount/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvecount {

namespace {

enum class Kind { Nilpotent, ProjBundle };

struct Generator {
    std::string name;
    Kind kind;
    int bound;  // nilpotency order, or ProjBundle rank
    // ProjBundle relation coefficients c1..c_rank, stored as raw term
    // maps over the full exponent width (entries only in earlier slots).
    std::vector<TermMap> rel;
};

int term_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

struct Ring::Impl {
    std::vector<Generator> gens;

    int find(const std::string& name) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return static_cast<int>(i);
        return -1;
    }

    void check_new_name(const std::string& name) const {
        if (find(name) >= 0)
            throw std::invalid_argument("Ring: duplicate generator name '" + name + "'");
    }

    // Reduce a raw term map: apply ProjBundle rewriting and nilpotent
    // truncation until every monomial is reduced. ProjBundle rewriting
    // strictly lowers the generator's own exponent, so this terminates.
    TermMap reduce(TermMap raw) const {
        TermMap out;
        std::vector<std::pair<Exponents, DegreePoly>> work(
            std::make_move_iterator(raw.begin()), std::make_move_iterator(raw.end()));
        while (!work.empty()) {
            auto [e, c] = std::move(work.back());
            work.pop_back();
            if (c.is_zero()) continue;

            std::size_t i = 0;
            for (; i < gens.size(); ++i)
                if (e[i] >= gens[i].bound) break;

            if (i == gens.size()) {
                auto it = out.find(e);
                if (it == out.end()) {
                    out.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
                continue;
            }

            const Generator& g = gens[i];
            if (g.kind == Kind::Nilpotent) continue;  // x^order = 0

            // x^r = -(c1 x^{r-1} + ... + cr)
            Exponents base = e;
            base[i] -= g.bound;
            for (int j = 1; j <= g.bound; ++j) {
                for (const auto& [m, mc] : g.rel[j - 1]) {
                    Exponents ne(base.size());
                    for (std::size_t k = 0; k < ne.size(); ++k) ne[k] = base[k] + m[k];
                    ne[i] += g.bound - j;
                    work.emplace_back(std::move(ne), -(mc * c));
                }
            }
        }
        return out;
    }
};

Ring Ring::make(const std::vector<NilpotentGen>& gens) {
    auto impl = std::make_shared<Impl>();
    for (const auto& g : gens) {
        impl->check_new_name(g.name);
        if (g.order < 2)
            throw std::invalid_argument("Ring: nilpotency order must be >= 2 for '" + g.name + "'");
        impl->gens.push_back(Generator{g.name, Kind::Nilpotent, g.order, {}});
    }
    return Ring(std::move(impl));
}

Ring Ring::extend_nilpotent(const std::string& name, int order) const {
    impl_->check_new_name(name);
    if (order < 2) throw std::invalid_argument("Ring: nilpotency order must be >= 2");
    auto impl = std::make_shared<Impl>();
    impl->gens = impl_->gens;
    // widen stored relation exponent vectors by one slot
    for (auto& g : impl->gens)
        for (auto& rel : g.rel) {
            TermMap widened;
            for (const auto& [e, c] : rel) {
                Exponents ne = e;
                ne.push_back(0);
                widened.emplace(std::move(ne), c);
            }
            rel = std::move(widened);
        }
    impl->gens.push_back(Generator{name, Kind::Nilpotent, order, {}});
    return Ring(std::move(impl));
}

Ring Ring::extend_proj(const std::string& name, const std::vector<CohClass>& rel) const {
    impl_->check_new_name(name);
    int rank = static_cast<int>(rel.size());
    if (rank < 1) throw std::invalid_argument("Ring: ProjBundle needs rank >= 1");
    for (int i = 0; i < rank; ++i) {
        if (!rel[i].ring().same_ring(*this))
            throw std::invalid_argument("Ring: ProjBundle coefficient from a different ring");
        if (!rel[i].is_zero() && rel[i].homogeneous_degree() != i + 1)
            throw std::invalid_argument("Ring: ProjBundle coefficient c" + std::to_string(i + 1) +
                                        " must have degree " + std::to_string(i + 1));
    }
    auto impl = std::make_shared<Impl>();
    impl->gens = impl_->gens;
    for (auto& g : impl->gens)
        for (auto& r : g.rel) {
            TermMap widened;
            for (const auto& [e, c] : r) {
                Exponents ne = e;
                ne.push_back(0);
                widened.emplace(std::move(ne), c);
            }
            r = std::move(widened);
        }
    Generator lam{name, Kind::ProjBundle, rank, {}};
    for (const auto& ci : rel) {
        TermMap widened;
        for (const auto& [e, c] : ci.terms()) {
            Exponents ne = e;
            ne.push_back(0);
            widened.emplace(std::move(ne), c);
        }
        lam.rel.push_back(std::move(widened));
    }
    impl->gens.push_back(std::move(lam));
    return Ring(std::move(impl));
}

std::size_t Ring::generator_count() const { return impl_->gens.size(); }

int Ring::dimension() const {
    int dim = 0;
    for (const auto& g : impl_->gens) dim += g.bound - 1;
    return dim;
}

CohClass Ring::zero() const { return CohClass(*this, {}); }

CohClass Ring::one() const {
    TermMap t;
    t.emplace(Exponents(generator_count(), 0), DegreePoly::constant(1));
    return CohClass(*this, std::move(t));
}

CohClass Ring::gen(const std::string& name) const {
    int i = impl_->find(name);
    if (i < 0) throw std::invalid_argument("Ring: no generator '" + name + "'");
    Exponents e(generator_count(), 0);
    e[i] = 1;
    return monomial(std::move(e), DegreePoly::constant(1));
}

CohClass Ring::monomial(Exponents exps, DegreePoly coeff) const {
    if (exps.size() != generator_count())
        throw std::invalid_argument("Ring: exponent vector has wrong length");
    TermMap t;
    if (!coeff.is_zero()) t.emplace(std::move(exps), std::move(coeff));
    return CohClass(*this, impl_->reduce(std::move(t)));
}

CohClass Ring::lift(const CohClass& x) const {
    std::size_t from = x.ring().generator_count();
    std::size_t to = generator_count();
    if (from > to) throw std::invalid_argument("Ring: cannot lift to a smaller ring");
    for (std::size_t i = 0; i < from; ++i)
        if (impl_->gens[i].name != x.ring().impl_->gens[i].name)
            throw std::invalid_argument("Ring: lift target is not an extension");
    TermMap t;
    for (const auto& [e, c] : x.terms()) {
        Exponents ne = e;
        ne.resize(to, 0);
        t.emplace(std::move(ne), c);
    }
    return CohClass(*this, impl_->reduce(std::move(t)));
}

bool CohClass::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = term_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (term_degree(e) != d) return false;
    return true;
}

int CohClass::homogeneous_degree() const {
    if (terms_.empty()) throw std::domain_error("CohClass: zero class has no degree");
    if (!is_homogeneous()) throw std::domain_error("CohClass: not homogeneous: " + str());
    return term_degree(terms_.begin()->first);
}

CohClass CohClass::operator-() const {
    TermMap t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return CohClass(ring_, std::move(t));
}

CohClass CohClass::operator+(const CohClass& o) const {
    if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("CohClass: ring mismatch in add");
    TermMap t = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto it = t.find(e);
        if (it == t.end()) {
            t.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return CohClass(ring_, std::move(t));
}

CohClass CohClass::operator-(const CohClass& o) const { return *this + (-o); }

CohClass CohClass::operator*(const CohClass& o) const {
    if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("CohClass: ring mismatch in mul");
    TermMap raw;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            auto it = raw.find(e);
            if (it == raw.end())
                raw.emplace(std::move(e), c1 * c2);
            else
                it->second += c1 * c2;
        }
    return CohClass(ring_, ring_.impl_->reduce(std::move(raw)));
}

CohClass CohClass::operator*(const DegreePoly& s) const {
    TermMap t;
    for (const auto& [e, c] : terms_) {
        DegreePoly v = c * s;
        if (!v.is_zero()) t.emplace(e, std::move(v));
    }
    return CohClass(ring_, std::move(t));
}

CohClass CohClass::pow(int k) const {
    if (k < 0) throw std::invalid_argument("CohClass: negative power");
    CohClass acc = ring_.one();
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool CohClass::operator==(const CohClass& o) const {
    return ring_.same_ring(o.ring_) && terms_ == o.terms_;
}

CohClass CohClass::graded_part(int k) const {
    TermMap t;
    for (const auto& [e, c] : terms_)
        if (term_degree(e) == k) t.emplace(e, c);
    return CohClass(ring_, std::move(t));
}

int CohClass::top_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, term_degree(e));
    return d;
}

DegreePoly CohClass::integrate() const {
    Exponents top;
    top.reserve(ring_.generator_count());
    for (const auto& g : ring_.impl_->gens) top.push_back(g.bound - 1);
    auto it = terms_.find(top);
    return it == terms_.end() ? DegreePoly() : it->second;
}

std::string CohClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out << "*" << ring_.impl_->gens[i].name;
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace curvecount

#include "curvecount/degree_poly.hpp"

#include <sstream>

namespace curvecount {

DegreePoly DegreePoly::constant(Rat v) {
    DegreePoly p;
    p.set(0, std::move(v));
    return p;
}

DegreePoly DegreePoly::symbol() {
    DegreePoly p;
    p.set(1, 1);
    return p;
}

void DegreePoly::set(unsigned e, Rat v) {
    if (v == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = std::move(v);
}

bool DegreePoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

unsigned DegreePoly::degree() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

Rat DegreePoly::as_constant() const {
    if (!is_constant()) throw std::domain_error("DegreePoly: not a constant: " + str());
    return coeffs_.empty() ? Rat(0) : coeffs_.begin()->second;
}

Rat DegreePoly::eval(const Rat& d) const {
    // Horner over the sparse map, highest exponent first.
    Rat acc = 0;
    unsigned prev = 0;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (first) {
            acc = it->second;
            prev = it->first;
            first = false;
            continue;
        }
        for (unsigned k = it->first; k < prev; ++k) acc *= d;
        acc += it->second;
        prev = it->first;
    }
    for (unsigned k = 0; k < prev; ++k) acc *= d;
    return acc;
}

Int DegreePoly::eval_int(const Int& d) const {
    Rat v = eval(Rat(d));
    if (denominator(v) != 1)
        throw std::domain_error("DegreePoly: non-integer value " + v.str() +
                                " at d=" + d.str() + " for " + str());
    return numerator(v);
}

bool DegreePoly::integer_coefficients() const {
    for (const auto& [e, c] : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

bool DegreePoly::integer_valued(long lo, long hi) const {
    for (long d = lo; d <= hi; ++d) {
        if (denominator(eval(Rat(d))) != 1) return false;
    }
    return true;
}

DegreePoly DegreePoly::operator-() const {
    DegreePoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

DegreePoly& DegreePoly::operator+=(const DegreePoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

DegreePoly& DegreePoly::operator-=(const DegreePoly& o) { return *this += -o; }

DegreePoly DegreePoly::operator+(const DegreePoly& o) const {
    DegreePoly r = *this;
    r += o;
    return r;
}

DegreePoly DegreePoly::operator-(const DegreePoly& o) const {
    DegreePoly r = *this;
    r -= o;
    return r;
}

DegreePoly DegreePoly::operator*(const DegreePoly& o) const {
    DegreePoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                Rat v = c1 * c2;
                if (v != 0) r.coeffs_[e1 + e2] = std::move(v);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

DegreePoly DegreePoly::operator*(const Rat& s) const {
    DegreePoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
    return r;
}

DegreePoly DegreePoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("DegreePoly: negative power");
    DegreePoly r = constant(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

DegreePoly DegreePoly::operator/(const Rat& s) const {
    if (s == 0) throw std::domain_error("DegreePoly: division by zero");
    return *this * Rat(denominator(s), numerator(s));
}

namespace {

void emit_term(std::ostringstream& out, bool first, const Int& coeff, unsigned exp) {
    Int a = abs(coeff);
    if (first) {
        if (coeff < 0) out << "-";
    } else {
        out << (coeff < 0 ? " - " : " + ");
    }
    if (a != 1 || exp == 0) out << a.str();
    if (exp > 0) {
        if (a != 1) out << "*";
        out << "d";
        if (exp > 1) out << "^" << exp;
    }
}

}  // namespace

std::string DegreePoly::str() const {
    if (coeffs_.empty()) return "0";
    Int den = 1;
    for (const auto& [e, c] : coeffs_) den = lcm(den, denominator(c));

    std::ostringstream out;
    if (den != 1) out << "(";
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rat scaled = it->second * den;
        emit_term(out, first, numerator(scaled), it->first);
        first = false;
    }
    if (den != 1) out << ")/" << den.str();
    return out.str();
}

}  // namespace curvecount

#include "hilb/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hilb {

namespace {
const Rational kZero{};
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    trim();
}

Poly Poly::k() {
    return Poly{Rational(0), Rational(1)};
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return {};
    Poly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};
    Poly rem = a;
    Poly quot;
    quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading() / lead;
        quot.c_[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < b.c_.size(); ++i)
            rem.c_[i + static_cast<size_t>(shift)] -= f * b.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = Poly::divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    // Euclid with monic normalization at each step to keep coefficients small.
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * (Rational(1) / leading());
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (i == 0 || !a.is_one()) os << a.str();
        if (i > 0) {
            if (!a.is_one()) os << "*";
            os << "k";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

}  // namespace hilb

#include "hilb/rational_function.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace hilb {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
}

RationalFunction RationalFunction::k() {
    return RationalFunction(Poly::k());
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (!den_.leading().is_one()) {
        Rational inv = Rational(1) / den_.leading();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel before multiplying so the product needs no further gcd.
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = (g1.degree() > 0 ? a.num_ / g1 : a.num_) * (g2.degree() > 0 ? b.num_ / g2 : b.num_);
    r.den_ = (g2.degree() > 0 ? a.den_ / g2 : a.den_) * (g1.degree() > 0 ? b.den_ / g1 : b.den_);
    if (!r.den_.leading().is_one()) {
        Rational inv = Rational(1) / r.den_.leading();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    RationalFunction inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (!inv.den_.leading().is_one()) {
        Rational s = Rational(1) / inv.den_.leading();
        inv.num_ = inv.num_ * s;
        inv.den_ = inv.den_ * s;
    }
    return a * inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_.eval(x) / d;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) {
        if (num_.degree() > 0) return "(" + num_.str() + ")";
        return num_.str();
    }
    std::string n = num_.degree() > 0 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.degree() > 0 ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

}  // namespace hilb

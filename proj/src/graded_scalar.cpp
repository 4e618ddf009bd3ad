#include "hilb/graded_scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hilb {

GradedScalar::GradedScalar(const RationalFunction& f, int degree) {
    if (!f.is_zero()) terms_.emplace(degree, f);
}

int GradedScalar::sole_degree() const {
    if (terms_.size() != 1)
        throw std::domain_error("GradedScalar: not homogeneous");
    return terms_.begin()->first;
}

const RationalFunction& GradedScalar::coeff(int degree) const {
    static const RationalFunction zero;
    auto it = terms_.find(degree);
    return it == terms_.end() ? zero : it->second;
}

GradedScalar& GradedScalar::operator+=(const GradedScalar& o) {
    for (const auto& [d, f] : o.terms_) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

GradedScalar& GradedScalar::operator-=(const GradedScalar& o) {
    for (const auto& [d, f] : o.terms_) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, -f);
        } else {
            it->second -= f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

GradedScalar operator*(const GradedScalar& a, const GradedScalar& b) {
    GradedScalar r;
    for (const auto& [da, fa] : a.terms_)
        for (const auto& [db, fb] : b.terms_) {
            RationalFunction p = fa * fb;
            if (p.is_zero()) continue;
            auto it = r.terms_.find(da + db);
            if (it == r.terms_.end()) {
                r.terms_.emplace(da + db, std::move(p));
            } else {
                it->second += p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

GradedScalar operator/(const GradedScalar& a, const GradedScalar& b) {
    if (b.is_zero()) throw std::domain_error("GradedScalar: division by zero");
    if (b.terms_.size() != 1)
        throw std::domain_error("GradedScalar: division by non-homogeneous scalar");
    const auto& [db, fb] = *b.terms_.begin();
    GradedScalar r;
    for (const auto& [da, fa] : a.terms_) r.terms_.emplace(da - db, fa / fb);
    return r;
}

GradedScalar GradedScalar::operator-() const {
    GradedScalar r;
    for (const auto& [d, f] : terms_) r.terms_.emplace(d, -f);
    return r;
}

GradedScalar GradedScalar::scale(const RationalFunction& f) const {
    if (f.is_zero()) return {};
    GradedScalar r;
    for (const auto& [d, g] : terms_) {
        RationalFunction p = g * f;
        if (!p.is_zero()) r.terms_.emplace(d, std::move(p));
    }
    return r;
}

Rational GradedScalar::eval(const Rational& x1, const Rational& x2) const {
    if (x1.is_zero())
        throw std::domain_error("GradedScalar: e1 must be invertible for evaluation");
    Rational kval = -x2 / x1;
    Rational acc;
    for (const auto& [d, f] : terms_) {
        Rational power(1);
        for (int i = 0; i < (d >= 0 ? d : -d); ++i) power *= x1;
        if (d < 0) power = Rational(1) / power;
        acc += f.eval(kval) * power;
    }
    return acc;
}

std::string GradedScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << f.str();
            continue;
        }
        if (!f.is_one()) os << f.str() << "*";
        os << "e1";
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedScalar& g) {
    return os << g.str();
}

const GradedScalar& gs_one() {
    static const GradedScalar v{RationalFunction(1), 0};
    return v;
}

const GradedScalar& gs_eps1() {
    static const GradedScalar v{RationalFunction(1), 1};
    return v;
}

const GradedScalar& gs_eps2() {
    static const GradedScalar v{-RationalFunction::k(), 1};
    return v;
}

const GradedScalar& gs_kx() {
    static const GradedScalar v{RationalFunction::k() - RationalFunction(1), 1};
    return v;
}

const GradedScalar& gs_c2x() {
    static const GradedScalar v{-RationalFunction::k(), 2};
    return v;
}

}  // namespace hilb

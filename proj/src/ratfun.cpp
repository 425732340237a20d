#include "oscalg/ratfun.hpp"

#include <stdexcept>

namespace oscalg {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const Rat lead = den_.leading();
    if (lead != Rat(1)) {
        num_ = num_ / lead;
        den_ = den_ / lead;
    }
}

const Poly& RatFun::as_poly() const {
    if (!is_polynomial() && !is_zero())
        throw std::domain_error("RatFun: not a polynomial: " + to_string());
    return num_;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

Rat RatFun::operator()(const Rat& x) const {
    const Rat d = den_(x);
    if (d.is_zero())
        throw std::domain_error("RatFun: pole at " + x.to_string() + " in " + to_string());
    return num_(x) / d;
}

RatFun RatFun::shifted(const Rat& c) const {
    RatFun r(*this);
    r.num_ = num_.shifted(c);
    r.den_ = den_.shifted(c);  // shifting preserves reduction and monic lead
    return r;
}

RatFun RatFun::pow(long e) const {
    if (e < 0) return (RatFun(Rat(1)) / *this).pow(-e);
    RatFun r(Rat(1)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial() || is_zero()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace oscalg

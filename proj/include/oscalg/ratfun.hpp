#pragma once

#include <string>

#include "oscalg/polynomial.hpp"

namespace oscalg {

// Rational function num/den over Q, always kept reduced (no common
// polynomial factor) with a monic denominator, which makes equality
// structural. The denominator is never the zero polynomial.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    RatFun(long constant) : num_(Rat(constant)), den_(Rat(1)) {}
    RatFun(const Poly& num) : num_(num), den_(Rat(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True iff the reduced denominator is constant (necessarily 1).
    bool is_polynomial() const { return den_.degree() == 0; }
    const Poly& as_poly() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    bool defined_at(const Rat& x) const { return !den_(x).is_zero(); }
    // Exact evaluation; throws std::domain_error at a pole.
    Rat operator()(const Rat& x) const;

    // r(n + c) as a rational function of n.
    RatFun shifted(const Rat& c) const;

    RatFun pow(long e) const;

    std::string to_string(const std::string& var = "n") const;

private:
    void normalize();
    Poly num_, den_;
};

inline RatFun operator*(const Rat& s, const RatFun& r) { return RatFun(Poly(s)) * r; }

// True iff a and b denote the same rational function (cross-multiplied
// polynomials identical); works for unreduced inputs via construction.
inline bool ratfun_equal(const RatFun& a, const RatFun& b) { return a == b; }

}  // namespace oscalg

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

// Dense univariate polynomial over the rationals. Coefficients are stored
// ascending by degree; the zero polynomial has an empty coefficient vector,
// otherwise the leading coefficient is nonzero. Degrees stay small in every
// workload here, so density keeps equality and fitting structural.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant);
    Poly(long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    // The monomial n (degree 1, coefficient 1).
    static Poly variable();

    bool is_zero() const { return c_.empty(); }
    // Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Coefficient of n^k (0 beyond the stored degree).
    const Rat& coeff(int k) const;
    Rat leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator/(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact Horner evaluation.
    Rat operator()(const Rat& x) const;
    double eval_double(double x) const;

    // p(n + c) as a polynomial in n.
    Poly shifted(const Rat& c) const;

    // Quotient and remainder of *this by d (field coefficients, exact).
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    Poly monic() const;

    // Unique interpolating polynomial through the given points
    // (degree < number of points). Throws on duplicate abscissae.
    static Poly fit(const std::vector<std::pair<Rat, Rat>>& points);

    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// Monic polynomial gcd (Euclid); gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace oscalg

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oscalg {

// Exact rational scalar backed by GMP. Canonical form is maintained at all
// times: gcd(|num|, den) = 1 and den > 0, zero is 0/1. Values are immutable
// in spirit (all operations return fresh values) and safe to share across
// threads once constructed.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(mpz_class(n)) {}
    Rat(long n, long d) : Rat(mpz_class(n), mpz_class(d)) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0)
            throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "p", "p/q" or "-p/q" (arbitrary precision). Whitespace and a
    // leading '+' are tolerated.
    static Rat from_string(std::string s) {
        auto strip = [](std::string& t) {
            size_t a = t.find_first_not_of(" \t");
            size_t b = t.find_last_not_of(" \t");
            t = (a == std::string::npos) ? std::string() : t.substr(a, b - a + 1);
        };
        strip(s);
        if (!s.empty() && s[0] == '+') s = s.substr(1);
        if (s.empty())
            throw std::invalid_argument("Rat: empty string");
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (v.get_den() == 0)
            throw std::domain_error("Rat: zero denominator in '" + s + "'");
        v.canonicalize();
        Rat r;
        r.v_ = v;
        return r;
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact integer value; requires is_integer() and fits in long.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rat: not representable as long");
        return v_.get_num().get_si();
    }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rat: reciprocal of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        Rat r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

}  // namespace oscalg

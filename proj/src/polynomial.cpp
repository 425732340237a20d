#include "oscalg/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg {

namespace {
const Rat kZero(0);
}

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

Rat Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (s.is_zero()) return Poly();
    Poly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::operator/(const Rat& s) const {
    if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
    return *this * s.reciprocal();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

Poly Poly::shifted(const Rat& c) const {
    // Horner in (n + c): acc <- acc*(n + c) + c_i.
    Poly acc;
    const Poly lin(std::vector<Rat>{c, Rat(1)});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q, r(*this);
    const Rat lead_inv = d.leading().reciprocal();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Rat f = r.leading() * lead_inv;
        std::vector<Rat> mono(static_cast<size_t>(k) + 1, Rat(0));
        mono.back() = f;
        const Poly m(std::move(mono));
        q = q + m;
        r = r - m * d;
    }
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this / leading();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r).monic();  // monic remainders bound coefficient growth
    }
    return a.monic();
}

Poly Poly::fit(const std::vector<std::pair<Rat, Rat>>& points) {
    const size_t k = points.size();
    if (k == 0) return Poly();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("Poly::fit: duplicate abscissa " +
                                            points[i].first.to_string());

    // Newton divided differences, then expansion to the monomial basis.
    std::vector<Rat> dd;
    dd.reserve(k);
    for (const auto& p : points) dd.push_back(p.second);
    for (size_t j = 1; j < k; ++j)
        for (size_t i = k - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);

    Poly acc;
    for (size_t i = k; i-- > 0;) {
        const Poly lin(std::vector<Rat>{-points[i].first, Rat(1)});
        acc = acc * lin + Poly(dd[i]);
    }
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (c.is_zero()) continue;
        const Rat a = abs(c);
        if (first) {
            if (c.is_negative()) out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        const bool unit = (a == Rat(1));
        if (k == 0) {
            out << a.to_string();
        } else {
            if (!unit) out << a.to_string() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace oscalg

#include "oscalg/coeffseq.hpp"

#include <stdexcept>

namespace oscalg {

FamilyId FamilyId::gegenbauer(const Rat& alpha) {
    if (!(alpha > Rat(-1)))
        throw std::invalid_argument("Gegenbauer: alpha must exceed -1, got " + alpha.to_string());
    return {FamilyTag::Gegenbauer, alpha};
}

std::string FamilyId::name() const {
    switch (tag) {
        case FamilyTag::Hermite: return "hermite";
        case FamilyTag::Legendre: return "legendre";
        case FamilyTag::Gegenbauer: return "gegenbauer(" + alpha.to_string() + ")";
    }
    return "?";
}

RatFun family_formula(const FamilyId& f) {
    const Poly n = Poly::variable();
    switch (f.tag) {
        case FamilyTag::Hermite:
            // b_n^2 = (n+1)/2
            return RatFun((n + Poly(1)) / Rat(2));
        case FamilyTag::Legendre:
            // b_n^2 = (n+1)^2 / ((2n+1)(2n+3))
            return RatFun((n + Poly(1)) * (n + Poly(1)),
                          (n * Rat(2) + Poly(1)) * (n * Rat(2) + Poly(3)));
        case FamilyTag::Gegenbauer: {
            const Rat& a = f.alpha;
            const Poly na1 = n + Poly(Rat(2) * a + Rat(1));        // n + 2a + 1
            const Poly d1 = n * Rat(2) + Poly(Rat(2) * a + Rat(1));  // 2n + 2a + 1
            const Poly d3 = n * Rat(2) + Poly(Rat(2) * a + Rat(3));  // 2n + 2a + 3
            return RatFun((n + Poly(1)) * na1, d1 * d3);
        }
    }
    throw std::logic_error("family_formula: bad tag");
}

CoeffSeq CoeffSeq::closed_form(RatFun bsq) {
    CoeffSeq s;
    s.encoding_ = Encoding::ClosedForm;
    s.fun_ = std::move(bsq);
    return s;
}

CoeffSeq CoeffSeq::poly_form(Poly bsq) {
    CoeffSeq s;
    s.encoding_ = Encoding::PolyForm;
    s.fun_ = RatFun(std::move(bsq));
    return s;
}

CoeffSeq CoeffSeq::table(std::vector<Rat> values) {
    if (values.empty()) throw std::invalid_argument("CoeffSeq: empty table");
    CoeffSeq s;
    s.encoding_ = Encoding::Table;
    s.values_ = std::move(values);
    return s;
}

CoeffSeq CoeffSeq::builtin(const FamilyId& f) {
    if (f.tag == FamilyTag::Gegenbauer && !(f.alpha > Rat(-1)))
        throw std::invalid_argument("Gegenbauer: alpha must exceed -1");
    CoeffSeq s;
    s.encoding_ = Encoding::Builtin;
    s.family_ = f;
    s.fun_ = family_formula(f);
    // At alpha = -1/2 (Chebyshev T) the generic numerator and denominator
    // both vanish at n = 0, and the reduced function misses the true head:
    // b_0^2 = mu_2 = 1/(2a+3) = 1/2, while the tail is correctly 1/4.
    if (f.tag == FamilyTag::Gegenbauer && f.alpha == Rat(-1, 2))
        s.head_override_ = Rat(1, 2);
    return s;
}

Rat CoeffSeq::bsq(long n) const {
    if (n < -1) throw std::out_of_range("bsq: index below -1");
    if (n == -1) return Rat(0);  // boundary convention precedes encoding
    switch (encoding_) {
        case Encoding::Table:
            if (n >= static_cast<long>(values_.size()))
                throw std::out_of_range("bsq: index " + std::to_string(n) +
                                        " beyond table length " +
                                        std::to_string(values_.size() - 1));
            return values_[static_cast<size_t>(n)];
        case Encoding::Builtin:
            if (n == 0 && head_override_) return *head_override_;
            [[fallthrough]];
        case Encoding::ClosedForm:
        case Encoding::PolyForm:
            return (*fun_)(Rat(n));
    }
    throw std::logic_error("bsq: bad encoding");
}

bool CoeffSeq::has_closed_form() const {
    switch (encoding_) {
        case Encoding::ClosedForm:
        case Encoding::PolyForm: return true;
        case Encoding::Builtin: return !head_override_.has_value();
        case Encoding::Table: return false;
    }
    return false;
}

const RatFun& CoeffSeq::bsq_fun() const {
    if (!has_closed_form())
        throw std::domain_error("bsq_fun: " + describe() +
                                " has no faithful closed-form rational description");
    return *fun_;
}

long CoeffSeq::table_length() const {
    if (encoding_ != Encoding::Table)
        throw std::domain_error("table_length: not a table encoding");
    return static_cast<long>(values_.size()) - 1;
}

PositivityReport CoeffSeq::positivity_check(long window) const {
    if (window < 1) throw std::invalid_argument("positivity_check: window must be >= 1");
    long hi = window;
    if (encoding_ == Encoding::Table)
        hi = std::min(hi, static_cast<long>(values_.size()));
    for (long n = 0; n < hi; ++n) {
        if (!(bsq(n) > Rat(0))) return {false, n};
    }
    return {true, -1};
}

std::string CoeffSeq::describe() const {
    switch (encoding_) {
        case Encoding::ClosedForm: return "closed_form " + fun_->to_string();
        case Encoding::PolyForm: return "poly_form " + fun_->to_string();
        case Encoding::Table:
            return "table[" + std::to_string(values_.size()) + " values]";
        case Encoding::Builtin: return "builtin " + family_->name();
    }
    return "?";
}

}  // namespace oscalg

#include "oscalg/shiftop.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg {

namespace {
const RatFun kZeroFun;
}

ShiftOp ShiftOp::shift(int d, RatFun coeff) {
    ShiftOp t;
    t.set(d, std::move(coeff));
    return t;
}

void ShiftOp::set(int d, RatFun coeff) {
    if (coeff.is_zero())
        comps_.erase(d);
    else
        comps_[d] = std::move(coeff);
}

const RatFun& ShiftOp::component(int d) const {
    auto it = comps_.find(d);
    return it == comps_.end() ? kZeroFun : it->second;
}

int ShiftOp::bandwidth() const {
    int b = 0;
    for (const auto& [d, c] : comps_) b = std::max(b, d < 0 ? -d : d);
    return b;
}

ShiftOp ShiftOp::with_interior(long i) const {
    ShiftOp t(*this);
    t.interior_from_ = i;
    return t;
}

ShiftOp ShiftOp::operator-() const {
    ShiftOp t(*this);
    for (auto& [d, c] : t.comps_) c = -c;
    return t;
}

ShiftOp ShiftOp::operator+(const ShiftOp& o) const {
    ShiftOp t(*this);
    for (const auto& [d, c] : o.comps_) t.set(d, t.component(d) + c);
    t.interior_from_ = std::max(interior_from_, o.interior_from_);
    return t;
}

ShiftOp ShiftOp::operator-(const ShiftOp& o) const { return *this + (-o); }

ShiftOp ShiftOp::operator*(const Rat& s) const {
    if (s.is_zero()) return zero();
    ShiftOp t(*this);
    for (auto& [d, c] : t.comps_) c = RatFun(Poly(s)) * c;
    return t;
}

ShiftOp ShiftOp::compose(const ShiftOp& u) const {
    // (T o U) e_n = sum_e u_e(n) sum_d t_d(n+e) e_{n+e+d}: the coefficient
    // at shift d+e is t_d(n+e) * u_e(n).
    ShiftOp r;
    for (const auto& [e, uc] : u.comps_)
        for (const auto& [d, tc] : comps_)
            r.set(d + e, r.component(d + e) + tc.shifted(Rat(e)) * uc);
    // Boundary-exact where u is exact and the intermediate index n+e stays
    // in this operator's exact region.
    long lo = u.interior_from_;
    if (!u.comps_.empty()) lo = std::max(lo, interior_from_ - u.min_shift());
    r.interior_from_ = std::max(lo, 0L);
    return r;
}

std::vector<std::pair<int, std::string>> ShiftOp::dump() const {
    std::vector<std::pair<int, std::string>> out;
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it)
        out.emplace_back(it->first, it->second.to_string());
    return out;
}

std::string ShiftOp::to_string() const {
    if (is_zero()) return "[]";
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [d, c] : dump()) {
        if (!first) os << ", ";
        first = false;
        os << "(" << (d > 0 ? "+" : "") << d << ", \"" << c << "\")";
    }
    os << "]";
    return os.str();
}

ShiftOp commutator(const ShiftOp& t, const ShiftOp& u) {
    ShiftOp tu = t.compose(u);
    ShiftOp ut = u.compose(t);
    ShiftOp r = tu - ut;
    return r.with_interior(std::max(tu.interior_from(), ut.interior_from()));
}

ShiftOp op_pow(const ShiftOp& t, int k) {
    if (k < 0) throw std::invalid_argument("op_pow: negative power");
    ShiftOp r = ShiftOp::identity();
    for (int i = 0; i < k; ++i) r = r.compose(t);
    return r;
}

}  // namespace oscalg

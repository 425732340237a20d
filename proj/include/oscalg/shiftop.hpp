#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oscalg/ratfun.hpp"

namespace oscalg {

// Exact weighted-shift operator in the rational gauge: sends the basis
// vector indexed n to sum_d t_d(n) * (basis vector indexed n+d), with
// finitely many components and no identically-zero coefficient stored.
// The rational-function description is boundary-exact for n >=
// interior_from(); smaller indices are the business of the truncated
// matrix realization.
class ShiftOp {
public:
    ShiftOp() = default;

    static ShiftOp zero() { return ShiftOp(); }
    static ShiftOp diagonal(RatFun coeff) { return shift(0, std::move(coeff)); }
    static ShiftOp shift(int d, RatFun coeff);
    static ShiftOp identity() { return diagonal(RatFun(Rat(1))); }

    bool is_zero() const { return comps_.empty(); }
    const std::map<int, RatFun>& components() const { return comps_; }
    // Coefficient at shift d (zero RatFun if absent).
    const RatFun& component(int d) const;

    int min_shift() const { return comps_.empty() ? 0 : comps_.begin()->first; }
    int max_shift() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }
    // Largest |d| over stored components.
    int bandwidth() const;

    long interior_from() const { return interior_from_; }
    ShiftOp with_interior(long i) const;

    ShiftOp operator-() const;
    ShiftOp operator+(const ShiftOp& o) const;
    ShiftOp operator-(const ShiftOp& o) const;
    ShiftOp operator*(const Rat& s) const;
    bool operator==(const ShiftOp& o) const { return comps_ == o.comps_; }
    bool operator!=(const ShiftOp& o) const { return !(*this == o); }

    // Operator composition: (*this) applied after u.
    ShiftOp compose(const ShiftOp& u) const;

    // Textual dump: (d, coefficient) pairs, highest shift first.
    std::vector<std::pair<int, std::string>> dump() const;
    std::string to_string() const;

private:
    void set(int d, RatFun coeff);
    std::map<int, RatFun> comps_;
    long interior_from_ = 0;
};

inline ShiftOp operator*(const Rat& s, const ShiftOp& t) { return t * s; }

ShiftOp commutator(const ShiftOp& t, const ShiftOp& u);

// k-fold composition power; k = 0 gives the identity.
ShiftOp op_pow(const ShiftOp& t, int k);

}  // namespace oscalg

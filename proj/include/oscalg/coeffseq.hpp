#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscalg/ratfun.hpp"

namespace oscalg {

enum class FamilyTag { Hermite, Legendre, Gegenbauer };

// A built-in classical family. Gegenbauer carries the symmetric-Jacobi
// exponent alpha of the weight (1-x^2)^alpha and requires alpha > -1.
struct FamilyId {
    FamilyTag tag;
    Rat alpha;  // Gegenbauer only

    static FamilyId hermite() { return {FamilyTag::Hermite, Rat(0)}; }
    static FamilyId legendre() { return {FamilyTag::Legendre, Rat(0)}; }
    static FamilyId gegenbauer(const Rat& alpha);

    std::string name() const;
};

// The closed-form b_n^2 of the family as a rational function of n.
// For Gegenbauer this is the generic formula
//   (n+1)(n+2a+1) / ((2n+2a+1)(2n+2a+3)),
// which reduces before use; see CoeffSeq for the a = -1/2 boundary value.
RatFun family_formula(const FamilyId& f);

struct PositivityReport {
    bool ok;
    long first_violation;  // meaningful when !ok
};

// The coefficient sequence {b_n}, stored as b_n^2, under one of four
// encodings. b_{-1}^2 = 0 by convention regardless of encoding. All
// values are immutable after construction and safe to share.
class CoeffSeq {
public:
    enum class Encoding { ClosedForm, PolyForm, Table, Builtin };

    static CoeffSeq closed_form(RatFun bsq);
    static CoeffSeq poly_form(Poly bsq);
    static CoeffSeq table(std::vector<Rat> values);
    static CoeffSeq builtin(const FamilyId& f);

    Encoding encoding() const { return encoding_; }

    // b_n^2 for n >= -1 (always 0 at n = -1). Throws out_of_range beyond a
    // table, and domain_error when a closed form has a pole at n (reported,
    // never silently zero).
    Rat bsq(long n) const;

    // True when the sequence is faithfully described by a single rational
    // function of n (needed for symbolic operator work).
    bool has_closed_form() const;
    // That rational function; throws domain_error when has_closed_form()
    // is false.
    const RatFun& bsq_fun() const;

    // Largest tabulated index L (Table encoding only).
    long table_length() const;

    const FamilyId* family() const { return family_ ? &*family_ : nullptr; }

    // True iff b_n^2 > 0 for 0 <= n < window (capped at the table length
    // for Table encodings). Violations are data, not faults.
    PositivityReport positivity_check(long window) const;

    std::string describe() const;

private:
    CoeffSeq() = default;
    Encoding encoding_ = Encoding::ClosedForm;
    std::optional<RatFun> fun_;          // ClosedForm / PolyForm / Builtin
    std::vector<Rat> values_;            // Table
    std::optional<FamilyId> family_;     // Builtin
    std::optional<Rat> head_override_;   // Builtin: exact b_0^2 where the
                                         // generic formula degenerates
};

}  // namespace oscalg

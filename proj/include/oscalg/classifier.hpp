#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscalg/coeffseq.hpp"
#include "oscalg/polynomial.hpp"

namespace oscalg {

// The two-variable difference table V_n^(j): row 0 holds b_n^2 - b_{n-1}^2
// for n = base_offset .. base_offset+window-1 (with the b_{-1} = 0 boundary
// convention applied by bsq), and every higher row obeys
// rows[j][i] = rows[j-1][i+1] - rows[j-1][i].
struct DiffTable {
    long base_offset = 0;
    std::vector<std::vector<Rat>> rows;  // rows[j][i] = V_{base_offset+i}^{(j)}
};

DiffTable diff_table(const CoeffSeq& seq, int jmax, int window, long base);

struct Witness {
    enum class Kind { NonPolynomial, DegreeExceeds, NonconstantDifferences };
    Kind kind;
    int detail;  // degree for DegreeExceeds, tested jmax for NonconstantDifferences

    std::string to_string() const;
};

struct Classification {
    enum class Verdict { FiniteDim, InfiniteDim, Inconclusive };
    Verdict verdict;
    Poly R;                           // FiniteDim: b_n^2 = R(n), degree <= 2
    int algebra_dim = 0;              // 4 whenever finite
    std::optional<Witness> witness;   // InfiniteDim
    std::string reason;               // Inconclusive

    bool finite() const { return verdict == Verdict::FiniteDim; }
    bool infinite() const { return verdict == Verdict::InfiniteDim; }
};

// Decides finite- vs infinite-dimensionality of the oscillator algebra from
// b_n^2. Rational encodings are decided by the reduced closed form (degree
// <= 2 polynomial or not); tables by forward differences of the stated
// values; built-in families additionally honor the b_{-1} = 0 boundary of
// the actual operator family (a degree <= 2 form with R(-1) != 0 leaves a
// boundary jump in every difference row, so the family algebra does not
// close). Positivity violations are errors, not verdicts.
Classification classify(const CoeffSeq& seq, int window = 24, int jmax = 8);

// Closed form of sum_{i=1}^{n} P(i) + b0sq as a polynomial in n of degree
// deg(P)+1, built by fitting exact partial sums.
Poly summation_poly(const Poly& P, const Rat& b0sq);

// The unique Q with Q(n) - Q(n-1) = P(n) and Q(0) = 0, via the triangular
// linear system on Q's coefficients (diagonal entries k+1, never zero).
Poly antidifference(const Poly& P);

}  // namespace oscalg

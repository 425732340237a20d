#include "oscalg/classifier.hpp"

#include <stdexcept>

namespace oscalg {

namespace {

Classification finite(Poly R) {
    Classification c;
    c.verdict = Classification::Verdict::FiniteDim;
    c.R = std::move(R);
    c.algebra_dim = 4;
    return c;
}

Classification infinite(Witness w) {
    Classification c;
    c.verdict = Classification::Verdict::InfiniteDim;
    c.witness = w;
    return c;
}

Classification inconclusive(std::string reason) {
    Classification c;
    c.verdict = Classification::Verdict::Inconclusive;
    c.reason = std::move(reason);
    return c;
}

void require_positivity(const CoeffSeq& seq, long window) {
    const auto rep = seq.positivity_check(window);
    if (!rep.ok)
        throw std::domain_error("classify: b_n^2 not positive at n = " +
                                std::to_string(rep.first_violation) +
                                " (not a valid coefficient sequence)");
}

bool row_constant(const std::vector<Rat>& row) {
    for (size_t i = 1; i < row.size(); ++i)
        if (row[i] != row[0]) return false;
    return true;
}

bool row_zero(const std::vector<Rat>& row) {
    for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
}

Classification classify_polynomial(const Poly& R) {
    if (R.degree() > 2)
        return infinite({Witness::Kind::DegreeExceeds, R.degree()});
    return finite(R);
}

// Built-in families are classified as operator families: the b_{-1} = 0
// convention participates, so the paper's V table (diff_table at base 0)
// is the authority. A degree <= 2 closed form still fails to close when
// R(-1) != 0: the boundary jump makes every V row nonconstant.
Classification classify_family(const CoeffSeq& seq, int jmax) {
    if (!seq.has_closed_form()) {
        // The generic formula degenerates (Chebyshev T head): the true head
        // value differs from the rational tail, so no polynomial matches.
        return infinite({Witness::Kind::NonconstantDifferences, jmax});
    }
    const RatFun& f = seq.bsq_fun();
    if (!f.is_polynomial() && !f.is_zero())
        return infinite({Witness::Kind::NonPolynomial, 0});
    const Poly& R = f.as_poly();
    if (R.degree() > 2)
        return infinite({Witness::Kind::DegreeExceeds, R.degree()});
    if (!R(Rat(-1)).is_zero())
        return infinite({Witness::Kind::NonconstantDifferences, jmax});
    return finite(R);
}

Classification classify_table(const CoeffSeq& seq, int window, int jmax) {
    if (window < 8)
        throw std::invalid_argument("classify: table encoding requires window >= 8");
    const long usable = std::min<long>(window, seq.table_length() + 1);
    if (usable < 3)
        return inconclusive("table too short to difference (need at least 3 values)");

    // Forward differences of {b_n^2}_{n>=0} itself; no boundary convention.
    std::vector<Rat> row;
    row.reserve(static_cast<size_t>(usable));
    for (long n = 0; n < usable; ++n) row.push_back(seq.bsq(n));

    const std::vector<Rat> head(row.begin(), row.begin() + 3);
    const int testable = static_cast<int>(usable - 2);
    const int jhi = std::min(jmax, testable);
    for (int j = 1; j <= jhi; ++j) {
        std::vector<Rat> next(row.size() - 1);
        for (size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
        row = std::move(next);
        if (row_constant(row)) {
            const int deg = row_zero(row) ? 0 : j;
            if (deg > 2) return infinite({Witness::Kind::DegreeExceeds, deg});
            std::vector<std::pair<Rat, Rat>> pts;
            for (long n = 0; n < 3; ++n) pts.emplace_back(Rat(n), head[static_cast<size_t>(n)]);
            return finite(Poly::fit(pts));
        }
    }
    if (testable >= jmax)
        return infinite({Witness::Kind::NonconstantDifferences, jmax});
    return inconclusive("differences nonconstant up to j = " + std::to_string(jhi) +
                        "; table too short to test jmax = " + std::to_string(jmax));
}

}  // namespace

DiffTable diff_table(const CoeffSeq& seq, int jmax, int window, long base) {
    if (jmax < 0 || window < jmax + 2)
        throw std::invalid_argument("diff_table: need window >= jmax + 2");
    DiffTable t;
    t.base_offset = base;
    t.rows.resize(static_cast<size_t>(jmax) + 1);
    auto& r0 = t.rows[0];
    r0.reserve(static_cast<size_t>(window));
    for (long i = 0; i < window; ++i) {
        const long n = base + i;
        r0.push_back(seq.bsq(n) - seq.bsq(n - 1));  // out_of_range reported by bsq
    }
    for (int j = 1; j <= jmax; ++j) {
        const auto& prev = t.rows[static_cast<size_t>(j) - 1];
        auto& cur = t.rows[static_cast<size_t>(j)];
        cur.resize(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) cur[i] = prev[i + 1] - prev[i];
    }
    return t;
}

std::string Witness::to_string() const {
    switch (kind) {
        case Kind::NonPolynomial: return "non_polynomial";
        case Kind::DegreeExceeds: return "degree_exceeds(" + std::to_string(detail) + ")";
        case Kind::NonconstantDifferences:
            return "nonconstant_differences(jmax=" + std::to_string(detail) + ")";
    }
    return "?";
}

Classification classify(const CoeffSeq& seq, int window, int jmax) {
    if (window < 1 || jmax < 1) throw std::invalid_argument("classify: bad window/jmax");
    require_positivity(seq, window);
    switch (seq.encoding()) {
        case CoeffSeq::Encoding::Builtin:
            return classify_family(seq, jmax);
        case CoeffSeq::Encoding::ClosedForm: {
            const RatFun& f = seq.bsq_fun();
            if (!f.is_polynomial() && !f.is_zero())
                return infinite({Witness::Kind::NonPolynomial, 0});
            return classify_polynomial(f.as_poly());
        }
        case CoeffSeq::Encoding::PolyForm:
            return classify_polynomial(seq.bsq_fun().as_poly());
        case CoeffSeq::Encoding::Table:
            return classify_table(seq, window, jmax);
    }
    throw std::logic_error("classify: bad encoding");
}

Poly summation_poly(const Poly& P, const Rat& b0sq) {
    const int d = P.degree();
    std::vector<std::pair<Rat, Rat>> pts;
    Rat acc = b0sq;
    pts.emplace_back(Rat(0), acc);
    for (long k = 1; k <= d + 1; ++k) {
        acc += P(Rat(k));
        pts.emplace_back(Rat(k), acc);
    }
    return Poly::fit(pts);
}

Poly antidifference(const Poly& P) {
    const int d = P.degree();
    if (d < 0) return Poly();

    // Binomial table up to d+1.
    const int m = d + 2;
    std::vector<std::vector<Rat>> binom(static_cast<size_t>(m) + 1,
                                        std::vector<Rat>(static_cast<size_t>(m) + 1, Rat(0)));
    for (int i = 0; i <= m; ++i) {
        binom[i][0] = Rat(1);
        for (int k = 1; k <= i; ++k)
            binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
    }

    // Matching n^k coefficients of Q(n) - Q(n-1) = P(n) gives the triangular
    // system  sum_{i=k+1}^{d+1} a_i C(i,k) (-1)^{i-k-1} = p_k,  k = d..0.
    std::vector<Rat> a(static_cast<size_t>(d) + 2, Rat(0));  // a[0] fixed to 0
    for (int k = d; k >= 0; --k) {
        Rat rhs = P.coeff(k);
        for (int i = k + 2; i <= d + 1; ++i) {
            const Rat sign = ((i - k - 1) % 2 == 0) ? Rat(1) : Rat(-1);
            rhs -= a[static_cast<size_t>(i)] * binom[i][k] * sign;
        }
        a[static_cast<size_t>(k) + 1] = rhs / Rat(k + 1);
    }
    return Poly(std::move(a));
}

}  // namespace oscalg

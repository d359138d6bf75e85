#pragma once

#include <vector>

#include "jacobi/diagram.hpp"
#include "jacobi/laurent.hpp"
#include "jacobi/semimodule.hpp"

namespace jacobi {

/// Gaussian binomial coefficient as a polynomial in q, by the Pascal-type
/// recurrence binom(n,k)_q = binom(n-1,k-1)_q + q^k * binom(n-1,k)_q.
inline LaurentBivariate q_binomial(i64 n, i64 k) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    // row-by-row table of the recurrence
    std::vector<LaurentBivariate> row{LaurentBivariate::one()};
    for (i64 m = 1; m <= n; ++m) {
        std::vector<LaurentBivariate> next(static_cast<std::size_t>(m) + 1);
        next[0] = LaurentBivariate::one();
        next[static_cast<std::size_t>(m)] = LaurentBivariate::one();
        for (i64 j = 1; j < m; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                LaurentBivariate::monomial(j, 0) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// [k]_q = 1 + q + ... + q^(k-1).
inline LaurentBivariate q_integer(i64 k) {
    LaurentBivariate out;
    for (i64 i = 0; i < k; ++i) out.add_term(i, 0, 1);
    return out;
}

inline i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

/// Number of subdiagrams of the (p,q) staircase: C(p+q,p)/(p+q).
inline i64 rational_catalan_count(i64 p, i64 q) { return binomial(p + q, p) / (p + q); }

/// q,t-Catalan number by the combinatorial formula:
/// sum over subdiagrams of the (n,n+1) staircase of q^dinv * t^(C(n,2)-area).
inline LaurentBivariate qt_catalan(i64 n) {
    if (n < 1) throw std::invalid_argument("qt_catalan: n must be >= 1");
    if (n == 1) return LaurentBivariate::one();  // the (1,2) staircase is empty
    const i64 delta = n * (n - 1) / 2;
    LaurentBivariate out;
    for (const YoungDiagram& d : enumerate_subdiagrams(staircase(n, n + 1).bound()))
        out.add_term(dinv(d, n), delta - d.area(), 1);
    return out;
}

/// Sum over semi-modules of q^dim * t^(number of gaps of Delta); equals
/// q^C(n,2) * C_n(1/q, t).
inline LaurentBivariate bigraded_semimodule_sum(i64 n) {
    if (n < 1) throw std::invalid_argument("bigraded_semimodule_sum: n must be >= 1");
    LaurentBivariate out;
    if (n == 1) return LaurentBivariate::one();
    for (const SemiModule& sm : enumerate_semimodules(Semigroup(n, n + 1)))
        out.add_term(sm.dimension(), sm.gaps_count(), 1);
    return out;
}

/// Poincare polynomial of the Jacobi factor: sum of t^(2 dim Delta) over all
/// semi-modules. Univariate in t, even exponents only.
inline LaurentBivariate poincare(i64 p, i64 q) {
    LaurentBivariate out;
    for (const SemiModule& sm : enumerate_semimodules(Semigroup(p, q)))
        out.add_term(0, 2 * sm.dimension(), 1);
    return out;
}

/// Sum of t^(2|D|) over subdiagrams of the staircase; conjecturally equal to
/// the Poincare polynomial for every coprime pair.
inline LaurentBivariate area_generating(i64 p, i64 q) {
    LaurentBivariate out;
    for (const YoungDiagram& d : enumerate_subdiagrams(staircase(p, q).bound()))
        out.add_term(0, 2 * d.area(), 1);
    return out;
}

/// Torus weight decomposition of the tangent space at the monomial ideal of
/// D: each box contributes t1^(l+1) t2^(-a) + t1^(-l) t2^(a+1).
inline LaurentBivariate tangent_weights(const YoungDiagram& d) {
    LaurentBivariate out({"t1", "t2"});
    for (const Box& c : d.boxes()) {
        const i64 a = arm(d, c), l = leg(d, c);
        out.add_term(l + 1, -a, 1);
        out.add_term(-l, a + 1, 1);
    }
    return out;
}

/// Number of tangent weights of D that pair positively with the (p,q)
/// one-parameter subgroup, i.e. with p*e1 + q*e2 > 0, counted with
/// multiplicity.
inline i64 positive_weight_count(const YoungDiagram& d, i64 p, i64 q) {
    i64 count = 0;
    const LaurentBivariate weights = tangent_weights(d);
    for (const auto& [e, c] : weights.terms())
        if (p * e.first + q * e.second > 0) count += c;
    return count;
}

/// Virtual Poincare polynomial of the colength-h stratum: sum over
/// subdiagrams of area h of t^(2(h + h_plus)).
inline LaurentBivariate hilbert_cell_poly(i64 p, i64 q, i64 h) {
    const Semigroup gamma(p, q);
    if (h < 0 || h > gamma.delta())
        throw std::invalid_argument("hilbert_cell_poly: h outside [0, delta]");
    LaurentBivariate out;
    for (const YoungDiagram& d : enumerate_subdiagrams(staircase(p, q).bound()))
        if (d.area() == h) out.add_term(0, 2 * (h + h_plus(d, p, q)), 1);
    return out;
}

}  // namespace jacobi

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/common.hpp"

namespace jacobi {

/// Exact bivariate Laurent polynomial: a finite map from integer exponent
/// pairs to nonzero 64-bit coefficients. Variable names default to ("q","t");
/// tangent-weight polynomials use ("t1","t2"). Equality is term-set equality.
class LaurentBivariate {
public:
    using Exponents = std::pair<i64, i64>;

    LaurentBivariate() = default;
    explicit LaurentBivariate(std::array<std::string, 2> vars) : vars_(std::move(vars)) {}

    static LaurentBivariate monomial(i64 e1, i64 e2, i64 coeff = 1,
                                     std::array<std::string, 2> vars = {"q", "t"}) {
        LaurentBivariate poly(std::move(vars));
        if (coeff != 0) poly.terms_[{e1, e2}] = coeff;
        return poly;
    }

    static LaurentBivariate one() { return monomial(0, 0, 1); }

    const std::map<Exponents, i64>& terms() const { return terms_; }
    const std::array<std::string, 2>& variables() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(i64 e1, i64 e2, i64 coeff) {
        auto it = terms_.find({e1, e2});
        if (it == terms_.end()) {
            if (coeff != 0) terms_[{e1, e2}] = coeff;
            return;
        }
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }

    LaurentBivariate& operator+=(const LaurentBivariate& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }

    friend LaurentBivariate operator+(LaurentBivariate a, const LaurentBivariate& b) {
        a += b;
        return a;
    }

    friend LaurentBivariate operator*(const LaurentBivariate& a, const LaurentBivariate& b) {
        LaurentBivariate out(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(checked_add(ea.first, eb.first), checked_add(ea.second, eb.second),
                             checked_mul(ca, cb));
        return out;
    }

    friend LaurentBivariate operator*(i64 s, const LaurentBivariate& a) {
        LaurentBivariate out(a.vars_);
        if (s == 0) return out;
        for (const auto& [e, c] : a.terms_) out.terms_[e] = checked_mul(s, c);
        return out;
    }

    /// Simultaneous monomial substitution: the first variable maps to
    /// v1^a11 * v2^a12, the second to v1^a21 * v2^a22. Covers q -> 1/q
    /// (a = [-1,0; 0,1]), t -> 1/q ([1,0; -1,0]), t -> 1, q -> t^-2, ...
    LaurentBivariate substitute(i64 a11, i64 a12, i64 a21, i64 a22) const {
        LaurentBivariate out(vars_);
        for (const auto& [e, c] : terms_)
            out.add_term(checked_add(checked_mul(e.first, a11), checked_mul(e.second, a21)),
                         checked_add(checked_mul(e.first, a12), checked_mul(e.second, a22)), c);
        return out;
    }

    /// Evaluate at integer points. Negative exponents are only meaningful at
    /// values +-1, which is all the identity checks need.
    i64 evaluate(i64 v1, i64 v2) const {
        auto power = [](i64 base, i64 e) {
            if (e < 0) {
                if (base != 1 && base != -1)
                    throw std::invalid_argument("evaluate: negative exponent at non-unit value");
                e = -e;
            }
            i64 r = 1;
            for (i64 i = 0; i < e; ++i) r = checked_mul(r, base);
            return r;
        };
        i64 total = 0;
        for (const auto& [e, c] : terms_)
            total = checked_add(total, checked_mul(c, checked_mul(power(v1, e.first), power(v2, e.second))));
        return total;
    }

    bool operator==(const LaurentBivariate& o) const { return terms_ == o.terms_; }

    /// Stable text rendering: terms sorted by first exponent descending, then
    /// second exponent ascending, e.g. "q^3 + q^2*t + t^2" or "1 + t^2 + 2*t^4".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, i64>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            if (a.first.first != b.first.first) return a.first.first > b.first.first;
            return a.first.second < b.first.second;
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            i64 coeff = c;
            if (first) {
                if (coeff < 0) {
                    out += "-";
                    coeff = -coeff;
                }
            } else {
                out += coeff < 0 ? " - " : " + ";
                if (coeff < 0) coeff = -coeff;
            }
            first = false;
            std::string mono;
            for (int v = 0; v < 2; ++v) {
                const i64 exp = v == 0 ? e.first : e.second;
                if (exp == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[static_cast<std::size_t>(v)];
                if (exp != 1) mono += "^" + std::to_string(exp);
            }
            if (mono.empty()) {
                out += std::to_string(coeff);
            } else {
                if (coeff != 1) out += std::to_string(coeff) + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    std::map<Exponents, i64> terms_;
    std::array<std::string, 2> vars_{"q", "t"};
};

}  // namespace jacobi

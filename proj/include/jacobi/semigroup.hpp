#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "jacobi/common.hpp"

namespace jacobi {

/// The numerical semigroup generated by a coprime pair (p,q):
/// {a*p + b*q : a,b >= 0}. Immutable after construction.
class Semigroup {
public:
    Semigroup(i64 p, i64 q) : p_(p), q_(q) {
        if (p < 2) throw std::invalid_argument("semigroup: p must be >= 2, got " + std::to_string(p));
        if (q < 2) throw std::invalid_argument("semigroup: q must be >= 2, got " + std::to_string(q));
        if (std::gcd(p, q) != 1)
            throw std::invalid_argument("semigroup: p and q must be coprime, got gcd(" +
                                        std::to_string(p) + "," + std::to_string(q) + ") = " +
                                        std::to_string(std::gcd(p, q)));
        const i64 pq = checked_mul(p, q);
        if (pq > (i64{1} << 31))
            throw std::invalid_argument("semigroup: p*q exceeds supported range 2^31");
        // Sieve on [0, pq]; everything past the Frobenius number pq-p-q is a member.
        member_.assign(static_cast<std::size_t>(pq) + 1, false);
        member_[0] = true;
        for (i64 n = 1; n <= pq; ++n)
            member_[n] = (n >= p && member_[n - p]) || (n >= q && member_[n - q]);
        for (i64 n = 1; n <= pq; ++n)
            if (!member_[n]) gaps_.push_back(n);
    }

    i64 p() const { return p_; }
    i64 q() const { return q_; }

    /// The gaps, i.e. nonnegative integers outside the semigroup, sorted.
    const std::vector<i64>& gaps() const { return gaps_; }

    /// (p-1)(q-1)/2; always equals gaps().size().
    i64 delta() const { return (p_ - 1) * (q_ - 1) / 2; }

    i64 frobenius() const { return p_ * q_ - p_ - q_; }

    bool contains(i64 n) const {
        if (n < 0) return false;
        if (n > frobenius()) return true;
        return member_[static_cast<std::size_t>(n)];
    }

    bool operator==(const Semigroup& o) const { return p_ == o.p_ && q_ == o.q_; }

private:
    i64 p_, q_;
    std::vector<bool> member_;
    std::vector<i64> gaps_;
};

inline Semigroup make_semigroup(i64 p, i64 q) { return Semigroup(p, q); }

}  // namespace jacobi

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "jacobi/diagram.hpp"
#include "jacobi/semigroup.hpp"

namespace jacobi {

/// A 0-normalized semi-module over a two-generated numerical semigroup,
/// stored canonically by its co-gap set cogaps = Delta \ Gamma (the gaps of
/// Gamma that Delta fills in). Validation checks closure under adding p and
/// q, which is equivalent to Delta + Gamma contained in Delta.
class SemiModule {
public:
    SemiModule(Semigroup gamma, std::vector<i64> cogaps)
        : gamma_(std::move(gamma)), cogaps_(std::move(cogaps)) {
        std::sort(cogaps_.begin(), cogaps_.end());
        cogaps_.erase(std::unique(cogaps_.begin(), cogaps_.end()), cogaps_.end());
        for (i64 e : cogaps_) {
            if (gamma_.contains(e) || e < 0)
                throw std::invalid_argument("semimodule: " + std::to_string(e) +
                                            " is not a gap of the semigroup");
        }
        for (i64 e : cogaps_) {
            if (!contains(e + gamma_.p()))
                throw std::invalid_argument("semimodule: closure fails at " + std::to_string(e) +
                                            ": " + std::to_string(e + gamma_.p()) + " missing");
            if (!contains(e + gamma_.q()))
                throw std::invalid_argument("semimodule: closure fails at " + std::to_string(e) +
                                            ": " + std::to_string(e + gamma_.q()) + " missing");
        }
    }

    const Semigroup& semigroup() const { return gamma_; }
    const std::vector<i64>& cogaps() const { return cogaps_; }

    /// Membership in Delta.
    bool contains(i64 n) const {
        return gamma_.contains(n) ||
               std::binary_search(cogaps_.begin(), cogaps_.end(), n);
    }

    /// |Z>=0 \ Delta| = delta - |cogaps|.
    i64 gaps_count() const { return gamma_.delta() - static_cast<i64>(cogaps_.size()); }

    /// The p smallest elements of Delta, one per residue class mod p,
    /// in increasing order; always starts with 0.
    std::vector<i64> p_basis() const {
        const i64 p = gamma_.p();
        std::vector<i64> basis;
        for (i64 r = 0; r < p; ++r) {
            i64 n = r;
            while (!contains(n)) n += p;
            basis.push_back(n);
        }
        std::sort(basis.begin(), basis.end());
        return basis;
    }

    /// All integers y with y not in Delta and y+q in Delta; exactly q of
    /// them, possibly negative (but >= -q).
    std::vector<i64> q_cogenerators() const {
        const i64 q = gamma_.q();
        std::vector<i64> out;
        for (i64 y = -q; y < gamma_.p() * q; ++y)
            if (!contains(y) && contains(y + q)) out.push_back(y);
        if (static_cast<i64>(out.size()) != q)
            throw std::logic_error("semimodule: expected exactly q q-cogenerators");
        return out;
    }

    /// g(a) = |[a, a+q) \ Delta|, the number of q-cogenerators >= a.
    i64 g(i64 a) const {
        i64 count = 0;
        for (i64 n = a; n < a + gamma_.q(); ++n)
            if (!contains(n)) ++count;
        return count;
    }

    /// dim Delta = sum of g over the p-basis (the cell dimension).
    i64 dimension() const {
        i64 total = 0;
        for (i64 a : p_basis()) total += g(a);
        return total;
    }

    /// Same dimension by the independent route: the number of pairs
    /// (generator a_i, cogenerator b_j) with a_i < b_j.
    i64 dimension_via_pairs() const {
        i64 count = 0;
        for (i64 a : p_basis())
            for (i64 b : q_cogenerators())
                if (a < b) ++count;
        return count;
    }

    bool operator==(const SemiModule& o) const {
        return gamma_ == o.gamma_ && cogaps_ == o.cogaps_;
    }

private:
    Semigroup gamma_;
    std::vector<i64> cogaps_;
};

inline SemiModule validate(const Semigroup& gamma, std::vector<i64> cogaps) {
    return SemiModule(gamma, std::move(cogaps));
}

/// The diagram D(Delta): boxes of R+ whose labels lie in Delta \ Gamma.
inline YoungDiagram to_diagram(const SemiModule& sm) {
    const i64 p = sm.semigroup().p(), q = sm.semigroup().q();
    const auto& cogaps = sm.cogaps();
    auto is_cogap = [&](i64 v) {
        return std::binary_search(cogaps.begin(), cogaps.end(), v);
    };
    std::vector<i64> cols;
    i64 total = 0;
    for (i64 x = 1; x <= p; ++x) {
        i64 h = 0;
        while (h < q && is_cogap(label(p, q, {x, h + 1}))) ++h;
        // labels in a column decrease by p going up, so the cogap boxes of a
        // column are contiguous from the bottom; anything above must be absent
        for (i64 y = h + 1; y <= q; ++y)
            if (label(p, q, {x, y}) > 0 && is_cogap(label(p, q, {x, y})))
                throw std::logic_error("to_diagram: cogap boxes of a column are not contiguous");
        cols.push_back(h);
        total += h;
    }
    if (total != static_cast<i64>(cogaps.size()))
        throw std::logic_error("to_diagram: label set does not cover all cogaps");
    return YoungDiagram(std::move(cols));  // throws if not weakly decreasing
}

/// Inverse of to_diagram: the semi-module whose cogaps are the labels of D.
inline SemiModule from_diagram(const Semigroup& gamma, const YoungDiagram& d) {
    const i64 p = gamma.p(), q = gamma.q();
    const Staircase r = staircase(p, q);
    std::vector<i64> cogaps;
    for (const Box& c : d.boxes()) {
        if (!r.contains(c))
            throw std::invalid_argument("from_diagram: diagram is not contained in the staircase");
        cogaps.push_back(label(p, q, c));
    }
    return SemiModule(gamma, std::move(cogaps));
}

/// All 0-normalized semi-modules over Gamma, one per subdiagram of the
/// staircase, in the canonical subdiagram order.
inline std::vector<SemiModule> enumerate_semimodules(const Semigroup& gamma) {
    std::vector<SemiModule> out;
    for (const YoungDiagram& d :
         enumerate_subdiagrams(staircase(gamma.p(), gamma.q()).bound()))
        out.push_back(from_diagram(gamma, d));
    return out;
}

}  // namespace jacobi

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "jacobi/diagram.hpp"
#include "jacobi/semimodule.hpp"

namespace jacobi {

/// The dual diagram D'(Delta): columns are the values g(a_j) over the
/// p-basis, in basis order. The sequence is asserted weakly decreasing
/// rather than sorted, so any violation is loud.
inline YoungDiagram d_prime(const SemiModule& sm) {
    std::vector<i64> cols;
    for (i64 a : sm.p_basis()) cols.push_back(sm.g(a));
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (cols[i] > cols[i - 1])
            throw std::logic_error("d_prime: g-sequence over the p-basis is not weakly decreasing");
    YoungDiagram d(std::move(cols));
    if (d.area() != sm.dimension())
        throw std::logic_error("d_prime: area does not match the dimension");
    // must fit inside the staircase
    const Staircase r = staircase(sm.semigroup().p(), sm.semigroup().q());
    for (i64 x = 1; x <= d.num_columns(); ++x)
        if (d.column_height(x) > r.heights[static_cast<std::size_t>(x - 1)])
            throw std::logic_error("d_prime: diagram does not fit inside the staircase");
    return d;
}

/// G = D' after the diagram <-> semi-module bijection.
inline YoungDiagram g_map(const YoungDiagram& d, i64 p, i64 q) {
    return d_prime(from_diagram(Semigroup(p, q), d));
}

/// One collision witness: two distinct sources sharing an image.
struct GCollision {
    YoungDiagram source_a;
    YoungDiagram source_b;
    YoungDiagram image;
};

/// G applied to every subdiagram of the staircase, with collision detection.
struct GPermutation {
    i64 p = 0, q = 0;
    std::vector<std::pair<YoungDiagram, YoungDiagram>> pairs;
    std::vector<GCollision> collisions;

    bool bijective() const { return collisions.empty(); }

    /// Brute-force inverse, usable only when bijective.
    YoungDiagram invert(const YoungDiagram& image) const {
        for (const auto& [src, img] : pairs)
            if (img == image) return src;
        throw std::invalid_argument("GPermutation: image not found");
    }
};

inline GPermutation check_g_bijective(i64 p, i64 q) {
    GPermutation perm;
    perm.p = p;
    perm.q = q;
    std::map<YoungDiagram, YoungDiagram> seen;  // image -> first source
    for (const YoungDiagram& d : enumerate_subdiagrams(staircase(p, q).bound())) {
        YoungDiagram img = g_map(d, p, q);
        auto [it, fresh] = seen.emplace(img, d);
        if (!fresh) perm.collisions.push_back({it->second, d, img});
        perm.pairs.emplace_back(d, std::move(img));
    }
    return perm;
}

namespace detail {

/// Residue-order merge used by the (n,n+1) reconstruction. `order` holds
/// generator indices sorted by residue mod n; `window` gives the window index
/// of each generator; `g` the column of the input diagram per generator.
/// Comparison between window k and k+1 is direct: res(l) < res(j) iff
/// l < n - g[j]. Longer distances go through a witness in the window just
/// below the new generator's window.
struct ResidueMerge {
    i64 n;
    const std::vector<i64>& g;
    const std::vector<i64>& window;
    std::vector<i64> order;

    // res(l) < res(j) for l in window k+1, j in window k
    bool adj_less(i64 l, i64 j) const { return l < n - g[static_cast<std::size_t>(j)]; }

    // is res(b) > res(a), where b sits one window above everything merged so far
    bool greater(i64 b, i64 a, std::size_t pos_a) const {
        const i64 wb = window[static_cast<std::size_t>(b)];
        const i64 wa = window[static_cast<std::size_t>(a)];
        if (wa == wb) return a < b;  // same window: index order is residue order
        if (wa == wb - 1) return !adj_less(b, a);
        // witness in window wb-1 with residue strictly between res(a) and res(b)
        for (std::size_t i = pos_a + 1; i < order.size(); ++i) {
            const i64 c = order[i];
            if (window[static_cast<std::size_t>(c)] == wb - 1 && !adj_less(b, c)) return true;
        }
        return false;
    }

    void insert(i64 b) {
        std::size_t pos = 0;
        while (pos < order.size() && greater(b, order[pos], pos)) ++pos;
        // consistency: everything after pos must compare greater than b
        for (std::size_t i = pos; i < order.size(); ++i)
            if (greater(b, order[i], i))
                throw std::invalid_argument("not in image of G: residue order is inconsistent");
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), b);
    }
};

}  // namespace detail

/// Inverse of G for the pair (n, n+1), by the three-step reconstruction:
/// window counts from a bounce-style recursion, adjacent-window residue
/// comparisons, and a chained merge into a total residue order. Throws
/// "not in image of G" on any inconsistency; for inputs that actually arise
/// as G-images this never fires.
inline YoungDiagram reconstruct_nnp1(const YoungDiagram& dp, i64 n) {
    if (n < 1) throw std::invalid_argument("reconstruct_nnp1: n must be >= 1");
    if (n == 1) {  // the (1,2) staircase is empty
        if (!dp.empty()) throw std::invalid_argument("not in image of G: diagram too large");
        return YoungDiagram{};
    }

    // g-values by generator index: the columns of dp, padded with zeros
    std::vector<i64> g(static_cast<std::size_t>(n), 0);
    if (dp.num_columns() > n)
        throw std::invalid_argument("not in image of G: too many columns");
    for (i64 j = 0; j < dp.num_columns(); ++j)
        g[static_cast<std::size_t>(j)] = dp.column_height(j + 1);

    // Step 1: the number of generators in each window [kn, (k+1)n)
    std::vector<i64> window(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<i64>> windows;
    i64 placed = 0;
    while (placed < n) {
        const i64 m = n - g[static_cast<std::size_t>(placed)] - placed;
        if (m <= 0) throw std::invalid_argument("not in image of G: nonpositive window count");
        windows.emplace_back();
        for (i64 i = placed; i < placed + m && i < n; ++i) {
            window[static_cast<std::size_t>(i)] = static_cast<i64>(windows.size()) - 1;
            windows.back().push_back(i);
        }
        placed += m;
    }
    if (placed != n) throw std::invalid_argument("not in image of G: window counts overshoot");

    // Steps 2 and 3: merge windows into a total residue order
    detail::ResidueMerge merge{n, g, window, {}};
    for (const auto& w : windows)
        for (i64 idx : w) merge.insert(idx);

    // residues are exactly {0,...,n-1}; rank in the order is the residue
    std::vector<i64> value(static_cast<std::size_t>(n));
    for (i64 r = 0; r < n; ++r) {
        const i64 idx = merge.order[static_cast<std::size_t>(r)];
        value[static_cast<std::size_t>(idx)] = window[static_cast<std::size_t>(idx)] * n + r;
    }
    if (value[0] != 0)
        throw std::invalid_argument("not in image of G: reconstructed basis does not start at 0");
    for (i64 i = 1; i < n; ++i)
        if (value[static_cast<std::size_t>(i)] <= value[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("not in image of G: reconstructed basis is not increasing");

    // generators -> semi-module -> diagram
    const Semigroup gnn(n, n + 1);
    std::vector<i64> cogaps;
    for (i64 a : value)
        for (i64 v = a; v <= gnn.frobenius(); v += n)
            if (!gnn.contains(v)) cogaps.push_back(v);
    YoungDiagram d;
    try {
        d = to_diagram(SemiModule(gnn, std::move(cogaps)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not in image of G: reconstructed generators do not span a semi-module");
    }
    if (g_map(d, n, n + 1) != dp)
        throw std::invalid_argument("not in image of G: round trip failed");
    return d;
}

}  // namespace jacobi

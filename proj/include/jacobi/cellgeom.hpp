#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "jacobi/diagram.hpp"
#include "jacobi/semimodule.hpp"

namespace jacobi {

/// A box together with the index (1, 2 or 3) of the part of the U- or
/// V-splitting it belongs to.
struct TaggedBox {
    Box box;
    int part = 0;
    bool operator==(const TaggedBox&) const = default;
    auto operator<=>(const TaggedBox&) const = default;
};

/// Executable certificate for the dimension formula on one diagram: the sets
/// U(D) and V(D) with their three-part splittings, and the explicit bijection
/// (phi1 on part 1, identity on part 2, phi3 on part 3).
struct CellCertificate {
    YoungDiagram diagram;
    std::vector<TaggedBox> u_boxes;
    std::vector<TaggedBox> v_boxes;
    std::vector<std::pair<Box, Box>> pairing;  // aligned with u_boxes
};

namespace detail {

inline void require_in_staircase(const YoungDiagram& d, i64 p, i64 q) {
    const Staircase r = staircase(p, q);
    for (i64 x = 1; x <= d.num_columns(); ++x)
        if (d.column_height(x) > (x <= p ? r.heights[static_cast<std::size_t>(x - 1)] : 0))
            throw std::invalid_argument("diagram is not contained in the staircase");
}

/// Label of the p-generator sitting in column x of R: the top box of the
/// column of D, or the box just below the column when it is empty.
inline i64 column_generator(const YoungDiagram& d, i64 p, i64 q, i64 x) {
    return label(p, q, {x, d.column_height(x)});
}

/// Label of the q-cogenerator sitting in row y of R: the leftmost box of the
/// row outside D.
inline i64 row_cogenerator(const YoungDiagram& d, i64 p, i64 q, i64 y) {
    return label(p, q, {d.row_width(y) + 1, y});
}

}  // namespace detail

/// The boxes counted by h_plus at slope p/q.
inline std::vector<Box> h_set(const YoungDiagram& d, i64 p, i64 q) {
    detail::require_in_staircase(d, p, q);
    std::vector<Box> out;
    for (const Box& c : d.boxes()) {
        const i64 a = arm(d, c), l = leg(d, c);
        if (a * q <= p * (l + 1) && (l == 0 || p * l < (a + 1) * q)) out.push_back(c);
    }
    return out;
}

/// V(D) = R+ \ h_set(D), tagged: part 1 is R+ \ D, part 2 are the boxes of D
/// with (a+1)q <= lp, part 3 those with aq > (l+1)p.
inline std::vector<TaggedBox> v_set(const YoungDiagram& d, i64 p, i64 q) {
    detail::require_in_staircase(d, p, q);
    const Staircase r = staircase(p, q);
    std::vector<TaggedBox> out;
    for (i64 x = 1; x <= p; ++x) {
        for (i64 y = 1; y <= r.heights[static_cast<std::size_t>(x - 1)]; ++y) {
            const Box c{x, y};
            if (!d.contains(c)) {
                out.push_back({c, 1});
                continue;
            }
            const i64 a = arm(d, c), l = leg(d, c);
            if ((a + 1) * q <= l * p)
                out.push_back({c, 2});
            else if (a * q > (l + 1) * p)
                out.push_back({c, 3});
            // otherwise c is in the h-set
        }
    }
    return out;
}

/// U(D), computed by the arm/leg inequalities and cross-checked against the
/// generator/cogenerator pair rule; the two characterizations must agree.
/// Part 1: boxes of R \ D with aq >= yp; part 2 = U cap D; part 3 the rest.
inline std::vector<TaggedBox> u_set(const YoungDiagram& d, i64 p, i64 q) {
    detail::require_in_staircase(d, p, q);
    std::vector<TaggedBox> out;
    for (i64 x = 1; x <= p; ++x) {
        for (i64 y = 1; y <= q; ++y) {
            const Box c{x, y};
            const bool by_pairs =
                detail::column_generator(d, p, q, x) < detail::row_cogenerator(d, p, q, y);
            bool in_u = false;
            int part = 0;
            if (d.contains(c)) {
                const i64 a = arm(d, c), l = leg(d, c);
                in_u = (a + 1) * q <= l * p;
                part = 2;
            } else {
                const i64 a = ext_arm(d, c), l = ext_leg(d, c);
                in_u = a * q > (l + 1) * p;
                part = a * q >= y * p ? 1 : 3;
            }
            if (in_u != by_pairs)
                throw std::logic_error("u_set: arm/leg rule and pair rule disagree at box (" +
                                       std::to_string(x) + "," + std::to_string(y) + ")");
            if (in_u) out.push_back({c, part});
        }
    }
    return out;
}

/// Row reversal of R \ D: (x,y) -> (p - a(c), y). An involution; it maps
/// part 1 of U onto part 1 of V.
inline Box phi1(const YoungDiagram& d, i64 p, i64 q, const Box& c) {
    if (c.x < 1 || c.x > p || c.y < 1 || c.y > q)
        throw std::invalid_argument("phi1: box outside the rectangle");
    if (d.contains(c)) throw std::invalid_argument("phi1: box lies in the diagram");
    return {p - ext_arm(d, c), c.y};
}

/// phi3 drops a box of U part 3 by m(c) = floor(a(c)q/p) rows, landing in D
/// with the same arm; the companion function inverts it.
inline Box phi3(const YoungDiagram& d, i64 p, i64 q, const Box& c) {
    if (d.contains(c)) throw std::invalid_argument("phi3: box lies in the diagram");
    const i64 a = ext_arm(d, c), l = ext_leg(d, c);
    if (!((l + 1) * p < a * q && a * q < c.y * p))
        throw std::invalid_argument("phi3: box is not in part 3 of U");
    if (a * q % p == 0) throw std::logic_error("phi3: a(c)q/p is an integer");
    const i64 m = a * q / p;
    const i64 yp = c.y - m;
    const i64 xp = d.row_width(yp) - a;
    const Box cp{xp, yp};
    if (!d.contains(cp) || arm(d, cp) != a)
        throw std::logic_error("phi3: image box is not in the diagram with matching arm");
    return cp;
}

inline Box phi3_inverse(const YoungDiagram& d, i64 p, i64 q, const Box& cp) {
    if (!d.contains(cp)) throw std::invalid_argument("phi3_inverse: box not in the diagram");
    const i64 a = arm(d, cp), l = leg(d, cp);
    if (!(a * q > (l + 1) * p))
        throw std::invalid_argument("phi3_inverse: box is not in part 3 of V");
    if (a * q % p == 0) throw std::logic_error("phi3_inverse: a(c)q/p is an integer");
    const i64 m = a * q / p;
    const i64 y = cp.y + m;
    const Box c{d.row_width(y) + 1 + a, y};
    if (d.contains(c) || ext_arm(d, c) != a)
        throw std::logic_error("phi3_inverse: preimage box inconsistent");
    return c;
}

/// Assemble the full certificate for one diagram. Any internal assertion
/// failure indicates an implementation bug, not bad input.
inline CellCertificate certify(const YoungDiagram& d, i64 p, i64 q) {
    CellCertificate cert;
    cert.diagram = d;
    cert.u_boxes = u_set(d, p, q);
    cert.v_boxes = v_set(d, p, q);

    std::map<Box, int> v_parts;
    for (const TaggedBox& t : cert.v_boxes) v_parts[t.box] = t.part;

    std::map<Box, Box> used;  // image -> source, for injectivity
    for (const TaggedBox& t : cert.u_boxes) {
        Box image;
        switch (t.part) {
            case 1: image = phi1(d, p, q, t.box); break;
            case 2: image = t.box; break;
            case 3: image = phi3(d, p, q, t.box); break;
            default: throw std::logic_error("certify: bad part tag");
        }
        auto it = v_parts.find(image);
        if (it == v_parts.end() || it->second != t.part)
            throw std::logic_error("certify: image of U box (" + std::to_string(t.box.x) + "," +
                                   std::to_string(t.box.y) + ") is not in the matching V part");
        if (!used.emplace(image, t.box).second)
            throw std::logic_error("certify: pairing is not injective");
        cert.pairing.emplace_back(t.box, image);
    }
    if (cert.u_boxes.size() != cert.v_boxes.size())
        throw std::logic_error("certify: |U| != |V|");

    const Semigroup gamma(p, q);
    const SemiModule sm = from_diagram(gamma, d);
    if (static_cast<i64>(cert.u_boxes.size()) != sm.dimension())
        throw std::logic_error("certify: |U| != dim of the semi-module");
    if (static_cast<i64>(cert.v_boxes.size()) != gamma.delta() - h_plus(d, p, q))
        throw std::logic_error("certify: |V| != delta - h_plus");
    return cert;
}

}  // namespace jacobi

#pragma once

#include <json.hpp>

#include "jacobi/cellgeom.hpp"
#include "jacobi/gmap.hpp"
#include "jacobi/laurent.hpp"

namespace jacobi {

/// JSON shapes used by the CLI. Boxes serialize as [x,y] pairs, diagrams as
/// arrays of column heights, polynomials as {"terms":[[e1,e2,coeff],...]} in
/// the text rendering order.

inline nlohmann::json to_json(const YoungDiagram& d) {
    return nlohmann::json(d.columns());
}

inline nlohmann::json to_json(const Box& b) { return nlohmann::json::array({b.x, b.y}); }

inline nlohmann::json to_json(const LaurentBivariate& poly) {
    std::vector<std::pair<LaurentBivariate::Exponents, i64>> sorted(poly.terms().begin(),
                                                                    poly.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : sorted) terms.push_back({e.first, e.second, c});
    return nlohmann::json{{"variables", poly.variables()}, {"terms", terms}};
}

inline nlohmann::json to_json(const CellCertificate& cert) {
    nlohmann::json u = nlohmann::json::array(), v = nlohmann::json::array(),
                   pairing = nlohmann::json::array();
    for (const TaggedBox& t : cert.u_boxes)
        u.push_back({{"box", to_json(t.box)}, {"part", t.part}});
    for (const TaggedBox& t : cert.v_boxes)
        v.push_back({{"box", to_json(t.box)}, {"part", t.part}});
    for (const auto& [a, b] : cert.pairing) pairing.push_back({to_json(a), to_json(b)});
    return nlohmann::json{{"diagram", to_json(cert.diagram)},
                          {"U", u},
                          {"V", v},
                          {"pairing", pairing}};
}

inline nlohmann::json to_json(const GPermutation& perm) {
    nlohmann::json pairs = nlohmann::json::array(), collisions = nlohmann::json::array();
    for (const auto& [src, img] : perm.pairs) pairs.push_back({to_json(src), to_json(img)});
    for (const GCollision& c : perm.collisions)
        collisions.push_back({{"source_a", to_json(c.source_a)},
                              {"source_b", to_json(c.source_b)},
                              {"image", to_json(c.image)}});
    return nlohmann::json{
        {"p", perm.p}, {"q", perm.q}, {"pairs", pairs}, {"collisions", collisions}};
}

}  // namespace jacobi

// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must be the path to the jacobi-cells binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "jacobi/cellgeom.hpp"
#include "jacobi/gmap.hpp"
#include "jacobi/qtpoly.hpp"

using namespace jacobi;

namespace {

std::string g_cli;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

std::string run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Failure("cannot run " + cmd);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    if (pclose(pipe) != 0) throw Failure("nonzero exit from " + cmd);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<i64, i64>> coprime_pairs(i64 bound) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 p = 2; p + 2 <= bound; ++p)
        for (i64 q = 2; p + q <= bound; ++q)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

// 1. The full semi-module catalog for p=3, q=4 through the command line
// tool, byte for byte, in under a second.
void criterion_catalog_3_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string out = run_cli("enumerate 3 4");
    const double dt = seconds_since(t0);
    const std::string expected =
        "# semi-modules over <3,4>: 5\n"
        "cogaps   D      p-generators  q-cogenerators  D'     dim  gaps\n"
        "{}       ()     (0,4,8)       (-4,-1,2,5)     (2,1)  3    3\n"
        "{5}      (1)    (0,4,5)       (-4,-1,1,2)     (2)    2    2\n"
        "{2,5}    (2)    (0,2,4)       (-4,-2,-1,1)    (1)    1    1\n"
        "{1,5}    (1,1)  (0,1,5)       (-4,-3,-1,2)    (1,1)  2    1\n"
        "{1,2,5}  (2,1)  (0,1,2)       (-4,-3,-2,-1)   ()     0    0\n";
    if (out != expected)
        throw Failure("catalog output differs:\n--- got ---\n" + out + "--- want ---\n" + expected);
    require(dt < 1.0, "catalog took " + std::to_string(dt) + "s, limit 1s");
}

// 2. The worked example p=5, q=7, Delta = Z>=0 \ {1,2,3,4,6,9}: cogaps,
// diagram, p-basis, q-cogenerators, window counts and dimension by every
// route.
void criterion_worked_example_5_7() {
    const Semigroup gamma(5, 7);
    require(gamma.gaps() == std::vector<i64>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23},
            "gap set of <5,7>");
    require(gamma.delta() == 12, "delta of <5,7>");

    const SemiModule sm(gamma, {8, 11, 13, 16, 18, 23});
    const YoungDiagram d = to_diagram(sm);
    require(d == YoungDiagram({4, 2}), "diagram of the worked example");
    require(sm.p_basis() == std::vector<i64>{0, 7, 8, 11, 14}, "p-basis");
    require(sm.q_cogenerators() == std::vector<i64>{-7, -2, 1, 3, 4, 6, 9}, "q-cogenerators");
    const std::array<i64, 5> gv{5, 1, 1, 0, 0};
    const auto basis = sm.p_basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        require(sm.g(basis[i]) == gv[i], "window count at basis element");
    require(sm.dimension() == 7, "dimension via window counts");
    require(sm.dimension_via_pairs() == 7, "dimension via generator/cogenerator pairs");
    require(gamma.delta() - h_plus(d, 5, 7) == 7, "dimension via delta - h^+");
    require(static_cast<i64>(certify(d, 5, 7).u_boxes.size()) == 7, "dimension via |U|");
    require(d_prime(sm) == YoungDiagram({5, 1, 1}), "dual diagram");
}

// 3. All dimension formulas agree on every semi-module with p+q <= 14,
// in under two minutes.
void criterion_dimension_formulas() {
    const auto t0 = std::chrono::steady_clock::now();
    for (auto [p, q] : coprime_pairs(14)) {
        const Semigroup gamma(p, q);
        for (const SemiModule& sm : enumerate_semimodules(gamma)) {
            const YoungDiagram d = to_diagram(sm);
            const i64 dim = sm.dimension();
            require(dim == sm.dimension_via_pairs(),
                    "pair formula differs at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " D=" + d.to_string());
            require(dim == gamma.delta() - h_plus(d, p, q),
                    "h^+ formula differs at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " D=" + d.to_string());
            require(dim == static_cast<i64>(certify(d, p, q).u_boxes.size()),
                    "|U| differs at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " D=" + d.to_string());
        }
    }
    const double dt = seconds_since(t0);
    require(dt < 120.0, "sweep took " + std::to_string(dt) + "s, limit 120s");
}

// 4. The U/V decomposition of the p=5, q=6 example with D = (3,3): the
// parts have sizes (4,1,1) with the expected boxes, and the three matching
// maps behave as stated.
void criterion_uv_example_5_6() {
    const YoungDiagram d({3, 3});
    const auto u = u_set(d, 5, 6);
    const auto v = v_set(d, 5, 6);
    auto part = [](const std::vector<TaggedBox>& boxes, int k) {
        std::set<Box> s;
        for (const TaggedBox& t : boxes)
            if (t.part == k) s.insert(t.box);
        return s;
    };
    require(part(u, 1) == std::set<Box>{{4, 1}, {5, 1}, {5, 2}, {5, 4}}, "U part 1");
    require(part(u, 2) == std::set<Box>{{2, 1}}, "U part 2");
    require(part(u, 3) == std::set<Box>{{2, 4}}, "U part 3");
    require(part(v, 1).size() == 4, "V part 1 size");
    require(part(v, 2) == std::set<Box>{{2, 1}}, "V part 2");
    require(part(v, 3) == std::set<Box>{{1, 3}}, "V part 3");

    for (i64 x = 1; x <= 5; ++x)
        for (i64 y = 1; y <= 6; ++y)
            if (!d.contains({x, y})) {
                const Box img = phi1(d, 5, 6, {x, y});
                require(img.y == y && phi1(d, 5, 6, img) == Box{x, y},
                        "row reversal is not an involution");
            }
    require(phi3(d, 5, 6, {2, 4}) == Box{1, 3}, "part-3 map image");
    require(phi3_inverse(d, 5, 6, {1, 3}) == Box{2, 4}, "part-3 map inverse");
    certify(d, 5, 6);  // throws if the pairing is not a bijection
}

// 5. The dual-diagram transfer map permutes the staircase subdiagrams for
// every p+q <= 14, and preserves the area generating function.
void criterion_transfer_bijective() {
    for (auto [p, q] : coprime_pairs(14)) {
        const GPermutation perm = check_g_bijective(p, q);
        require(perm.bijective(), "transfer map collides at p=" + std::to_string(p) + " q=" +
                                      std::to_string(q));
        std::map<i64, i64> image_areas, source_areas;
        for (const auto& [src, img] : perm.pairs) {
            ++image_areas[img.area()];
            ++source_areas[src.area()];
        }
        require(image_areas == source_areas,
                "area generating function changes at p=" + std::to_string(p) + " q=" +
                    std::to_string(q));
    }
}

// 6. The direct reconstruction inverts the transfer map for every pair
// (n, n+1) with n <= 7, and rejects diagrams outside the image.
void criterion_reconstruction() {
    require(reconstruct_nnp1(YoungDiagram{}, 1) == YoungDiagram{}, "n=1 reconstruction");
    for (i64 n = 2; n <= 7; ++n) {
        const GPermutation perm = check_g_bijective(n, n + 1);
        for (const auto& [src, img] : perm.pairs)
            require(reconstruct_nnp1(img, n) == src,
                    "reconstruction misses " + img.to_string() + " at n=" + std::to_string(n));
    }
    for (const YoungDiagram& bad : {YoungDiagram({5, 5}), YoungDiagram({1, 1, 1, 1})}) {
        bool threw = false;
        try {
            reconstruct_nnp1(bad, 3);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        require(threw, "diagram outside the image was accepted: " + bad.to_string());
    }
}

// 7. q,t-Catalan identities for n <= 8 in under a minute: symmetry, the
// Gaussian binomial specialization, the Catalan specialization and the
// bigraded semi-module sum.
void criterion_catalan_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    const i64 catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (i64 n = 1; n <= 8; ++n) {
        const auto c = qt_catalan(n);
        require(c == c.substitute(0, 1, 1, 0), "q,t-symmetry fails at n=" + std::to_string(n));
        const auto lhs = LaurentBivariate::monomial(n * (n - 1) / 2, 0) *
                         c.substitute(1, 0, -1, 0) * q_integer(n + 1);
        require(lhs == q_binomial(2 * n, n),
                "Gaussian binomial specialization fails at n=" + std::to_string(n));
        require(c.evaluate(1, 1) == catalan[n], "Catalan number fails at n=" + std::to_string(n));
        const auto rhs = LaurentBivariate::monomial(n * (n - 1) / 2, 0) *
                         c.substitute(-1, 0, 0, 1);
        require(bigraded_semimodule_sum(n) == rhs,
                "bigraded sum fails at n=" + std::to_string(n));
    }
    const double dt = seconds_since(t0);
    require(dt < 60.0, "identities took " + std::to_string(dt) + "s, limit 60s");
}

// 8. Poincare polynomials: the p=3, q=4 value, the q,t-Catalan
// specialization for (n, n+1) with n <= 8, and the point count for every
// p+q <= 16.
void criterion_poincare() {
    require(poincare(3, 4).to_text() == "1 + t^2 + 2*t^4 + t^6", "Poincare polynomial of (3,4)");
    for (i64 n = 2; n <= 8; ++n) {
        const auto rhs = LaurentBivariate::monomial(0, n * (n - 1)) *
                         qt_catalan(n).substitute(0, -2, 0, 0);
        require(poincare(n, n + 1) == rhs,
                "Catalan specialization fails at n=" + std::to_string(n));
    }
    for (auto [p, q] : coprime_pairs(16)) {
        const auto poin = poincare(p, q);
        require(poin == area_generating(p, q),
                "area generating function differs at p=" + std::to_string(p) + " q=" +
                    std::to_string(q));
        require(poin.evaluate(1, 1) == rational_catalan_count(p, q),
                "cell count differs at p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
}

// 9. Torus-fixed-point consistency for p+q <= 12: the number of positive
// tangent weights at a fixed point equals |D| + h^+(D), and the colength
// strata polynomials count every cell once.
void criterion_torus_weights() {
    for (auto [p, q] : coprime_pairs(12)) {
        i64 total = 0;
        for (const auto& d : enumerate_subdiagrams(staircase(p, q).bound())) {
            require(d.area() + h_plus(d, p, q) == positive_weight_count(d, p, q),
                    "weight count differs at p=" + std::to_string(p) + " q=" +
                        std::to_string(q) + " D=" + d.to_string());
            ++total;
        }
        i64 at_one = 0;
        for (i64 h = 0; h <= (p - 1) * (q - 1) / 2; ++h)
            at_one += hilbert_cell_poly(p, q, h).evaluate(1, 1);
        require(at_one == total, "stratum polynomials miss cells at p=" + std::to_string(p) +
                                     " q=" + std::to_string(q));
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-jacobi-cells>\n";
        return 2;
    }
    g_cli = argv[1];

    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"semi-module catalog for (3,4) via the command line tool", criterion_catalog_3_4},
        {"worked example p=5 q=7", criterion_worked_example_5_7},
        {"dimension formulas agree for all p+q <= 14", criterion_dimension_formulas},
        {"U/V decomposition and matching maps for p=5 q=6, D=(3,3)", criterion_uv_example_5_6},
        {"transfer map is an area-preserving bijection for all p+q <= 14",
         criterion_transfer_bijective},
        {"direct reconstruction inverts the transfer map for n <= 7", criterion_reconstruction},
        {"q,t-Catalan identities for n <= 8", criterion_catalan_identities},
        {"Poincare polynomials and cell counts for all p+q <= 16", criterion_poincare},
        {"torus weight consistency for all p+q <= 12", criterion_torus_weights},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        try {
            fn();
            std::cout << "PASS: " << name << "\n";
        } catch (const std::exception& e) {
            std::cout << "FAIL: " << name << " (" << e.what() << ")\n";
            ++failures;
        }
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}

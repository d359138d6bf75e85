// Command line surface for the Jacobi-factor cell combinatorics library:
// semi-module enumeration dumps, polynomial reports, and the exhaustive
// verification suites.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "jacobi/cellgeom.hpp"
#include "jacobi/gmap.hpp"
#include "jacobi/json.hpp"
#include "jacobi/qtpoly.hpp"

using namespace jacobi;

namespace {

constexpr const char* kSchema = "jacobi-cells/1";

std::string list_str(const std::vector<i64>& v, char open = '(', char close = ')') {
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + close;
}

struct Record {
    std::vector<i64> cogaps, basis, cogenerators;
    YoungDiagram diagram, dual;
    i64 dim = 0, gaps = 0;
};

/// One record per semi-module: p-generator tuples descending
/// lexicographically, so Delta = Gamma comes first and Delta = Z>=0 last.
std::vector<Record> enumerate_records(i64 p, i64 q) {
    std::vector<Record> records;
    for (const SemiModule& sm : enumerate_semimodules(Semigroup(p, q))) {
        Record r;
        r.cogaps = sm.cogaps();
        r.basis = sm.p_basis();
        r.cogenerators = sm.q_cogenerators();
        r.diagram = to_diagram(sm);
        r.dual = d_prime(sm);
        r.dim = sm.dimension();
        r.gaps = sm.gaps_count();
        records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(),
              [](const Record& a, const Record& b) { return a.basis > b.basis; });
    return records;
}

void print_enumerate(std::ostream& os, i64 p, i64 q, const std::string& format) {
    const auto records = enumerate_records(p, q);
    if (format == "table") {
        std::vector<std::array<std::string, 7>> rows;
        rows.push_back({"cogaps", "D", "p-generators", "q-cogenerators", "D'", "dim", "gaps"});
        for (const auto& r : records)
            rows.push_back({list_str(r.cogaps, '{', '}'), r.diagram.to_string(),
                            list_str(r.basis), list_str(r.cogenerators), r.dual.to_string(),
                            std::to_string(r.dim), std::to_string(r.gaps)});
        std::array<std::size_t, 7> width{};
        for (const auto& row : rows)
            for (std::size_t i = 0; i < 7; ++i) width[i] = std::max(width[i], row[i].size());
        os << "# semi-modules over <" << p << "," << q << ">: " << records.size() << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < 7; ++i) {
                os << row[i];
                if (i + 1 < 7) os << std::string(width[i] - row[i].size() + 2, ' ');
            }
            os << "\n";
        }
    } else if (format == "json") {
        nlohmann::json out{{"schema", kSchema},
                           {"p", p},
                           {"q", q},
                           {"count", records.size()}};
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : records)
            list.push_back({{"cogaps", r.cogaps},
                            {"p_generators", r.basis},
                            {"q_cogenerators", r.cogenerators},
                            {"diagram", to_json(r.diagram)},
                            {"dual_diagram", to_json(r.dual)},
                            {"dim", r.dim},
                            {"gaps", r.gaps}});
        out["semimodules"] = std::move(list);
        os << out.dump(2) << "\n";
    } else {  // csv
        os << "cogaps,diagram,p_generators,q_cogenerators,dual_diagram,dim,gaps\n";
        for (const auto& r : records)
            os << "\"" << list_str(r.cogaps, '{', '}') << "\",\"" << r.diagram.to_string()
               << "\",\"" << list_str(r.basis) << "\",\"" << list_str(r.cogenerators)
               << "\",\"" << r.dual.to_string() << "\"," << r.dim << "," << r.gaps << "\n";
    }
}

std::vector<std::pair<i64, i64>> coprime_pairs(i64 bound) {
    std::vector<std::pair<i64, i64>> pairs;
    for (i64 p = 2; p + 2 <= bound; ++p)
        for (i64 q = 2; p + q <= bound; ++q)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    return pairs;
}

struct VerifyResult {
    std::string line;
    bool pass = true;
};

VerifyResult verify_dim_pair(i64 p, i64 q) {
    std::ostringstream os;
    bool pass = true;
    i64 count = 0;
    try {
        const Semigroup gamma(p, q);
        for (const SemiModule& sm : enumerate_semimodules(gamma)) {
            const YoungDiagram d = to_diagram(sm);
            const i64 dim = sm.dimension();
            const CellCertificate cert = certify(d, p, q);  // checks |U|, |V|, phi maps
            if (dim != sm.dimension_via_pairs() || dim != gamma.delta() - h_plus(d, p, q) ||
                dim != static_cast<i64>(cert.u_boxes.size())) {
                os << "  counterexample: D=" << d.to_string() << "\n";
                pass = false;
            }
            ++count;
        }
    } catch (const std::exception& e) {
        os << "  error: " << e.what() << "\n";
        pass = false;
    }
    std::ostringstream head;
    head << "dim " << p << " " << q << ": " << (pass ? "PASS" : "FAIL") << " (" << count
         << " semi-modules)\n"
         << os.str();
    return {head.str(), pass};
}

VerifyResult verify_uv_pair(i64 p, i64 q) {
    std::ostringstream os;
    bool pass = true;
    i64 count = 0;
    try {
        for (const YoungDiagram& d : enumerate_subdiagrams(staircase(p, q).bound())) {
            certify(d, p, q);
            // phi1 is an involution on the whole rectangle complement
            for (i64 x = 1; x <= p; ++x)
                for (i64 y = 1; y <= q; ++y)
                    if (!d.contains({x, y}) &&
                        phi1(d, p, q, phi1(d, p, q, {x, y})) != Box{x, y})
                        throw std::logic_error("phi1 is not an involution");
            ++count;
        }
    } catch (const std::exception& e) {
        os << "  error: " << e.what() << "\n";
        pass = false;
    }
    std::ostringstream head;
    head << "uv " << p << " " << q << ": " << (pass ? "PASS" : "FAIL") << " (" << count
         << " diagrams)\n"
         << os.str();
    return {head.str(), pass};
}

VerifyResult verify_gmap_pair(i64 p, i64 q) {
    std::ostringstream os;
    bool pass = true;
    try {
        const GPermutation perm = check_g_bijective(p, q);
        for (const GCollision& c : perm.collisions) {
            os << "  Conjecture counterexample: " << c.source_a.to_string() << " and "
               << c.source_b.to_string() << " both map to " << c.image.to_string() << "\n";
            pass = false;
        }
        std::map<i64, i64> image_areas, source_areas;
        for (const auto& [src, img] : perm.pairs) {
            ++image_areas[img.area()];
            ++source_areas[src.area()];
        }
        if (image_areas != source_areas) {
            os << "  generating function identity fails\n";
            pass = false;
        }
        if (q == p + 1) {
            for (const auto& [src, img] : perm.pairs)
                if (reconstruct_nnp1(img, p) != src) {
                    os << "  reconstruction fails on " << img.to_string() << "\n";
                    pass = false;
                }
        }
        std::ostringstream head;
        head << "gmap " << p << " " << q << ": " << (pass ? "PASS" : "FAIL") << " ("
             << perm.pairs.size() << " diagrams)\n"
             << os.str();
        return {head.str(), pass};
    } catch (const std::exception& e) {
        return {"gmap " + std::to_string(p) + " " + std::to_string(q) + ": FAIL\n  error: " +
                    e.what() + "\n",
                false};
    }
}

VerifyResult verify_catalan_n(i64 n) {
    std::ostringstream os;
    bool pass = true;
    try {
        const auto c = qt_catalan(n);
        if (c != c.substitute(0, 1, 1, 0)) {
            os << "  q,t-symmetry fails\n";
            pass = false;
        }
        const auto lhs = LaurentBivariate::monomial(n * (n - 1) / 2, 0) *
                         c.substitute(1, 0, -1, 0) * q_integer(n + 1);
        if (lhs != q_binomial(2 * n, n)) {
            os << "  Gaussian binomial specialization fails\n";
            pass = false;
        }
        if (c.evaluate(1, 1) != rational_catalan_count(n, n + 1)) {
            os << "  Catalan number specialization fails\n";
            pass = false;
        }
        const auto rhs = LaurentBivariate::monomial(n * (n - 1) / 2, 0) *
                         c.substitute(-1, 0, 0, 1);
        if (bigraded_semimodule_sum(n) != rhs) {
            os << "  bigraded semi-module identity fails\n";
            pass = false;
        }
    } catch (const std::exception& e) {
        os << "  error: " << e.what() << "\n";
        pass = false;
    }
    std::ostringstream head;
    head << "catalan n=" << n << ": " << (pass ? "PASS" : "FAIL") << "\n" << os.str();
    return {head.str(), pass};
}

int run_verify(const std::string& scope, i64 bound, i64 threads, std::ostream& os) {
    std::vector<std::function<VerifyResult()>> jobs;
    const bool all = scope == "all";
    if (all || scope == "dim")
        for (auto [p, q] : coprime_pairs(bound))
            jobs.push_back([p = p, q = q] { return verify_dim_pair(p, q); });
    if (all || scope == "uv")
        for (auto [p, q] : coprime_pairs(bound))
            jobs.push_back([p = p, q = q] { return verify_uv_pair(p, q); });
    if (all || scope == "gmap")
        for (auto [p, q] : coprime_pairs(bound))
            jobs.push_back([p = p, q = q] { return verify_gmap_pair(p, q); });
    if (scope == "catalan")
        for (i64 n = 1; n <= bound; ++n)
            jobs.push_back([n] { return verify_catalan_n(n); });
    if (all)  // with a p+q bound, check catalan up to the matching n
        for (i64 n = 1; 2 * n + 1 <= bound; ++n)
            jobs.push_back([n] { return verify_catalan_n(n); });

    std::vector<VerifyResult> results(jobs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (i64 t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++)
                    results[i] = jobs[i]();
            });
        for (auto& t : pool) t.join();
    }

    bool pass = true;
    for (const auto& r : results) {
        os << r.line;
        pass = pass && r.pass;
    }
    os << (pass ? "ALL PASS" : "FAILURES FOUND") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cell combinatorics of Jacobi factors of one-Puiseux-pair singularities"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    i64 p = 0, q = 0, n = 0, h = 0, bound = 14, threads = 1;
    std::string format = "table", scope;

    auto* cmd_enum = app.add_subcommand("enumerate", "list all semi-modules for a coprime pair");
    cmd_enum->add_option("p", p, "first generator")->required();
    cmd_enum->add_option("q", q, "second generator")->required();
    cmd_enum->add_option("--format", format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    auto* cmd_poin = app.add_subcommand("poincare", "Poincare polynomial of the Jacobi factor");
    cmd_poin->add_option("p", p, "first generator")->required();
    cmd_poin->add_option("q", q, "second generator")->required();

    auto* cmd_cat = app.add_subcommand("catalan", "q,t-Catalan polynomial");
    cmd_cat->add_option("n", n, "index n (pair (n,n+1))")->required()->check(CLI::PositiveNumber);

    auto* cmd_hilb = app.add_subcommand("hilbert", "virtual Poincare polynomial of the colength-h stratum");
    cmd_hilb->add_option("p", p, "first generator")->required();
    cmd_hilb->add_option("q", q, "second generator")->required();
    cmd_hilb->add_option("colength", h, "colength of the ideals in the stratum")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the exhaustive invariant suites");
    cmd_verify->add_option("scope", scope, "dim, uv, gmap, catalan or all")
        ->required()
        ->check(CLI::IsMember({"dim", "uv", "gmap", "catalan", "all"}));
    cmd_verify->add_option("bound", bound, "max p+q (max n for catalan); default 14");
    cmd_verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    try {
        if (*cmd_enum) {
            print_enumerate(os, p, q, format);
        } else if (*cmd_poin) {
            const auto poin = poincare(p, q);
            const auto area = area_generating(p, q);
            os << poin.to_text() << " | " << (poin == area ? "MATCH" : "MISMATCH") << "\n";
            if (poin != area) {
                os << "area generating function: " << area.to_text() << "\n";
                return 1;
            }
        } else if (*cmd_cat) {
            os << qt_catalan(n).to_text() << "\n";
        } else if (*cmd_hilb) {
            os << hilbert_cell_poly(p, q, h).to_text() << "\n";
        } else if (*cmd_verify) {
            return run_verify(scope, bound, threads, os);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

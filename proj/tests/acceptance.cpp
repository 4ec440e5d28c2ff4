// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure.  Heavier scans run threaded; everything is exact arithmetic.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "orbicert/enumerate.hpp"
#include "orbicert/json_io.hpp"
#include "orbicert/kform.hpp"
#include "orbicert/orbifold.hpp"
#include "orbicert/topology.hpp"

using namespace orbicert;

namespace {

int failures = 0;

void report(int criterion, bool pass, const char* what, double seconds) {
    std::printf("criterion %2d: %s  %s (%.2fs)\n", criterion, pass ? "PASS" : "FAIL", what,
                seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename F>
void run(int criterion, const char* what, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("criterion %2d: exception: %s\n", criterion, e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, pass, what, dt);
}

Mat random_signed_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    Mat m(n, n);
    for (int j = 0; j < n; ++j) m(p[j], j) = (rng() & 1) ? 1 : -1;
    return m;
}

FlatRep conjugated(const FlatRep& rep, const Mat& g) {
    FlatRep out;
    out.n = rep.n;
    Mat gi = g.transpose();
    for (const auto& [name, m] : rep.images) out.images.emplace(name, g * m * gi);
    return out;
}

std::vector<uint16_t> even_tokens(int n) {
    std::vector<uint16_t> out;
    for (uint16_t bits = 0; bits < (1u << n); ++bits)
        if (__builtin_popcount(bits) % 2 == 0) out.push_back(bits);
    return out;
}

int jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 4;
}

}  // namespace

int main() {
    run(1, "rank-7/21 splitting of 2-forms", [] {
        CayleyStructure cs = cayley_structure();
        Mat id = Mat::identity(28);
        bool ok = cs.projector7 + cs.projector21 == id;
        ok = ok && nullspace(cs.projector7 - id).dimension == 7;
        ok = ok && nullspace(cs.projector21 - id).dimension == 21;
        ok = ok && cs.s_matrix * cs.projector7 == cs.projector7.scaled(3);
        ok = ok && cs.s_matrix * cs.projector21 == cs.projector21.scaled(-1);
        return ok;
    });

    run(2, "self-duality and norm of the 4-form", [] {
        KForm om = cayley_form();
        KForm vol = KForm::monomial({1, 2, 3, 4, 5, 6, 7, 8});
        return hodge_star(om) == om && wedge(om, om) == vol.scaled(14);
    });

    run(3, "group presentation relations as affine identities", [] {
        auto checks = verify_relations();
        bool ok = !checks.empty();
        for (const auto& c : checks) ok = ok && c.holds;
        return ok;
    });

    run(4, "singular locus census counts", [] {
        FixedLocusCensus c = singular_locus_census();
        bool ok = c.strata.size() == 76 && c.count_type1 == 4 && c.count_type2 == 8 &&
                  c.count_type3 == 64;
        int alpha = 0, alphabeta = 0, gamma = 0;
        for (const auto& s : c.strata) {
            if (s.element == "alpha") alpha += (int)s.components.size();
            if (s.element == "alphabeta") {
                alphabeta += (int)s.components.size();
                ok = ok && s.components.size() == 4;
            }
            if (s.element == "gamma") ok = ok && s.components.size() == 8;
            if (s.element == "gamma") gamma += (int)s.components.size();
        }
        return ok && alpha == 16 && alphabeta == 256 && gamma == 16;
    });

    run(5, "enumeration counts SO(2)..SO(8)", [] {
        int j = jobs();
        OrbitCatalog so2 = enumerate_group(2, true, 1);
        bool ok = so2.certified.empty() && so2.reducible.size() == 24;
        OrbitCatalog so3 = enumerate_group(3, false, j);
        ok = ok && so3.certified.size() == 105 && so3.raw_certified == 630;
        ok = ok && enumerate_group(4, false, j).certified.size() == 882;
        ok = ok && enumerate_group(5, false, j).certified.size() == 1785;
        ok = ok && enumerate_group(7, false, j).certified.size() == 4095;
        ok = ok && enumerate_group(8, false, j).certified.size() == 16383;
        return ok;
    });

    run(6, "shipped catalog lists verify against the enumeration", [] {
        bool ok = true;
        for (int n : {3, 4}) {
            std::string path = "data/so" + std::to_string(n) + "_catalog.txt";
            std::ifstream in(path);
            if (!in) return false;
            std::ostringstream os;
            os << in.rdbuf();
            std::vector<std::string> errors;
            auto list = parse_token_list(os.str(), n, &errors);
            if (!errors.empty()) return false;
            AppendixReport rep = verify_appendix(list, n);
            ok = ok && rep.entries == (n == 3 ? 105u : 882u) && rep.ok();
        }
        return ok;
    });

    run(7, "no-go scans and the non-commuting family", [] {
        bool ok = nogo_scan(6).ok;
        for (int n : {9, 10, 11, 12}) {
            NogoReport r = nogo_scan(n);
            ok = ok && r.ok && r.invariant_plane_always;
        }
        for (int mask = 0; mask < 8; ++mask) {
            FlatRep rep = noncommutative_so3_example(mask & 4, mask & 2, mask & 1);
            ok = ok && validate(rep).empty();
            CertReport c = certify(rep);
            ok = ok && c.valid && c.h2 >= 1 && c.witness.has_value();
        }
        return ok;
    });

    run(8, "adjoint decomposition against the recursion oracle", [] {
        bool ok = true;
        for (int m = 0; 2 * m <= 16; ++m)
            for (int k = 0; 2 * m + k <= 16; ++k) {
                AdjointDecomposition d = adjoint_decomposition(ALEBundleSpec{m, k});
                // recursion: add [L] summands to R^k one at a time
                long long s0 = (long long)k * (k - 1) / 2, s1 = 0, s2 = 0, e0 = k, e1 = 0;
                for (int step = 0; step < m; ++step) {
                    s0 += 2 * e1 + 1;
                    s1 += e0;
                    s2 += e1;
                    e1 += 1;
                }
                long long n = 2 * m + k;
                ok = ok && d.s0 == s0 && d.s1 == s1 && d.s2 == s2;
                ok = ok && d.s0 + 2 * d.s1 + 2 * d.s2 == n * (n - 1) / 2;
            }
        return ok;
    });

    run(9, "gauge-invariance and witness-soundness property suites", [] {
        std::mt19937 rng(20240823);
        bool ok = true;
        for (int n : {3, 4}) {
            auto toks = even_tokens(n);
            for (int trial = 0; trial < 100; ++trial) {
                TokenTuple t;
                t.n = n;
                do {
                    for (auto& x : t.tok) x = toks[rng() % toks.size()];
                } while (!t.admissible());
                FlatRep rep = expand(t);
                CertReport base = certify(rep);
                ok = ok && base.valid;
                if (base.witness.has_value()) ok = ok && base.h2 >= 1;

                Mat g = random_signed_perm(n, rng);
                CertReport c = certify(conjugated(rep, g));
                ok = ok && c.h0 == base.h0 && c.h1 == base.h1 && c.h2 == base.h2;

                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                TokenTuple u;
                u.n = n;
                for (int k = 0; k < 5; ++k)
                    u.tok[k] = SignVector{n, t.tok[k]}.permuted(perm).bits;
                ok = ok && canonical_key(u) == canonical_key(t);
            }
        }
        return ok;
    });

    run(10, "gluing-data checks: catalog entries pass, mutations fail", [] {
        bool ok = true;
        auto with_specs = [](const FlatRep& rep) {
            GluingData data;
            data.rep = rep;
            for (int label = 73; label <= 76; ++label) {
                data.specs[label] =
                    ale_bundle_for(rep.image(label <= 74 ? "gamma" : "delta"));
                if (!data.specs[label].trivial()) data.charges[label] = 1;
            }
            return data;
        };
        OrbitCatalog cat = enumerate_group(3, false, jobs());
        for (const auto& rec : cat.certified) {
            GluingData data = with_specs(expand(rec.representative));
            ok = ok && check_compatible_gluing_data(data).ok;
        }

        // mutation 1: trivial bundle substituted where rho(delta) != 1
        TokenTuple t;
        t.n = 3;
        t.tok = {0, 0b011, 0b110, 0b011, 0b101};  // (1, c, a, c, b)
        GluingData m1 = with_specs(expand(t));
        m1.specs[75] = ALEBundleSpec{0, 3};
        ok = ok && !check_compatible_gluing_data(m1).ok;

        // mutation 2: valid rep with nontrivial point-stratum monodromy
        GluingData m2;
        m2.rep = FlatRep::trivial(3);
        Mat a(3, 3), swap(3, 3), r(3, 3);
        a(0, 0) = 1;
        a(1, 1) = a(2, 2) = -1;
        swap(0, 1) = swap(1, 0) = 1;
        swap(2, 2) = -1;
        r(0, 0) = r(1, 1) = -1;
        r(2, 2) = 1;
        m2.rep.images.at("alpha") = a;
        m2.rep.images.at("delta") = swap;
        m2.rep.images.at("tau3") = r;
        for (int label = 73; label <= 76; ++label) m2.specs[label] = ALEBundleSpec{0, 3};
        ok = ok && validate(m2.rep).empty();
        ok = ok && !check_compatible_gluing_data(m2).ok;

        // mutation 3: valid but non-rigid representation
        GluingData m3;
        m3.rep = FlatRep::trivial(3);
        m3.rep.images.at("alpha") = a;
        for (int label = 73; label <= 76; ++label) m3.specs[label] = ALEBundleSpec{0, 3};
        ok = ok && validate(m3.rep).empty();
        ok = ok && certify(m3.rep).h1 > 0;
        ok = ok && !check_compatible_gluing_data(m3).ok;
        return ok;
    });

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}

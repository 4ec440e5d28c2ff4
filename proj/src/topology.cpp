#include "orbicert/topology.hpp"

#include <stdexcept>

namespace orbicert {

ALEBundleSpec ale_bundle_for(const Mat& g) {
    const int n = g.rows();
    if (g.cols() != n) throw std::invalid_argument("ale_bundle_for: not square");
    int minus = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (g(i, j) != 0) throw std::invalid_argument("ale_bundle_for: not diagonal");
        }
        if (g(i, i) == -1) ++minus;
        else if (g(i, i) != 1) throw std::invalid_argument("ale_bundle_for: not an involution");
    }
    if (minus % 2 != 0) throw std::invalid_argument("ale_bundle_for: determinant -1");
    return ALEBundleSpec{minus / 2, n - minus};
}

AdjointDecomposition adjoint_decomposition(const ALEBundleSpec& spec) {
    // Weight multiset of E_C: +1 (m times), -1 (m times), 0 (k times).
    // Lambda^2 weights are pairwise sums over unordered pairs.
    const long long m = spec.m, k = spec.k;
    AdjointDecomposition d;
    d.s2 = m * (m - 1) / 2;        // (+1,+1) pairs; (-1,-1) pairs are conjugate
    d.s1 = m * k;                  // (+1,0) pairs
    d.s0 = m * m + k * (k - 1) / 2;  // (+1,-1) pairs and (0,0) pairs
    return d;
}

GluingCheck check_compatible_gluing_data(const GluingData& data) {
    GluingCheck out;
    auto fail = [&out](const std::string& msg) { out.failures.push_back(msg); };

    CertReport cert = certify(data.rep);
    if (!cert.valid) {
        fail("representation violates the group relations");
        return out;
    }
    if (!cert.rigid) fail("representation is not rigid (h1 > 0)");

    const Mat id = Mat::identity(data.rep.n);

    // Trivial monodromy at the strata without a glued bundle: exactly the
    // images the relations force trivial when rho(alpha) = rho(beta) = 1.
    if (data.rep.image("alpha") != id) fail("nontrivial monodromy: rho(alpha) != 1");
    if (data.rep.image("beta") != id) fail("nontrivial monodromy: rho(beta) != 1");
    for (const char* t : {"tau1", "tau2", "tau3"})
        if (data.rep.image(t) != id)
            fail(std::string("nontrivial stratum monodromy: rho(") + t + ") != 1");
    if (data.rep.image("tau5") * data.rep.image("tau6") != id)
        fail("nontrivial stratum monodromy: rho(tau5 tau6) != 1");
    if (data.rep.image("tau5") * data.rep.image("tau7") != id)
        fail("nontrivial stratum monodromy: rho(tau5 tau7) != 1");

    // Asymptotic holonomy match at the four-torus strata carrying a bundle.
    for (int label = 73; label <= 76; ++label) {
        auto it = data.specs.find(label);
        if (it == data.specs.end()) {
            fail("missing bundle spec for stratum " + std::to_string(label));
            continue;
        }
        const Mat& hol = data.rep.image(label <= 74 ? "gamma" : "delta");
        ALEBundleSpec expected;
        try {
            expected = ale_bundle_for(hol);
        } catch (const std::exception&) {
            fail("holonomy at stratum " + std::to_string(label) +
                 " is not a diagonal involution");
            continue;
        }
        if (it->second.n() != data.rep.n)
            fail("bundle rank mismatch at stratum " + std::to_string(label));
        else if (it->second.m != expected.m)
            fail("asymptotic holonomy mismatch at stratum " + std::to_string(label) +
                 ": spec gives " + std::to_string(2 * it->second.m) +
                 " sign flips, rho gives " + std::to_string(2 * expected.m));
        if (it->second.m > 0 && !data.charges.count(label))
            fail("missing charge for nontrivial spec at stratum " + std::to_string(label));
    }

    out.ok = out.failures.empty();
    return out;
}

PontryaginData p1_coefficients(const GluingData& data) {
    PontryaginData out;
    for (int label = 73; label <= 76; ++label) {
        auto it = data.specs.find(label);
        if (it == data.specs.end() || it->second.trivial()) {
            out.p1_coefficients[label] = 0;
            continue;
        }
        auto ch = data.charges.find(label);
        out.p1_coefficients[label] = ch == data.charges.end() ? Rat(0) : -ch->second;
    }
    out.p2 = 0;
    return out;
}

Rat index_value(const IndexInputs& in) {
    Rat topological = Rat(static_cast<long>(-in.dim_g)) *
                      Rat(static_cast<long>(in.b0 - in.b1 + in.b2_7));
    return topological + in.I_pp / 24 - (in.I_p2 - 2 * in.I_q) / 12;
}

}  // namespace orbicert

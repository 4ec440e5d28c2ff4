#include "orbicert/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbicert {

namespace {

Rat mod1(const Rat& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - Rat(fl);
}

}  // namespace

TorusAffineMap TorusAffineMap::compose(const TorusAffineMap& g) const {
    TorusAffineMap r;
    for (int i = 0; i < 8; ++i) {
        r.linear[i] = linear[i] * g.linear[i];
        r.translation[i] = Rat(linear[i]) * g.translation[i] + translation[i];
    }
    return r;
}

TorusAffineMap TorusAffineMap::inverse() const {
    TorusAffineMap r;
    for (int i = 0; i < 8; ++i) {
        r.linear[i] = linear[i];
        r.translation[i] = Rat(-linear[i]) * translation[i];
    }
    return r;
}

TorusAffineMap TorusAffineMap::reduce_mod_1() const {
    TorusAffineMap r = *this;
    for (auto& t : r.translation) t = mod1(t);
    return r;
}

bool TorusAffineMap::is_identity() const {
    for (int i = 0; i < 8; ++i)
        if (linear[i] != 1 || translation[i] != 0) return false;
    return true;
}

const std::array<std::string, 12> kGeneratorNames = {
    "alpha", "beta", "gamma", "delta",
    "tau1", "tau2", "tau3", "tau4", "tau5", "tau6", "tau7", "tau8"};

TorusAffineMap generator(const std::string& name) {
    TorusAffineMap m;
    const Rat h(1, 2);
    if (name == "alpha") {
        m.linear = {-1, -1, -1, -1, 1, 1, 1, 1};
    } else if (name == "beta") {
        m.linear = {1, 1, 1, 1, -1, -1, -1, -1};
    } else if (name == "gamma") {
        m.linear = {-1, -1, 1, 1, -1, -1, 1, 1};
        m.translation = {h, h, 0, 0, h, h, 0, 0};
    } else if (name == "delta") {
        m.linear = {-1, 1, -1, 1, -1, 1, -1, 1};
        m.translation = {0, 0, h, 0, h, 0, h, 0};
    } else if (name.size() == 4 && name.substr(0, 3) == "tau" && name[3] >= '1' && name[3] <= '8') {
        m.translation[name[3] - '1'] = 1;
    } else {
        throw std::invalid_argument("generator: unknown name " + name);
    }
    return m;
}

std::vector<RelationCheck> verify_relations() {
    std::vector<RelationCheck> out;
    auto gen = [](const std::string& s) { return generator(s); };
    auto comm = [](const TorusAffineMap& g, const TorusAffineMap& h) {
        return g.compose(h).compose(g.inverse()).compose(h.inverse());
    };
    auto check = [&out](const std::string& name, const TorusAffineMap& lhs,
                        const TorusAffineMap& rhs) {
        out.push_back({name, lhs == rhs});
    };
    const TorusAffineMap id = TorusAffineMap::identity();

    std::array<TorusAffineMap, 8> tau;
    for (int i = 0; i < 8; ++i) tau[i] = gen("tau" + std::to_string(i + 1));

    // 1. translations commute
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            check("[tau" + std::to_string(i + 1) + ",tau" + std::to_string(j + 1) + "]=1",
                  comm(tau[i], tau[j]), id);

    // 2. point generators are involutions
    for (const char* n : {"alpha", "beta", "gamma", "delta"})
        check(std::string(n) + "^2=1", gen(n).compose(gen(n)), id);

    // 3. commutators between point generators
    auto a = gen("alpha"), b = gen("beta"), c = gen("gamma"), d = gen("delta");
    check("[alpha,beta]=1", comm(a, b), id);
    check("[alpha,gamma]=tau2^-1 tau1^-1", comm(a, c),
          tau[1].inverse().compose(tau[0].inverse()));
    check("[alpha,delta]=tau3^-1", comm(a, d), tau[2].inverse());
    check("[beta,gamma]=tau6^-1 tau5^-1", comm(b, c),
          tau[5].inverse().compose(tau[4].inverse()));
    check("[beta,delta]=tau7^-1 tau5^-1", comm(b, d),
          tau[6].inverse().compose(tau[4].inverse()));
    check("[gamma,delta]=tau1", comm(c, d), tau[0]);

    // 4-7. conjugation of translations by point generators
    struct Family { const char* name; std::set<int> inverted; };
    const Family fams[] = {
        {"alpha", {1, 2, 3, 4}}, {"beta", {5, 6, 7, 8}},
        {"gamma", {1, 2, 5, 6}}, {"delta", {1, 3, 5, 7}}};
    for (const auto& f : fams) {
        TorusAffineMap g = gen(f.name);
        for (int i = 0; i < 8; ++i) {
            bool inv = f.inverted.count(i + 1) > 0;
            check(std::string(f.name) + " tau" + std::to_string(i + 1) +
                      (inv ? " inverted" : " centralized"),
                  g.compose(tau[i]).compose(g.inverse()),
                  inv ? tau[i].inverse() : tau[i]);
        }
    }
    return out;
}

std::vector<FixedComponent> fixed_point_components(const TorusAffineMap& g) {
    if (!g.compose(g).reduce_mod_1().is_identity())
        throw std::invalid_argument("fixed_point_components: not an involution on the torus");
    TorusAffineMap m = g.reduce_mod_1();
    std::vector<FixedComponent> comps;
    comps.emplace_back();
    for (int i = 0; i < 8; ++i) {
        if (m.linear[i] == 1) {
            if (m.translation[i] != 0) return {};  // translated circle: no fixed points
            for (auto& c : comps) c.free_coords.insert(i + 1);
        } else {
            // x = -x + t mod 1  =>  x in {t/2, t/2 + 1/2}
            Rat v0 = mod1(m.translation[i] / 2);
            Rat v1 = mod1(v0 + Rat(1, 2));
            std::vector<FixedComponent> next;
            next.reserve(comps.size() * 2);
            for (const auto& c : comps)
                for (const Rat& v : {v0, v1}) {
                    FixedComponent cc = c;
                    cc.fixed_coords[i + 1] = v;
                    next.push_back(std::move(cc));
                }
            comps = std::move(next);
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<TorusAffineMap> residual_group() {
    std::vector<TorusAffineMap> elems;
    for (int mask = 0; mask < 16; ++mask) {
        TorusAffineMap m = TorusAffineMap::identity();
        const char* names[4] = {"alpha", "beta", "gamma", "delta"};
        for (int k = 0; k < 4; ++k)
            if (mask & (1 << k)) m = m.compose(generator(names[k]));
        elems.push_back(m.reduce_mod_1());
    }
    return elems;
}

FixedComponent apply_to_component(const TorusAffineMap& g, const FixedComponent& c) {
    FixedComponent r;
    r.free_coords = c.free_coords;  // diagonal linear part: coordinates map to themselves
    TorusAffineMap m = g.reduce_mod_1();
    for (const auto& [k, v] : c.fixed_coords) {
        Rat red = Rat(m.linear[k - 1]) * v + m.translation[k - 1];
        while (red < 0) red += 1;
        while (red >= 1) red -= 1;
        r.fixed_coords[k] = red;
    }
    return r;
}

namespace {

std::vector<std::vector<FixedComponent>> orbits_of(const std::vector<FixedComponent>& comps) {
    const auto group = residual_group();
    std::set<FixedComponent> seen;
    std::vector<std::vector<FixedComponent>> orbits;
    for (const auto& c : comps) {
        if (seen.count(c)) continue;
        std::set<FixedComponent> orb;
        for (const auto& g : group) orb.insert(apply_to_component(g, c));
        for (const auto& o : orb) seen.insert(o);
        orbits.emplace_back(orb.begin(), orb.end());
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return orbits;
}

}  // namespace

FixedLocusCensus singular_locus_census() {
    FixedLocusCensus census;
    int label = 1;
    auto emit = [&](const std::string& elem, const TorusAffineMap& g, int type,
                    const std::string& model) {
        for (auto& orb : orbits_of(fixed_point_components(g))) {
            StratumRecord rec;
            rec.label = label++;
            rec.element = elem;
            rec.type = type;
            rec.neighbourhood = model;
            rec.components = std::move(orb);
            census.strata.push_back(std::move(rec));
            (type == 1 ? census.count_type1 : type == 2 ? census.count_type2
                                                        : census.count_type3)++;
        }
    };
    auto a = generator("alpha"), b = generator("beta");
    emit("alpha", a, 2, "T4/Z2 x B4/Z2");
    emit("beta", b, 2, "T4/Z2 x B4/Z2");
    emit("alphabeta", a.compose(b).reduce_mod_1(), 3, "B4/Z2 x B4/Z2");
    emit("gamma", generator("gamma"), 1, "T4 x B4/Z2");
    emit("delta", generator("delta"), 1, "T4 x B4/Z2");
    return census;
}

Mat holonomy_matrix(const TorusAffineMap& g) {
    Mat m(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = g.linear[i];
    return m;
}

Mat holonomy(const std::vector<std::string>& word) {
    TorusAffineMap m = TorusAffineMap::identity();
    for (const auto& w : word) m = m.compose(generator(w));
    return holonomy_matrix(m);
}

}  // namespace orbicert

#include "torsionkit/spaces.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>

namespace torsionkit {

SpaceId space_from_string(const std::string& s) {
    if (s == "P1" || s == "SU2/T") return SpaceId::P1;
    if (s == "P2") return SpaceId::P2;
    if (s == "P3") return SpaceId::P3;
    if (s == "Gr24" || s == "Gr(2,4)") return SpaceId::Gr24;
    if (s == "Flag3" || s == "SU3/T") return SpaceId::Flag3;
    throw std::domain_error("unsupported space: " + s);
}

namespace {

bool in_span(const QVec& root, const std::vector<int>& k_simple) {
    for (size_t i = 0; i < root.size(); ++i) {
        bool allowed = false;
        for (int j : k_simple)
            if (static_cast<size_t>(j) == i) allowed = true;
        if (!allowed && !root[i].is_zero()) return false;
    }
    return true;
}

HomogeneousSpace build(SpaceId id) {
    HomogeneousSpace s;
    switch (id) {
        case SpaceId::P1:
            s.name = "P1";
            s.G = &RootSystem::get(RSType::A1);
            s.k_simple = {};
            s.lambda = s.G->fundamental[0];
            s.symmetric = true;
            break;
        case SpaceId::P2:
            s.name = "P2";
            s.G = &RootSystem::get(RSType::A2);
            s.k_simple = {1};
            s.lambda = s.G->fundamental[0];
            s.symmetric = true;
            break;
        case SpaceId::P3:
            s.name = "P3";
            s.G = &RootSystem::get(RSType::A3);
            s.k_simple = {1, 2};
            s.lambda = s.G->fundamental[0];
            s.symmetric = true;
            break;
        case SpaceId::Gr24:
            s.name = "Gr24";
            s.G = &RootSystem::get(RSType::A3);
            s.k_simple = {0, 2};
            s.lambda = s.G->fundamental[1];
            s.symmetric = true;
            break;
        case SpaceId::Flag3:
            s.name = "Flag3";
            s.G = &RootSystem::get(RSType::A2);
            s.k_simple = {};
            s.lambda = qvec_add(s.G->fundamental[0], s.G->fundamental[1]);
            s.symmetric = false;
            break;
    }
    for (const auto& a : s.G->positive) {
        if (in_span(a, s.k_simple))
            s.sigma_k_pos.push_back(a);
        else
            s.psi.push_back(a);
    }
    s.rho_k = QVec(s.G->rank, Rational(0));
    for (const auto& a : s.sigma_k_pos) s.rho_k = qvec_add(s.rho_k, qvec_scale(Rational(1, 2), a));

    // positivity of the bundle and W_K-stability sanity checks
    for (const auto& a : s.psi)
        if (s.G->pair_co(a, s.lambda).sign() <= 0)
            throw std::domain_error("space catalogue: lambda is not Psi-positive");
    for (const auto& a : s.sigma_k_pos)
        if (!s.G->pair_co(a, s.lambda).is_zero())
            throw std::domain_error("space catalogue: lambda is not central for K");
    if (s.symmetric) {
        // [psi-span, psi-span] subset of Sigma_K-span: a + b is never in Psi
        std::set<std::string> psi_keys;
        auto key = [](const QVec& v) {
            std::string r;
            for (const auto& x : v) r += x.str() + ";";
            return r;
        };
        for (const auto& a : s.psi) psi_keys.insert(key(a));
        for (const auto& a : s.psi)
            for (const auto& b : s.psi)
                if (psi_keys.count(key(qvec_add(a, b))))
                    throw std::domain_error("space catalogue: symmetric flag is wrong");
    }

    // |W_K| = number of Weyl elements fixing the K-span pointwise? No:
    // the subgroup generated by the K-simple reflections; count by closure.
    {
        std::set<std::string> seen;
        auto mkey = [](const QMat& m) {
            std::string r;
            for (const auto& row : m)
                for (const auto& x : row) r += x.str() + ";";
            return r;
        };
        QMat id(s.G->rank, std::vector<Rational>(s.G->rank, Rational(0)));
        for (int i = 0; i < s.G->rank; ++i) id[i][i] = Rational(1);
        std::vector<QMat> refl;
        for (int i : s.k_simple) {
            QMat m = id;
            for (int j = 0; j < s.G->rank; ++j)
                m[i][j] -= s.G->pair_co(s.G->simple[i], s.G->simple[j]);
            refl.push_back(m);
        }
        std::vector<QMat> work = {id};
        seen.insert(mkey(id));
        for (size_t h = 0; h < work.size(); ++h)
            for (const auto& m : refl) {
                QMat nxt = qmat_mul(m, work[h]);
                if (seen.insert(mkey(nxt)).second) work.push_back(nxt);
            }
        s.weyl_k_order = static_cast<long>(work.size());
    }
    return s;
}

}  // namespace

const HomogeneousSpace& make_space(SpaceId id) {
    static std::mutex mu;
    static std::map<SpaceId, HomogeneousSpace> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, build(id)).first;
    return it->second;
}

double X0Metric::log_pairing(const HomogeneousSpace& s, const QVec& alpha) const {
    if (kind == Kind::LambdaOver2Pi) {
        Rational p = s.G->pair_co(alpha, s.lambda);
        if (p.sign() <= 0) throw std::domain_error("X0Metric: nonpositive pairing");
        return std::log(p.to_double()) - std::log(2.0 * std::numbers::pi);
    }
    Rational p = s.G->pair_co(alpha, x0);
    if (p.sign() <= 0) throw std::domain_error("X0Metric: nonpositive pairing");
    return std::log(p.to_double());
}

namespace {

// canonical scale of the K root system on its span: smallest c with
// B^T G S G B = (1/c) B^T G B on the span basis B; per irreducible
// component of Sigma_K.
Rational component_scale(const RootSystem& G, const std::vector<QVec>& comp_roots,
                         const std::vector<int>& basis) {
    int b = static_cast<int>(basis.size());
    int rank = G.rank;
    QMat S(rank, std::vector<Rational>(rank, Rational(0)));
    for (const auto& a : comp_roots)
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) S[i][j] += a[i] * a[j];
    auto ip_mat = [&](const QMat& mid, int i, int j) {
        // e_{basis[i]}^T G mid G e_{basis[j]}
        Rational r(0);
        for (int p = 0; p < rank; ++p)
            for (int q = 0; q < rank; ++q)
                r += G.gram[basis[i]][p] * mid[p][q] * G.gram[q][basis[j]];
        return r;
    };
    Rational ratio;
    bool have = false;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            Rational lhs = ip_mat(S, i, j);
            Rational rhs = G.gram[basis[i]][basis[j]];
            if (rhs.is_zero() && lhs.is_zero()) continue;
            if (rhs.is_zero() || lhs.is_zero())
                throw std::domain_error("component_scale: not proportional");
            Rational c = rhs / lhs;
            if (!have) {
                ratio = c;
                have = true;
            } else if (ratio != c) {
                throw std::domain_error("component_scale: not proportional");
            }
        }
    if (!have) throw std::domain_error("component_scale: empty");
    return ratio;
}

}  // namespace

SpaceConstants space_constants(const HomogeneousSpace& s) {
    if (!s.symmetric) throw std::domain_error("space_constants: symmetric space required");
    const RootSystem& G = *s.G;
    SpaceConstants out;
    out.n = s.n();
    Rational cg = G.canonical_scale();

    // c_lambda = 1/(4 <alpha_0, lambda>_G) for any alpha_0 in Psi
    Rational c_lambda = Rational(1) / (Rational(4) * cg * G.ip(s.psi[0], s.lambda));
    out.c_lambda = c_lambda;
    QVec diff = qvec_sub(G.rho, s.rho_k);
    out.rho_relation_ok = qvec_eq(diff, qvec_scale(c_lambda, s.lambda));
    Rational lhs = cg * (G.ip(G.rho, G.rho) - G.ip(s.rho_k, s.rho_k));
    out.norm_relation_ok = lhs == Rational(out.n, 8);

    if (s.dim_k() > 1 && !s.sigma_k_pos.empty()) {
        // split Sigma_K into irreducible components by simple-root adjacency
        std::vector<std::vector<int>> comps;
        std::vector<int> rest = s.k_simple;
        while (!rest.empty()) {
            std::vector<int> comp = {rest.back()};
            rest.pop_back();
            bool grew = true;
            while (grew) {
                grew = false;
                for (auto it = rest.begin(); it != rest.end();) {
                    bool adj = false;
                    for (int c : comp)
                        if (!G.gram[c][*it].is_zero()) adj = true;
                    if (adj) {
                        comp.push_back(*it);
                        it = rest.erase(it);
                        grew = true;
                    } else {
                        ++it;
                    }
                }
            }
            comps.push_back(comp);
        }
        std::optional<Rational> ratio;
        for (const auto& comp : comps) {
            std::vector<QVec> croots;
            for (const auto& a : s.sigma_k_pos) {
                bool in_comp = true;
                for (size_t i = 0; i < a.size(); ++i) {
                    if (a[i].is_zero()) continue;
                    bool ok = false;
                    for (int c : comp)
                        if (static_cast<size_t>(c) == i) ok = true;
                    if (!ok) in_comp = false;
                }
                if (!in_comp) continue;
                croots.push_back(a);
                croots.push_back(qvec_neg(a));
            }
            Rational ck = component_scale(G, croots, comp);
            Rational r = cg / ck;
            if (!ratio)
                ratio = r;
            else if (*ratio != r)
                throw std::domain_error("space_constants: component ratios differ");
        }
        out.killing_ratio = ratio;
    }
    return out;
}

bool dimension_identity_holds(const HomogeneousSpace& s) {
    const RootSystem& G = *s.G;
    Rational cg = G.canonical_scale();
    Rational acc(0);
    for (const auto& a : s.psi) {
        acc += Rational(2) * cg * G.ip(a, a);
        for (const auto& b : s.sigma_k_pos)
            acc += Rational(4) * cg * G.ip(a, s.rho_k) * G.pair_co(b, a) /
                   G.pair_co(b, s.rho_k);
    }
    return acc == Rational(s.n());
}

}  // namespace torsionkit

#include "torsionkit/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torsionkit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double round_to_int_dist(double x) { return std::fabs(x - std::nearbyint(x)); }
}  // namespace

Rational TorusPoint::pair_exact(const RootSystem& G, const QVec& alpha) const {
    if (!exact) throw std::domain_error("TorusPoint: no exact channel");
    if (identity || xq.empty()) return Rational(0);
    return G.ip(alpha, xq);
}

double TorusPoint::pair(const RootSystem& G, const QVec& alpha) const {
    if (exact) return pair_exact(G, alpha).to_double();
    double s = 0.0;
    for (int i = 0; i < G.rank; ++i)
        for (int j = 0; j < G.rank; ++j)
            s += alpha[i].to_double() * G.gram[i][j].to_double() * xd[j];
    return s;
}

PiAngle TorusPoint::angle(const RootSystem& G, const QVec& alpha) const {
    if (identity) return PiAngle::zero();
    if (exact) return PiAngle::of_pi(Rational(2) * pair_exact(G, alpha));
    return PiAngle::radians(kTwoPi * pair(G, alpha));
}

bool is_regular(const RootSystem& G, const TorusPoint& X) {
    if (X.identity) return false;
    for (const auto& a : G.roots) {
        if (X.exact) {
            if (X.pair_exact(G, a).is_integer()) return false;
        } else {
            if (round_to_int_dist(X.pair(G, a)) < 1e-9) return false;
        }
    }
    return true;
}

Rational weyl_dim_virtual(const RootSystem& G, const QVec& rho_plus_mu) {
    Rational r(1);
    for (const auto& b : G.positive) r *= G.pair_co(b, rho_plus_mu) / G.pair_co(b, G.rho);
    return r;
}

BiPoly character_identity_poly(const HomogeneousSpace& s, const QVec& alpha) {
    const RootSystem& G = *s.G;
    BiPoly p = BiPoly::constant(Rational(1));
    for (const auto& b : G.positive) {
        Rational c0 = G.pair_co(b, G.rho);
        Rational cl = G.pair_co(b, s.lambda);
        Rational ck = qvec_is_zero(alpha) ? Rational(0) : G.pair_co(b, alpha);
        p = p * BiPoly::linear(Rational(1), ck / c0, cl / c0);
    }
    return p;
}

ExpPoly character_family(const HomogeneousSpace& s, const QVec& alpha, const TorusPoint& X) {
    const RootSystem& G = *s.G;
    if (X.identity) return character_identity_poly(s, alpha).to_exppoly();
    if (!is_regular(G, X))
        throw std::domain_error("character_family: singular nonzero X unsupported");

    // Weyl quotient: sum_w det(w) e^{2 pi i w(rho + ell lambda + k alpha)(X)} / D
    cplx den(0.0, 0.0);
    for (const auto& w : G.weyl) {
        QVec wrho = G.apply(w, G.rho);
        den += static_cast<double>(w.sign) * X.angle(G, wrho).unit();
    }
    if (std::abs(den) < 1e-10)
        throw std::domain_error("character_family: Weyl denominator vanished");
    ExpPoly out;
    bool zero_alpha = qvec_is_zero(alpha);
    for (const auto& w : G.weyl) {
        QVec wrho = G.apply(w, G.rho);
        QVec wlam = G.apply(w, s.lambda);
        cplx coef = static_cast<double>(w.sign) * X.angle(G, wrho).unit() / den;
        PiAngle kang = zero_alpha ? PiAngle::zero() : X.angle(G, G.apply(w, alpha));
        PiAngle lang = X.angle(G, wlam);
        out.add({coef, 0, 0, kang, lang});
    }
    return out;
}

cplx character_k(const HomogeneousSpace& s, const QVec& mu, const TorusPoint& X) {
    const RootSystem& G = *s.G;
    // Weyl formula for the (possibly reductive) isotropy group K
    QMat id(G.rank, std::vector<Rational>(G.rank, Rational(0)));
    for (int i = 0; i < G.rank; ++i) id[i][i] = Rational(1);
    std::vector<QMat> refl;
    for (int i : s.k_simple) {
        QMat m = id;
        for (int j = 0; j < G.rank; ++j)
            m[i][j] -= G.pair_co(G.simple[i], G.simple[j]);
        refl.push_back(m);
    }
    std::vector<std::pair<QMat, int>> wk = {{id, 1}};
    std::vector<std::string> keys;
    auto mkey = [](const QMat& m) {
        std::string r;
        for (const auto& row : m)
            for (const auto& x : row) r += x.str() + ";";
        return r;
    };
    keys.push_back(mkey(id));
    for (size_t h = 0; h < wk.size(); ++h)
        for (const auto& m : refl) {
            QMat nxt = qmat_mul(m, wk[h].first);
            std::string key = mkey(nxt);
            bool found = false;
            for (const auto& k : keys)
                if (k == key) found = true;
            if (!found) {
                keys.push_back(key);
                wk.push_back({nxt, -wk[h].second});
            }
        }
    QVec top = qvec_add(s.rho_k, mu);
    cplx num(0.0, 0.0), den(0.0, 0.0);
    for (const auto& [m, sign] : wk) {
        num += static_cast<double>(sign) * X.angle(G, qmat_apply(m, top)).unit();
        den += static_cast<double>(sign) * X.angle(G, qmat_apply(m, s.rho_k)).unit();
    }
    if (std::abs(den) < 1e-12)
        throw std::domain_error("character_k: X is singular for K");
    return num / den;
}

}  // namespace torsionkit

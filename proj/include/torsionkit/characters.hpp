#pragma once

#include "torsionkit/bipoly.hpp"
#include "torsionkit/exppoly.hpp"
#include "torsionkit/spaces.hpp"

namespace torsionkit {

// A point X of the torus Lie algebra, represented through the pairings
// alpha(X). Exact rational coordinates keep the regularity test and the
// resulting angles exact; a plain double vector is the "inexact-angle"
// channel.
struct TorusPoint {
    bool identity = true;
    bool exact = true;
    QVec xq;                  // root coordinates, exact channel
    std::vector<double> xd;   // root coordinates, float channel

    static TorusPoint id() { return {}; }
    static TorusPoint rational(QVec v) {
        TorusPoint t;
        t.identity = qvec_is_zero(v);
        t.exact = true;
        t.xq = std::move(v);
        return t;
    }
    static TorusPoint real(std::vector<double> v) {
        TorusPoint t;
        t.identity = true;
        for (double x : v) t.identity = t.identity && x == 0.0;
        t.exact = false;
        t.xd = std::move(v);
        return t;
    }

    // alpha(X) through the base form
    Rational pair_exact(const RootSystem& G, const QVec& alpha) const;
    double pair(const RootSystem& G, const QVec& alpha) const;
    // the angle 2 pi alpha(X)
    PiAngle angle(const RootSystem& G, const QVec& alpha) const;
};

// alpha(X) not an integer for every root (exactly on the rational channel)
bool is_regular(const RootSystem& G, const TorusPoint& X);

// Virtual Weyl dimension prod_{b in Sigma+} <b^vee, x>/<b^vee, rho> at
// x = rho + mu; zero when x is singular.
Rational weyl_dim_virtual(const RootSystem& G, const QVec& rho_plus_mu);

// The character chi_{rho + ell lambda + k alpha}(e^X) as an exponential
// polynomial in (k, ell). X must be the identity (dimension polynomial) or
// regular (Weyl quotient over exponentials); alpha may be any root vector
// or zero.
ExpPoly character_family(const HomogeneousSpace& s, const QVec& alpha, const TorusPoint& X);

// Exact polynomial of the X = identity case.
BiPoly character_identity_poly(const HomogeneousSpace& s, const QVec& alpha);

// Character of the isotropy group K at a K-regular point, by the Weyl
// formula over W_K; weight argument is rho_K + mu.
cplx character_k(const HomogeneousSpace& s, const QVec& mu, const TorusPoint& X);

}  // namespace torsionkit

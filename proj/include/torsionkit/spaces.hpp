#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionkit/rootsys.hpp"

namespace torsionkit {

enum class SpaceId { P1, P2, P3, Gr24, Flag3 };

SpaceId space_from_string(const std::string& s);

// A complex homogeneous space G/K from the built-in catalogue: the root
// system of G, the parabolic data of K (a subset of the simple roots), the
// positive line bundle weight lambda, and the isotropy weights Psi.
struct HomogeneousSpace {
    std::string name;
    const RootSystem* G = nullptr;
    std::vector<int> k_simple;        // simple roots of K
    std::vector<QVec> sigma_k_pos;    // positive roots of K
    std::vector<QVec> psi;            // weights of the isotropy representation
    QVec lambda;
    QVec rho_k;
    bool symmetric = false;
    long weyl_k_order = 1;

    int n() const { return static_cast<int>(psi.size()); }
    int dim_k() const { return 2 * static_cast<int>(sigma_k_pos.size()) + G->rank; }
};

const HomogeneousSpace& make_space(SpaceId id);

// Kaehler normalization: the value alpha^vee(X_0) for alpha in Psi. Either
// X_0 = lambda / (2 pi) (so every <alpha^vee,lambda>/alpha^vee(X_0) = 2 pi)
// or an explicit rational vector in root coordinates.
struct X0Metric {
    enum class Kind { LambdaOver2Pi, RationalVec } kind = Kind::LambdaOver2Pi;
    QVec x0;  // used by RationalVec

    static X0Metric lambda_over_2pi() { return {}; }
    static X0Metric rational_vec(QVec v) {
        X0Metric m;
        m.kind = Kind::RationalVec;
        m.x0 = std::move(v);
        return m;
    }
    // log(alpha^vee(X_0)); throws unless the pairing is positive
    double log_pairing(const HomogeneousSpace& s, const QVec& alpha) const;
};

struct SpaceConstants {
    Rational c_lambda;
    std::optional<Rational> killing_ratio;  // absent when dim K == 1
    int n = 0;
    bool rho_relation_ok = false;     // rho - rho_K == c_lambda * lambda
    bool norm_relation_ok = false;    // |rho|_G^2 == |rho_K|_G^2 + n/8
};

// The closed constants of the symmetric-space comparison: c_lambda from the
// canonical form, and the ratio of the canonical forms of G and K on the
// K-subtorus, (3 dim K - dim G)/(2 (dim K - 1)).
SpaceConstants space_constants(const HomogeneousSpace& s);

// The exact rational identity n = 4 sum_{a in Psi, b in Sigma_K^+}
// <a,rho_K>_G <b^vee,a>/<b^vee,rho_K> + 2 sum_{a in Psi} |a|_G^2.
bool dimension_identity_holds(const HomogeneousSpace& s);

}  // namespace torsionkit

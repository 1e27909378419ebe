#pragma once

#include <string>
#include <vector>

#include "torsionkit/rational.hpp"

namespace torsionkit {

enum class RSType { A1, A2, A3, B2, G2 };

RSType rstype_from_string(const std::string& s);
std::string rstype_name(RSType t);

struct WeylElem {
    QMat mat;  // action on simple-root coordinates
    int sign;  // determinant
};

// A root system realized on simple-root coordinates with a rational Gram
// matrix (long roots normalized to squared length 2).
class RootSystem {
public:
    static const RootSystem& get(RSType t);  // cached immutable instances

    RSType type;
    int rank = 0;
    QMat gram;                    // gram[i][j] = <alpha_i, alpha_j>
    std::vector<QVec> simple;     // unit coordinate vectors
    std::vector<QVec> positive;   // positive roots
    std::vector<QVec> roots;      // all roots
    std::vector<QVec> fundamental;
    QVec rho;                     // half sum of positive roots
    std::vector<WeylElem> weyl;   // full Weyl group

    Rational ip(const QVec& a, const QVec& b) const;  // base form
    Rational norm2(const QVec& a) const { return ip(a, a); }
    // <a^vee, x> = 2 <a, x> / <a, a>
    Rational pair_co(const QVec& a, const QVec& x) const;
    QVec apply(const WeylElem& w, const QVec& x) const { return qmat_apply(w.mat, x); }

    int dim() const { return static_cast<int>(roots.size()) + rank; }

    // The scale c with <.,.>_canonical = c * base form, i.e. the unique
    // normalization with <x,y> = sum_{a in roots} <x,a><a,y>. Defined for
    // the simple systems handled here.
    Rational canonical_scale() const;
};

// invert a small rational matrix (Gauss-Jordan); throws if singular
QMat qmat_inverse(const QMat& m);

}  // namespace torsionkit

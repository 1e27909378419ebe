#include "torsionkit/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace torsionkit {

RSType rstype_from_string(const std::string& s) {
    if (s == "A1") return RSType::A1;
    if (s == "A2") return RSType::A2;
    if (s == "A3") return RSType::A3;
    if (s == "B2") return RSType::B2;
    if (s == "G2") return RSType::G2;
    throw std::domain_error("unsupported root system type: " + s);
}
std::string rstype_name(RSType t) {
    switch (t) {
        case RSType::A1: return "A1";
        case RSType::A2: return "A2";
        case RSType::A3: return "A3";
        case RSType::B2: return "B2";
        case RSType::G2: return "G2";
    }
    return "?";
}

Rational RootSystem::ip(const QVec& a, const QVec& b) const {
    Rational s(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s += a[i] * gram[i][j] * b[j];
    return s;
}

Rational RootSystem::pair_co(const QVec& a, const QVec& x) const {
    return Rational(2) * ip(a, x) / ip(a, a);
}

QMat qmat_inverse(const QMat& m) {
    int n = static_cast<int>(m.size());
    QMat a = m;
    QMat inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("qmat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

Rational qmat_det(const QMat& m) {
    int n = static_cast<int>(m.size());
    QMat a = m;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational d = a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / d;
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

std::string qvec_key(const QVec& v) {
    std::string s;
    for (const auto& x : v) s += x.str() + ";";
    return s;
}
std::string qmat_key(const QMat& m) {
    std::string s;
    for (const auto& r : m) s += qvec_key(r) + "|";
    return s;
}

RootSystem build(RSType t) {
    RootSystem rs;
    rs.type = t;
    switch (t) {
        case RSType::A1:
            rs.rank = 1;
            rs.gram = {{Rational(2)}};
            break;
        case RSType::A2:
            rs.rank = 2;
            rs.gram = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
            break;
        case RSType::A3:
            rs.rank = 3;
            rs.gram = {{Rational(2), Rational(-1), Rational(0)},
                       {Rational(-1), Rational(2), Rational(-1)},
                       {Rational(0), Rational(-1), Rational(2)}};
            break;
        case RSType::B2:
            rs.rank = 2;
            rs.gram = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(1)}};
            break;
        case RSType::G2:
            rs.rank = 2;
            rs.gram = {{Rational(2, 3), Rational(-1)}, {Rational(-1), Rational(2)}};
            break;
    }
    for (int i = 0; i < rs.rank; ++i) {
        QVec e(rs.rank, Rational(0));
        e[i] = Rational(1);
        rs.simple.push_back(e);
    }

    // simple reflections as matrices on simple-root coordinates
    std::vector<QMat> refl;
    for (int i = 0; i < rs.rank; ++i) {
        QMat m(rs.rank, std::vector<Rational>(rs.rank, Rational(0)));
        for (int j = 0; j < rs.rank; ++j) {
            for (int d = 0; d < rs.rank; ++d) m[d][j] = (d == j) ? Rational(1) : Rational(0);
            Rational c = rs.pair_co(rs.simple[i], rs.simple[j]);
            m[i][j] -= c;
        }
        refl.push_back(m);
    }

    // root set: closure of the simple roots under the simple reflections
    std::set<std::string> seen;
    std::vector<QVec> queue = rs.simple;
    for (const auto& v : queue) seen.insert(qvec_key(v));
    for (size_t h = 0; h < queue.size(); ++h) {
        QVec cur = queue[h];
        for (const auto& m : refl) {
            QVec nxt = qmat_apply(m, cur);
            if (seen.insert(qvec_key(nxt)).second) queue.push_back(nxt);
        }
        QVec neg = qvec_neg(cur);
        if (seen.insert(qvec_key(neg)).second) queue.push_back(neg);
    }
    rs.roots = queue;
    for (const auto& a : rs.roots) {
        bool pos = false;
        for (const auto& x : a) {
            if (x.sign() > 0) {
                pos = true;
                break;
            }
            if (x.sign() < 0) break;
        }
        if (pos) rs.positive.push_back(a);
    }
    rs.rho = QVec(rs.rank, Rational(0));
    for (const auto& a : rs.positive) rs.rho = qvec_add(rs.rho, qvec_scale(Rational(1, 2), a));

    // fundamental weights from the inverse Cartan matrix <alpha_i^vee, w_j> = delta_ij
    QMat cartan(rs.rank, std::vector<Rational>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) cartan[i][j] = rs.pair_co(rs.simple[i], rs.simple[j]);
    QMat cinv = qmat_inverse(cartan);
    for (int j = 0; j < rs.rank; ++j) {
        QVec w(rs.rank, Rational(0));
        for (int k = 0; k < rs.rank; ++k) w[k] = cinv[k][j];
        rs.fundamental.push_back(w);
    }

    // Weyl group by closure
    std::map<std::string, WeylElem> group;
    QMat id(rs.rank, std::vector<Rational>(rs.rank, Rational(0)));
    for (int i = 0; i < rs.rank; ++i) id[i][i] = Rational(1);
    std::vector<QMat> work = {id};
    group[qmat_key(id)] = {id, 1};
    for (size_t h = 0; h < work.size(); ++h) {
        QMat cur = work[h];
        for (const auto& m : refl) {
            QMat nxt = qmat_mul(m, cur);
            std::string key = qmat_key(nxt);
            if (!group.count(key)) {
                group[key] = {nxt, qmat_det(nxt).to_long() > 0 ? 1 : -1};
                work.push_back(nxt);
            }
        }
    }
    for (auto& [k, w] : group) rs.weyl.push_back(w);
    return rs;
}

}  // namespace

const RootSystem& RootSystem::get(RSType t) {
    static std::mutex mu;
    static std::map<RSType, RootSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build(t)).first;
    return it->second;
}

Rational RootSystem::canonical_scale() const {
    // c with I = c * (sum_a a a^T G): check the product is scalar.
    QMat S(rank, std::vector<Rational>(rank, Rational(0)));
    for (const auto& a : roots)
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) S[i][j] += a[i] * a[j];
    QMat M = qmat_mul(S, gram);
    Rational mu = M[0][0];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j && M[i][j] != mu)
                throw std::domain_error("canonical_scale: non-simple system");
            if (i != j && !M[i][j].is_zero())
                throw std::domain_error("canonical_scale: non-simple system");
        }
    return Rational(1) / mu;
}

}  // namespace torsionkit

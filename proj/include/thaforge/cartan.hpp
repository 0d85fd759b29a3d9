// Finite-type Cartan matrices, root systems and weight arithmetic.
//
// Conventions: Bourbaki numbering of simple roots; Cartan entries
// A_ij = 2(a_i,a_j)/(a_i,a_i), so [h_i,e_j] = A_ij e_j.  Roots are stored
// as integer coordinate vectors in the simple-root basis and ordered by
// height, then lexicographically.

#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thaforge/errors.hpp"
#include "thaforge/linalg.hpp"
#include "thaforge/rational.hpp"

namespace thaforge {

using RootCoords = std::vector<int>;

inline int height(const RootCoords &r)
{
    int h = 0;
    for (int c : r)
        h += c;
    return h;
}

struct CartanData {
    std::string label;   // "A2", "E7", ... or "X<r>" for explicit matrices
    int rank = 0;
    QMatrix A;           // r x r, integer entries
    std::vector<Rational> symmetriser; // d_i with d_i A_ij = d_j A_ji, max d_i = 1
    std::vector<RootCoords> positive;  // sorted by (height, lex)
    RootCoords theta;                  // highest root
    std::vector<int> coxeter;          // c_k, coordinates of theta

    size_t root_count() const { return 2 * positive.size(); }

    Rational pairing_with_coroot(const RootCoords &beta, int k) const
    {
        Rational s(0);
        for (int j = 0; j < rank; ++j)
            if (beta[j] != 0)
                s += A(k, j) * Rational(beta[j]);
        return s;
    }

    bool is_positive_root(const RootCoords &r) const
    {
        return positive_index(r) >= 0;
    }
    int positive_index(const RootCoords &r) const
    {
        auto it = pos_index_.find(r);
        return it == pos_index_.end() ? -1 : static_cast<int>(it->second);
    }

    bool simply_laced() const
    {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (A(i, j) != A(j, i))
                    return false;
        return true;
    }

    std::map<RootCoords, size_t> pos_index_;
};

namespace detail {

inline QMatrix cartan_matrix_from_edges(int rank,
                                        const std::vector<std::array<int, 3>> &edges)
{
    QMatrix A(rank, rank);
    for (int i = 0; i < rank; ++i)
        A(i, i) = Rational(2);
    for (const auto &e : edges) {
        A(e[0] - 1, e[1] - 1) = Rational(e[2]);
        A(e[1] - 1, e[0] - 1) = Rational(-1);
    }
    return A;
}

} // namespace detail

// Cartan matrix tables in Bourbaki numbering. Edge {i,j,v} sets
// A_ij = v and A_ji = -1.
inline QMatrix cartan_matrix(char type, int rank)
{
    using E = std::array<int, 3>;
    std::vector<E> edges;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            edges.push_back(E{i, i + 1, -1});
    };
    switch (type) {
    case 'A':
        if (rank < 1)
            throw ConfigError("A_r requires r >= 1");
        chain(1, rank);
        break;
    case 'B':
        if (rank < 2)
            throw ConfigError("B_r requires r >= 2");
        chain(1, rank - 1);
        edges.push_back(E{rank - 1, rank, -1});
        {
            QMatrix A = detail::cartan_matrix_from_edges(rank, edges);
            A(rank - 1, rank - 2) = Rational(-2); // alpha_r short
            return A;
        }
    case 'C':
        if (rank < 2)
            throw ConfigError("C_r requires r >= 2");
        chain(1, rank - 1);
        edges.push_back(E{rank - 1, rank, -2}); // alpha_r long
        break;
    case 'D':
        if (rank < 4)
            throw ConfigError("D_r requires r >= 4");
        chain(1, rank - 2);
        edges.push_back(E{rank - 2, rank - 1, -1});
        edges.push_back(E{rank - 2, rank, -1});
        break;
    case 'E':
        if (rank < 6 || rank > 8)
            throw ConfigError("E_r requires r in {6,7,8}");
        edges.push_back(E{1, 3, -1});
        edges.push_back(E{3, 4, -1});
        edges.push_back(E{2, 4, -1});
        chain(4, rank);
        break;
    case 'F':
        if (rank != 4)
            throw ConfigError("F_r requires r = 4");
        {
            QMatrix A = detail::cartan_matrix_from_edges(
                4, {E{1, 2, -1}, E{2, 3, -1}, E{3, 4, -1}});
            A(2, 1) = Rational(-2); // alpha_3, alpha_4 short
            return A;
        }
    case 'G':
        if (rank != 2)
            throw ConfigError("G_r requires r = 2");
        {
            QMatrix A(2, 2);
            A(0, 0) = A(1, 1) = Rational(2);
            A(0, 1) = Rational(-3); // alpha_1 short
            A(1, 0) = Rational(-1);
            return A;
        }
    default:
        throw ConfigError(std::string("unknown type '") + type + "'");
    }
    return detail::cartan_matrix_from_edges(rank, edges);
}

// Builds root system, symmetriser and highest-root data from an explicit
// Cartan matrix. The matrix must be of finite type and irreducible.
inline CartanData cartan_from_matrix(QMatrix A, std::string label = "")
{
    CartanData cd;
    cd.rank = static_cast<int>(A.rows());
    if (cd.rank == 0 || A.cols() != A.rows())
        throw ConfigError("Cartan matrix must be square and non-empty");
    int r = cd.rank;
    for (int i = 0; i < r; ++i) {
        if (A(i, i) != Rational(2))
            throw ConfigError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < r; ++j) {
            if (!A(i, j).is_integer())
                throw ConfigError("Cartan matrix entries must be integers");
            if (i != j) {
                if (A(i, j) > Rational(0))
                    throw ConfigError("Cartan off-diagonal entries must be <= 0");
                if (A(i, j).is_zero() != A(j, i).is_zero())
                    throw ConfigError("Cartan matrix: A_ij = 0 iff A_ji = 0 violated");
            }
        }
    }

    // connectivity (theta and Coxeter labels need an irreducible system)
    {
        std::vector<int> seen(r, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < r; ++j)
                if (!seen[j] && !A(i, j).is_zero()) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        for (int i = 0; i < r; ++i)
            if (!seen[i])
                throw ConfigError("Cartan matrix is reducible; expected an "
                                  "irreducible (connected) diagram");
    }

    // symmetriser: d_i A_ij = d_j A_ji, propagated along edges
    std::vector<Rational> d(r);
    d[0] = Rational(1);
    std::vector<int> done(r, 0);
    done[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int j = 0; j < r; ++j) {
            if (A(i, j).is_zero() || i == j)
                continue;
            Rational dj = d[i] * A(i, j) / A(j, i);
            if (done[j]) {
                if (d[j] != dj)
                    throw ConfigError("Cartan matrix is not symmetrisable");
            } else {
                d[j] = dj;
                done[j] = 1;
                queue.push_back(j);
            }
        }
    }
    Rational dmax = d[0];
    for (const auto &x : d)
        if (x > dmax)
            dmax = x;
    for (auto &x : d)
        x /= dmax; // long roots get d = 1, i.e. (theta,theta) = 2

    // reflection closure from the simple roots
    std::set<RootCoords> roots;
    std::vector<RootCoords> frontier;
    for (int i = 0; i < r; ++i) {
        RootCoords a(r, 0);
        a[i] = 1;
        roots.insert(a);
        frontier.push_back(a);
    }
    const size_t root_cap = 100000;
    while (!frontier.empty()) {
        std::vector<RootCoords> next;
        for (const auto &b : frontier) {
            for (int k = 0; k < r; ++k) {
                Rational pr(0);
                for (int j = 0; j < r; ++j)
                    if (b[j] != 0)
                        pr += A(k, j) * Rational(b[j]);
                RootCoords s = b;
                s[k] -= static_cast<int>(pr.num().to_longlong());
                if (roots.insert(s).second)
                    next.push_back(s);
            }
        }
        if (roots.size() > root_cap)
            throw ConfigError("reflection closure did not terminate; "
                              "Cartan matrix is not of finite type");
        frontier = std::move(next);
    }

    for (const auto &rt : roots) {
        bool pos = true, neg = true;
        for (int c : rt) {
            if (c > 0)
                neg = false;
            if (c < 0)
                pos = false;
        }
        if (!pos && !neg)
            throw ConfigError("root closure produced a mixed-sign vector; "
                              "matrix is not a finite Cartan matrix");
        if (pos)
            cd.positive.push_back(rt);
    }
    std::sort(cd.positive.begin(), cd.positive.end(),
              [](const RootCoords &x, const RootCoords &y) {
                  int hx = height(x), hy = height(y);
                  if (hx != hy)
                      return hx < hy;
                  return x < y;
              });
    for (size_t i = 0; i < cd.positive.size(); ++i)
        cd.pos_index_[cd.positive[i]] = i;

    cd.theta = cd.positive.back();
    if (cd.positive.size() > 1 &&
        height(cd.positive[cd.positive.size() - 2]) == height(cd.theta))
        throw ConfigError("highest root is not unique; matrix is not an "
                          "irreducible finite Cartan matrix");
    cd.coxeter = cd.theta;
    cd.A = std::move(A);
    cd.symmetriser = std::move(d);
    cd.label = label.empty() ? ("X" + std::to_string(r)) : label;
    return cd;
}

inline CartanData build_cartan(char type, int rank)
{
    return cartan_from_matrix(cartan_matrix(type, rank),
                              std::string(1, type) + std::to_string(rank));
}

// Dominant integral weight data together with its kappa normalisation.
struct WeightData {
    std::vector<long long> lambda;     // Dynkin labels, >= 0, not all zero
    std::vector<Rational> kappa;       // kappa(e_k, f_k) > 0
    std::vector<Rational> lambda_check; // derived labels lambda_k / kappa_k
};

// kappa with all kappa(e_K,f_K) = 1; only consistent for symmetric A.
inline std::vector<Rational> kappa_symmetric(const CartanData &cd)
{
    if (!cd.simply_laced())
        throw ConfigError("kappa mode 'symmetric' requires a symmetric "
                          "Cartan matrix (simply-laced type)");
    return std::vector<Rational>(cd.rank, Rational(1));
}

// kappa = 1/d: long roots have (alpha,alpha) = 2.
inline std::vector<Rational> kappa_canonical(const CartanData &cd)
{
    std::vector<Rational> k(cd.rank);
    for (int i = 0; i < cd.rank; ++i)
        k[i] = cd.symmetriser[i].inverse();
    return k;
}

inline WeightData make_weight(const CartanData &cd, std::vector<long long> lambda,
                              std::vector<Rational> kappa)
{
    if (static_cast<int>(lambda.size()) != cd.rank ||
        static_cast<int>(kappa.size()) != cd.rank)
        throw ConfigError("lambda/kappa length must equal the rank");
    bool all_zero = true;
    for (long long l : lambda) {
        if (l < 0)
            throw ConfigError("Dynkin labels must be non-negative");
        if (l != 0)
            all_zero = false;
    }
    if (all_zero)
        throw ConfigError("Dynkin labels must not all be zero");
    for (int i = 0; i < cd.rank; ++i) {
        if (kappa[i] <= Rational(0))
            throw ConfigError("kappa entries must be positive");
        for (int j = 0; j < cd.rank; ++j)
            if (cd.A(i, j) / kappa[i] != cd.A(j, i) / kappa[j])
                throw ConfigError("kappa is inconsistent with the symmetriser "
                                  "(A_ij/kappa_i must be symmetric)");
    }
    WeightData w;
    w.lambda = std::move(lambda);
    w.kappa = std::move(kappa);
    w.lambda_check.resize(cd.rank);
    for (int i = 0; i < cd.rank; ++i)
        w.lambda_check[i] = Rational(w.lambda[i]) / w.kappa[i];
    return w;
}

// The symmetric bilinear form on the weight space induced by kappa:
// (a_i, a_j) = A_ij / kappa_i, with fundamental weights solved from
// (Lambda_i, a_j^v) = delta_ij.
struct WeightForm {
    QMatrix gram;  // (a_i, a_j)
    QMatrix fund;  // row i: coordinates of Lambda_i in the simple-root basis
    std::vector<Rational> kappa;

    // inner product of weights given in simple-root coordinates
    Rational ip(const std::vector<Rational> &x, const std::vector<Rational> &y) const
    {
        Rational s(0);
        size_t n = gram.rows();
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero())
                continue;
            for (size_t j = 0; j < n; ++j)
                if (!y[j].is_zero())
                    s += x[i] * gram(i, j) * y[j];
        }
        return s;
    }

    // simple-root coordinates of the weight with the given Dynkin labels
    std::vector<Rational> weight_coords(const std::vector<Rational> &labels) const
    {
        size_t n = gram.rows();
        std::vector<Rational> c(n, Rational(0));
        for (size_t k = 0; k < n; ++k)
            if (!labels[k].is_zero())
                for (size_t j = 0; j < n; ++j)
                    c[j] += labels[k] * fund(k, j);
        return c;
    }
};

inline WeightForm weight_form(const CartanData &cd, const std::vector<Rational> &kappa)
{
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j)
            if (cd.A(i, j) / kappa[i] != cd.A(j, i) / kappa[j])
                throw ConfigError("kappa is inconsistent with the symmetriser");
    WeightForm wf;
    wf.kappa = kappa;
    wf.gram = QMatrix(cd.rank, cd.rank);
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j)
            wf.gram(i, j) = cd.A(i, j) / kappa[i];
    // (Lambda_i, a_j^v) = delta_ij  <=>  Lambda_i = sum_m (A^{-1})_mi a_m
    auto inv = cd.A.inverse();
    if (!inv)
        throw ConfigError("Cartan matrix is singular");
    wf.fund = QMatrix(cd.rank, cd.rank);
    for (int i = 0; i < cd.rank; ++i)
        for (int m = 0; m < cd.rank; ++m)
            wf.fund(i, m) = (*inv)(m, i);
    return wf;
}

struct PseudoMinusculeVerdict {
    bool value = false;
    int index = 0; // 1-based k with lambda^ = Lambda_k, 0 if none
    Rational lambda_theta;       // (lambda, theta) = sum_k lambda^_k c_k
    bool lambda_check_integral = false; // lambda^ dominant integral
};

// True iff lambda^ is a fundamental weight Lambda_k whose Coxeter label
// c_k equals 1.
inline PseudoMinusculeVerdict is_pseudo_minuscule(const CartanData &cd,
                                                  const WeightData &w)
{
    PseudoMinusculeVerdict v;
    v.lambda_theta = Rational(0);
    for (int k = 0; k < cd.rank; ++k)
        v.lambda_theta += w.lambda_check[k] * Rational(cd.coxeter[k]);
    v.lambda_check_integral = true;
    for (const auto &x : w.lambda_check)
        if (!x.is_integer())
            v.lambda_check_integral = false;
    int ones = 0, idx = -1;
    bool fundamental = true;
    for (int k = 0; k < cd.rank; ++k) {
        if (w.lambda_check[k].is_zero())
            continue;
        if (w.lambda_check[k].is_one()) {
            ++ones;
            idx = k;
        } else {
            fundamental = false;
        }
    }
    if (fundamental && ones == 1 && cd.coxeter[idx] == 1) {
        v.value = true;
        v.index = idx + 1;
    }
    return v;
}

// The (r+1) x (r+1) matrix B with indices 0..r:
//   B_00 = 0,  B_i0 = -lambda_i,  B_0j = -lambda^_j,  B_ij = A_ij.
struct ExtendedMatrix {
    QMatrix B;
    Rational detB;
    Rational detA;
    bool invertible = false;
    QMatrix Binv;                 // only valid when invertible
    std::vector<Rational> Lcoef;  // row 0 of B^{-1}: L = sum_I Lcoef[I] h_I

    void require_invertible() const
    {
        if (!invertible)
            throw SingularBError("extended matrix B is singular (det B = 0); "
                                 "this (g, lambda, kappa) triple is rejected");
    }
};

inline ExtendedMatrix build_B(const CartanData &cd, const WeightData &w)
{
    int r = cd.rank;
    ExtendedMatrix e;
    e.B = QMatrix(r + 1, r + 1);
    for (int i = 0; i < r; ++i) {
        e.B(i + 1, 0) = Rational(-w.lambda[i]);
        e.B(0, i + 1) = -w.lambda_check[i];
        for (int j = 0; j < r; ++j)
            e.B(i + 1, j + 1) = cd.A(i, j);
    }
    e.detB = e.B.determinant();
    e.detA = cd.A.determinant();
    if (!e.detB.is_zero()) {
        e.invertible = true;
        e.Binv = *e.B.inverse();
        e.Lcoef.resize(r + 1);
        for (int i = 0; i <= r; ++i)
            e.Lcoef[i] = e.Binv(0, i);
    }
    return e;
}

struct LIdentityReport {
    Rational Binv00;
    Rational detA_over_detB;
    Rational lambda_norm;  // (lambda, lambda)
    std::vector<Rational> recovered_labels; // labels of sum_j (B^-1)_j0/(B^-1)_00 a_j
    bool det_identity = false;     // (B^-1)_00 = det A / det B
    bool norm_identity = false;    // (B^-1)_00 = -1/(lambda,lambda)
    bool label_identity = false;   // recovered labels equal lambda
    bool all() const { return det_identity && norm_identity && label_identity; }
};

// <L|L> = (B^-1)_00 = det A/det B = -1/(lambda,lambda), and the column
// (B^-1)_j0 reproduces lambda.
inline LIdentityReport check_L_identities(const CartanData &cd,
                                          const ExtendedMatrix &ext,
                                          const WeightForm &wf,
                                          const WeightData &w)
{
    ext.require_invertible();
    LIdentityReport rep;
    rep.Binv00 = ext.Binv(0, 0);
    rep.detA_over_detB = ext.detA / ext.detB;
    rep.det_identity = rep.Binv00 == rep.detA_over_detB;

    std::vector<Rational> labels(cd.rank);
    for (int i = 0; i < cd.rank; ++i)
        labels[i] = Rational(w.lambda[i]);
    auto lam = wf.weight_coords(labels);
    rep.lambda_norm = wf.ip(lam, lam);
    rep.norm_identity = rep.Binv00 == -rep.lambda_norm.inverse();

    rep.recovered_labels.resize(cd.rank);
    rep.label_identity = true;
    for (int i = 0; i < cd.rank; ++i) {
        Rational s(0);
        for (int j = 0; j < cd.rank; ++j)
            s += cd.A(i, j) * ext.Binv(j + 1, 0);
        rep.recovered_labels[i] = s / ext.Binv(0, 0);
        if (rep.recovered_labels[i] != Rational(w.lambda[i]))
            rep.label_identity = false;
    }
    return rep;
}

// Weyl dimension formula; independent of the kappa normalisation.
inline BigInt weyl_dimension(const CartanData &cd, const std::vector<long long> &labels)
{
    WeightForm wf = weight_form(cd, kappa_canonical(cd));
    std::vector<Rational> lr(cd.rank), rho(cd.rank, Rational(1));
    for (int i = 0; i < cd.rank; ++i)
        lr[i] = Rational(labels[i] + 1); // lambda + rho in the label basis
    auto lam_rho = wf.weight_coords(lr);
    auto rho_c = wf.weight_coords(rho);
    Rational dim(1);
    for (const auto &alpha : cd.positive) {
        std::vector<Rational> ac(cd.rank);
        for (int i = 0; i < cd.rank; ++i)
            ac[i] = Rational(alpha[i]);
        dim *= wf.ip(lam_rho, ac) / wf.ip(rho_c, ac);
    }
    if (!dim.is_integer())
        throw std::logic_error("Weyl dimension did not come out integral");
    return dim.num();
}

// Size of the Weyl orbit of the weight with the given Dynkin labels.
inline size_t weyl_orbit_size(const CartanData &cd, const std::vector<long long> &labels)
{
    std::set<std::vector<long long>> orbit;
    std::vector<std::vector<long long>> frontier{labels};
    orbit.insert(labels);
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto &m : frontier)
            for (int i = 0; i < cd.rank; ++i) {
                std::vector<long long> s = m;
                long long mi = m[i];
                if (mi == 0)
                    continue;
                for (int j = 0; j < cd.rank; ++j)
                    s[j] -= mi * cd.A(j, i).num().to_longlong();
                if (orbit.insert(s).second)
                    next.push_back(s);
            }
        frontier = std::move(next);
    }
    return orbit.size();
}

} // namespace thaforge

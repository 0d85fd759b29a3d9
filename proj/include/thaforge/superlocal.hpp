// The local part B^L = B_{-1} + B_0 + B_1 of the contragredient
// superalgebra associated to (g, lambda, kappa).
//
// Everything is built from one engine: given a generalized Cartan matrix M
// (here either A itself or the extended matrix B with the odd index 0),
// positive "bracket words" are closed level by level under the raising
// letters, and each weight space is quotiented by the radical of the
// invariant pairing computed recursively from <e_K|f_K>.  For finite-type
// weights this reproduces the Chevalley basis; for the odd seed letter it
// yields the degree +1 module, with degree -1 mirrored through the
// involution e_K <-> f_K.
//
// Basis order of B_0: h_0 < h_1 < ... < h_r < e_alpha (height, then lex)
// < f_alpha; degree +-1 bases ordered by height of alpha - alpha_0.

#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "thaforge/cartan.hpp"
#include "thaforge/errors.hpp"
#include "thaforge/linalg.hpp"

namespace thaforge {

using BWeight = std::vector<int>; // coordinates over all simple roots of M

// Left-normed bracket words [e_k, w], interned for cheap memo keys.
class WordPool {
  public:
    int leaf(int letter)
    {
        return intern(letter, -1);
    }
    int compose(int letter, int sub) { return intern(letter, sub); }
    int letter(int id) const { return nodes_[id].first; }
    int sub(int id) const { return nodes_[id].second; }
    bool is_leaf(int id) const { return nodes_[id].second < 0; }

  private:
    int intern(int letter, int sub)
    {
        auto key = std::make_pair(letter, sub);
        auto it = index_.find(key);
        if (it != index_.end())
            return it->second;
        nodes_.push_back(key);
        int id = static_cast<int>(nodes_.size()) - 1;
        index_.emplace(key, id);
        return id;
    }
    std::vector<std::pair<int, int>> nodes_;
    std::map<std::pair<int, int>, int> index_;
};

// Indices into the degree-0 basis.
struct Basis0Element {
    enum Kind { H, E, F } kind;
    int idx; // H: Chevalley index; E/F: positive-root index
};

// One engine instance owns all tables of a contragredient (super)algebra
// given by the matrix M and the normalisation <e_K|f_K> = norm[K].
// seed >= 0 marks an odd index that is used exactly once per word: words
// containing it span the degree +-1 module, all others the even part.
class ContragredientEngine {
  public:
    ContragredientEngine(QMatrix M, std::vector<Rational> norm, int seed)
        : M_(std::move(M)), norm_(std::move(norm)), seed_(seed),
          n_(static_cast<int>(M_.rows()))
    {
        close_weights();
        index_basis0();
        if (seed_ >= 0)
            index_module();
    }

    int n() const { return n_; }
    int seed() const { return seed_; }
    const QMatrix &matrix() const { return M_; }
    const std::vector<Rational> &norm() const { return norm_; }

    // ---- degree-0 basis ----
    const std::vector<Basis0Element> &basis0() const { return basis0_; }
    int b0_h(int I) const { return I; }
    int b0_e(int rootIdx) const { return n_ + rootIdx; }
    int b0_f(int rootIdx) const { return n_ + static_cast<int>(posroots_.size()) + rootIdx; }
    const std::vector<BWeight> &positive_roots() const { return posroots_; }

    BWeight basis0_weight(int b) const
    {
        const auto &el = basis0_[b];
        if (el.kind == Basis0Element::H)
            return BWeight(n_, 0);
        BWeight w = posroots_[el.idx];
        if (el.kind == Basis0Element::F)
            for (auto &c : w)
                c = -c;
        return w;
    }

    std::string basis0_name(int b) const
    {
        const auto &el = basis0_[b];
        if (el.kind == Basis0Element::H)
            return "h" + std::to_string(el.idx);
        std::string s = el.kind == Basis0Element::E ? "e[" : "f[";
        const auto &rt = posroots_[el.idx];
        for (int i = 0; i < n_; ++i) {
            if (i)
                s += ",";
            s += std::to_string(rt[i]);
        }
        return s + "]";
    }

    // ---- degree +-1 module basis (mirrored words at degree -1) ----
    int dim_module() const { return static_cast<int>(modwords_.size()); }
    const std::vector<int> &module_words() const { return modwords_; }
    const BWeight &module_weight(int m) const { return modweights_[m]; }
    int module_index_of_word(int w) const
    {
        auto it = word_to_mod_.find(w);
        return it == word_to_mod_.end() ? -1 : it->second;
    }

    // scalar mu(h_I) for a weight mu in simple-root coordinates
    Rational weight_on_h(const BWeight &mu, int I) const
    {
        Rational s(0);
        for (int j = 0; j < n_; ++j)
            if (mu[j] != 0)
                s += M_(I, j) * Rational(mu[j]);
        return s;
    }

    // ---- brackets ----

    // [x, y] for degree-0 basis elements; result over the degree-0 basis.
    const SparseVec<int> &bracket00(int a, int b) const
    {
        auto key = std::make_pair(a, b);
        auto it = br00_.find(key);
        if (it != br00_.end())
            return it->second;
        SparseVec<int> v = compute_bracket00(a, b);
        return br00_.emplace(key, std::move(v)).first->second;
    }

    SparseVec<int> bracket00_apply(int a, const SparseVec<int> &x) const
    {
        SparseVec<int> r;
        for (const auto &[b, c] : x.terms())
            r.add_scaled(bracket00(a, b), c);
        return r;
    }

    // [z, m] for z in the degree-0 basis acting on a degree +-1 basis
    // element (side = +1 or -1); result over the same side's basis.
    const SparseVec<int> &act(int z, int side, int m) const
    {
        auto key = std::make_tuple(z, side, m);
        auto it = act_.find(key);
        if (it != act_.end())
            return it->second;
        SparseVec<int> v = compute_act(z, side, m);
        return act_.emplace(key, std::move(v)).first->second;
    }

    SparseVec<int> act_apply(int z, int side, const SparseVec<int> &x) const
    {
        SparseVec<int> r;
        for (const auto &[m, c] : x.terms())
            r.add_scaled(act(z, side, m), c);
        return r;
    }

    // [x_{-1}, y_{+1}] for module basis indices; result over degree-0 basis.
    const SparseVec<int> &mixed(int i, int j) const
    {
        auto key = std::make_pair(i, j);
        auto it = mixed_.find(key);
        if (it != mixed_.end())
            return it->second;
        SparseVec<int> v = compute_mixed(modwords_[i], modwords_[j]);
        return mixed_.emplace(key, std::move(v)).first->second;
    }

    // invariant pairing <minus_i | plus_j>
    Rational pairing(int i, int j) const
    {
        return pair_words(modwords_[i], modwords_[j]);
    }

    // invariant form on the degree-0 part
    Rational pair00(int a, int b) const
    {
        const auto &x = basis0_[a];
        const auto &y = basis0_[b];
        if (x.kind == Basis0Element::H && y.kind == Basis0Element::H)
            return M_(x.idx, y.idx) * norm_[y.idx];
        if (x.kind == Basis0Element::E && y.kind == Basis0Element::F &&
            x.idx == y.idx)
            return root_form_value(x.idx);
        if (x.kind == Basis0Element::F && y.kind == Basis0Element::E &&
            x.idx == y.idx)
            return root_form_value(x.idx);
        return Rational(0);
    }

    // structure constant scale of the tower basis: e_root = word / chevalley_c
    Rational chevalley_scale(int rootIdx) const { return cnorm_[rootIdx]; }

  private:
    QMatrix M_;
    std::vector<Rational> norm_;
    int seed_;
    int n_;

    mutable WordPool pool_;

    struct Space {
        std::vector<int> basis;   // chosen basis words
        QMatrix gram;             // P(mirror(basis_i), basis_j)
        QMatrix gram_inv;
    };
    std::map<BWeight, Space> spaces_;
    mutable std::map<int, BWeight> word_weight_;

    std::vector<BWeight> posroots_; // even weights with a basis, by (ht,lex)
    std::map<BWeight, int> posroot_idx_;
    std::vector<int> towerword_;    // basis word of each positive root
    std::vector<Rational> cnorm_;   // Chevalley normalisation per root

    std::vector<Basis0Element> basis0_;

    std::vector<int> modwords_;
    std::vector<BWeight> modweights_;
    std::map<int, int> word_to_mod_;

    mutable std::map<std::pair<int, int>, Rational> pair_cache_;
    mutable std::map<std::pair<int, int>, SparseVec<int>> lower_cache_;
    mutable std::map<int, SparseVec<int>> resolve_cache_;
    mutable std::map<std::pair<int, int>, SparseVec<int>> br00_;
    mutable std::map<std::tuple<int, int, int>, SparseVec<int>> act_;
    mutable std::map<std::pair<int, int>, SparseVec<int>> mixed_;

    static int ht(const BWeight &w)
    {
        int h = 0;
        for (int c : w)
            h += c;
        return h;
    }

    int word_new(int letter, int sub, const BWeight &wt)
    {
        int id = sub < 0 ? pool_.leaf(letter) : pool_.compose(letter, sub);
        word_weight_.emplace(id, wt);
        return id;
    }
    const BWeight &wt_of(int w) const { return word_weight_.at(w); }

    // Closure of all reachable weight spaces, by increasing height.
    void close_weights()
    {
        std::map<BWeight, std::vector<int>> level; // candidates per weight
        for (int k = 0; k < n_; ++k) {
            BWeight w(n_, 0);
            w[k] = 1;
            level[w].push_back(word_new(k, -1, w));
        }
        const int height_cap = 1 << 14;
        for (int h = 1; !level.empty(); ++h) {
            if (h > height_cap)
                throw ConfigError("weight closure did not terminate");
            std::map<BWeight, std::vector<int>> next;
            for (auto &[mu, cands] : level) {
                Space sp = select_basis(mu, cands);
                if (sp.basis.empty())
                    continue;
                spaces_.emplace(mu, std::move(sp));
                const Space &stored = spaces_.at(mu);
                for (int k = 0; k < n_; ++k) {
                    if (k == seed_)
                        continue;
                    BWeight up = mu;
                    ++up[k];
                    for (int b : stored.basis)
                        next[up].push_back(word_new(k, b, up));
                }
            }
            level = std::move(next);
        }
    }

    // Basis selection at one weight: column-pivot elimination on the full
    // candidate Gram; the chosen words pair nonsingularly against their
    // own mirrors (the involution maps radical to radical).
    Space select_basis(const BWeight &mu, const std::vector<int> &cands)
    {
        size_t m = cands.size();
        QMatrix G(m, m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                G(i, j) = pair_words(cands[i], cands[j]);
        // column echelon with row pivoting to find independent columns
        QMatrix work = G;
        std::vector<size_t> pivot_cols;
        size_t row = 0;
        for (size_t col = 0; col < m && row < m; ++col) {
            size_t piv = row;
            while (piv < m && work(piv, col).is_zero())
                ++piv;
            if (piv == m)
                continue;
            if (piv != row)
                for (size_t j = 0; j < m; ++j)
                    std::swap(work(piv, j), work(row, j));
            for (size_t i = row + 1; i < m; ++i) {
                if (work(i, col).is_zero())
                    continue;
                Rational f = work(i, col) / work(row, col);
                for (size_t j = col; j < m; ++j)
                    work(i, j) -= f * work(row, j);
            }
            pivot_cols.push_back(col);
            ++row;
        }
        Space sp;
        for (size_t c : pivot_cols)
            sp.basis.push_back(cands[c]);
        size_t d = pivot_cols.size();
        if (d == 0)
            return sp;
        sp.gram = QMatrix(d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                sp.gram(i, j) = G(pivot_cols[i], pivot_cols[j]);
        auto inv = sp.gram.inverse();
        if (!inv)
            throw std::logic_error("quotient pairing unexpectedly degenerate");
        sp.gram_inv = *inv;
        return sp;
    }

    void index_basis0()
    {
        for (const auto &[mu, sp] : spaces_) {
            if (seed_ >= 0 && mu[seed_] != 0)
                continue;
            if (static_cast<int>(sp.basis.size()) != 1)
                throw std::logic_error("even root space is not one-dimensional");
            posroots_.push_back(mu);
        }
        std::sort(posroots_.begin(), posroots_.end(),
                  [](const BWeight &x, const BWeight &y) {
                      if (ht(x) != ht(y))
                          return ht(x) < ht(y);
                      return x < y;
                  });
        for (size_t i = 0; i < posroots_.size(); ++i)
            posroot_idx_.emplace(posroots_[i], static_cast<int>(i));

        towerword_.resize(posroots_.size());
        cnorm_.resize(posroots_.size());
        for (size_t i = 0; i < posroots_.size(); ++i) {
            const BWeight &mu = posroots_[i];
            int w = spaces_.at(mu).basis[0];
            towerword_[i] = w;
            if (pool_.is_leaf(w)) {
                cnorm_[i] = Rational(1);
            } else {
                int k = pool_.letter(w);
                BWeight beta = mu;
                --beta[k];
                cnorm_[i] =
                    cnorm_[posroot_idx_.at(beta)] * Rational(pstring(k, beta) + 1);
            }
        }

        for (int I = 0; I < n_; ++I)
            basis0_.push_back({Basis0Element::H, I});
        for (size_t i = 0; i < posroots_.size(); ++i)
            basis0_.push_back({Basis0Element::E, static_cast<int>(i)});
        for (size_t i = 0; i < posroots_.size(); ++i)
            basis0_.push_back({Basis0Element::F, static_cast<int>(i)});
    }

    void index_module()
    {
        std::vector<BWeight> wts;
        for (const auto &[mu, sp] : spaces_)
            if (mu[seed_] == 1)
                wts.push_back(mu);
        std::sort(wts.begin(), wts.end(), [](const BWeight &x, const BWeight &y) {
            if (ht(x) != ht(y))
                return ht(x) < ht(y);
            return x < y;
        });
        for (const auto &mu : wts)
            for (int b : spaces_.at(mu).basis) {
                word_to_mod_.emplace(b, static_cast<int>(modwords_.size()));
                modwords_.push_back(b);
                modweights_.push_back(mu);
            }
    }

    // largest q with beta - q*alpha_k still a root (the down-string length)
    int pstring(int k, BWeight beta) const
    {
        int p = 0;
        while (true) {
            --beta[k];
            if (beta[k] < 0 || !posroot_idx_.count(beta))
                break;
            ++p;
        }
        return p;
    }

    bool odd_index(int k) const { return k == seed_; }
    bool odd_weight(const BWeight &mu) const
    {
        return seed_ >= 0 && (mu[seed_] & 1);
    }

    // ---- invariant pairing between mirrored and plain words ----
    //
    // P(x, y) = <mirror(x) | y>.  Peeling the outer letter f_j of the
    // mirror side and using invariance plus graded antisymmetry:
    //   <[f_j, x'] | y> = -(-1)^{|f_j||x'|} <x' | [f_j, y]>.
    // Outer letters are never the odd seed, so the sign is always -1.
    Rational pair_words(int x, int y) const
    {
        if (wt_of(x) != wt_of(y))
            return Rational(0);
        auto key = std::make_pair(x, y);
        auto it = pair_cache_.find(key);
        if (it != pair_cache_.end())
            return it->second;
        Rational r(0);
        if (pool_.is_leaf(x)) {
            if (pool_.is_leaf(y) && pool_.letter(y) == pool_.letter(x)) {
                int i = pool_.letter(x);
                r = odd_index(i) ? -norm_[i] : norm_[i];
            }
        } else {
            int j = pool_.letter(x);
            const SparseVec<int> &low = lower(j, y);
            for (const auto &[u, c] : low.terms())
                r -= c * pair_words(pool_.sub(x), u);
        }
        pair_cache_.emplace(key, r);
        return r;
    }

    // [f_j, w] for j != seed, expressed over the basis words one level
    // down. Words of length one map to zero here (the Cartan leak of
    // [f_j, e_j] is handled where brackets need it).
    const SparseVec<int> &lower(int j, int w) const
    {
        auto key = std::make_pair(j, w);
        auto it = lower_cache_.find(key);
        if (it != lower_cache_.end())
            return it->second;
        SparseVec<int> r;
        if (!pool_.is_leaf(w)) {
            int k = pool_.letter(w);
            int v = pool_.sub(w);
            if (j == k) { // [[f_j, e_j], v] = -[h_j, v]
                Rational s = -weight_on_h(wt_of(v), j);
                r.add_scaled(resolve(v), s);
            }
            if (pool_.is_leaf(v)) {
                int i = pool_.letter(v);
                if (i == j && !odd_index(i)) { // [e_k, [f_j, e_j]] = M_jk e_k
                    BWeight wk(n_, 0);
                    wk[k] = 1;
                    r.add(spaces_.at(wk).basis[0], M_(j, k));
                }
            } else {
                const SparseVec<int> &sub = lower(j, v);
                for (const auto &[u, c] : sub.terms()) {
                    BWeight up = wt_of(u);
                    ++up[k];
                    r.add_scaled(resolve_raw(k, u, up), c);
                }
            }
        }
        return lower_cache_.emplace(key, std::move(r)).first->second;
    }

    // basis-word expansion of an arbitrary word via the Gram solve
    const SparseVec<int> &resolve(int w) const
    {
        auto it = resolve_cache_.find(w);
        if (it != resolve_cache_.end())
            return it->second;
        SparseVec<int> r;
        const BWeight &mu = wt_of(w);
        auto sit = spaces_.find(mu);
        if (sit != spaces_.end()) {
            const Space &sp = sit->second;
            bool in_basis = false;
            for (int b : sp.basis)
                if (b == w) {
                    r.add(w, Rational(1));
                    in_basis = true;
                    break;
                }
            if (!in_basis) {
                size_t d = sp.basis.size();
                std::vector<Rational> rhs(d);
                for (size_t i = 0; i < d; ++i)
                    rhs[i] = pair_words(sp.basis[i], w);
                for (size_t j = 0; j < d; ++j) {
                    Rational c(0);
                    for (size_t i = 0; i < d; ++i)
                        c += sp.gram_inv(j, i) * rhs[i];
                    r.add(sp.basis[j], c);
                }
            }
        }
        return resolve_cache_.emplace(w, std::move(r)).first->second;
    }

    SparseVec<int> resolve_raw(int letter, int sub, const BWeight &up) const
    {
        if (!spaces_.count(up))
            return SparseVec<int>();
        int w = pool_.compose(letter, sub);
        word_weight_.emplace(w, up);
        return resolve(w);
    }

    Rational root_form_value(int rootIdx) const
    {
        // <e_alpha | f_alpha> with f_alpha the mirrored word, from the
        // pairing of the raw tower word with itself, rescaled.
        int w = towerword_[rootIdx];
        Rational raw = pair_words(w, w);
        // graded symmetry: even elements, <e|f> = <f|e>
        return raw / (cnorm_[rootIdx] * cnorm_[rootIdx]);
    }

    // ---- degree-0 brackets ----

    SparseVec<int> compute_bracket00(int a, int b) const
    {
        const Basis0Element &x = basis0_[a];
        const Basis0Element &y = basis0_[b];
        SparseVec<int> r;
        if (x.kind == Basis0Element::H) {
            if (y.kind == Basis0Element::H)
                return r;
            Rational s = weight_on_h(basis0_weight(b), x.idx);
            r.add(b, s);
            return r;
        }
        if (y.kind == Basis0Element::H) {
            r = compute_bracket00(b, a);
            return r.scaled(Rational(-1));
        }
        // both root vectors
        int hx = ht(posroots_[x.idx]);
        if (hx == 1)
            return simple_bracket(x, b);
        // peel the tower: e_gamma = [e_k, e_beta]/(p+1)
        int w = towerword_[x.idx];
        int k = pool_.letter(w);
        BWeight beta = posroots_[x.idx];
        --beta[k];
        int betaIdx = posroot_idx_.at(beta);
        int p = pstring(k, beta);
        int kb = x.kind == Basis0Element::E ? b0_e_simple(k) : b0_f_simple(k);
        int bb = x.kind == Basis0Element::E ? b0_e(betaIdx) : b0_f(betaIdx);
        SparseVec<int> t1 = bracket00_apply(kb, bracket00(bb, b));
        SparseVec<int> t2 = bracket00_apply(bb, bracket00(kb, b));
        t1 -= t2;
        return t1.scaled(Rational(1, p + 1));
    }

    int b0_e_simple(int k) const
    {
        BWeight w(n_, 0);
        w[k] = 1;
        return b0_e(posroot_idx_.at(w));
    }
    int b0_f_simple(int k) const
    {
        BWeight w(n_, 0);
        w[k] = 1;
        return b0_f(posroot_idx_.at(w));
    }

    // brackets with a simple (height-1) root vector on the left
    SparseVec<int> simple_bracket(const Basis0Element &x, int b) const
    {
        const Basis0Element &y = basis0_[b];
        int k = simple_letter(x.idx);
        SparseVec<int> r;
        if (x.kind == Basis0Element::E) {
            if (y.kind == Basis0Element::E) {
                // resolve [e_k, W_delta] one level up
                BWeight up = posroots_[y.idx];
                ++up[k];
                SparseVec<int> words =
                    resolve_raw(k, towerword_[y.idx], up);
                for (const auto &[u, c] : words.terms()) {
                    int gi = posroot_idx_.at(wt_of(u));
                    r.add(b0_e(gi), c * cnorm_[gi] / cnorm_[y.idx]);
                }
            } else { // E against F
                int hy = ht(posroots_[y.idx]);
                if (hy == 1) {
                    if (simple_letter(y.idx) == k)
                        r.add(b0_h(k), Rational(1)); // [e_k, f_k] = h_k
                } else {
                    // mirror of [f_k, e_delta]
                    const SparseVec<int> &low = lower(k, towerword_[y.idx]);
                    for (const auto &[u, c] : low.terms()) {
                        int gi = posroot_idx_.at(wt_of(u));
                        r.add(b0_f(gi), c * cnorm_[gi] / cnorm_[y.idx]);
                    }
                }
            }
        } else { // x.kind == F
            if (y.kind == Basis0Element::F) {
                BWeight up = posroots_[y.idx];
                ++up[k];
                SparseVec<int> words = resolve_raw(k, towerword_[y.idx], up);
                for (const auto &[u, c] : words.terms()) {
                    int gi = posroot_idx_.at(wt_of(u));
                    r.add(b0_f(gi), c * cnorm_[gi] / cnorm_[y.idx]);
                }
            } else { // F against E
                int hy = ht(posroots_[y.idx]);
                if (hy == 1) {
                    if (simple_letter(y.idx) == k)
                        r.add(b0_h(k), Rational(-1)); // [f_k, e_k] = -h_k
                } else {
                    const SparseVec<int> &low = lower(k, towerword_[y.idx]);
                    for (const auto &[u, c] : low.terms()) {
                        int gi = posroot_idx_.at(wt_of(u));
                        r.add(b0_e(gi), c * cnorm_[gi] / cnorm_[y.idx]);
                    }
                }
            }
        }
        return r;
    }

    int simple_letter(int rootIdx) const
    {
        const BWeight &w = posroots_[rootIdx];
        for (int k = 0; k < n_; ++k)
            if (w[k] == 1)
                return k;
        throw std::logic_error("not a simple root");
    }

    // ---- module action ----

    SparseVec<int> compute_act(int z, int side, int m) const
    {
        const Basis0Element &el = basis0_[z];
        SparseVec<int> r;
        int w = modwords_[m];
        if (el.kind == Basis0Element::H) {
            Rational s = weight_on_h(modweights_[m], el.idx);
            if (side < 0)
                s = -s;
            r.add(m, s);
            return r;
        }
        int hz = ht(posroots_[el.idx]);
        if (hz == 1) {
            int k = simple_letter(el.idx);
            bool raising = (el.kind == Basis0Element::E) == (side > 0);
            if (raising) {
                BWeight up = modweights_[m];
                ++up[k];
                SparseVec<int> words = resolve_raw(k, w, up);
                for (const auto &[u, c] : words.terms())
                    r.add(word_to_mod_.at(u), c);
            } else {
                const SparseVec<int> &low = lower(k, w);
                for (const auto &[u, c] : low.terms())
                    r.add(word_to_mod_.at(u), c);
            }
            return r;
        }
        // tower recursion
        int tw = towerword_[el.idx];
        int k = pool_.letter(tw);
        BWeight beta = posroots_[el.idx];
        --beta[k];
        int betaIdx = posroot_idx_.at(beta);
        int p = pstring(k, beta);
        int kb = el.kind == Basis0Element::E ? b0_e_simple(k) : b0_f_simple(k);
        int bb = el.kind == Basis0Element::E ? b0_e(betaIdx) : b0_f(betaIdx);
        SparseVec<int> t1 = act_apply(kb, side, act(bb, side, m));
        SparseVec<int> t2 = act_apply(bb, side, act(kb, side, m));
        t1 -= t2;
        return t1.scaled(Rational(1, p + 1));
    }

    // ---- mixed bracket [x_{-1}, y_{+1}] ----

    SparseVec<int> compute_mixed(int xw, int yw) const
    {
        if (pool_.is_leaf(xw))
            return mixed_seed(yw);
        // x = [f_j, x']; Jacobi with the even letter f_j:
        // [[f_j,x'], y] = [f_j, [x',y]] - [x', [f_j, y]]
        int j = pool_.letter(xw);
        int xsub = pool_.sub(xw);
        SparseVec<int> r =
            bracket00_apply(b0_f_simple(j), mixed(word_to_mod_.at(xsub),
                                                  word_to_mod_.at(yw)));
        const SparseVec<int> &low = lower(j, yw);
        for (const auto &[u, c] : low.terms())
            r.add_scaled(mixed(word_to_mod_.at(xsub), word_to_mod_.at(u)), -c);
        return r;
    }

    // [f_0, y] with y a module word; bottoms out at [f_0, e_0] = h_0.
    SparseVec<int> mixed_seed(int yw) const
    {
        if (pool_.is_leaf(yw)) {
            SparseVec<int> r;
            r.add(b0_h(seed_), Rational(1));
            return r;
        }
        int k = pool_.letter(yw);
        return bracket00_apply(b0_e_simple(k), mixed_seed(pool_.sub(yw)));
    }
};

// ---- Lie-level elements of B^L and their bracket/pairing ----

struct LieElement {
    SparseVec<int> minus; // over the degree -1 basis (mirrored module)
    SparseVec<int> zero;  // over the degree 0 basis
    SparseVec<int> plus;  // over the degree +1 basis

    bool is_zero() const
    {
        return minus.is_zero() && zero.is_zero() && plus.is_zero();
    }
    friend bool operator==(const LieElement &a, const LieElement &b)
    {
        return a.minus == b.minus && a.zero == b.zero && a.plus == b.plus;
    }
};

struct StructureTables; // forward (focal layer)

// The constructed local part together with its Cartan-side data.
class LocalAlgebra {
  public:
    LocalAlgebra(CartanData cd, WeightData wd)
        : cartan(std::move(cd)), weight(std::move(wd)),
          ext(build_B(cartan, weight)),
          engine(make_engine(cartan, weight, ext))
    {
        ext.require_invertible();
    }

    CartanData cartan;
    WeightData weight;
    ExtendedMatrix ext;
    ContragredientEngine engine;

    int rank() const { return cartan.rank; }
    int dim0() const { return static_cast<int>(engine.basis0().size()); }
    int dim_plus() const { return engine.dim_module(); }

    // L = sum_I (B^{-1})_{0I} h_I as a degree-0 vector
    SparseVec<int> L() const
    {
        SparseVec<int> r;
        for (int I = 0; I <= rank(); ++I)
            r.add(engine.b0_h(I), ext.Lcoef[I]);
        return r;
    }

    LieElement make_h(int I) const
    {
        LieElement e;
        e.zero.add(engine.b0_h(I), Rational(1));
        return e;
    }
    LieElement make_e(int K) const
    {
        LieElement e;
        if (K == 0)
            e.plus.add(0, Rational(1)); // e_0 is the first module vector
        else
            e.zero.add(simple_e_index(K), Rational(1));
        return e;
    }
    LieElement make_f(int K) const
    {
        LieElement e;
        if (K == 0)
            e.minus.add(0, Rational(1));
        else
            e.zero.add(simple_f_index(K), Rational(1));
        return e;
    }

    int simple_e_index(int k) const
    {
        BWeight w(rank() + 1, 0);
        w[k] = 1;
        for (size_t i = 0; i < engine.positive_roots().size(); ++i)
            if (engine.positive_roots()[i] == w)
                return engine.b0_e(static_cast<int>(i));
        throw std::logic_error("missing simple root");
    }
    int simple_f_index(int k) const
    {
        BWeight w(rank() + 1, 0);
        w[k] = 1;
        for (size_t i = 0; i < engine.positive_roots().size(); ++i)
            if (engine.positive_roots()[i] == w)
                return engine.b0_f(static_cast<int>(i));
        throw std::logic_error("missing simple root");
    }

    // graded bracket of B^L; defined for degree sums in {-1, 0, 1}
    LieElement bracket(const LieElement &x, const LieElement &y) const
    {
        if ((!x.plus.is_zero() && !y.plus.is_zero()) ||
            (!x.minus.is_zero() && !y.minus.is_zero()))
            throw DomainError("bracket undefined: degree sum outside {-1,0,1}");
        LieElement r;
        // [0,0]
        for (const auto &[a, ca] : x.zero.terms())
            for (const auto &[b, cb] : y.zero.terms())
                r.zero.add_scaled(engine.bracket00(a, b), ca * cb);
        // [0,+1], [0,-1]
        for (const auto &[a, ca] : x.zero.terms()) {
            for (const auto &[m, cm] : y.plus.terms())
                r.plus.add_scaled(engine.act(a, +1, m), ca * cm);
            for (const auto &[m, cm] : y.minus.terms())
                r.minus.add_scaled(engine.act(a, -1, m), ca * cm);
        }
        // [+1,0], [-1,0]: graded antisymmetry, the 0 side is even
        for (const auto &[b, cb] : y.zero.terms()) {
            for (const auto &[m, cm] : x.plus.terms())
                r.plus.add_scaled(engine.act(b, +1, m), -cb * cm);
            for (const auto &[m, cm] : x.minus.terms())
                r.minus.add_scaled(engine.act(b, -1, m), -cb * cm);
        }
        // [-1,+1] and [+1,-1]: both odd, bracket symmetric
        for (const auto &[i, ci] : x.minus.terms())
            for (const auto &[j, cj] : y.plus.terms())
                r.zero.add_scaled(engine.mixed(i, j), ci * cj);
        for (const auto &[j, cj] : x.plus.terms())
            for (const auto &[i, ci] : y.minus.terms())
                r.zero.add_scaled(engine.mixed(i, j), ci * cj);
        return r;
    }

    // invariant pairing of opposite nonzero degrees
    Rational pair(const LieElement &x, const LieElement &y) const
    {
        bool xm = !x.minus.is_zero(), xp = !x.plus.is_zero();
        bool ym = !y.minus.is_zero(), yp = !y.plus.is_zero();
        if (!x.zero.is_zero() || !y.zero.is_zero() || (xm && xp) || (ym && yp) ||
            (xm && ym) || (xp && yp))
            throw DomainError("pair requires opposite nonzero degrees");
        Rational s(0);
        if (xm) {
            for (const auto &[i, ci] : x.minus.terms())
                for (const auto &[j, cj] : y.plus.terms())
                    s += ci * cj * engine.pairing(i, j);
        } else if (xp) {
            // <x_{+1} | y_{-1}> = (-1)^{xy} <y|x> = -<y|x>
            for (const auto &[i, ci] : y.minus.terms())
                for (const auto &[j, cj] : x.plus.terms())
                    s -= ci * cj * engine.pairing(i, j);
        }
        return s;
    }

  private:
    static ContragredientEngine make_engine(const CartanData &cd,
                                            const WeightData &wd,
                                            const ExtendedMatrix &ext)
    {
        ext.require_invertible();
        std::vector<Rational> norm(cd.rank + 1);
        norm[0] = Rational(1); // <e_0|f_0> = 1
        for (int k = 0; k < cd.rank; ++k)
            norm[k + 1] = wd.kappa[k];
        return ContragredientEngine(ext.B, std::move(norm), 0);
    }
};

inline LocalAlgebra build_local_part(const CartanData &cd, const WeightData &wd)
{
    return LocalAlgebra(cd, wd);
}

// Standalone Chevalley structure constants of g itself (no odd index).
inline ContragredientEngine chevalley_constants(const CartanData &cd)
{
    return ContragredientEngine(cd.A, kappa_canonical(cd), -1);
}

struct Prop41Hit {
    int module_index;
    BWeight root;
    Rational factor; // (alpha_0^v, alpha) + 1
};

// ((alpha_0^v, alpha) + 1) [f_0, e_alpha] for every basis vector of B_1
// with alpha != alpha_0; returns the nonzero cases.
inline std::vector<Prop41Hit> prop41_scan(const LocalAlgebra &alg)
{
    std::vector<Prop41Hit> hits;
    const auto &eng = alg.engine;
    for (int m = 0; m < eng.dim_module(); ++m) {
        const BWeight &alpha = eng.module_weight(m);
        if (height(alpha) == 1)
            continue; // alpha = alpha_0 itself
        Rational factor(1);
        for (int J = 0; J <= alg.rank(); ++J)
            if (alpha[J] != 0)
                factor += alg.ext.B(0, J) * Rational(alpha[J]);
        if (factor.is_zero())
            continue;
        if (!eng.mixed(0, m).is_zero())
            hits.push_back({m, alpha, factor});
    }
    return hits;
}

} // namespace thaforge

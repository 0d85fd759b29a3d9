// The focally associative local superalgebra B^l over U(B_0), its product
// and the commutator algebra B^commutator, plus the identity-check
// harnesses.
//
// Degrees 0 live in U(B_0) (EnvElement); degrees +-1 live in
// B_{+-1} x U(B_0) (TensorElement keys are (module index, monomial)).
// The product is defined recursively: the base rule x(y (x) v) = (xy) v
// with the degree crossings
//   x_{-1} y_{+1} = -a [[x,y]] + b <x|y> L
//   x_{+1} y_{-1} =  a [[x,y]] + b <x|y> L + c <x|y>
// and the master rule
//   (x (x) uz)(y (x) v) = (x (x) u)([[z,y]] (x) v) + (x (x) u)(y (x) zv),
// peeling the last monomial factor of the left tensor (z is even, so no
// signs appear in the recursion).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "thaforge/env.hpp"
#include "thaforge/errors.hpp"
#include "thaforge/superlocal.hpp"

namespace thaforge {

struct ProductConstants {
    Rational a{1}, b{1}, c{1};
};

using TensorKey = std::pair<int, Monomial>; // (module basis index, monomial)
using TensorElement = SparseVec<TensorKey>;

inline TensorElement tensor_of(int moduleIdx, const Monomial &m = Monomial{})
{
    TensorElement t;
    t.add({moduleIdx, m}, Rational(1));
    return t;
}

// Element of B^l with components at degrees -1, 0, +1.  Parity follows the
// consistent grading: the +-1 components are odd, the 0 component even.
struct LocalElement {
    TensorElement minus;
    EnvElement zero;
    TensorElement plus;

    bool is_zero() const
    {
        return minus.is_zero() && zero.is_zero() && plus.is_zero();
    }
    friend bool operator==(const LocalElement &x, const LocalElement &y)
    {
        return x.minus == y.minus && x.zero == y.zero && x.plus == y.plus;
    }
    friend LocalElement operator+(LocalElement x, const LocalElement &y)
    {
        x.minus += y.minus;
        x.zero += y.zero;
        x.plus += y.plus;
        return x;
    }
    friend LocalElement operator-(LocalElement x, const LocalElement &y)
    {
        x.minus -= y.minus;
        x.zero -= y.zero;
        x.plus -= y.plus;
        return x;
    }
    LocalElement scaled(const Rational &c) const
    {
        LocalElement r;
        r.minus = minus.scaled(c);
        r.zero = zero.scaled(c);
        r.plus = plus.scaled(c);
        return r;
    }
    static LocalElement from_zero(EnvElement u)
    {
        LocalElement r;
        r.zero = std::move(u);
        return r;
    }
    static LocalElement from_plus(TensorElement t)
    {
        LocalElement r;
        r.plus = std::move(t);
        return r;
    }
    static LocalElement from_minus(TensorElement t)
    {
        LocalElement r;
        r.minus = std::move(t);
        return r;
    }
};

inline int filtration(const TensorElement &t)
{
    int f = 0;
    for (const auto &[k, c] : t.terms())
        f = std::max(f, filtration(k.second));
    return f;
}

class FocalEngine {
  public:
    FocalEngine(const LocalAlgebra &alg, ProductConstants k = {})
        : alg_(&alg), pbw_(alg.engine), k_(k)
    {
        for (int I = 0; I <= alg.rank(); ++I)
            L_.add(Monomial{alg.engine.b0_h(I)}, alg.ext.Lcoef[I]);
    }

    const LocalAlgebra &algebra() const { return *alg_; }
    const PBW &pbw() const { return pbw_; }
    const ProductConstants &constants() const { return k_; }
    const EnvElement &L() const { return L_; }

    // x_{-sigma} y_{sigma} for module basis elements; sigma = +1 gives the
    // x_{-1} y_{+1} rule, sigma = -1 the x_{+1} y_{-1} rule.
    EnvElement cross_base(int sigma, int x, int y) const
    {
        EnvElement r;
        if (sigma > 0) { // x at degree -1, y at degree +1
            r.add_scaled(env_of(alg_->engine.mixed(x, y)), -k_.a);
            Rational form = alg_->engine.pairing(x, y);
            r.add_scaled(L_, k_.b * form);
        } else { // x at degree +1, y at degree -1
            r.add_scaled(env_of(alg_->engine.mixed(y, x)), k_.a);
            Rational form = -alg_->engine.pairing(y, x); // <x_{+1}|y_{-1}>
            r.add_scaled(L_, k_.b * form);
            r.add(Monomial{}, k_.c * form);
        }
        return r;
    }

    // z (x (x) v) = [[z,x]] (x) v + x (x) (z v), for one degree-0 basis z
    TensorElement left_act(int z, int side, const TensorElement &t) const
    {
        TensorElement r;
        for (const auto &[key, c] : t.terms()) {
            const auto &[m, v] = key;
            const SparseVec<int> &zx = alg_->engine.act(z, side, m);
            for (const auto &[m2, c2] : zx.terms())
                r.add({m2, v}, c * c2);
            const EnvElement &zv = pbw_.lmul(z, v);
            for (const auto &[mono, c2] : zv.terms())
                r.add({m, mono}, c * c2);
        }
        return r;
    }

    // u . t for u in U(B_0): monomial factors act right-to-left
    TensorElement env_act(const EnvElement &u, int side, const TensorElement &t) const
    {
        TensorElement r;
        for (const auto &[mono, c] : u.terms()) {
            TensorElement cur = t.scaled(c);
            for (size_t i = mono.size(); i-- > 0;)
                cur = left_act(mono[i], side, cur);
            r += cur;
        }
        return r;
    }

    TensorElement right_mul(const TensorElement &t, const EnvElement &u) const
    {
        TensorElement r;
        for (const auto &[key, c] : t.terms()) {
            const auto &[m, v] = key;
            for (const auto &[mono, c2] : u.terms()) {
                const EnvElement &vw = pbw_.mul(v, mono);
                for (const auto &[m3, c3] : vw.terms())
                    r.add({m, m3}, c * c2 * c3);
            }
        }
        return r;
    }

    // (x (x) u)(y (x) v) with x at degree -sigma... sigma encodes the left
    // factor's degree: sigma = -1 means x in B_{-1}, y in B_{+1}.
    EnvElement cross_product(int sigmaLeft, const TensorElement &xt,
                             const TensorElement &yt) const
    {
        EnvElement r;
        for (const auto &[kx, cx] : xt.terms())
            for (const auto &[ky, cy] : yt.terms())
                r.add_scaled(master(sigmaLeft, kx.first, kx.second, ky.first,
                                    ky.second),
                             cx * cy);
        return r;
    }

    LocalElement product(const LocalElement &X, const LocalElement &Y) const
    {
        if ((!X.minus.is_zero() && !Y.minus.is_zero()) ||
            (!X.plus.is_zero() && !Y.plus.is_zero()))
            throw DomainError("product undefined: degree sum outside {-1,0,1}");
        LocalElement r;
        if (!X.zero.is_zero() && !Y.zero.is_zero())
            r.zero += pbw_.mul(X.zero, Y.zero);
        if (!X.zero.is_zero()) {
            if (!Y.plus.is_zero())
                r.plus += env_act(X.zero, +1, Y.plus);
            if (!Y.minus.is_zero())
                r.minus += env_act(X.zero, -1, Y.minus);
        }
        if (!Y.zero.is_zero()) {
            if (!X.plus.is_zero())
                r.plus += right_mul(X.plus, Y.zero);
            if (!X.minus.is_zero())
                r.minus += right_mul(X.minus, Y.zero);
        }
        if (!X.minus.is_zero() && !Y.plus.is_zero())
            r.zero += cross_product(-1, X.minus, Y.plus);
        if (!X.plus.is_zero() && !Y.minus.is_zero())
            r.zero += cross_product(+1, X.plus, Y.minus);
        return r;
    }

    // graded commutator [X,Y] = XY - (-1)^{XY} YX, parity = degree mod 2
    LocalElement commutator(const LocalElement &X, const LocalElement &Y) const
    {
        if ((!X.minus.is_zero() && !Y.minus.is_zero()) ||
            (!X.plus.is_zero() && !Y.plus.is_zero()))
            throw DomainError("commutator undefined: degree sum outside {-1,0,1}");
        LocalElement r;
        auto accumulate = [&](const LocalElement &A, int pa,
                              const LocalElement &B, int pb) {
            if (A.is_zero() || B.is_zero())
                return;
            LocalElement ab = product(A, B);
            LocalElement ba = product(B, A);
            Rational s((pa & pb) ? 1 : -1);
            r.minus += ab.minus;
            r.zero += ab.zero;
            r.plus += ab.plus;
            r.minus.add_scaled(ba.minus, s);
            r.zero.add_scaled(ba.zero, s);
            r.plus.add_scaled(ba.plus, s);
        };
        LocalElement Xm = LocalElement::from_minus(X.minus);
        LocalElement X0 = LocalElement::from_zero(X.zero);
        LocalElement Xp = LocalElement::from_plus(X.plus);
        LocalElement Ym = LocalElement::from_minus(Y.minus);
        LocalElement Y0 = LocalElement::from_zero(Y.zero);
        LocalElement Yp = LocalElement::from_plus(Y.plus);
        accumulate(Xm, 1, Y0, 0);
        accumulate(Xm, 1, Yp, 1);
        accumulate(X0, 0, Ym, 1);
        accumulate(X0, 0, Y0, 0);
        accumulate(X0, 0, Yp, 1);
        accumulate(Xp, 1, Ym, 1);
        accumulate(Xp, 1, Y0, 0);
        return r;
    }

    LocalElement embed(const LieElement &x) const
    {
        LocalElement r;
        for (const auto &[m, c] : x.minus.terms())
            r.minus.add({m, Monomial{}}, c);
        for (const auto &[b, c] : x.zero.terms())
            r.zero.add(Monomial{b}, c);
        for (const auto &[m, c] : x.plus.terms())
            r.plus.add({m, Monomial{}}, c);
        return r;
    }

  private:
    const LocalAlgebra *alg_;
    PBW pbw_;
    ProductConstants k_;
    EnvElement L_;

    EnvElement master(int sigmaLeft, int x, const Monomial &u, int y,
                      const Monomial &v) const
    {
        auto key = std::make_tuple(sigmaLeft, x, u, y, v);
        auto it = master_cache_.find(key);
        if (it != master_cache_.end())
            return it->second;
        EnvElement r;
        if (u.empty()) {
            // base rule: x (y (x) v) = (xy) v
            EnvElement xy = cross_base(-sigmaLeft, x, y);
            EnvElement vv;
            vv.add(v, Rational(1));
            r = pbw_.mul(xy, vv);
        } else {
            int z = u.back();
            Monomial u1(u.begin(), u.end() - 1);
            const SparseVec<int> &zy = alg_->engine.act(z, -sigmaLeft, y);
            for (const auto &[y2, c] : zy.terms())
                r.add_scaled(master(sigmaLeft, x, u1, y2, v), c);
            const EnvElement &zv = pbw_.lmul(z, v);
            for (const auto &[v2, c] : zv.terms())
                r.add_scaled(master(sigmaLeft, x, u1, y, v2), c);
        }
        master_cache_.emplace(key, r);
        return r;
    }

    mutable std::map<std::tuple<int, int, Monomial, int, Monomial>, EnvElement>
        master_cache_;
};

// ---- identity-check harnesses ----

struct Violation {
    std::string identity;
    std::string triple;
};

struct CheckReport {
    std::string name;
    uint64_t seed = 0;
    size_t exhaustive_checked = 0;
    size_t sampled_checked = 0;
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

namespace detail {

// all basis-level items of one degree with the given filtration budget
inline std::vector<std::pair<LocalElement, int>>
degree_items(const FocalEngine &fe, int degree, int budget)
{
    std::vector<std::pair<LocalElement, int>> items;
    const auto &eng = fe.algebra().engine;
    int dim0 = static_cast<int>(eng.basis0().size());
    if (degree == 0) {
        // monomials of length <= budget, in graded lex order
        std::vector<Monomial> cur{Monomial{}};
        items.push_back({LocalElement::from_zero(env_unit()), 0});
        for (int len = 1; len <= budget; ++len) {
            std::vector<Monomial> next;
            for (const auto &m : cur)
                for (int b = m.empty() ? 0 : m.back(); b < dim0; ++b) {
                    Monomial m2 = m;
                    m2.push_back(b);
                    next.push_back(m2);
                    EnvElement e;
                    e.add(m2, Rational(1));
                    items.push_back({LocalElement::from_zero(e), len});
                }
            cur = std::move(next);
        }
    } else {
        for (int m = 0; m < eng.dim_module(); ++m) {
            std::vector<Monomial> cur{Monomial{}};
            for (int len = 0; len <= budget; ++len) {
                std::vector<Monomial> next;
                for (const auto &mono : cur) {
                    TensorElement t = tensor_of(m, mono);
                    items.push_back({degree > 0 ? LocalElement::from_plus(t)
                                                : LocalElement::from_minus(t),
                                     len});
                    for (int b = mono.empty() ? 0 : mono.back(); b < dim0; ++b) {
                        Monomial m2 = mono;
                        m2.push_back(b);
                        next.push_back(m2);
                    }
                }
                cur = std::move(next);
            }
        }
    }
    return items;
}

inline std::string describe_degree(int d)
{
    return d == 0 ? "0" : (d > 0 ? "+1" : "-1");
}

inline std::string describe_item(const LocalElement &x)
{
    std::string s;
    auto mono_str = [](const Monomial &m) {
        std::string t = "[";
        for (size_t i = 0; i < m.size(); ++i) {
            if (i)
                t += " ";
            t += std::to_string(m[i]);
        }
        return t + "]";
    };
    for (const auto &[k, c] : x.minus.terms())
        s += c.to_string() + "*(m" + std::to_string(k.first) + " (x) " +
             mono_str(k.second) + ") ";
    for (const auto &[m, c] : x.zero.terms())
        s += c.to_string() + "*" + mono_str(m) + " ";
    for (const auto &[k, c] : x.plus.terms())
        s += c.to_string() + "*(p" + std::to_string(k.first) + " (x) " +
             mono_str(k.second) + ") ";
    if (s.empty())
        s = "0";
    return s;
}

// deterministic sparse random element of one degree
inline LocalElement random_element(const FocalEngine &fe, int degree, int budget,
                                   std::mt19937_64 &rng)
{
    const auto &eng = fe.algebra().engine;
    int dim0 = static_cast<int>(eng.basis0().size());
    auto rnd = [&](int n) { return static_cast<int>(rng() % n); };
    auto coeff = [&]() {
        long long num = 0;
        while (num == 0)
            num = static_cast<long long>(rnd(7)) - 3;
        return Rational(num, 1 + rnd(2));
    };
    auto mono = [&]() {
        int len = budget <= 0 ? 0 : rnd(budget + 1);
        Monomial m;
        for (int i = 0; i < len; ++i)
            m.push_back(rnd(dim0));
        std::sort(m.begin(), m.end());
        return m;
    };
    LocalElement r;
    int terms = 1 + rnd(2);
    for (int t = 0; t < terms; ++t) {
        if (degree == 0) {
            r.zero.add(mono(), coeff());
        } else {
            TensorKey k{rnd(eng.dim_module()), mono()};
            if (degree > 0)
                r.plus.add(k, coeff());
            else
                r.minus.add(k, coeff());
        }
    }
    return r;
}

} // namespace detail

// the 13 focal-associativity configurations
inline std::vector<std::array<int, 3>> focal_configurations()
{
    return {{0, 0, 0},  {1, 0, 0},  {-1, 0, 0}, {0, 0, 1},  {0, 0, -1},
            {0, 1, 0},  {0, -1, 0}, {0, 1, -1}, {0, -1, 1}, {1, -1, 0},
            {-1, 1, 0}, {1, 0, -1}, {-1, 0, 1}};
}

// the two extra configurations that would make the local algebra associative
inline std::vector<std::array<int, 3>> extra_configurations()
{
    return {{1, -1, 1}, {-1, 1, -1}};
}

// Work partition for parallel suite runs: a worker evaluates only the
// triples whose serial index falls in its residue class. Sampling still
// consumes the generator identically in every worker, so results do not
// depend on the partition.
struct RunSlice {
    int jobs = 1;
    int slot = 0;
};

namespace detail {

template <typename Fn>
void for_each_triple(const FocalEngine &fe,
                     const std::vector<std::array<int, 3>> &configs, int cutoff,
                     size_t samples, uint64_t seed, RunSlice slice, Fn &&visit)
{
    if (slice.jobs < 1)
        slice.jobs = 1;
    size_t serial = 0;
    auto mine = [&]() {
        bool own = static_cast<int>(serial % slice.jobs) == slice.slot;
        ++serial;
        return own;
    };
    std::map<int, std::vector<std::pair<LocalElement, int>>> items;
    for (const auto &cfg : configs)
        for (int d : cfg)
            if (!items.count(d))
                items[d] = degree_items(fe, d, cutoff);
    for (const auto &cfg : configs) {
        const auto &us = items[cfg[0]];
        const auto &vs = items[cfg[1]];
        const auto &ws = items[cfg[2]];
        for (const auto &[u, fu] : us) {
            if (fu > cutoff)
                continue;
            for (const auto &[v, fv] : vs) {
                if (fu + fv > cutoff)
                    continue;
                for (const auto &[w, fw] : ws) {
                    if (fu + fv + fw > cutoff)
                        continue;
                    if (mine())
                        visit(cfg, u, v, w, true);
                }
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (size_t s = 0; s < samples; ++s) {
        const auto &cfg = configs[s % configs.size()];
        int b1 = static_cast<int>(rng() % (cutoff + 1));
        int b2 = static_cast<int>(rng() % (cutoff + 1 - b1));
        int b3 = cutoff - b1 - b2;
        LocalElement u = random_element(fe, cfg[0], b1, rng);
        LocalElement v = random_element(fe, cfg[1], b2, rng);
        LocalElement w = random_element(fe, cfg[2], b3, rng);
        if (mine())
            visit(cfg, u, v, w, false);
    }
}

} // namespace detail

// Evaluates (uv)w = u(vw) on the given configurations.
inline CheckReport check_associativity_configs(
    const FocalEngine &fe, const std::vector<std::array<int, 3>> &configs,
    const std::string &name, int cutoff, size_t samples, uint64_t seed,
    RunSlice slice = {})
{
    CheckReport rep;
    rep.name = name;
    rep.seed = seed;
    detail::for_each_triple(
        fe, configs, cutoff, samples, seed, slice,
        [&](const std::array<int, 3> &cfg, const LocalElement &u,
            const LocalElement &v, const LocalElement &w, bool exhaustive) {
            LocalElement lhs = fe.product(fe.product(u, v), w);
            LocalElement rhs = fe.product(u, fe.product(v, w));
            if (exhaustive)
                ++rep.exhaustive_checked;
            else
                ++rep.sampled_checked;
            if (!(lhs == rhs)) {
                std::string id = "(u_" + detail::describe_degree(cfg[0]) +
                                 " v_" + detail::describe_degree(cfg[1]) +
                                 ") w_" + detail::describe_degree(cfg[2]);
                rep.violations.push_back(
                    {id, "u=" + detail::describe_item(u) +
                             " v=" + detail::describe_item(v) +
                             " w=" + detail::describe_item(w) +
                             " lhs-rhs=" + detail::describe_item(lhs - rhs)});
            }
        });
    return rep;
}

// All 13 focal identities; expected zero violations.
inline CheckReport check_focal(const FocalEngine &fe, int cutoff, size_t samples,
                               uint64_t seed, RunSlice slice = {})
{
    return check_associativity_configs(fe, focal_configurations(), "focal",
                                       cutoff, samples, seed, slice);
}

// The two extra identities; status is reported, never asserted.
inline CheckReport check_assoc_extra(const FocalEngine &fe, int cutoff,
                                     size_t samples, uint64_t seed,
                                     RunSlice slice = {})
{
    return check_associativity_configs(fe, extra_configurations(),
                                       "assoc-status", cutoff, samples, seed,
                                       slice);
}

// The three antisymmetry plus five Jacobi identities of B^commutator.
inline CheckReport check_local_lie(const FocalEngine &fe, int cutoff,
                                   size_t samples, uint64_t seed,
                                   RunSlice slice = {})
{
    CheckReport rep;
    rep.name = "lie";
    rep.seed = seed;
    auto parity = [](int d) { return d == 0 ? 0 : 1; };

    std::vector<std::array<int, 3>> antis = {{0, 0, 0}, {1, -1, 0}, {-1, 1, 0}};
    detail::for_each_triple(
        fe, antis, cutoff, samples / 2, seed, slice,
        [&](const std::array<int, 3> &cfg, const LocalElement &u,
            const LocalElement &v, const LocalElement &, bool exhaustive) {
            LocalElement lhs = fe.commutator(u, v);
            LocalElement rhs = fe.commutator(v, u).scaled(
                Rational(parity(cfg[0]) && parity(cfg[1]) ? 1 : -1));
            if (exhaustive)
                ++rep.exhaustive_checked;
            else
                ++rep.sampled_checked;
            if (!(lhs == rhs))
                rep.violations.push_back(
                    {"antisymmetry " + detail::describe_degree(cfg[0]) + "," +
                         detail::describe_degree(cfg[1]),
                     "x=" + detail::describe_item(u) +
                         " y=" + detail::describe_item(v)});
        });

    std::vector<std::array<int, 3>> jacobis = {
        {0, 0, 0}, {0, 0, 1}, {0, 0, -1}, {1, -1, 0}, {-1, 1, 0}};
    detail::for_each_triple(
        fe, jacobis, cutoff, samples - samples / 2, seed + 1, slice,
        [&](const std::array<int, 3> &cfg, const LocalElement &x,
            const LocalElement &y, const LocalElement &z, bool exhaustive) {
            LocalElement lhs = fe.commutator(fe.commutator(x, y), z);
            LocalElement rhs = fe.commutator(x, fe.commutator(y, z));
            LocalElement t2 = fe.commutator(y, fe.commutator(x, z));
            // [[x,y],z] = [x,[y,z]] - (-1)^{xy} [y,[x,z]]
            rhs = rhs - t2.scaled(
                            Rational(parity(cfg[0]) && parity(cfg[1]) ? -1 : 1));
            if (exhaustive)
                ++rep.exhaustive_checked;
            else
                ++rep.sampled_checked;
            if (!(lhs == rhs))
                rep.violations.push_back(
                    {"jacobi " + detail::describe_degree(cfg[0]) + "," +
                         detail::describe_degree(cfg[1]) + "," +
                         detail::describe_degree(cfg[2]),
                     "x=" + detail::describe_item(x) +
                         " y=" + detail::describe_item(y) +
                         " z=" + detail::describe_item(z)});
        });
    return rep;
}

// [x_{+-1}, y_{-+1}] = +-<x|y> and the three mixed-degree commutators equal
// the original bracket, on all basis pairs.
inline CheckReport check_commutator_agreement(const FocalEngine &fe)
{
    CheckReport rep;
    rep.name = "commutator";
    const auto &alg = fe.algebra();
    const auto &eng = alg.engine;
    int dim0 = static_cast<int>(eng.basis0().size());
    int dimM = eng.dim_module();

    auto check_equal = [&](const LocalElement &got, const LocalElement &want,
                           const std::string &id, const std::string &what) {
        ++rep.exhaustive_checked;
        if (!(got == want))
            rep.violations.push_back({id, what});
    };

    // [x_0, y_0] against the Lie bracket
    for (int a = 0; a < dim0; ++a)
        for (int b = 0; b < dim0; ++b) {
            LocalElement x = LocalElement::from_zero(env_basis(a));
            LocalElement y = LocalElement::from_zero(env_basis(b));
            LocalElement want =
                LocalElement::from_zero(env_of(eng.bracket00(a, b)));
            check_equal(fe.commutator(x, y), want, "[x0,y0]",
                        "a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    // [x_0, y_{+-1}] and [x_{+-1}, y_0]
    for (int a = 0; a < dim0; ++a)
        for (int m = 0; m < dimM; ++m) {
            LocalElement x = LocalElement::from_zero(env_basis(a));
            for (int side : {+1, -1}) {
                TensorElement t = tensor_of(m);
                LocalElement y = side > 0 ? LocalElement::from_plus(t)
                                          : LocalElement::from_minus(t);
                TensorElement wantT;
                for (const auto &[m2, c] : eng.act(a, side, m).terms())
                    wantT.add({m2, Monomial{}}, c);
                LocalElement want = side > 0 ? LocalElement::from_plus(wantT)
                                             : LocalElement::from_minus(wantT);
                check_equal(fe.commutator(x, y), want, "[x0,y_pm]",
                            "a=" + std::to_string(a) + " m=" + std::to_string(m));
                check_equal(fe.commutator(y, x), want.scaled(Rational(-1)),
                            "[x_pm,y0]",
                            "a=" + std::to_string(a) + " m=" + std::to_string(m));
            }
        }
    // [x_{-1}, y_{+1}] = -<x|y>, [x_{+1}, y_{-1}] = +<x|y>
    for (int i = 0; i < dimM; ++i)
        for (int j = 0; j < dimM; ++j) {
            LocalElement xm = LocalElement::from_minus(tensor_of(i));
            LocalElement yp = LocalElement::from_plus(tensor_of(j));
            Rational form = eng.pairing(i, j);
            // [x_{-1},y_{+1}] = -c<x|y>; the odd-odd commutator is symmetric
            // and <y_{+1}|x_{-1}> = -<x_{-1}|y_{+1}>, so both orders agree.
            check_equal(fe.commutator(xm, yp),
                        LocalElement::from_zero(env_scalar(-form * fe.constants().c)),
                        "[x-1,y+1]",
                        "i=" + std::to_string(i) + " j=" + std::to_string(j));
            check_equal(fe.commutator(yp, xm),
                        LocalElement::from_zero(env_scalar(-form * fe.constants().c)),
                        "[x+1,y-1]",
                        "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    return rep;
}

} // namespace thaforge

#include "doctest.h"

#include <vector>

#include "thaforge/superlocal.hpp"

using namespace thaforge;

namespace {

LocalAlgebra make(char type, int rank, std::vector<long long> lambda,
                  bool symmetric_kappa = true)
{
    CartanData cd = build_cartan(type, rank);
    auto kappa = symmetric_kappa ? kappa_symmetric(cd) : kappa_canonical(cd);
    return LocalAlgebra(cd, make_weight(cd, std::move(lambda), kappa));
}

// all basis elements of B^L as LieElements, tagged with their Z-degree
struct TaggedBasis {
    std::vector<LieElement> elems;
    std::vector<int> degree;
};

TaggedBasis full_basis(const LocalAlgebra &alg)
{
    TaggedBasis tb;
    for (int m = 0; m < alg.dim_plus(); ++m) {
        LieElement e;
        e.minus.add(m, Rational(1));
        tb.elems.push_back(e);
        tb.degree.push_back(-1);
    }
    for (int b = 0; b < alg.dim0(); ++b) {
        LieElement e;
        e.zero.add(b, Rational(1));
        tb.elems.push_back(e);
        tb.degree.push_back(0);
    }
    for (int m = 0; m < alg.dim_plus(); ++m) {
        LieElement e;
        e.plus.add(m, Rational(1));
        tb.elems.push_back(e);
        tb.degree.push_back(1);
    }
    return tb;
}

int parity_of(int degree) { return degree == 0 ? 0 : 1; }

} // namespace

TEST_CASE("A1 generator relations")
{
    LocalAlgebra alg = make('A', 1, {1});
    LieElement e1 = alg.make_e(1), f1 = alg.make_f(1), h1 = alg.make_h(1);
    // [e1, f1] = h1
    CHECK(alg.bracket(e1, f1) == h1);
    // [h1, e1] = 2 e1
    LieElement two_e1;
    two_e1.zero = e1.zero.scaled(Rational(2));
    CHECK(alg.bracket(h1, e1) == two_e1);
    // [e0, f0] = h0
    CHECK(alg.bracket(alg.make_e(0), alg.make_f(0)) == alg.make_h(0));
    // [f0, e0] = h0 as well (odd-odd bracket is symmetric)
    CHECK(alg.bracket(alg.make_f(0), alg.make_e(0)) == alg.make_h(0));
}

TEST_CASE("A1, Lambda1: module dimensions and Serre relation")
{
    LocalAlgebra alg = make('A', 1, {1});
    CHECK(alg.dim_plus() == 2);
    CHECK(alg.dim0() == 4); // h0, h1, e1, f1
    // (ad e1)^2 e0 = 0
    LieElement e0 = alg.make_e(0), e1 = alg.make_e(1);
    LieElement step = alg.bracket(e1, e0);
    CHECK_FALSE(step.is_zero());
    CHECK(alg.bracket(e1, step).is_zero());
}

TEST_CASE("undefined degree pairings raise domain errors")
{
    LocalAlgebra alg = make('A', 1, {1});
    LieElement e0 = alg.make_e(0), f0 = alg.make_f(0);
    CHECK_THROWS_AS(alg.bracket(e0, e0), DomainError);
    CHECK_THROWS_AS(alg.bracket(f0, f0), DomainError);
    CHECK_NOTHROW(alg.bracket(e0, f0));
    CHECK_THROWS_AS(alg.pair(e0, e0), DomainError);
    CHECK_THROWS_AS(alg.pair(alg.make_h(0), e0), DomainError);
}

TEST_CASE("pairing normalisation and the derived pair <[f1,f0]|[e1,e0]>")
{
    LocalAlgebra alg = make('A', 1, {1});
    LieElement e0 = alg.make_e(0), f0 = alg.make_f(0);
    LieElement e1 = alg.make_e(1), f1 = alg.make_f(1);
    // <f0 | e0> = -1, <e0 | f0> = 1
    CHECK(alg.pair(f0, e0) == Rational(-1));
    CHECK(alg.pair(e0, f0) == Rational(1));
    // one invariance step: <[f1,f0] | [e1,e0]> = -B_10 = 1
    LieElement x = alg.bracket(f1, f0);
    LieElement y = alg.bracket(e1, e0);
    CHECK(alg.pair(x, y) == Rational(1));
    // weight-mismatched pair vanishes
    CHECK(alg.pair(f0, y) == Rational(0));
}

TEST_CASE("grading element: [L, x] = k x for every basis element")
{
    for (auto &alg : {make('A', 1, {1}), make('A', 2, {1, 0})}) {
        LieElement L;
        L.zero = alg.L();
        TaggedBasis tb = full_basis(alg);
        for (size_t i = 0; i < tb.elems.size(); ++i) {
            LieElement lhs = alg.bracket(L, tb.elems[i]);
            LieElement rhs;
            rhs.minus = tb.elems[i].minus.scaled(Rational(tb.degree[i]));
            rhs.zero = tb.elems[i].zero.scaled(Rational(tb.degree[i]));
            rhs.plus = tb.elems[i].plus.scaled(Rational(tb.degree[i]));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("graded antisymmetry and Jacobi on all defined basis triples")
{
    for (auto &alg : {make('A', 1, {1}), make('A', 2, {1, 0}), make('A', 1, {2})}) {
        TaggedBasis tb = full_basis(alg);
        size_t n = tb.elems.size();
        auto defined2 = [&](int dx, int dy) { return dx + dy >= -1 && dx + dy <= 1; };
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                int di = tb.degree[i], dj = tb.degree[j];
                if (!defined2(di, dj))
                    continue;
                LieElement xy = alg.bracket(tb.elems[i], tb.elems[j]);
                LieElement yx = alg.bracket(tb.elems[j], tb.elems[i]);
                int sign = (parity_of(di) && parity_of(dj)) ? 1 : -1;
                LieElement expect;
                expect.minus = yx.minus.scaled(Rational(sign));
                expect.zero = yx.zero.scaled(Rational(sign));
                expect.plus = yx.plus.scaled(Rational(sign));
                CHECK(xy == expect);
            }
        // Jacobi [[x,y],z] = [x,[y,z]] - (-1)^{xy} [y,[x,z]] whenever all
        // brackets involved are defined
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    int di = tb.degree[i], dj = tb.degree[j], dk = tb.degree[k];
                    if (!defined2(di, dj) || !defined2(dj, dk) || !defined2(di, dk))
                        continue;
                    if (di + dj + dk < -1 || di + dj + dk > 1)
                        continue;
                    LieElement lhs = alg.bracket(
                        alg.bracket(tb.elems[i], tb.elems[j]), tb.elems[k]);
                    LieElement t1 = alg.bracket(
                        tb.elems[i], alg.bracket(tb.elems[j], tb.elems[k]));
                    LieElement t2 = alg.bracket(
                        tb.elems[j], alg.bracket(tb.elems[i], tb.elems[k]));
                    int s = (parity_of(di) && parity_of(dj)) ? 1 : -1;
                    t1.minus.add_scaled(t2.minus, Rational(s));
                    t1.zero.add_scaled(t2.zero, Rational(s));
                    t1.plus.add_scaled(t2.plus, Rational(s));
                    CHECK(lhs == t1);
                }
    }
}

TEST_CASE("invariance of the form on all basis triples")
{
    for (auto &alg : {make('A', 1, {1}), make('A', 2, {1, 0})}) {
        TaggedBasis tb = full_basis(alg);
        size_t n = tb.elems.size();
        for (size_t i = 0; i < n; ++i) {
            if (tb.degree[i] != -1)
                continue;
            for (size_t j = 0; j < n; ++j) {
                if (tb.degree[j] != 0)
                    continue;
                for (size_t k = 0; k < n; ++k) {
                    if (tb.degree[k] != 1)
                        continue;
                    Rational lhs = alg.pair(
                        alg.bracket(tb.elems[i], tb.elems[j]), tb.elems[k]);
                    Rational rhs = alg.pair(
                        tb.elems[i], alg.bracket(tb.elems[j], tb.elems[k]));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("B_IJ <e_J|f_J> = <h_I|h_J> = B_JI <e_I|f_I>")
{
    LocalAlgebra alg = make('A', 2, {1, 0});
    const auto &eng = alg.engine;
    int n = alg.rank() + 1;
    for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) {
            Rational hIhJ = eng.pair00(eng.b0_h(I), eng.b0_h(J));
            CHECK(hIhJ == alg.ext.B(I, J) * eng.norm()[J]);
            CHECK(hIhJ == alg.ext.B(J, I) * eng.norm()[I]);
        }
}

TEST_CASE("<L|L> through the form equals (B^-1)_00")
{
    // two independent routes: the double sum over <h_I|h_J> and the matrix
    // inverse entry
    for (auto &alg : {make('A', 1, {1}), make('A', 2, {1, 0}),
                      make('B', 3, {1, 0, 0}, false)}) {
        const auto &eng = alg.engine;
        Rational ll(0);
        for (int I = 0; I <= alg.rank(); ++I)
            for (int J = 0; J <= alg.rank(); ++J)
                ll += alg.ext.Lcoef[I] * alg.ext.Lcoef[J] *
                      eng.pair00(eng.b0_h(I), eng.b0_h(J));
        CHECK(ll == alg.ext.Binv(0, 0));
    }
}

TEST_CASE("form on the degree-0 part: invariance across a composite root")
{
    // <[e1,e2] | f_g> = <e1 | [e2, f_g]> for g = a1 + a2 in A2
    LocalAlgebra alg = make('A', 2, {1, 0});
    const auto &eng = alg.engine;
    // positive roots in (height, lex) order: a2 < a1 < a1+a2, as B-weights
    int i_a2 = 0, i_a1 = 1, i_g = 2;
    REQUIRE(eng.positive_roots()[i_g] == BWeight{0, 1, 1});
    auto br = eng.bracket00(eng.b0_e(i_a1), eng.b0_e(i_a2));
    REQUIRE(br.size() == 1);
    Rational n = br.terms().begin()->second; // [e1, e2] = n e_g
    Rational lhs = n * eng.pair00(eng.b0_e(i_g), eng.b0_f(i_g));
    auto low = eng.bracket00(eng.b0_e(i_a2), eng.b0_f(i_g)); // [e2, f_g] = m f_1
    REQUIRE(low.size() == 1);
    REQUIRE(low.terms().begin()->first == eng.b0_f(i_a1));
    Rational rhs = low.terms().begin()->second *
                   eng.pair00(eng.b0_e(i_a1), eng.b0_f(i_a1));
    CHECK(lhs == rhs);
}

TEST_CASE("pairing between degree -1 and +1 is nondegenerate per weight")
{
    for (auto &alg : {make('A', 2, {1, 0}), make('A', 1, {2}),
                      make('A', 2, {1, 1})}) {
        const auto &eng = alg.engine;
        int d = eng.dim_module();
        QMatrix P(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                P(i, j) = eng.pairing(i, j);
        CHECK_FALSE(P.determinant().is_zero());
    }
}

TEST_CASE("module dimensions match the Weyl dimension formula")
{
    CHECK(make('A', 1, {1}).dim_plus() == 2);
    CHECK(make('A', 2, {1, 0}).dim_plus() == 3);
    CHECK(make('A', 3, {0, 1, 0}).dim_plus() == 6);
    CHECK(make('A', 1, {2}).dim_plus() == 3);
    CHECK(make('A', 2, {1, 1}).dim_plus() == 8); // adjoint, has a 2-dim weight space
    CHECK(make('B', 2, {1, 0}, false).dim_plus() == 5);
    CHECK(make('B', 3, {1, 0, 0}, false).dim_plus() == 7);
    CHECK(make('D', 4, {1, 0, 0, 0}).dim_plus() == 8);
    // dim B_1 = Weyl orbit of lambda-check plus zero-weight multiplicity
    CartanData b3 = build_cartan('B', 3);
    CHECK(weyl_orbit_size(b3, {1, 0, 0}) + 1 == 7);
}

TEST_CASE("Chevalley constants of g")
{
    // A2: [e_a1, e_a2] = +-e_{a1+a2} with |N| = 1
    CartanData a2 = build_cartan('A', 2);
    ContragredientEngine g = chevalley_constants(a2);
    // order is (height, lex): {0,1} < {1,0} < {1,1}
    REQUIRE(g.positive_roots()[0] == BWeight{0, 1});
    REQUIRE(g.positive_roots()[1] == BWeight{1, 0});
    REQUIRE(g.positive_roots()[2] == BWeight{1, 1});
    int e1 = g.b0_e(1), e2 = g.b0_e(0);
    auto br = g.bracket00(e1, e2);
    REQUIRE(br.size() == 1);
    CHECK(br.terms().begin()->first == g.b0_e(2));
    Rational N = br.terms().begin()->second;
    CHECK((N == Rational(1) || N == Rational(-1)));
    // alpha + beta not a root: bracket vanishes
    auto zero = g.bracket00(g.b0_e(2), e1); // (a1+a2) + a1 = 2a1+a2, not a root
    CHECK(zero.is_zero());
}

TEST_CASE("Chevalley constants: |N_{alpha,beta}| = p + 1 and integrality")
{
    for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3},
                        {'D', 4}, {'G', 2}}) {
        CartanData cd = build_cartan(t, r);
        ContragredientEngine g = chevalley_constants(cd);
        // full root set, both signs: strings may pass through negatives
        std::set<BWeight> all_roots;
        for (const auto &rt : g.positive_roots()) {
            all_roots.insert(rt);
            BWeight neg = rt;
            for (auto &c : neg)
                c = -c;
            all_roots.insert(neg);
        }
        int P = static_cast<int>(g.positive_roots().size());
        for (int a = 0; a < P; ++a)
            for (int b = 0; b < P; ++b) {
                if (a == b)
                    continue;
                BWeight sum = g.positive_roots()[a];
                for (int i = 0; i < cd.rank; ++i)
                    sum[i] += g.positive_roots()[b][i];
                auto br = g.bracket00(g.b0_e(a), g.b0_e(b));
                if (!all_roots.count(sum)) {
                    CHECK(br.is_zero());
                    continue;
                }
                REQUIRE(br.size() == 1);
                Rational N = br.terms().begin()->second;
                CHECK(N.is_integer());
                // |N| = p + 1 with p the down-string length through alpha
                int p = 0;
                BWeight beta = g.positive_roots()[b];
                while (true) {
                    for (int i = 0; i < cd.rank; ++i)
                        beta[i] -= g.positive_roots()[a][i];
                    if (!all_roots.count(beta))
                        break;
                    ++p;
                }
                CHECK(N.num().abs() == BigInt(p + 1));
            }
    }
}

TEST_CASE("prop 4.1 scan: pseudo-minuscule cases are clean")
{
    CHECK(prop41_scan(make('A', 2, {1, 0})).empty());
    CHECK(prop41_scan(make('A', 3, {0, 1, 0})).empty());
    CHECK(prop41_scan(make('D', 4, {1, 0, 0, 0})).empty());
}

TEST_CASE("prop 4.1 scan: A1 with 2*Lambda1 has a witness at alpha_0 + alpha_1")
{
    LocalAlgebra alg = make('A', 1, {2});
    auto hits = prop41_scan(alg);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].root == BWeight{1, 1});
    CHECK(hits[0].factor == Rational(-1));
    // the offending bracket is proportional to e_1
    auto br = alg.engine.mixed(0, hits[0].module_index);
    REQUIRE(br.size() == 1);
    CHECK(br.terms().begin()->first == alg.simple_e_index(1));
}

TEST_CASE("E6 and E7 module dimensions from the paper")
{
    CHECK(make('E', 6, {1, 0, 0, 0, 0, 0}).dim_plus() == 27);
    CHECK(make('E', 7, {0, 0, 0, 0, 0, 0, 1}).dim_plus() == 56);
}

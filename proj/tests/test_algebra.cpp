#include <doctest.h>

#include <random>

#include "bimodkit/algebra.hpp"

using namespace bimodkit;

TEST_CASE("truncated polynomial algebras") {
    auto a = truncated_polynomial_algebra(3, {3});
    CHECK(a->dim() == 3);
    CHECK(a->basis_labels() == std::vector<std::string>{"1", "w1", "w1^2"});
    // w * w^2 = 0
    CHECK(a->product(FpMatrix::basis_column(3, 3, 1), FpMatrix::basis_column(3, 3, 2)).is_zero());

    auto b = truncated_polynomial_algebra(2, {2, 2});
    CHECK(b->dim() == 4);
    std::size_t w1 = b->generators()[0], w2 = b->generators()[1];
    CHECK(!b->product(FpMatrix::basis_column(2, 4, w1), FpMatrix::basis_column(2, 4, w2)).is_zero());
    CHECK(b->product(FpMatrix::basis_column(2, 4, w1), FpMatrix::basis_column(2, 4, w1)).is_zero());

    CHECK_THROWS(truncated_polynomial_algebra(2, {1}));
}

TEST_CASE("the group algebra of Z/4 in the nilpotent presentation") {
    // (1+w)^4 = 1 in characteristic 2 with w^4 = 0.
    auto c4 = truncated_polynomial_algebra(2, {4});
    CHECK(c4->dim() == 4);
    FpMatrix w3 = FpMatrix::basis_column(2, 4, 1);
    FpMatrix acc = c4->unit_coords();
    FpMatrix g = c4->unit_coords() + FpMatrix::basis_column(2, 4, c4->generators()[0]);
    for (int i = 0; i < 4; ++i) acc = c4->product(acc, g);
    CHECK(acc == c4->unit_coords());
    // w^3 != 0, w^4 = 0
    FpMatrix w = FpMatrix::basis_column(2, 4, c4->generators()[0]);
    FpMatrix p3 = c4->product(c4->product(w, w), w);
    CHECK(!p3.is_zero());
    CHECK(c4->product(p3, w).is_zero());
}

TEST_CASE("abelian group algebras and their Hopf structure") {
    HopfAlgebra h2 = group_algebra_abelian(2, {2});
    CHECK(h2.group_algebra->dim() == 2);
    CHECK(h2.antipode.is_identity());  // g = g^{-1}

    HopfAlgebra h3 = group_algebra_abelian(3, {3});
    // Delta(g) = g (x) g and S(g) = g^2.
    std::size_t g = h3.group_algebra->generators()[0];
    FpMatrix dg = h3.comul.column(g);
    CHECK(dg(g * 3 + g, 0) == 1);
    FpMatrix sg = h3.antipode.column(g);
    CHECK(sg(2, 0) == 1);

    CHECK_THROWS(group_algebra_abelian(2, {6}));
    CHECK_THROWS(group_algebra_abelian(3, {2}));
}

TEST_CASE("comultiplication in the nilpotent presentation") {
    // Delta(w1) = w1 (x) 1 + 1 (x) w1 + w1 (x) w1, from expanding
    // Delta(g1) = g1 (x) g1 with g1 = 1 + w1.
    HopfAlgebra h = group_algebra_abelian(2, {2, 2});
    FpMatrix dw = h.comul_poly();
    std::size_t d = h.poly_algebra->dim();
    std::size_t w1 = h.poly_algebra->generators()[0];
    FpMatrix col = dw.column(w1);
    FpMatrix expect(2, d * d, 1);
    expect.set(w1 * d + 0, 0, 1);
    expect.set(0 * d + w1, 0, 1);
    expect.set(w1 * d + w1, 0, 1);
    CHECK(col == expect);
}

TEST_CASE("enveloping algebras") {
    for (u32 p : {2u, 3u, 5u}) {
        auto a = truncated_polynomial_algebra(p, {p});
        auto e = enveloping(a);
        CHECK(e->dim() == p * p);
        CHECK(e->generators().size() == 2);
        CHECK(e->generator_label(0) == "u1");
        CHECK(e->generator_label(1) == "v1");
        // u and v commute
        std::size_t u = e->generators()[0], v = e->generators()[1];
        FpMatrix uc = FpMatrix::basis_column(p, e->dim(), u);
        FpMatrix vc = FpMatrix::basis_column(p, e->dim(), v);
        CHECK(e->product(uc, vc) == e->product(vc, uc));
    }
    // env of the one-dimensional algebra is itself
    auto k = truncated_polynomial_algebra(3, {});
    CHECK(enveloping(k)->dim() == 1);
}

TEST_CASE("enveloping a table algebra uses the pair basis") {
    auto kk = k_times_k(3);
    auto e = enveloping(kk);
    CHECK(e->dim() == 4);
    CHECK(e->kind() == AlgebraKind::Table);
    CHECK(!e->is_unipotent());
}

TEST_CASE("unipotence") {
    CHECK(truncated_polynomial_algebra(3, {3})->is_unipotent());
    CHECK(enveloping(truncated_polynomial_algebra(3, {3}))->is_unipotent());
    CHECK(!k_times_k(2)->is_unipotent());
    CHECK(!k_times_k(5)->is_unipotent());
}

TEST_CASE("unipotence decision procedure agrees with the monomial shortcut") {
    // Rebuild k[w]/(w^3) over F3 as a raw table so the generic ideal-power
    // computation runs, then compare.
    auto a = truncated_polynomial_algebra(3, {3});
    std::vector<FpMatrix> lmul;
    for (std::size_t i = 0; i < 3; ++i) lmul.push_back(a->left_mult(i));
    auto table = std::make_shared<Algebra>(FieldSpec(3), a->basis_labels(), lmul, a->unit_index(),
                                           a->generators(), a->augmentation(), a->relations(),
                                           AlgebraKind::Table);
    CHECK(table->is_unipotent());
    CHECK(table->is_unipotent() == a->is_unipotent());
}

TEST_CASE("automorphisms from linear substitutions") {
    auto a = truncated_polynomial_algebra(3, {3});
    CHECK(automorphism_from_linear(a, FpMatrix::identity(3, 1)).is_identity());

    FpMatrix two(3, 1, 1);
    two.set(0, 0, 2);
    Automorphism g = automorphism_from_linear(a, two);
    // w -> 2w, so w^2 -> 4w^2 = w^2.
    CHECK(g.matrix.column(1) == FpMatrix::basis_column(3, 3, 1).scaled(2));
    CHECK(g.matrix.column(2) == FpMatrix::basis_column(3, 3, 2));

    FpMatrix sing(3, 1, 1);
    CHECK_THROWS(automorphism_from_linear(a, sing));

    auto b = truncated_polynomial_algebra(3, {3, 3});
    FpMatrix swap(3, 2, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    Automorphism s = automorphism_from_linear(b, swap);
    // w1 w2 maps to w2 w1 = w1 w2.
    std::size_t w1w2 = 0;
    for (std::size_t i = 0; i < b->dim(); ++i)
        if (b->basis_labels()[i] == "w1*w2") w1w2 = i;
    CHECK(s.matrix.column(w1w2) == FpMatrix::basis_column(3, b->dim(), w1w2));
    CHECK(s.compose(s).is_identity());
}

TEST_CASE("linear-to-automorphism assignment is a group homomorphism") {
    auto a = truncated_polynomial_algebra(3, {3, 3});
    std::mt19937_64 g(31);
    auto random_gl = [&]() {
        while (true) {
            FpMatrix m(3, 2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) m.set(i, j, g() % 3);
            if (is_invertible(m)) return m;
        }
    };
    for (int t = 0; t < 8; ++t) {
        FpMatrix m1 = random_gl(), m2 = random_gl();
        Automorphism a1 = automorphism_from_linear(a, m1);
        Automorphism a2 = automorphism_from_linear(a, m2);
        Automorphism prod = automorphism_from_linear(a, m1 * m2);
        CHECK(a1.compose(a2).matrix == prod.matrix);
    }
}

TEST_CASE("algebra maps validate multiplicativity") {
    auto a = truncated_polynomial_algebra(2, {2});
    auto e = enveloping(a);
    AlgebraMap il = left_inclusion(a, e);
    // w goes to u
    CHECK(il.matrix.column(a->generators()[0]) ==
          FpMatrix::basis_column(2, e->dim(), e->generators()[0]));
    AlgebraMap ir = right_inclusion(a, e);
    CHECK(ir.matrix.column(a->generators()[0]) ==
          FpMatrix::basis_column(2, e->dim(), e->generators()[1]));
    // a broken map is rejected
    FpMatrix bad(2, e->dim(), a->dim());
    bad.set(e->unit_index(), a->unit_index(), 1);
    bad.set(0, 1, 1);
    CHECK_THROWS(make_algebra_map(a, e, bad));
}

TEST_CASE("enveloping of unipotent constructors stays unipotent") {
    for (u32 p : {2u, 3u}) {
        auto a1 = truncated_polynomial_algebra(p, {p});
        CHECK(enveloping(a1)->is_unipotent());
        auto a2 = truncated_polynomial_algebra(p, {p, p});
        CHECK(enveloping(a2)->is_unipotent());
        auto a4 = truncated_polynomial_algebra(2, {4});
        CHECK(enveloping(a4)->is_unipotent());
    }
}

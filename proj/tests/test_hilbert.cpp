#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramodular/hilbert.hpp"

using namespace paramodular;

namespace {

const std::pair<long, Variant> cases[] = {{5, Variant::H4t_1mod4}, {13, Variant::H4t_1mod4}, {5, Variant::Ht_1mod4},
                                          {13, Variant::Ht_1mod4}, {2, Variant::H4t_other},  {3, Variant::H4t_other},
                                          {6, Variant::H4t_other}, {7, Variant::H4t_other}};

} // namespace

TEST_CASE("arithmetic in Q(sqrt t)")
{
    QuadScalar s = QuadScalar::sqrt_t(5);
    CHECK(s * s == QuadScalar(5));
    QuadScalar x = QuadScalar(3) + QuadScalar(2) * s;
    CHECK(x * x.conj() == QuadScalar(x.norm()));
    CHECK((x / x) == QuadScalar(1));
    CHECK((QuadScalar(1) / x) * x == QuadScalar(1));
    CHECK(x.sign() == 1);
    CHECK((QuadScalar(2) - s).sign() == -1); // 2 < sqrt 5
    CHECK((QuadScalar(3) - s).sign() == 1);
    CHECK_THROWS_AS(s + QuadScalar::sqrt_t(3), std::invalid_argument);
    CHECK_THROWS_AS(QuadScalar(Q(1), Q(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(x / QuadScalar(0), std::domain_error);
    BiComplex z(QuadScalar(1), s);
    CHECK((z / z) == BiComplex(1));
    CHECK((z * z.conj_i()).im.is_zero());
}

TEST_CASE("orders")
{
    QuadScalar w = omega(5);
    CHECK(order_contains(w, OrderKind::Full, 5));
    CHECK_FALSE(order_contains(w, OrderKind::O2, 5));
    CHECK(order_contains(w, OrderKind::O2Tilde, 5));
    CHECK(order_contains(QuadScalar(2) * QuadScalar::sqrt_t(5), OrderKind::O2TildeInverse, 5));
    CHECK_FALSE(order_contains(QuadScalar::sqrt_t(5), OrderKind::O2TildeInverse, 5));
    CHECK(omega(6) == QuadScalar::sqrt_t(6));
    CHECK_FALSE(order_contains(QuadScalar(make_q(1, 2)), OrderKind::Full, 6));
}

TEST_CASE("variants")
{
    CHECK(parse_variant("Ht_1mod4") == Variant::Ht_1mod4);
    CHECK(to_string(Variant::H4t_other) == "H4t_other");
    CHECK_THROWS_AS(parse_variant("H5"), std::invalid_argument);
    CHECK_THROWS_AS(r_matrix(5, Variant::H4t_other), std::invalid_argument);
    CHECK_THROWS_AS(r_matrix(6, Variant::Ht_1mod4), std::invalid_argument);
    CHECK_THROWS_AS(r_matrix(12, Variant::H4t_other), std::invalid_argument);
}

TEST_CASE("S is an involution in Gamma_t")
{
    for (auto [t, v] : cases) {
        SymplecticSimilitude s = s_involution(r_matrix(t, v));
        CHECK(gamma_t_contains(s, t));
        CHECK(s.m * s.m == QMatrix::identity(4));
    }
}

TEST_CASE("the embedding is a homomorphism into Gamma_t and decomposes back")
{
    for (auto [t, v] : cases) {
        QSMatrix r = r_matrix(t, v);
        for (int k = 0; k < 25; ++k) {
            QSMatrix g = sample_hilbert_element(t, v, 40 + k, 5);
            QSMatrix h = sample_hilbert_element(t, v, 400 + k, 3);
            SymplecticSimilitude eg = psi_hat_embed(g, r), eh = psi_hat_embed(h, r);
            CHECK(gamma_t_contains(eg, t));
            CHECK(psi_hat_embed(g * h, r).m == (eg * eh).m);
            BlockDecomposition l = lemma_3_12_decompose(to_qs(eg.m), r, v, t);
            CHECK(l.all_ok());
            CHECK(l.first[0] == g(0, 0));
            CHECK(l.first[1] == g(0, 1));
            CHECK(l.first[2] == g(1, 0));
            CHECK(l.first[3] == g(1, 1));
            // the swap σ corresponds to S: S Ψ̂(g, g') S = Ψ̂(g', g)
            SymplecticSimilitude s = s_involution(r);
            QSMatrix swapped = psi_hat_pair(conj(g), g, r);
            CHECK(to_qs((s * eg * s).m) == swapped);
        }
    }
}

TEST_CASE("a matrix outside the image is rejected or flagged")
{
    QSMatrix r = r_matrix(5, Variant::H4t_1mod4);
    QMatrix e = QMatrix::identity(4);
    e(0, 1) = 1;
    CHECK_THROWS_AS(lemma_3_12_decompose(to_qs(e), r, Variant::H4t_1mod4, 5), std::invalid_argument);
    // Ψ̂ of a non-Galois pair lies in the shape but fails the conjugation test
    QSMatrix g = QSMatrix::identity(2);
    g(0, 1) = QuadScalar::sqrt_t(5);
    BlockDecomposition l = lemma_3_12_decompose(psi_hat_pair(g, g, r), r, Variant::H4t_1mod4, 5);
    CHECK_FALSE(l.galois_ok);
}

TEST_CASE("image equations vanish on the embedded diagonal")
{
    for (auto [t, v] : cases) {
        QSMatrix r = r_matrix(t, v);
        auto eq = image_equation(t, v);
        CHECK(image_identity_holds(r, eq));
        CHECK_FALSE(image_identity_holds(r, {eq[0] + 1, eq[1], eq[2]}));
        // the same equation holds on the full image, entry by entry
        BiComplex z1(QuadScalar(make_q(2, 3)), QuadScalar(1)), z2(QuadScalar(-3), QuadScalar(make_q(5, 2)));
        BCMatrix tau = phi_hat(z1, z2, r);
        BiComplex lhs = BiComplex(QuadScalar(eq[0])) * tau(0, 0) + BiComplex(QuadScalar(eq[1])) * tau(0, 1) +
                        BiComplex(QuadScalar(eq[2])) * tau(1, 1);
        CHECK(lhs.is_zero());
        CHECK(tau(0, 1) == tau(1, 0));
    }
    for (long t : {5L, 13L, 17L})
        CHECK(x_transport_check(t));
}

TEST_CASE("equivariance and the Riemann form")
{
    for (auto [t, v] : cases) {
        QSMatrix r = r_matrix(t, v);
        BiComplex z1(QuadScalar(make_q(1, 3)), QuadScalar(2)), z2(QuadScalar(-1), QuadScalar(make_q(1, 2)));
        for (int k = 0; k < 5; ++k)
            CHECK(equivariance_check(sample_hilbert_element(t, v, k, 4), z1, z2, r));
        QMatrix w = qmatrix({{0, 0, 1, 0}, {0, 0, 0, t}, {-1, 0, 0, 0}, {0, -t, 0, 0}});
        CHECK(riemann_gram_check(t, v, z1, z2) == w);
        CHECK_THROWS_AS(riemann_gram_check(t, v, z1, z2.conj_i()), std::invalid_argument);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramodular/numtheory.hpp"
#include "paramodular/orthogonal.hpp"

#include <array>

using namespace paramodular;

namespace {

using Bivector = std::array<std::array<Q, 4>, 4>; // skew coefficient matrix

Bivector wedge(int i, int j, const Q& c = 1)
{
    Bivector b{};
    b[i][j] += c;
    b[j][i] -= c;
    return b;
}

Bivector plus(Bivector a, const Bivector& b)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            a[i][j] += b[i][j];
    return a;
}

// x ^ y as a multiple of e1^e2^e3^e4, summed over all index quadruples with the permutation sign.
Q wedge_product(const Bivector& x, const Bivector& y)
{
    Q s(0);
    int p[4] = {0, 1, 2, 3};
    do {
        int inv = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                inv += p[a] > p[b];
        Q term = x[p[0]][p[1]] * y[p[2]][p[3]];
        s += inv % 2 ? -term : term;
    } while (std::next_permutation(p, p + 4));
    return s / 4;
}

std::array<Bivector, 5> lt_basis(long t)
{
    return {wedge(0, 1), wedge(1, 2), plus(wedge(0, 2), wedge(1, 3, Q(-t))), wedge(3, 0), wedge(3, 2)};
}

} // namespace

TEST_CASE("S_t is the wedge pairing on the basis of L_t")
{
    for (long t = 1; t <= 10; ++t) {
        auto b = lt_basis(t);
        QMatrix s = gram_st(t);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(wedge_product(b[i], b[j]) == s(i, j));
        Bivector w = plus(wedge(0, 2), wedge(1, 3, Q(t)));
        for (int i = 0; i < 5; ++i)
            CHECK(wedge_product(w, b[i]) == 0);
        CHECK(wedge_product(w, w) == -2 * t); // e13 ^ e24 = -e1234
    }
    CHECK(determinant(gram_st(6)) == 2 * 6);
}

TEST_CASE("Psi is a homomorphism into SO(L_t) with kernel containing -E4")
{
    for (long t = 1; t <= 12; ++t)
        for (int s = 0; s < 8; ++s) {
            SymplecticSimilitude g = sample_gamma_t(t, 31 * t + s, 6), h = sample_gamma_t(t, 900 + s, 5);
            QMatrix pg = psi_map(g, t);
            CHECK(is_isometry(pg, t));
            CHECK(determinant(pg) == 1);
            CHECK(disc_action(pg, t) == 1);
            CHECK(in_plus_component(pg, t));
            CHECK(psi_map(g * h, t) == pg * psi_map(h, t));
        }
    SymplecticSimilitude minus(QMatrix::identity(4).scaled(Q(-1)));
    CHECK(psi_map(minus, 5) == QMatrix::identity(5));
}

TEST_CASE("Psi(V_d) has the closed form and acts by xi_d")
{
    for (long t = 1; t <= 30; ++t)
        for (long d : unitary_divisors(t)) {
            VTilde v = make_vtilde(t, d);
            const long x = v.x, y = v.y, td = t / d;
            QMatrix expect = qmatrix({{1, 0, 0, 0, 0},
                                      {0, d, -2 * y * t, y * y * td, 0},
                                      {0, -1, d * x + td * y, -x * y, 0},
                                      {0, td, -2 * t * x, x * x * d, 0},
                                      {0, 0, 0, 0, 1}});
            QMatrix p = psi_map(v.g, t);
            CHECK(p == expect);
            CHECK(disc_action(p, t) == xi_element(t, d).value);
        }
}

TEST_CASE("Siegel points map to isotropic vectors of positive Hermitian norm")
{
    for (long t = 1; t <= 6; ++t)
        for (int k = 0; k < 6; ++k) {
            SiegelPoint z{GaussQ(make_q(k, 3), Q(1 + k)), GaussQ(make_q(-k, 2), make_q(1, 2)), GaussQ(Q(2), Q(3))};
            REQUIRE(z.in_domain());
            QuadricPoint p = siegel_to_quadric(z, t);
            CHECK(pairing(p, p, t).is_zero());
            QuadricPoint pc;
            for (int i = 0; i < 5; ++i)
                pc[i] = p[i].conj();
            GaussQ h = pairing(p, pc, t);
            CHECK(sgn(h.im) == 0);
            CHECK(sgn(h.re) != 0);
            CHECK(quadric_to_siegel(p, t) == z);
        }
}

TEST_CASE("reflections and the involution types")
{
    const long t = 6;
    // ℓ = e3/... with ℓ^2 = 2t; the reflection is integral
    LatticeVector e3{Q(0), Q(0), Q(1), Q(0), Q(0)};
    Reflection r = reflection(e3, t);
    CHECK(r.integral);
    CHECK(r.m * r.m == QMatrix::identity(5));
    CHECK(is_isometry(r.m, t));
    CHECK(plus_multiplicity(r.m) == 4);
    CHECK(plus_multiplicity(-r.m) == 1);
    CHECK(involution_classify(-r.m, t) == InvolutionType::Reflection);
    CHECK(to_string(InvolutionType::Rotation) == "rotation-type");
    CHECK_THROWS(involution_classify(QMatrix::identity(5), t));
    CHECK(divisor_of(e3, t) == 2 * t);
    LatticeVector u{Q(1), Q(0), Q(0), Q(0), Q(0)};
    CHECK(divisor_of(u, t) == 1);
    CHECK(rank(gram_st(t)) == 5);
}

TEST_CASE("E8 and the K3 lattice complement")
{
    QMatrix e8 = e8_negative();
    CHECK(determinant(e8) == 1);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(e8(i, i) == -2);
    for (long t = 1; t <= 12; ++t) {
        K3Check k = k3_complement_check(t);
        CHECK(k.ok);
        QMatrix expect = gram_st(t).scaled(Q(-1));
        CHECK(k.complement_gram == expect);
    }
}

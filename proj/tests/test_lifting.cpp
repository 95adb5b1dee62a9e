#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramodular/lifting.hpp"
#include "paramodular/numtheory.hpp"

using namespace paramodular;

namespace {

// b(N) = sum over a | (n, l, m) of a^{k-1} c(D/a^2, l/a), read straight from the table map.
Q lift_oracle(const CoefficientTable& tab, long n, long l, long m)
{
    const long t = tab.t;
    Q b(0);
    for (long a = 1; a <= n && a <= m; ++a) {
        if (n % a || l % a || m % a)
            continue;
        long disc = (4 * n * m * t - l * l) / (a * a);
        long r = mod_floor(l / a, 2 * t);
        auto it = tab.values.find({disc, r});
        if (it != tab.values.end())
            b += Q(a * a) * it->second;
    }
    return b;
}

} // namespace

TEST_CASE("lift indices")
{
    CHECK(LiftIndex{1, 1, 1}.disc(6) == 23);
    CHECK_THROWS_AS(make_lift_index(1, 5, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(make_lift_index(0, 0, 1, 6), std::invalid_argument);
}

TEST_CASE("synthetic tables are W_d eigenvectors")
{
    for (long t : {6L, 10L, 15L, 30L})
        for (const auto& eps : EigenCharacter::all(t)) {
            if (eps(t) != -1) {
                CHECK_THROWS_AS(synth_eigen_table(t, eps, 1, 8 * t), std::invalid_argument);
                continue;
            }
            CoefficientTable tab = synth_eigen_table(t, eps, 3, 16 * t);
            CHECK_FALSE(tab.values.empty());
            for (long d : unitary_divisors(t))
                CHECK(apply_wd(tab, d) == scale(tab, Q(eps(d))));
        }
}

TEST_CASE("lift coefficient matches the divisor sum")
{
    const long t = 10;
    EigenCharacter eps = EigenCharacter::from_signs(t, {1, -1});
    CoefficientTable tab = synth_eigen_table(t, eps, 7, 4 * 36 * t);
    for (long n = 1; n <= 6; ++n)
        for (long l = -6; l <= 6; ++l)
            for (long m = 1; m <= 6; ++m) {
                LiftIndex idx{n, l, m};
                if (idx.disc(t) <= 0)
                    continue;
                CHECK(lift_coefficient(tab, idx) == lift_oracle(tab, n, l, m));
            }
}

TEST_CASE("the index transformation is integral and preserves the discriminant")
{
    for (long t : {6L, 10L, 12L, 15L, 30L})
        for (long d : unitary_divisors(t)) {
            QMatrix at = atilde_matrix(t, d);
            CHECK(determinant(at) == d);
            for (long n = 1; n <= 5; ++n)
                for (long l = -5; l <= 5; ++l) {
                    LiftIndex idx{n, l, 1};
                    if (idx.disc(t) <= 0)
                        continue;
                    LiftIndex tr = transform_index(t, d, idx);
                    CHECK(tr.disc(t) == idx.disc(t));
                    // l maps to ξ_d l modulo 2t, as W_d does on Jacobi coefficients
                    CHECK(mod_floor(tr.l - xi_element(t, d).value * l, 2 * t) == 0);
                }
        }
    CHECK_THROWS(atilde_matrix(6, 2, 1, 1));
}

TEST_CASE("coefficients transform by the eigencharacter, and a mutation is caught")
{
    const long t = 15;
    for (const auto& eps : EigenCharacter::all(t)) {
        if (eps(t) != -1)
            continue;
        CoefficientTable tab = synth_eigen_table(t, eps, 11, 4 * 36 * t);
        for (long d : unitary_divisors(t)) {
            LiftReport r = verify_theorem_2_1(tab, eps, d, 6);
            CHECK(r.ok);
            CHECK(r.checked > 0);
        }
        CoefficientTable bad = tab;
        bad.values[make_key(t, 4 * t - 1, 1)] += 1;
        LiftReport r = verify_theorem_2_1(bad, eps, t, 6);
        CHECK_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->disc(t) % (4 * t - 1) == 0);
    }
}

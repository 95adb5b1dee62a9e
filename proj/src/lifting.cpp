#include "paramodular/lifting.hpp"

#include "paramodular/numtheory.hpp"
#include "paramodular/symplectic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace paramodular {

LiftIndex make_lift_index(long n, long l, long m, long t)
{
    LiftIndex idx{n, l, m};
    if (n <= 0 || m <= 0 || idx.disc(t) <= 0)
        throw std::invalid_argument("lift index must be positive definite");
    return idx;
}

long lift_support(const LiftIndex& idx, long t) { return idx.disc(t); }

Q lift_coefficient(const CoefficientTable& table, const LiftIndex& idx)
{
    const long t = table.t;
    const long k = table.weight;
    make_lift_index(idx.n, idx.l, idx.m, t);
    const long g = gcd_l(gcd_l(idx.n, idx.l), idx.m);
    Q b(0);
    for (long a : divisors(g)) {
        long disc = idx.disc(t) / (a * a);
        Z w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k - 1));
        b += Q(w) * table.at(make_key(t, disc, idx.l / a));
    }
    return b;
}

QMatrix a_matrix(long t, long d, long x, long y)
{
    (void)make_vtilde(t, d, x, y);
    return qmatrix({{d * x, -t}, {-y, d}});
}

QMatrix atilde_matrix(long t, long d, long x, long y)
{
    (void)make_vtilde(t, d, x, y);
    return qmatrix({{d, t}, {y, d * x}});
}

QMatrix atilde_matrix(long t, long d)
{
    VTilde v = make_vtilde(t, d);
    return atilde_matrix(t, d, v.x, v.y);
}

LiftIndex transform_index(long t, long d, long x, long y, const LiftIndex& idx)
{
    QMatrix at = atilde_matrix(t, d, x, y);
    QMatrix n(2, 2);
    n(0, 0) = idx.n;
    n(0, 1) = n(1, 0) = make_q(idx.l, 2);
    n(1, 1) = idx.m * t;
    QMatrix r = (at.transpose() * n * at).scaled(make_q(1, d));
    Q nn = r(0, 0), ll = 2 * r(0, 1), mm = r(1, 1) / t;
    if (!is_integer(nn) || !is_integer(ll) || !is_integer(mm))
        throw std::logic_error("transformed lift index is not integral");
    return make_lift_index(to_long(nn), to_long(ll), to_long(mm), t);
}

LiftIndex transform_index(long t, long d, const LiftIndex& idx)
{
    VTilde v = make_vtilde(t, d);
    return transform_index(t, d, v.x, v.y, idx);
}

CoefficientTable synth_eigen_table(long t, const EigenCharacter& eps, std::uint64_t seed, long d_max)
{
    if (eps.t != t)
        throw std::invalid_argument("character index does not match t");
    if (eps(t) != -1)
        throw std::invalid_argument("synth_eigen_table needs eps(xi_t) = -1");
    if (d_max < 4 * t)
        throw std::invalid_argument("synth_eigen_table needs d_max >= 4t");
    std::vector<std::pair<long, int>> xs;
    for (long d : unitary_divisors(t))
        xs.emplace_back(xi_element(t, d).value, eps(d));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    CoefficientTable table;
    table.t = t;
    table.d_max = d_max;
    const long n = 2 * t;
    for (long disc = 1; disc <= d_max; ++disc) {
        std::vector<bool> done(n, false);
        for (long l = 0; l < n; ++l) {
            if (done[l] || mod_floor(disc + l * l, 4 * t) != 0)
                continue;
            bool conflict = false;
            for (auto [x, e] : xs) {
                long img = (x * l) % n;
                done[img] = true;
                if (img == l && e == -1)
                    conflict = true;
            }
            long p = 0;
            while (p == 0)
                p = num(rng);
            Q v = make_q(p, den(rng));
            if (conflict)
                continue;
            for (auto [x, e] : xs)
                table.values[{disc, (x * l) % n}] = v * e;
        }
    }
    return table;
}

LiftReport verify_theorem_2_1(const CoefficientTable& table, const EigenCharacter& eps, long d, long bound)
{
    const long t = table.t;
    if (eps.t != t)
        throw std::invalid_argument("character index does not match t");
    const int sign = eps(d);
    LiftReport rep;
    for (long n = 1; n <= bound; ++n)
        for (long l = -bound; l <= bound; ++l)
            for (long m = 1; m <= bound; ++m) {
                LiftIndex idx{n, l, m};
                if (idx.disc(t) <= 0)
                    continue;
                if (!table.covers(lift_support(idx, t))) {
                    ++rep.skipped;
                    continue;
                }
                LiftIndex tr = transform_index(t, d, idx);
                Q lhs = lift_coefficient(table, tr);
                Q rhs = sign * lift_coefficient(table, idx);
                ++rep.checked;
                if (lhs != rhs && rep.ok) {
                    rep.ok = false;
                    rep.witness = idx;
                    rep.detail = "b(N~)=" + lhs.get_str() + " but eps*b(N)=" + rhs.get_str();
                }
            }
    return rep;
}

} // namespace paramodular

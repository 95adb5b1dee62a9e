#include "paramodular/symplectic.hpp"

#include "paramodular/numtheory.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace paramodular {

SymplecticSimilitude::SymplecticSimilitude(QMatrix mat, Q mult) : m(std::move(mat)), mu(std::move(mult))
{
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("symplectic similitude must be 4x4");
    if (sgn(mu) <= 0)
        throw std::invalid_argument("multiplier must be positive");
}

SymplecticSimilitude SymplecticSimilitude::operator*(const SymplecticSimilitude& o) const
{
    return {m * o.m, mu * o.mu};
}

SymplecticSimilitude SymplecticSimilitude::inverse() const
{
    return {paramodular::inverse(m), 1 / mu};
}

bool SymplecticSimilitude::is_symplectic() const
{
    const QMatrix& j = symplectic_form();
    return m * j * m.transpose() == j.scaled(mu);
}

bool SiegelPoint::in_domain() const
{
    return sgn(tau1.im) > 0 && sgn(tau1.im * tau3.im - tau2.im * tau2.im) > 0;
}

GMatrix SiegelPoint::as_matrix() const
{
    GMatrix m(2, 2);
    m(0, 0) = tau1;
    m(0, 1) = tau2;
    m(1, 0) = tau2;
    m(1, 1) = tau3;
    return m;
}

SiegelPoint SiegelPoint::from_matrix(const GMatrix& m)
{
    if (!(m(0, 1) == m(1, 0)))
        throw std::domain_error("Siegel point must be symmetric");
    return {m(0, 0), m(0, 1), m(1, 1)};
}

const QMatrix& symplectic_form()
{
    static const QMatrix j = qmatrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    return j;
}

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

} // namespace

QMatrix wedge_square(const QMatrix& g)
{
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("wedge_square expects a 4x4 matrix");
    // (g e_k) ^ (g e_l) expanded on e_i ^ e_j
    QMatrix w(6, 6);
    for (std::size_t c = 0; c < 6; ++c) {
        auto [k, l] = kPairs[c];
        for (std::size_t r = 0; r < 6; ++r) {
            auto [i, j] = kPairs[r];
            w(r, c) = g(i, k) * g(j, l) - g(j, k) * g(i, l);
        }
    }
    return w;
}

Q pfaffian(const QMatrix& x)
{
    if (x.rows() != 4 || x.cols() != 4)
        throw std::invalid_argument("pfaffian expects a 4x4 matrix");
    if (!(x.transpose() == -x))
        throw std::invalid_argument("pfaffian expects a skew-symmetric matrix");
    return x(0, 1) * x(2, 3) - x(0, 2) * x(1, 3) + x(0, 3) * x(1, 2);
}

bool gamma_t_pattern(const QMatrix& m, long t)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Q v = m(i, j);
            if (i == 3 && j == 1)
                v *= t;
            if (!is_integer(v))
                return false;
            bool needs_t = (i == 0 && j == 3) || (i == 1 && j != 1) || (i == 2 && j == 3);
            if (needs_t && v.get_num() % t != 0)
                return false;
        }
    return true;
}

bool gamma_t_contains(const SymplecticSimilitude& g, long t)
{
    if (t < 1)
        throw std::invalid_argument("t must be positive");
    return g.mu == 1 && g.is_symplectic() && gamma_t_pattern(g.m, t);
}

QMatrix conjugator_c(long t)
{
    QMatrix c = QMatrix::identity(4);
    c(1, 1) = make_q(1, t);
    c(3, 3) = Q(t);
    return c;
}

namespace {

// Γ̂_t rows: (* t* * *), (* * * t^-1 *), (* t* * *), (t* t* t* *)
bool gamma_hat_pattern(const QMatrix& m, long t)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Q v = m(i, j);
            if (i == 1 && j == 3)
                v *= t;
            if (!is_integer(v))
                return false;
            bool needs_t = (j == 1 && i != 1) || (i == 3 && j != 3);
            if (needs_t && v.get_num() % t != 0)
                return false;
        }
    return true;
}

} // namespace

bool gamma_hat_contains(const SymplecticSimilitude& g, long t)
{
    if (!(g.mu == 1) || !g.is_symplectic())
        return false;
    bool pattern = gamma_hat_pattern(g.m, t);
    QMatrix c = conjugator_c(t);
    bool conj = gamma_t_pattern(paramodular::inverse(c) * g.m * c, t);
    if (pattern != conj)
        throw std::logic_error("gamma_hat pattern and conjugation test disagree");
    return pattern;
}

VTilde make_vtilde(long t, long d, long x, long y)
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("make_vtilde: " + std::to_string(d) + " is not a unitary divisor of " +
                                    std::to_string(t));
    const long td = t / d;
    if (x * d - y * td != 1)
        throw std::invalid_argument("make_vtilde: need x d - y t/d = 1");
    QMatrix m = qmatrix({{d * x, -1, 0, 0}, {-y * t, d, 0, 0}, {0, 0, d, y * t}, {0, 0, 1, d * x}});
    return {SymplecticSimilitude(m, Q(d)), x, y};
}

VTilde make_vtilde(long t, long d)
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("make_vtilde: " + std::to_string(d) + " is not a unitary divisor of " +
                                    std::to_string(t));
    if (d == 1)
        return make_vtilde(t, 1, 1, 0);
    if (d == t)
        return make_vtilde(t, t, 0, -1);
    const long td = t / d;
    long x, y;
    ext_gcd(d, td, x, y); // x d + y t/d = 1
    x = mod_floor(x, td);
    return make_vtilde(t, d, x, (x * d - 1) / td);
}

namespace {

// Square root of a positive rational, if it is a rational square.
std::optional<Q> rational_sqrt(const Q& q)
{
    if (sgn(q) <= 0)
        return std::nullopt;
    Z n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    return Q(sqrt(n), sqrt(d));
}

} // namespace

std::optional<long> gamma_star_contains(const SymplecticSimilitude& g, long t)
{
    if (!g.is_symplectic())
        return std::nullopt;
    for (long d : unitary_divisors(t)) {
        VTilde v = make_vtilde(t, d);
        // (g / sqrt(mu)) (Ṽ_d / sqrt(d))^{-1} = g Ṽ_d^{-1} / sqrt(mu/d)
        auto r = rational_sqrt(g.mu / d);
        if (!r)
            continue;
        QMatrix h = (g.m * paramodular::inverse(v.g.m)).scaled(Q(1) / *r);
        if (gamma_t_contains(SymplecticSimilitude(h, 1), t))
            return d;
    }
    return std::nullopt;
}

namespace {

GMatrix block(const QMatrix& m, int r, int c)
{
    GMatrix b(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            b(i, j) = GaussQ(m(r + i, c + j));
    return b;
}

} // namespace

SiegelPoint moebius(const SymplecticSimilitude& g, const SiegelPoint& z)
{
    GMatrix a = block(g.m, 0, 0), b = block(g.m, 0, 2), c = block(g.m, 2, 0), d = block(g.m, 2, 2);
    GMatrix zm = z.as_matrix();
    GMatrix den = c * zm + d;
    if (determinant(den).is_zero())
        throw std::domain_error("moebius: C z + D is singular");
    return SiegelPoint::from_matrix((a * zm + b) * paramodular::inverse(den));
}

SiegelPoint vd_tau_action(long t, long d, long x, long y, const SiegelPoint& z)
{
    if (!is_unitary_divisor(t, d) || x * d - y * (t / d) != 1)
        throw std::invalid_argument("vd_tau_action: invalid (d, x, y)");
    const long td = t / d;
    GMatrix l(2, 2), mid(2, 2), r(2, 2);
    l(0, 0) = GaussQ(x);
    l(0, 1) = GaussQ(-1);
    l(1, 0) = GaussQ(-y * td);
    l(1, 1) = GaussQ(d);
    mid(0, 0) = z.tau1 * GaussQ(d);
    mid(0, 1) = z.tau2;
    mid(1, 0) = z.tau2;
    mid(1, 1) = z.tau3 / GaussQ(d);
    r = l.transpose();
    return SiegelPoint::from_matrix(l * mid * r);
}

SiegelPoint vd_tau_action(long t, long d, const SiegelPoint& z)
{
    VTilde v = make_vtilde(t, d);
    return vd_tau_action(t, d, v.x, v.y, z);
}

SymplecticSimilitude sample_gamma_t(long t, std::uint64_t seed, int length)
{
    if (length < 1)
        throw std::invalid_argument("sample_gamma_t: length must be >= 1");
    if (t < 1)
        throw std::invalid_argument("t must be positive");
    std::mt19937_64 rng(seed);
    auto small = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    SymplecticSimilitude g;
    for (int step = 0; step < length; ++step) {
        QMatrix m = QMatrix::identity(4);
        switch (small(0, 3)) {
        case 0: { // [[I, B], [0, I]], B11 in Z, B12, B22 in tZ
            long b11 = small(-2, 2), b12 = t * small(-1, 1), b22 = t * small(-1, 1);
            m(0, 2) = b11;
            m(0, 3) = b12;
            m(1, 2) = b12;
            m(1, 3) = b22;
            break;
        }
        case 1: { // [[I, 0], [C, I]], C22 in t^-1 Z
            long c11 = small(-2, 2), c12 = small(-1, 1);
            m(2, 0) = c11;
            m(2, 1) = c12;
            m(3, 0) = c12;
            m(3, 1) = make_q(small(-2, 2), t);
            break;
        }
        case 2: { // diag(A, A^-T), A in GL2(Z) with A21 in tZ
            long k = small(-2, 2);
            QMatrix a = small(0, 1) ? qmatrix({{1, k}, {0, 1}}) : qmatrix({{1, 0}, {t * k, 1}});
            if (small(0, 1))
                a = a * qmatrix({{-1, 0}, {0, 1}});
            QMatrix ait = paramodular::inverse(a).transpose();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    m(i, j) = a(i, j);
                    m(2 + i, 2 + j) = ait(i, j);
                }
            break;
        }
        default: { // powers of X = diag-block with X21 = t, X34 = -t
            long k = small(-1, 1);
            m(1, 0) = t * k;
            m(2, 3) = -t * k;
            break;
        }
        }
        g = g * SymplecticSimilitude(m, 1);
    }
    return g;
}

} // namespace paramodular

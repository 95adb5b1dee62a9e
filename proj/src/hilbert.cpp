#include "paramodular/hilbert.hpp"

#include "paramodular/numtheory.hpp"

#include <random>
#include <stdexcept>

namespace paramodular {

namespace {

long merge_t(long a, long b)
{
    if (a == 0)
        return b;
    if (b == 0 || a == b)
        return a;
    throw std::invalid_argument("mixing scalars from different quadratic fields");
}

} // namespace

QuadScalar::QuadScalar(Q x, Q y, long tt) : a(std::move(x)), b(std::move(y)), t(tt)
{
    if (t < 0 || (t > 0 && !is_squarefree(t)) || t == 1)
        throw std::invalid_argument("QuadScalar needs a square-free t > 1");
}

int QuadScalar::sign() const
{
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    Q a2 = a * a, tb2 = Q(t) * b * b;
    return a2 > tb2 ? sa : sb;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o)
{
    t = merge_t(t, o.t);
    a += o.a;
    b += o.b;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o)
{
    t = merge_t(t, o.t);
    a -= o.a;
    b -= o.b;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o)
{
    t = merge_t(t, o.t);
    Q na = a * o.a + Q(t) * b * o.b;
    b = a * o.b + b * o.a;
    a = std::move(na);
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero in Q(sqrt t)");
    Q n = o.t == 0 ? o.a * o.a : o.norm();
    QuadScalar c = o.t == 0 ? QuadScalar(o.a) : o.conj();
    *this *= c;
    a /= n;
    b /= n;
    return *this;
}

std::string QuadScalar::str() const
{
    if (sgn(b) == 0)
        return a.get_str();
    return a.get_str() + (sgn(b) > 0 ? "+" : "") + b.get_str() + "*sqrt(" + std::to_string(t) + ")";
}

BiComplex& BiComplex::operator+=(const BiComplex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

BiComplex& BiComplex::operator-=(const BiComplex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

BiComplex& BiComplex::operator*=(const BiComplex& o)
{
    QuadScalar r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

BiComplex& BiComplex::operator/=(const BiComplex& o)
{
    QuadScalar n = o.re * o.re + o.im * o.im;
    if (n.is_zero())
        throw std::domain_error("division by zero in the rank-4 algebra");
    *this *= o.conj_i();
    re /= n;
    im /= n;
    return *this;
}

std::string to_string(Variant v)
{
    switch (v) {
    case Variant::H4t_1mod4:
        return "H4t_1mod4";
    case Variant::Ht_1mod4:
        return "Ht_1mod4";
    default:
        return "H4t_other";
    }
}

Variant parse_variant(const std::string& s)
{
    if (s == "H4t_1mod4")
        return Variant::H4t_1mod4;
    if (s == "Ht_1mod4")
        return Variant::Ht_1mod4;
    if (s == "H4t_other")
        return Variant::H4t_other;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

bool variant_compatible(long t, Variant v)
{
    bool one = mod_floor(t, 4) == 1;
    return v == Variant::H4t_other ? !one : one;
}

QuadScalar omega(long t)
{
    if (mod_floor(t, 4) == 1)
        return {make_q(1, 2), make_q(1, 2), t};
    return QuadScalar::sqrt_t(t);
}

bool order_contains(const QuadScalar& x, OrderKind kind, long t)
{
    if (x.t != 0 && x.t != t)
        throw std::invalid_argument("scalar lives in a different field");
    switch (kind) {
    case OrderKind::Full:
        if (mod_floor(t, 4) == 1)
            return is_integer(2 * x.b) && is_integer(x.a - x.b);
        return is_integer(x.a) && is_integer(x.b);
    case OrderKind::O2:
        return is_integer(x.a) && is_integer(x.b);
    case OrderKind::O2Tilde:
        return is_integer(2 * x.a) && is_integer(2 * x.b);
    case OrderKind::O2TildeInverse:
        return is_integer(x.a / 2) && is_integer(x.b / 2);
    }
    return false;
}

QSMatrix r_matrix(long t, Variant v)
{
    if (!is_squarefree(t) || t < 2)
        throw std::invalid_argument("r_matrix needs square-free t >= 2");
    if (!variant_compatible(t, v))
        throw std::invalid_argument("variant " + to_string(v) + " is incompatible with t=" + std::to_string(t));
    QuadScalar s = QuadScalar::sqrt_t(t);
    QuadScalar w = omega(t);
    QuadScalar eta = s * w;
    QSMatrix r(2, 2);
    r(0, 0) = r(1, 0) = QuadScalar(1);
    switch (v) {
    case Variant::H4t_1mod4:
        r(0, 1) = QuadScalar(2) * eta;
        r(1, 1) = QuadScalar(2) * eta.conj();
        break;
    case Variant::Ht_1mod4:
        r(0, 1) = eta;
        r(1, 1) = eta.conj();
        break;
    case Variant::H4t_other:
        r(0, 1) = s;
        r(1, 1) = s.conj();
        break;
    }
    return r;
}

QSMatrix conj(const QSMatrix& m)
{
    QSMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = m(i, j).conj();
    return c;
}

QSMatrix to_qs(const QMatrix& m)
{
    QSMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = QuadScalar(m(i, j));
    return c;
}

namespace {

QSMatrix block_diag(const QSMatrix& a, const QSMatrix& b)
{
    QSMatrix m(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(2 + i, 2 + j) = b(i, j);
        }
    return m;
}

QMatrix rational_part(const QSMatrix& m)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational())
                throw std::logic_error("sqrt(t) part did not cancel");
            q(i, j) = m(i, j).a;
        }
    return q;
}

} // namespace

QSMatrix psi_hat_pair(const QSMatrix& g1, const QSMatrix& g2, const QSMatrix& r)
{
    QSMatrix inner(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            inner(2 * i, 2 * j) = g1(i, j);
            inner(2 * i + 1, 2 * j + 1) = g2(i, j);
        }
    QSMatrix rt = r.transpose();
    QSMatrix left = block_diag(rt, inverse(r));
    QSMatrix right = block_diag(inverse(rt), r);
    return left * inner * right;
}

SymplecticSimilitude psi_hat_embed(const QSMatrix& g, const QSMatrix& r)
{
    QuadScalar det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (!(det == QuadScalar(1)))
        throw std::invalid_argument("psi_hat_embed expects det g = 1");
    return {rational_part(psi_hat_pair(g, conj(g), r)), Q(1)};
}

SymplecticSimilitude s_involution(const QSMatrix& r)
{
    QSMatrix j(2, 2);
    j(0, 1) = j(1, 0) = QuadScalar(1);
    QSMatrix rt = r.transpose();
    return {rational_part(block_diag(rt * j * inverse(rt), inverse(r) * j * r)), Q(1)};
}

BlockDecomposition lemma_3_12_decompose(const QSMatrix& m, const QSMatrix& r, Variant v, long t)
{
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("lemma_3_12_decompose expects a 4x4 matrix");
    QSMatrix rt = r.transpose();
    QSMatrix inner = block_diag(inverse(rt), r) * m * block_diag(rt, inverse(r));
    static const int off[][2] = {{0, 1}, {1, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}, {2, 3}, {3, 2}};
    for (auto& p : off)
        if (!inner(p[0], p[1]).is_zero())
            throw std::invalid_argument("matrix is not in the image of the block construction");
    BlockDecomposition out;
    out.first = {inner(0, 0), inner(0, 2), inner(2, 0), inner(2, 2)};
    out.second = {inner(1, 1), inner(1, 3), inner(3, 1), inner(3, 3)};
    std::array<OrderKind, 4> kinds;
    if (v == Variant::Ht_1mod4)
        kinds = {OrderKind::Full, OrderKind::Full, OrderKind::Full, OrderKind::Full};
    else
        kinds = {OrderKind::O2, OrderKind::O2Tilde, OrderKind::O2TildeInverse, OrderKind::O2};
    out.orders_ok = true;
    out.galois_ok = true;
    for (int i = 0; i < 4; ++i) {
        out.orders_ok = out.orders_ok && order_contains(out.first[i], kinds[i], t);
        out.galois_ok = out.galois_ok && out.second[i] == out.first[i].conj();
    }
    return out;
}

std::array<Q, 3> image_equation(long t, Variant v)
{
    switch (v) {
    case Variant::H4t_1mod4:
        return {Q(-(t * t - t)), Q(2 * t), Q(-1)};
    case Variant::Ht_1mod4:
        return {Q(t * t - t), Q(-4 * t), Q(4)};
    default:
        return {Q(t), Q(0), Q(-1)};
    }
}

bool image_identity_holds(const QSMatrix& r, const std::array<Q, 3>& eq)
{
    // τ_ij = Σ_k R_ki R_kj z_k; the plane must vanish on each z_k coefficient.
    for (int k = 0; k < 2; ++k) {
        QuadScalar v = QuadScalar(eq[0]) * r(k, 0) * r(k, 0) + QuadScalar(eq[1]) * r(k, 0) * r(k, 1) +
                       QuadScalar(eq[2]) * r(k, 1) * r(k, 1);
        if (!v.is_zero())
            return false;
    }
    return true;
}

bool humbert_image_identity(long t, Variant v)
{
    return image_identity_holds(r_matrix(t, v), image_equation(t, v));
}

bool x_transport_check(long t)
{
    QMatrix x = qmatrix({{1, 0, 0, 0}, {t, 1, 0, 0}, {0, 0, 1, -t}, {0, 0, 0, 1}});
    if (!gamma_t_contains(SymplecticSimilitude(x, 1), t))
        return false;
    QMatrix ainv = qmatrix({{1, 0}, {-t, 1}});
    const QMatrix basis[3] = {qmatrix({{1, 0}, {0, 0}}), qmatrix({{0, 1}, {1, 0}}), qmatrix({{0, 0}, {0, 1}})};
    for (const QMatrix& tau : basis) {
        QMatrix img = ainv * tau * ainv.transpose();
        Q target = Q(t) * img(0, 0) - img(1, 1);
        Q source = Q(-(t * t - t)) * tau(0, 0) + Q(2 * t) * tau(0, 1) - tau(1, 1);
        if (target != source)
            return false;
    }
    return true;
}

BCMatrix phi_hat(const BiComplex& z1, const BiComplex& z2, const QSMatrix& r)
{
    BCMatrix m(2, 2);
    const BiComplex z[2] = {z1, z2};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, j) = BiComplex(0);
            for (int k = 0; k < 2; ++k)
                m(i, j) += BiComplex(r(k, i) * r(k, j)) * z[k];
        }
    return m;
}

BiComplex mobius_1(const QSMatrix& g, const BiComplex& z)
{
    return (BiComplex(g(0, 0)) * z + BiComplex(g(0, 1))) / (BiComplex(g(1, 0)) * z + BiComplex(g(1, 1)));
}

bool equivariance_check(const QSMatrix& g, const BiComplex& z1, const BiComplex& z2, const QSMatrix& r)
{
    if (z1.im.sign() <= 0 || z2.im.sign() <= 0)
        throw std::invalid_argument("equivariance_check needs points in the upper half-planes");
    SymplecticSimilitude p = psi_hat_embed(g, r);
    BCMatrix a(2, 2), b(2, 2), c(2, 2), d(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a(i, j) = BiComplex(QuadScalar(p.m(i, j)));
            b(i, j) = BiComplex(QuadScalar(p.m(i, 2 + j)));
            c(i, j) = BiComplex(QuadScalar(p.m(2 + i, j)));
            d(i, j) = BiComplex(QuadScalar(p.m(2 + i, 2 + j)));
        }
    BCMatrix z = phi_hat(z1, z2, r);
    BCMatrix lhs = (a * z + b) * inverse(c * z + d);
    BCMatrix rhs = phi_hat(mobius_1(g, z1), mobius_1(conj(g), z2), r);
    return lhs == rhs;
}

QMatrix riemann_gram_check(long t, Variant v, const BiComplex& z1, const BiComplex& z2)
{
    if (z1.im.sign() <= 0 || z2.im.sign() <= 0)
        throw std::invalid_argument("riemann_gram_check needs points in the upper half-planes");
    QSMatrix r = r_matrix(t, v);
    QuadScalar s = QuadScalar::sqrt_t(t);
    QuadScalar w = omega(t);
    QuadScalar eta = s * w;
    QuadScalar half = QuadScalar(make_q(1, 2));
    using Vec = std::array<BiComplex, 2>;
    std::array<Vec, 4> basis;
    switch (v) {
    case Variant::Ht_1mod4:
        basis = {Vec{z1, z2}, Vec{BiComplex(eta) * z1, BiComplex(eta.conj()) * z2},
                 Vec{BiComplex(-eta.conj() / s), BiComplex(eta / s)}, Vec{BiComplex(s), BiComplex(-s)}};
        break;
    case Variant::H4t_1mod4:
        basis = {Vec{z1, z2}, Vec{BiComplex(QuadScalar(2) * eta) * z1, BiComplex(QuadScalar(2) * eta.conj()) * z2},
                 Vec{BiComplex(-eta.conj() / s), BiComplex(eta / s)},
                 Vec{BiComplex(s * half), BiComplex(-s * half)}};
        break;
    case Variant::H4t_other:
        basis = {Vec{z1, z2}, Vec{BiComplex(w) * z1, BiComplex(w.conj()) * z2},
                 Vec{BiComplex(half), BiComplex(half)}, Vec{BiComplex(w * half), BiComplex(w.conj() * half)}};
        break;
    }
    (void)r;
    QMatrix e(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QuadScalar val = (basis[i][0] * basis[j][0].conj_i()).im / z1.im +
                             (basis[i][1] * basis[j][1].conj_i()).im / z2.im;
            if (!val.is_rational())
                throw std::logic_error("Riemann form value is irrational");
            e(i, j) = val.a;
        }
    return e;
}

QSMatrix sample_hilbert_element(long t, Variant v, std::uint64_t seed, int length)
{
    if (length < 1)
        throw std::invalid_argument("sample length must be >= 1");
    (void)r_matrix(t, v);
    std::mt19937_64 rng(seed);
    auto small = [&rng](int lo, int hi) { return static_cast<long>(std::uniform_int_distribution<int>(lo, hi)(rng)); };
    QuadScalar s = QuadScalar::sqrt_t(t);
    QuadScalar w = omega(t);
    const bool full = v == Variant::Ht_1mod4;
    QSMatrix g = QSMatrix::identity(2);
    for (int step = 0; step < length; ++step) {
        QSMatrix h = QSMatrix::identity(2);
        switch (small(0, 2)) {
        case 0: // upper unipotent, b in o (H_t) or õ2
            h(0, 1) = full ? QuadScalar(small(-2, 2)) + QuadScalar(small(-2, 2)) * w
                           : (QuadScalar(small(-3, 3)) + QuadScalar(small(-3, 3)) * s) * QuadScalar(make_q(1, 2));
            break;
        case 1: // lower unipotent, c in o (H_t) or õ2^{-1}
            h(1, 0) = full ? QuadScalar(small(-2, 2)) + QuadScalar(small(-2, 2)) * w
                           : (QuadScalar(small(-1, 1)) + QuadScalar(small(-1, 1)) * s) * QuadScalar(2);
            break;
        default: // [[0, -1/2], [2, 0]] or [[0, -1], [1, 0]]
            h(0, 0) = h(1, 1) = QuadScalar(0);
            h(0, 1) = full ? QuadScalar(-1) : QuadScalar(make_q(-1, 2));
            h(1, 0) = full ? QuadScalar(1) : QuadScalar(2);
            break;
        }
        g = g * h;
    }
    return g;
}

} // namespace paramodular

#include "paramodular/orthogonal.hpp"

#include "paramodular/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace paramodular {

QMatrix gram_st(long t)
{
    QMatrix s(5, 5);
    s(0, 4) = s(4, 0) = -1;
    s(1, 3) = s(3, 1) = -1;
    s(2, 2) = 2 * t;
    return s;
}

Q bivector_pairing(const std::vector<Q>& x, const std::vector<Q>& y)
{
    if (x.size() != 6 || y.size() != 6)
        throw std::invalid_argument("bivector_pairing expects 6-vectors");
    return x[0] * y[5] - x[1] * y[4] + x[2] * y[3] + x[3] * y[2] - x[4] * y[1] + x[5] * y[0];
}

QMatrix lt_basis_change(long t)
{
    QMatrix p(6, 6);
    p(0, 0) = 1;       // e1^e2
    p(3, 1) = 1;       // e2^e3
    p(1, 2) = 1;       // e1^e3 - t e2^e4
    p(4, 2) = -t;
    p(2, 3) = -1;      // e4^e1
    p(5, 4) = -1;      // e4^e3
    p(1, 5) = 1;       // W_t
    p(4, 5) = t;
    return p;
}

Q pairing(const LatticeVector& x, const LatticeVector& y, long t)
{
    return -x[0] * y[4] - x[4] * y[0] - x[1] * y[3] - x[3] * y[1] + 2 * t * x[2] * y[2];
}

Q norm(const LatticeVector& v, long t) { return pairing(v, v, t); }

bool is_integral(const LatticeVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Q& q) { return is_integer(q); });
}

bool is_dual(const LatticeVector& v, long t)
{
    for (int i = 0; i < 5; ++i) {
        LatticeVector e{};
        e[i] = 1;
        if (!is_integer(pairing(v, e, t)))
            return false;
    }
    return true;
}

LatticeVector apply(const QMatrix& o, const LatticeVector& v)
{
    LatticeVector r{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            r[i] += o(i, j) * v[j];
    return r;
}

bool is_isometry(const QMatrix& o, long t)
{
    QMatrix s = gram_st(t);
    return o.transpose() * s * o == s;
}

QMatrix psi_map(const SymplecticSimilitude& g, long t)
{
    QMatrix it = QMatrix::identity(4);
    it(3, 3) = t;
    QMatrix conj = it * g.m * inverse(it);
    QMatrix w = wedge_square(conj).scaled(1 / g.mu);
    QMatrix p = lt_basis_change(t);
    QMatrix m = inverse(p) * w * p;
    for (int i = 0; i < 6; ++i) {
        Q expect = i == 5 ? Q(1) : Q(0);
        if (m(i, 5) != expect || m(5, i) != expect)
            throw std::domain_error("psi_map: W_t is not fixed; not a paramodular similitude");
    }
    QMatrix o(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            o(i, j) = m(i, j);
    return o;
}

long disc_action(const QMatrix& o, long t)
{
    for (const Q& q : o.data())
        if (!is_integer(q))
            throw std::domain_error("disc_action: map is not integral on L_t");
    const long n = 2 * t;
    for (int i = 0; i < 5; ++i)
        if (i != 2 && o(i, 2).get_num() % n != 0)
            throw std::domain_error("disc_action: map does not preserve the dual lattice");
    return mod_floor(to_long(o(2, 2)), n);
}

QuadricPoint siegel_to_quadric(const SiegelPoint& z, long t)
{
    const GaussQ tt(t);
    GaussQ z1 = z.tau1, z2 = z.tau2 / tt, z3 = z.tau3 / tt;
    return {tt * z2 * z2 - z1 * z3, z3, z2, z1, GaussQ(1)};
}

SiegelPoint quadric_to_siegel(const QuadricPoint& p, long t)
{
    QuadricPoint n = normalize(p);
    const GaussQ tt(t);
    return {n[3], n[2] * tt, n[1] * tt};
}

QuadricPoint normalize(const QuadricPoint& p)
{
    if (p[4].is_zero())
        throw std::domain_error("quadric point has vanishing last coordinate");
    QuadricPoint r;
    for (int i = 0; i < 5; ++i)
        r[i] = p[i] / p[4];
    return r;
}

QuadricPoint act(const QMatrix& o, const QuadricPoint& p)
{
    QuadricPoint r;
    for (int i = 0; i < 5; ++i) {
        r[i] = GaussQ(0);
        for (int j = 0; j < 5; ++j)
            r[i] += GaussQ(o(i, j)) * p[j];
    }
    return r;
}

GaussQ pairing(const QuadricPoint& x, const QuadricPoint& y, long t)
{
    return GaussQ(-1) * (x[0] * y[4] + x[4] * y[0] + x[1] * y[3] + x[3] * y[1]) + GaussQ(2 * t) * x[2] * y[2];
}

bool in_plus_component(const QMatrix& o, long t)
{
    if (!is_isometry(o, t))
        throw std::invalid_argument("in_plus_component expects an S_t-isometry");
    // Base points of the plus component; a generic one has an image off the hyperplane Z_5 = 0.
    const SiegelPoint bases[] = {{GaussQ(0, 1), GaussQ(0), GaussQ(0, t)},
                                 {GaussQ(1, 2), GaussQ(0, 1), GaussQ(0, 3 * t)},
                                 {GaussQ(-2, 1), GaussQ(1, 0), GaussQ(3, 2 * t)}};
    for (const SiegelPoint& z : bases) {
        QuadricPoint img = act(o, siegel_to_quadric(z, t));
        if (img[4].is_zero())
            continue;
        img = normalize(img);
        if (!pairing(img, img, t).is_zero())
            throw std::logic_error("image left the quadric");
        return sgn(img[3].im) > 0;
    }
    throw std::logic_error("no base point with a regular image");
}

long divisor_of(const LatticeVector& v, long t)
{
    if (!is_integral(v))
        throw std::invalid_argument("divisor_of expects an integral vector");
    long g = 0;
    for (int i = 0; i < 5; ++i) {
        LatticeVector e{};
        e[i] = 1;
        g = gcd_l(g, to_long(pairing(v, e, t)));
    }
    if (g == 0)
        throw std::invalid_argument("divisor_of: zero vector");
    return g;
}

Reflection reflection(const LatticeVector& v, long t)
{
    Q n = norm(v, t);
    if (sgn(n) == 0)
        throw std::invalid_argument("reflection: isotropic vector");
    QMatrix s = gram_st(t);
    QMatrix vv(5, 1);
    for (int i = 0; i < 5; ++i)
        vv(i, 0) = v[i];
    QMatrix m = QMatrix::identity(5) - (vv * vv.transpose() * s).scaled(2 / n);
    bool integral = std::all_of(m.data().begin(), m.data().end(), [](const Q& q) { return is_integer(q); });
    return {m, integral};
}

std::string to_string(InvolutionType k)
{
    return k == InvolutionType::Reflection ? "reflection-type" : "rotation-type";
}

std::size_t rank(QMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            Q f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

int plus_multiplicity(const QMatrix& o)
{
    const std::size_t n = o.rows();
    if (!(o * o == QMatrix::identity(n)))
        throw std::invalid_argument("not an involution");
    return static_cast<int>(n - rank(o - QMatrix::identity(n)));
}

InvolutionType involution_classify(const QMatrix& o, long t)
{
    if (!is_isometry(o, t))
        throw std::invalid_argument("involution_classify expects an S_t-isometry");
    switch (plus_multiplicity(o)) {
    case 1:
        return InvolutionType::Reflection;
    case 3:
        return InvolutionType::Rotation;
    default:
        throw std::invalid_argument("involution_classify: spectrum is not {1,-1^4} or {1^3,-1^2}");
    }
}

QMatrix e8_negative()
{
    // Cartan matrix of E8 (Bourbaki labelling), negated.
    static const int edges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    QMatrix g(8, 8);
    for (int i = 0; i < 8; ++i)
        g(i, i) = -2;
    for (auto& e : edges)
        g(e[0], e[1]) = g(e[1], e[0]) = 1;
    return g;
}

namespace {

// gcd of all maximal minors of an integer r x n matrix (r <= n).
Z maximal_minor_gcd(const std::vector<std::vector<long>>& rows)
{
    const std::size_t r = rows.size(), n = rows[0].size();
    Z g = 0;
    std::vector<std::size_t> pick(r);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t start) {
        if (g == 1)
            return;
        if (k == r) {
            QMatrix m(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    m(i, j) = rows[i][pick[j]];
            Q d = determinant(m);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_num().get_mpz_t());
            return;
        }
        for (std::size_t c = start; c + (r - k) <= n; ++c) {
            pick[k] = c;
            rec(k + 1, c + 1);
        }
    };
    rec(0, 0);
    return g;
}

} // namespace

K3Check k3_complement_check(long t)
{
    K3Check out;
    QMatrix g(22, 22);
    for (int u = 0; u < 3; ++u)
        g(2 * u, 2 * u + 1) = g(2 * u + 1, 2 * u) = 1;
    QMatrix e8 = e8_negative();
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                g(6 + 8 * b + i, 6 + 8 * b + j) = e8(i, j);
    out.k3_gram = g;

    // D_t = <h> + 2E8(-1), h = (1, t) in the third U
    std::vector<std::vector<long>> dt;
    std::vector<long> h(22, 0);
    h[4] = 1;
    h[5] = t;
    dt.push_back(h);
    for (int i = 6; i < 22; ++i) {
        std::vector<long> e(22, 0);
        e[i] = 1;
        dt.push_back(e);
    }

    auto unit = [](int i) {
        std::vector<long> e(22, 0);
        e[i] = 1;
        return e;
    };
    std::vector<long> c(22, 0);
    c[4] = 1;
    c[5] = -t;
    out.witness = {unit(0), unit(2), c, unit(3), unit(1)};

    auto ip = [&g](const std::vector<long>& a, const std::vector<long>& b) {
        Q s = 0;
        for (int i = 0; i < 22; ++i)
            for (int j = 0; j < 22; ++j)
                if (a[i] && b[j])
                    s += Q(a[i]) * g(i, j) * b[j];
        return s;
    };

    QMatrix hg(1, 1);
    hg(0, 0) = ip(h, h);
    bool ok = hg(0, 0) == 2 * t && determinant(e8) == 1;
    for (const auto& w : out.witness)
        for (const auto& d : dt)
            ok = ok && sgn(ip(w, d)) == 0;

    out.complement_gram = QMatrix(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            out.complement_gram(i, j) = ip(out.witness[i], out.witness[j]);
    ok = ok && out.complement_gram == -gram_st(t);

    // The witness spans a primitive rank-5 sublattice of the rank-5 complement, hence all of it.
    ok = ok && maximal_minor_gcd(out.witness) == 1;
    std::vector<std::vector<long>> all = dt;
    all.insert(all.end(), out.witness.begin(), out.witness.end());
    QMatrix big(all.size(), 22);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (int j = 0; j < 22; ++j)
            big(i, j) = all[i][j];
    ok = ok && rank(big) == 22;
    out.ok = ok;
    return out;
}

} // namespace paramodular

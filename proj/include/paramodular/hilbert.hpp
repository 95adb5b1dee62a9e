#pragma once

#include "paramodular/rational.hpp"
#include "paramodular/symplectic.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace paramodular {

// a + b sqrt(t).  t == 0 marks a plain rational that adopts the t of its partner.
struct QuadScalar {
    Q a, b;
    long t = 0;

    QuadScalar() = default;
    QuadScalar(long x) : a(x) {}
    QuadScalar(Q x) : a(std::move(x)) {}
    QuadScalar(Q x, Q y, long tt);

    static QuadScalar sqrt_t(long t) { return {Q(0), Q(1), t}; }

    QuadScalar conj() const { return {a, -b, t}; }
    Q norm() const { return a * a - Q(t) * b * b; }
    bool is_rational() const { return sgn(b) == 0; }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    // Sign under the real embedding with sqrt(t) > 0.
    int sign() const;

    QuadScalar operator-() const { return {-a, -b, t}; }
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o);
    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
    friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
    friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return x.a == y.a && x.b == y.b; }

    std::string str() const;
};

// (re) + (im) i with re, im in Q(sqrt t); sqrt t is real.
struct BiComplex {
    QuadScalar re, im;

    BiComplex() = default;
    BiComplex(long x) : re(x) {}
    BiComplex(QuadScalar r) : re(std::move(r)) {}
    BiComplex(QuadScalar r, QuadScalar i) : re(std::move(r)), im(std::move(i)) {}

    BiComplex conj_i() const { return {re, -im}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BiComplex operator-() const { return {-re, -im}; }
    BiComplex& operator+=(const BiComplex& o);
    BiComplex& operator-=(const BiComplex& o);
    BiComplex& operator*=(const BiComplex& o);
    BiComplex& operator/=(const BiComplex& o);
    friend BiComplex operator+(BiComplex x, const BiComplex& y) { return x += y; }
    friend BiComplex operator-(BiComplex x, const BiComplex& y) { return x -= y; }
    friend BiComplex operator*(BiComplex x, const BiComplex& y) { return x *= y; }
    friend BiComplex operator/(BiComplex x, const BiComplex& y) { return x /= y; }
    friend bool operator==(const BiComplex& x, const BiComplex& y) { return x.re == y.re && x.im == y.im; }
};

using QSMatrix = Matrix<QuadScalar>;
using BCMatrix = Matrix<BiComplex>;

enum class OrderKind { Full, O2, O2Tilde, O2TildeInverse };
enum class Variant { H4t_1mod4, Ht_1mod4, H4t_other };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);
bool variant_compatible(long t, Variant v);

QuadScalar omega(long t); // (1 + sqrt t)/2 if t = 1 mod 4, else sqrt t
bool order_contains(const QuadScalar& x, OrderKind kind, long t);

QSMatrix r_matrix(long t, Variant v);

// Ψ̂ on an arbitrary pair (g1, g2); entries in Q(sqrt t).
QSMatrix psi_hat_pair(const QSMatrix& g1, const QSMatrix& g2, const QSMatrix& r);
SymplecticSimilitude psi_hat_embed(const QSMatrix& g, const QSMatrix& r);
QSMatrix conj(const QSMatrix& m);
QSMatrix to_qs(const QMatrix& m);

// S = diag(tR J tR^-1, R^-1 J R).
SymplecticSimilitude s_involution(const QSMatrix& r);

struct BlockDecomposition {
    std::array<QuadScalar, 4> first;  // a1, b1, c1, d1
    std::array<QuadScalar, 4> second; // a2, b2, c2, d2
    bool orders_ok = false;
    bool galois_ok = false;
    bool all_ok() const { return orders_ok && galois_ok; }
};

BlockDecomposition lemma_3_12_decompose(const QSMatrix& m, const QSMatrix& r, Variant v, long t);

// Coefficients (c1, c2, c3) of the plane c1 τ1 + c2 τ2 + c3 τ3 = 0 containing Im Φ̂.
std::array<Q, 3> image_equation(long t, Variant v);
bool image_identity_holds(const QSMatrix& r, const std::array<Q, 3>& eq);
bool humbert_image_identity(long t, Variant v);
// X^-1 carries {-(t^2-t)τ1 + 2tτ2 - τ3 = 0} onto {tτ1 - τ3 = 0}.
bool x_transport_check(long t);

BCMatrix phi_hat(const BiComplex& z1, const BiComplex& z2, const QSMatrix& r);
BiComplex mobius_1(const QSMatrix& g, const BiComplex& z);
bool equivariance_check(const QSMatrix& g, const BiComplex& z1, const BiComplex& z2, const QSMatrix& r);

QMatrix riemann_gram_check(long t, Variant v, const BiComplex& z1, const BiComplex& z2);

// Deterministic random element of SL2(o2, õ2) (H4t variants) or SL2(o) (H_t).
QSMatrix sample_hilbert_element(long t, Variant v, std::uint64_t seed, int length);

} // namespace paramodular

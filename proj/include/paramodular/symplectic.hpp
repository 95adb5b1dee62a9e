#pragma once

#include "paramodular/rational.hpp"

#include <cstdint>
#include <optional>

namespace paramodular {

// A 4x4 rational matrix m with m J m^T = mu J.  V_d is stored as (Ṽ_d, d).
struct SymplecticSimilitude {
    QMatrix m = QMatrix::identity(4);
    Q mu = 1;

    SymplecticSimilitude() = default;
    SymplecticSimilitude(QMatrix mat, Q mult = 1);

    SymplecticSimilitude operator*(const SymplecticSimilitude& o) const;
    SymplecticSimilitude inverse() const;
    bool is_symplectic() const;
};

// Point of the Siegel upper half-space of degree 2, tau = [[tau1, tau2], [tau2, tau3]].
struct SiegelPoint {
    GaussQ tau1, tau2, tau3;

    bool in_domain() const;
    GMatrix as_matrix() const;
    static SiegelPoint from_matrix(const GMatrix& m);
    friend bool operator==(const SiegelPoint& a, const SiegelPoint& b)
    {
        return a.tau1 == b.tau1 && a.tau2 == b.tau2 && a.tau3 == b.tau3;
    }
};

// J with +1 at (1,3), (2,4) and -1 at (3,1), (4,2).
const QMatrix& symplectic_form();

QMatrix wedge_square(const QMatrix& g);
Q pfaffian(const QMatrix& x);

bool gamma_t_contains(const SymplecticSimilitude& g, long t);
// Pattern-only check for a rational matrix (no multiplier or symplectic test).
bool gamma_t_pattern(const QMatrix& m, long t);

QMatrix conjugator_c(long t);
bool gamma_hat_contains(const SymplecticSimilitude& g, long t);

struct VTilde {
    SymplecticSimilitude g;
    long x = 1, y = 0; // x d - y t/d = 1
};

VTilde make_vtilde(long t, long d);
VTilde make_vtilde(long t, long d, long x, long y);

// The unitary d with g V_d^{-1} in Γ_t, if any.
std::optional<long> gamma_star_contains(const SymplecticSimilitude& g, long t);

SiegelPoint moebius(const SymplecticSimilitude& g, const SiegelPoint& z);
SiegelPoint vd_tau_action(long t, long d, const SiegelPoint& z);
SiegelPoint vd_tau_action(long t, long d, long x, long y, const SiegelPoint& z);

SymplecticSimilitude sample_gamma_t(long t, std::uint64_t seed, int length);

} // namespace paramodular

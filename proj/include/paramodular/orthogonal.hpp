#pragma once

#include "paramodular/rational.hpp"
#include "paramodular/symplectic.hpp"

#include <array>
#include <string>
#include <vector>

namespace paramodular {

// Coordinates in the fixed basis (e1^e2, e2^e3, e1^e3 - t e2^e4, e4^e1, e4^e3) of L_t.
using LatticeVector = std::array<Q, 5>;
using QuadricPoint = std::array<GaussQ, 5>;

QMatrix gram_st(long t);

// The wedge pairing X ^ Y = (X, Y) e1^e2^e3^e4 on 6-vectors over (12, 13, 14, 23, 24, 34).
Q bivector_pairing(const std::vector<Q>& x, const std::vector<Q>& y);

// Columns: the five L_t basis bivectors, then W_t = e1^e3 + t e2^e4.
QMatrix lt_basis_change(long t);

Q pairing(const LatticeVector& x, const LatticeVector& y, long t);
Q norm(const LatticeVector& v, long t);
bool is_integral(const LatticeVector& v);
bool is_dual(const LatticeVector& v, long t);
LatticeVector apply(const QMatrix& o, const LatticeVector& v);

bool is_isometry(const QMatrix& o, long t);

QMatrix psi_map(const SymplecticSimilitude& g, long t);

// Multiplier ξ with o(e3/2t) = ξ e3/2t mod L_t.
long disc_action(const QMatrix& o, long t);

QuadricPoint siegel_to_quadric(const SiegelPoint& z, long t);
SiegelPoint quadric_to_siegel(const QuadricPoint& p, long t);
QuadricPoint normalize(const QuadricPoint& p);
QuadricPoint act(const QMatrix& o, const QuadricPoint& p);
GaussQ pairing(const QuadricPoint& x, const QuadricPoint& y, long t);

bool in_plus_component(const QMatrix& o, long t);

long divisor_of(const LatticeVector& v, long t);

struct Reflection {
    QMatrix m;
    bool integral = false;
};

Reflection reflection(const LatticeVector& v, long t);

enum class InvolutionType { Reflection, Rotation };
std::string to_string(InvolutionType k);

std::size_t rank(QMatrix m);

// Number of +1 eigenvalues of an involution.
int plus_multiplicity(const QMatrix& o);
InvolutionType involution_classify(const QMatrix& o, long t);

struct K3Check {
    bool ok = false;
    QMatrix k3_gram;          // 22 x 22
    std::vector<std::vector<long>> witness; // complement basis in K3 coordinates
    QMatrix complement_gram;  // Gram of the witness basis
};

QMatrix e8_negative();
K3Check k3_complement_check(long t);

} // namespace paramodular

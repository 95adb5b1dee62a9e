#pragma once

#include "paramodular/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace paramodular {

// Element ξ_d of Ξ(t): the residue mod 2t with ξ ≡ -1 mod 2d, ξ ≡ 1 mod 2t/d.
struct XiElement {
    long t = 1;
    long d = 1;
    long value = 1;
};

long gcd_l(long a, long b);
long mod_floor(long a, long m);

// Prime factorisation as (p, e) pairs in ascending p.
std::vector<std::pair<long, int>> factorize(long n);

bool is_squarefree(long n);
bool is_unitary_divisor(long t, long d);

std::vector<long> divisors(long n);
std::vector<long> unitary_divisors(long t);

// Prime-power unitary divisors p^a || t, ascending; these generate Ξ(t).
std::vector<long> prime_power_parts(long t);

// Number of distinct primes dividing t.
int nu(long t);

XiElement xi_element(long t, long d);
std::vector<XiElement> xi_group(long t);

bool qr_solvable(long a, long m);
int kronecker_symbol(long a, long b);

// Q(n): the largest q with q^2 | n.
long square_part(long n);

// Extended Euclid: returns g and sets x, y with a x + b y = g.
long ext_gcd(long a, long b, long& x, long& y);

// Weighted class number H(Δ), with H(0) = -1/12.
Q class_number_h1(long disc);

// The generalised class number H_n(Δ) entering the weight-3 trace formula.
Q class_number_hn(long n, long disc);

} // namespace paramodular

#pragma once

#include "paramodular/jacobi.hpp"
#include "paramodular/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace paramodular {

// N = [[n, l/2], [l/2, m t]], positive definite.
struct LiftIndex {
    long n = 1, l = 0, m = 1;

    long disc(long t) const { return 4 * n * m * t - l * l; }
    friend bool operator==(const LiftIndex&, const LiftIndex&) = default;
};

LiftIndex make_lift_index(long n, long l, long m, long t);

Q lift_coefficient(const CoefficientTable& table, const LiftIndex& idx);

// The largest discriminant read by lift_coefficient(table, idx).
long lift_support(const LiftIndex& idx, long t);

QMatrix a_matrix(long t, long d, long x, long y);
QMatrix atilde_matrix(long t, long d, long x, long y);
QMatrix atilde_matrix(long t, long d);

LiftIndex transform_index(long t, long d, long x, long y, const LiftIndex& idx);
LiftIndex transform_index(long t, long d, const LiftIndex& idx);

CoefficientTable synth_eigen_table(long t, const EigenCharacter& eps, std::uint64_t seed, long d_max);

struct LiftReport {
    bool ok = true;
    long checked = 0;
    long skipped = 0; // indices whose keys fall outside the table
    std::optional<LiftIndex> witness;
    std::string detail;
};

LiftReport verify_theorem_2_1(const CoefficientTable& table, const EigenCharacter& eps, long d, long bound);

} // namespace paramodular

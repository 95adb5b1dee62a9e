#pragma once

#include "paramodular/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace paramodular {

// Character of Ξ(t), given by signs on the generators ξ_{p^a}, p^a || t.
struct EigenCharacter {
    long t = 1;
    std::map<long, int> signs; // p^a -> ±1

    int operator()(long d) const; // ε(ξ_d) for a unitary divisor d
    std::string pattern() const;  // e.g. "++-" in ascending p^a order

    static EigenCharacter from_signs(long t, const std::vector<int>& s);
    static std::vector<EigenCharacter> all(long t);
};

// (D, l mod 2t) with D = 4nt - l^2 > 0.
struct CoefficientKey {
    long disc = 0;
    long residue = 0;

    auto operator<=>(const CoefficientKey&) const = default;
};

CoefficientKey make_key(long t, long disc, long l);

struct CoefficientTable {
    long t = 1;
    int weight = 3;
    long d_max = 0;        // every admissible key with D <= d_max is present
    std::map<CoefficientKey, Q> values;

    // Value at a key; keys missing below d_max read as 0, beyond it throw.
    Q at(const CoefficientKey& k) const;
    bool covers(long disc) const { return disc <= d_max; }
    friend bool operator==(const CoefficientTable& a, const CoefficientTable& b)
    {
        return a.t == b.t && a.weight == b.weight && a.values == b.values;
    }
};

CoefficientKey wd_key_map(long t, long d, const CoefficientKey& key);
CoefficientTable apply_wd(const CoefficientTable& table, long d);
CoefficientTable scale(const CoefficientTable& table, const Q& c);
CoefficientTable add(const CoefficientTable& a, const CoefficientTable& b);
// 2^{-ν} Σ_d ε(ξ_d) table|W_d
CoefficientTable project(const CoefficientTable& table, const EigenCharacter& eps);

// The six-term weight-3 trace expression with the printed H_n, unreduced.
Q trace_formula_value(long t, long d);

// tr(W_d) on J_{3,t}^cusp as an integer.
long trace_wd_full(long t, long d);
long trace_wd_squarefree(long t, long d);

// dim J_{3,t}^ε from the vector-valued modular form dimension formula (exact).
long weil_eigen_dimension(long t, const EigenCharacter& eps);
long trace_wd_weil(long t, long d);

long dim_eigenspace(long t, const EigenCharacter& eps);
long dim_cusp(long t);

struct TrivialPair {
    long t = 0;
    long minus_part = 0; // p^a with ε(ξ_{p^a}) = -1
    long plus_part = 0;  // q^b with ε(ξ_{q^b}) = +1
    long dim = 0;
};

struct TrivialScan {
    long max_t = 0;
    std::vector<TrivialPair> pairs;          // t with dim J_{3,t}^cusp > 0
    std::vector<TrivialPair> pairs_zero_total; // same condition, but the whole space vanishes
    std::vector<long> zero_dimension;
};

TrivialScan trivial_eigenspace_scan(long max_t);

} // namespace paramodular

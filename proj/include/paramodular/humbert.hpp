#pragma once

#include "paramodular/orthogonal.hpp"
#include "paramodular/symplectic.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace paramodular {

// Component of H_Δ: (τ2^2 - τ1 τ3) f + c τ3 + b τ2 + t a τ1 + t e = 0.
struct HumbertComponent {
    LatticeVector ell{};
    long discriminant = 0;
    long te = 0, ta = 0, b = 0, c = 0, f = 0;
};

long component_count(long t, long disc);
HumbertComponent humbert_equation(const LatticeVector& ell, long t);
// One primitive reduced vector (0, a, -b/2t, c, 0) per residue b mod 2t with b^2 = Δ mod 4t.
std::vector<HumbertComponent> humbert_representatives(long t, long disc);

std::set<long> ramification_divisor(long t, long d);

struct RamificationEntry {
    long d = 0;
    std::set<long> discriminants;
};

struct RamificationReport {
    long t = 0;
    std::vector<RamificationEntry> entries;
    bool distinct = true;
};

RamificationReport ramification_total(long t);

struct SurveyHit {
    long a = 0, b = 0, c = 0;
    long norm = 0, div = 0, xi = 0, disc = 0;
};

struct SurveyReport {
    long t = 0;
    long bound = 0;
    std::map<long, std::set<long>> per_coset; // unitary d -> discriminants
    std::map<long, SurveyHit> first_hit;      // d -> witness of least max(|a|,|b|,|c|)
    long reflections = 0;
};

SurveyReport reflection_survey(long t, long bound);

// Per-coset agreement between ramification_divisor and the survey, over every d | t.
bool oracle_consistent(long t, const SurveyReport& survey);

struct InvolutionRep {
    LatticeVector ell{};
    long a = 0, b = 0, c = 0;
    QMatrix sigma;
    long discriminant = 0;
    long coset_xi = 0;
    bool valid = false;
};

std::vector<InvolutionRep> involution_reps(long t, long d);

struct BraschAnalysis {
    SymplecticSimilitude n_scaled; // sqrt(t) N with multiplier t
    bool square_is_minus_identity = false;
    std::optional<long> coset;
    InvolutionType type = InvolutionType::Rotation;
    int plus_multiplicity = 0;
};

BraschAnalysis brasch_matrix(long t, long f);

} // namespace paramodular

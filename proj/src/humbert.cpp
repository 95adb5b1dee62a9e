#include "paramodular/humbert.hpp"

#include "paramodular/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace paramodular {

long component_count(long t, long disc)
{
    if (disc < 1)
        throw std::invalid_argument("component_count expects a positive discriminant");
    long count = 0;
    for (long b = 0; b < 2 * t; ++b)
        if (mod_floor(b * b - disc, 4 * t) == 0)
            ++count;
    return count;
}

HumbertComponent humbert_equation(const LatticeVector& ell, long t)
{
    if (!is_dual(ell, t))
        throw std::invalid_argument("humbert_equation expects a vector of the dual lattice");
    Q bq = -2 * t * ell[2];
    for (int i : {0, 1, 3, 4})
        if (!is_integer(ell[i]))
            throw std::invalid_argument("humbert_equation expects (e, a, -b/2t, c, f) with integers");
    HumbertComponent h;
    h.ell = ell;
    long e = to_long(ell[0]), a = to_long(ell[1]), c = to_long(ell[3]), f = to_long(ell[4]);
    long b = to_long(bq);
    if (gcd_l(gcd_l(gcd_l(e, a), gcd_l(b, c)), f) != 1)
        throw std::invalid_argument("humbert_equation expects a primitive vector");
    Q n = norm(ell, t);
    if (sgn(n) <= 0)
        throw std::invalid_argument("humbert_equation expects positive norm");
    h.discriminant = to_long(2 * t * n);
    h.te = t * e;
    h.ta = t * a;
    h.b = b;
    h.c = c;
    h.f = f;
    if (h.discriminant != b * b - 4 * f * h.te - 4 * c * h.ta)
        throw std::logic_error("Humbert discriminant mismatch");
    return h;
}

std::vector<HumbertComponent> humbert_representatives(long t, long disc)
{
    std::vector<HumbertComponent> out;
    for (long b = 0; b < 2 * t; ++b) {
        if (mod_floor(b * b - disc, 4 * t) != 0)
            continue;
        // t a c = (b^2 - Δ)/4 with a = 1.
        long ac = (b * b - disc) / (4 * t);
        LatticeVector ell{Q(0), Q(1), make_q(-b, 2 * t), Q(ac), Q(0)};
        out.push_back(humbert_equation(ell, t));
    }
    return out;
}

std::set<long> ramification_divisor(long t, long d)
{
    if (!is_squarefree(t))
        throw std::invalid_argument("ramification_divisor requires square-free t");
    if (d < 1 || t % d != 0)
        throw std::invalid_argument("ramification_divisor: d must divide t");
    const long td = t / d;
    if (qr_solvable(d, 4 * td))
        return {d, 4 * d};
    if (qr_solvable(d, td))
        return {4 * d};
    return {};
}

RamificationReport ramification_total(long t)
{
    if (!is_squarefree(t))
        throw std::invalid_argument("ramification_total requires square-free t");
    RamificationReport rep;
    rep.t = t;
    std::set<long> seen;
    for (long d : divisors(t)) {
        if (d == 1)
            continue;
        const long td = t / d;
        RamificationEntry e{d, {}};
        if (qr_solvable(d, td))
            e.discriminants.insert(4 * d);
        if (d % 2 == 1 && qr_solvable(d, 4 * td))
            e.discriminants.insert(d);
        for (long disc : e.discriminants)
            if (!seen.insert(disc).second)
                rep.distinct = false;
        if (!e.discriminants.empty())
            rep.entries.push_back(e);
    }
    return rep;
}

namespace {

long isqrt(long n)
{
    if (n < 0)
        return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

SurveyReport reflection_survey(long t, long bound)
{
    if (t < 1 || bound < 1)
        throw std::invalid_argument("reflection_survey expects t >= 1 and bound >= 1");
    SurveyReport rep;
    rep.t = t;
    rep.bound = bound;
    std::map<long, long> xi_to_d;
    for (const auto& x : xi_group(t))
        xi_to_d[x.value] = x.d;
    for (long a = -bound; a <= bound; ++a)
        for (long c = -bound; c <= bound; ++c) {
            // ℓ^2 = 2tb^2 - 2ac must divide 2 div(ℓ) <= 2|a| (or 2|c|), which caps |b|.
            long cap = a != 0 ? a * c + std::labs(a) : (c != 0 ? std::labs(c) : t * bound * bound);
            long bmax = std::min(bound, isqrt(cap / t));
            for (long b = -bmax; b <= bmax; ++b) {
                long norm2 = 2 * t * b * b - 2 * a * c;
                if (norm2 <= 0 || gcd_l(gcd_l(a, b), c) != 1)
                    continue;
                long div = gcd_l(gcd_l(a, 2 * t * b), c);
                if ((2 * div) % norm2 != 0)
                    continue;
                long num = 4 * t * b * b;
                if (num % norm2 != 0)
                    throw std::logic_error("reflection multiplier is not integral");
                long xi = mod_floor(num / norm2 - 1, 2 * t);
                auto it = xi_to_d.find(xi);
                if (it == xi_to_d.end())
                    throw std::logic_error("reflection multiplier outside Xi(t)");
                long disc = 2 * t * norm2 / (div * div);
                if ((2 * t * norm2) % (div * div) != 0)
                    throw std::logic_error("non-integral Humbert discriminant");
                ++rep.reflections;
                rep.per_coset[it->second].insert(disc);
                // keep the witness of least max(|a|, |b|, |c|); ties go to the first found
                SurveyHit hit{a, b, c, norm2, div, xi, disc};
                auto size = [](const SurveyHit& h) { return std::max({std::labs(h.a), std::labs(h.b), std::labs(h.c)}); };
                auto prev = rep.first_hit.find(it->second);
                if (prev == rep.first_hit.end() || size(hit) < size(prev->second))
                    rep.first_hit[it->second] = hit;
            }
        }
    return rep;
}

bool oracle_consistent(long t, const SurveyReport& survey)
{
    for (long d : divisors(t)) {
        std::set<long> predicted = ramification_divisor(t, d);
        auto it = survey.per_coset.find(d);
        std::set<long> found = it == survey.per_coset.end() ? std::set<long>{} : it->second;
        if (predicted != found)
            return false;
    }
    for (const auto& [d, s] : survey.per_coset)
        if (t % d != 0)
            return false;
    return true;
}

namespace {

// Smallest (a, b, c) with d b^2 - k a c = 1, ordered by max(|a|,|b|,|c|) then lexicographically.
std::array<long, 3> smallest_solution(long d, long k)
{
    for (long r = 0;; ++r) {
        for (long a = -r; a <= r; ++a)
            for (long b = -r; b <= r; ++b)
                for (long c = -r; c <= r; ++c) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != r)
                        continue;
                    if (d * b * b - k * a * c == 1)
                        return {a, b, c};
                }
        if (r > 100000)
            throw std::runtime_error("no solution found");
    }
}

InvolutionRep make_rep(long t, long d, long a, long b, long c, const Q& mid)
{
    InvolutionRep rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.ell = {Q(0), Q(a), mid, Q(c), Q(0)};
    Reflection r = reflection(rep.ell, t);
    rep.sigma = r.m;
    rep.discriminant = to_long(2 * t * norm(rep.ell, t));
    rep.valid = r.integral && is_isometry(r.m, t) && r.m * r.m == QMatrix::identity(5);
    if (r.integral) {
        rep.coset_xi = disc_action(-r.m, t);
        rep.valid = rep.valid && rep.coset_xi == xi_element(t, d).value;
    }
    return rep;
}

} // namespace

std::vector<InvolutionRep> involution_reps(long t, long d)
{
    if (!is_squarefree(t) || d < 1 || t % d != 0)
        throw std::invalid_argument("involution_reps needs square-free t and d | t");
    const long td = t / d;
    if (!qr_solvable(d, td))
        throw std::invalid_argument("involution_reps needs d to be a square mod t/d");
    std::vector<InvolutionRep> out;
    auto s1 = smallest_solution(d, td);
    out.push_back(make_rep(t, d, s1[0], s1[1], s1[2], make_q(s1[1], td)));
    if (qr_solvable(d, 4 * td)) {
        auto s2 = smallest_solution(d, 4 * td);
        out.push_back(make_rep(t, d, s2[0], s2[1], s2[2], make_q(s2[1], 2 * td)));
    }
    return out;
}

BraschAnalysis brasch_matrix(long t, long f)
{
    if (mod_floor(t, 4) != 1)
        throw std::invalid_argument("brasch_matrix needs t = 1 mod 4");
    if (f < 1)
        throw std::invalid_argument("brasch_matrix needs f >= 1");
    const long c = -f * f * t - 1;
    QMatrix m = qmatrix({{-f * t, 1, 0, f * t},
                         {c * t, 0, f * t, f * f * t * t},
                         {c * t, 0, f * t, -c * t},
                         {0, 1, -1, 0}});
    BraschAnalysis out;
    out.n_scaled = SymplecticSimilitude(m, Q(t));
    if (!out.n_scaled.is_symplectic())
        throw std::logic_error("Brasch matrix is not a similitude");
    out.square_is_minus_identity = m * m == QMatrix::identity(4).scaled(Q(-t));
    out.coset = gamma_star_contains(out.n_scaled, t);
    QMatrix psi = psi_map(out.n_scaled, t);
    out.plus_multiplicity = plus_multiplicity(psi);
    out.type = involution_classify(psi, t);
    return out;
}

} // namespace paramodular

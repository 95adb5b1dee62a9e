#include "paramodular/jacobi.hpp"

#include "paramodular/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace paramodular {

int EigenCharacter::operator()(long d) const
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("character evaluated at a non-unitary divisor");
    int s = 1;
    for (auto [q, sign] : signs)
        if (d % q == 0)
            s *= sign;
    return s;
}

std::string EigenCharacter::pattern() const
{
    std::string p;
    for (auto [q, sign] : signs)
        p += sign > 0 ? '+' : '-';
    return p;
}

EigenCharacter EigenCharacter::from_signs(long t, const std::vector<int>& s)
{
    auto parts = prime_power_parts(t);
    if (parts.size() != s.size())
        throw std::invalid_argument("character needs one sign per prime power of t");
    EigenCharacter e;
    e.t = t;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (s[i] != 1 && s[i] != -1)
            throw std::invalid_argument("character signs must be +1 or -1");
        e.signs[parts[i]] = s[i];
    }
    return e;
}

std::vector<EigenCharacter> EigenCharacter::all(long t)
{
    auto parts = prime_power_parts(t);
    std::vector<EigenCharacter> out;
    for (unsigned mask = 0; mask < (1u << parts.size()); ++mask) {
        std::vector<int> s(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            s[i] = (mask >> (parts.size() - 1 - i)) & 1 ? -1 : 1;
        out.push_back(from_signs(t, s));
    }
    return out;
}

CoefficientKey make_key(long t, long disc, long l)
{
    if (disc <= 0)
        throw std::invalid_argument("coefficient key needs D > 0");
    if (mod_floor(disc + l * l, 4 * t) != 0)
        throw std::invalid_argument("coefficient key needs D = -l^2 mod 4t");
    return {disc, mod_floor(l, 2 * t)};
}

Q CoefficientTable::at(const CoefficientKey& k) const
{
    auto it = values.find(k);
    if (it != values.end())
        return it->second;
    if (k.disc <= d_max)
        return Q(0);
    throw std::out_of_range("coefficient key D=" + std::to_string(k.disc) + " beyond table support " +
                            std::to_string(d_max));
}

CoefficientKey wd_key_map(long t, long d, const CoefficientKey& key)
{
    XiElement xi = xi_element(t, d);
    make_key(t, key.disc, key.residue);
    return {key.disc, mod_floor(xi.value * key.residue, 2 * t)};
}

CoefficientTable apply_wd(const CoefficientTable& table, long d)
{
    CoefficientTable out = table;
    out.values.clear();
    for (const auto& [k, v] : table.values)
        out.values[wd_key_map(table.t, d, k)] = v;
    return out;
}

CoefficientTable scale(const CoefficientTable& table, const Q& c)
{
    CoefficientTable out = table;
    for (auto& [k, v] : out.values)
        v *= c;
    return out;
}

CoefficientTable add(const CoefficientTable& a, const CoefficientTable& b)
{
    if (a.t != b.t)
        throw std::invalid_argument("adding tables of different index");
    CoefficientTable out = a;
    out.d_max = std::min(a.d_max, b.d_max);
    for (const auto& [k, v] : b.values)
        out.values[k] += v;
    for (auto it = out.values.begin(); it != out.values.end();)
        it = sgn(it->second) == 0 ? out.values.erase(it) : std::next(it);
    return out;
}

CoefficientTable project(const CoefficientTable& table, const EigenCharacter& eps)
{
    CoefficientTable acc = table;
    acc.values.clear();
    auto ud = unitary_divisors(table.t);
    for (long d : ud)
        acc = add(acc, scale(apply_wd(table, d), Q(eps(d))));
    return scale(acc, make_q(1, static_cast<long>(ud.size())));
}

Q trace_formula_value(long t, long d)
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("trace: d must be a unitary divisor of t");
    const long td = t / d;
    auto delta = [](long a, long b) { return b % a == 0 ? 1 : 0; };
    Q tr(0);
    for (long e : divisors(d))
        tr += class_number_hn(td, -4 * e) / 4;
    for (long e : divisors(td))
        tr -= class_number_hn(d, -4 * e) / 4;
    tr += make_q(3, 2) * (class_number_hn(d, 0) - class_number_hn(td, 0));
    tr += (delta(2, td) * class_number_hn(d, -4) - delta(2, d) * class_number_hn(td, -4)) / 2;
    tr += delta(3, td) * class_number_hn(d, -3) - delta(3, d) * class_number_hn(td, -3);
    const long qd = square_part(d), qtd = square_part(td);
    tr += make_q(gcd_l(qtd, 2) * qd - gcd_l(qd, 2) * qtd, 4);
    return tr;
}

long trace_wd_full(long t, long d)
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("trace: d must be a unitary divisor of t");
    if (!is_squarefree(t))
        return trace_wd_weil(t, d);
    Q v = trace_formula_value(t, d);
    if (!is_integer(v))
        throw std::logic_error("trace formula produced non-integer " + v.get_str() + " at t=" +
                               std::to_string(t) + ", d=" + std::to_string(d));
    return to_long(v);
}

long trace_wd_squarefree(long t, long d)
{
    if (!is_squarefree(t) || gcd_l(t, 6) != 1)
        throw std::invalid_argument("trace_wd_squarefree needs square-free t coprime to 6");
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("trace: d must be a unitary divisor of t");
    const long td = t / d;
    Q s(0);
    for (long e : divisors(d))
        s += kronecker_symbol(-4 * e, td) * class_number_h1(-4 * e);
    for (long e : divisors(td))
        s -= kronecker_symbol(-4 * e, d) * class_number_h1(-4 * e);
    Q v = s / 4 + make_q(td - d, 8);
    if (!is_integer(v))
        throw std::logic_error("square-free trace formula produced non-integer " + v.get_str());
    return to_long(v);
}

namespace {

// Σ_s c_s sqrt(s) over square-free s, with c_s in Q(i).
class Radical {
public:
    Radical() = default;
    Radical(const Q& re, const Q& im = 0, long s = 1)
    {
        if (sgn(re) || sgn(im))
            terms_[s] = GaussQ(re, im);
    }

    Radical& operator+=(const Radical& o)
    {
        for (const auto& [s, c] : o.terms_) {
            GaussQ& x = terms_[s];
            x += c;
            if (x.is_zero())
                terms_.erase(s);
        }
        return *this;
    }
    friend Radical operator+(Radical a, const Radical& b) { return a += b; }
    friend Radical operator*(const Radical& a, const Radical& b)
    {
        Radical r;
        for (const auto& [s1, c1] : a.terms_)
            for (const auto& [s2, c2] : b.terms_) {
                long g = gcd_l(s1, s2);
                r += Radical::single(s1 / g * (s2 / g), c1 * c2 * GaussQ(g));
            }
        return r;
    }

    // Value as a rational; throws when a radical or imaginary part survives.
    Q rational() const
    {
        if (terms_.empty())
            return 0;
        auto it = terms_.find(1);
        if (terms_.size() != 1 || it == terms_.end() || sgn(it->second.im))
            throw std::logic_error("multiplicity is not rational");
        return it->second.re;
    }

    static Radical single(long s, const GaussQ& c)
    {
        Radical r;
        if (!c.is_zero())
            r.terms_[s] = c;
        return r;
    }

private:
    std::map<long, GaussQ> terms_;
};

Radical sqrt_int(long n)
{
    long a = square_part(n);
    return Radical(Q(a), 0, n / (a * a));
}

// exp(2 pi i k / 12)
Radical root12(long k)
{
    static const Q h = make_q(1, 2);
    // cos, sin as (coefficient, radicand)
    static const std::pair<Q, long> cs[12] = {{1, 1},  {h, 3},  {h, 1},  {0, 1},  {-h, 1}, {-h, 3},
                                              {-1, 1}, {-h, 3}, {-h, 1}, {0, 1},  {h, 1},  {h, 3}};
    static const std::pair<Q, long> sn[12] = {{0, 1},  {h, 1},  {h, 3},  {1, 1},  {h, 3},  {h, 1},
                                              {0, 1},  {-h, 1}, {-h, 3}, {-1, 1}, {-h, 3}, {-h, 1}};
    long i = mod_floor(k, 12);
    return Radical(cs[i].first, 0, cs[i].second) + Radical(0, sn[i].first, sn[i].second);
}

// e(1/8)/sqrt(2t) Σ_{μ mod 2t} e(b μ^2 / 4t) for odd b > 0.
Radical gauss_term(long b, long t)
{
    long g = gcd_l(b, 4 * t);
    long bp = b / g, cp = 4 * t / g;
    Radical eps_inv = bp % 4 == 1 ? Radical(1) : Radical(0, -1);
    return Radical(0, 1) * sqrt_int(g) * eps_inv * Radical(kronecker_symbol(cp, bp));
}

Q frac(const Q& q)
{
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Q(fl);
}

} // namespace

long weil_eigen_dimension(long t, const EigenCharacter& eps)
{
    if (eps.t != t)
        throw std::invalid_argument("character index does not match t");
    const long n = 2 * t;
    std::vector<std::pair<long, int>> xs;
    for (long d : unitary_divisors(t))
        xs.emplace_back(xi_element(t, d).value, eps(d));
    const long group = static_cast<long>(xs.size());
    // Weight-3 Jacobi forms correspond to odd vectors: ε(-1) must be -1.
    if (eps(t) != -1)
        return 0;

    // Basis of the ε-part: one vector per orbit with ε trivial on the stabiliser.
    std::vector<bool> seen(n, false);
    long dim = 0, cusps = 0;
    Q alpha_t(0);
    for (long mu = 0; mu < n; ++mu) {
        if (seen[mu])
            continue;
        bool ok = true;
        for (auto [x, e] : xs) {
            long img = (x * mu) % n;
            seen[img] = true;
            if (img == mu && e != 1)
                ok = false;
        }
        if (!ok)
            continue;
        ++dim;
        Q f = frac(make_q(-mu * mu, 4 * t));
        alpha_t += f;
        if (sgn(f) == 0)
            ++cusps;
    }
    if (dim == 0)
        return 0;

    // S: eigenvalues ±e(-1/8); the scaled trace counts their difference.
    Q s_trace(0);
    if (t % 2 == 0) {
        long s = 0;
        for (auto [x, e] : xs)
            s += e * (x % 4 == 1 ? 1 : -1) * kronecker_symbol(2 * t, x);
        s_trace = make_q(s, group);
    }
    Q alpha_s = (Q(dim) - s_trace) / 4;

    // ST: eigenvalues e(-1/12 + j/3); traces of ST and (ST)^2 from Gauss sums.
    Radical a, b;
    for (auto [x, e] : xs) {
        a += Radical(make_q(e, group)) * gauss_term(2 * x - 1, t);
        b += Radical(make_q(e, group)) * gauss_term(2 * x + 1, t);
    }
    Q mult[3];
    for (int j = 0; j < 3; ++j) {
        Radical v = Radical(Q(dim)) + root12(1 - 4 * j) * a + root12(2 - 8 * j) * b;
        mult[j] = v.rational() / 3;
    }
    Q alpha_st = make_q(2, 3) * mult[0] + make_q(1, 3) * mult[1];

    Q r = Q(dim) * make_q(29, 24) - alpha_s - alpha_st - alpha_t - cusps;
    if (!is_integer(r) || sgn(r) < 0)
        throw std::logic_error("dimension formula produced " + r.get_str() + " at t=" + std::to_string(t));
    return to_long(r);
}

long trace_wd_weil(long t, long d)
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("trace: d must be a unitary divisor of t");
    long tr = 0;
    for (const auto& eps : EigenCharacter::all(t))
        tr += eps(d) * weil_eigen_dimension(t, eps);
    return tr;
}

long dim_eigenspace(long t, const EigenCharacter& eps)
{
    if (eps.t != t)
        throw std::invalid_argument("character index does not match t");
    auto ud = unitary_divisors(t);
    long s = 0;
    for (long d : ud)
        s += eps(d) * trace_wd_full(t, d);
    const long n = static_cast<long>(ud.size());
    if (s % n != 0 || s < 0)
        throw std::logic_error("eigenspace dimension " + std::to_string(s) + "/" + std::to_string(n) +
                               " is not a nonnegative integer at t=" + std::to_string(t));
    return s / n;
}

long dim_cusp(long t) { return trace_wd_full(t, 1); }

TrivialScan trivial_eigenspace_scan(long max_t)
{
    if (max_t < 1)
        throw std::invalid_argument("scan needs max_t >= 1");
    TrivialScan out;
    out.max_t = max_t;
    for (long t = 1; t <= max_t; ++t) {
        long total = dim_cusp(t);
        if (total == 0)
            out.zero_dimension.push_back(t);
        auto parts = prime_power_parts(t);
        if (parts.size() != 2)
            continue;
        for (int minus = 0; minus < 2; ++minus) {
            std::vector<int> s = {minus == 0 ? -1 : 1, minus == 0 ? 1 : -1};
            EigenCharacter eps = EigenCharacter::from_signs(t, s);
            long dim = dim_eigenspace(t, eps);
            if (dim != 0)
                continue;
            TrivialPair p{t, parts[minus], parts[1 - minus], dim};
            (total > 0 ? out.pairs : out.pairs_zero_total).push_back(p);
        }
    }
    return out;
}

} // namespace paramodular

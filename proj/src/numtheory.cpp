#include "paramodular/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace paramodular {

QMatrix qmatrix(std::initializer_list<std::initializer_list<long>> init)
{
    QMatrix m(init.size(), init.size() ? init.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : init) {
        if (row.size() != m.cols())
            throw std::invalid_argument("ragged matrix initializer");
        std::size_t j = 0;
        for (long x : row)
            m(i, j++) = Q(x);
        ++i;
    }
    return m;
}

long gcd_l(long a, long b)
{
    a = std::labs(a);
    b = std::labs(b);
    while (b) {
        long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::pair<long, int>> factorize(long n)
{
    if (n < 1)
        throw std::invalid_argument("factorize expects n >= 1");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1)
        f.emplace_back(n, 1);
    return f;
}

bool is_squarefree(long n)
{
    for (auto [p, e] : factorize(n))
        if (e > 1)
            return false;
    return true;
}

bool is_unitary_divisor(long t, long d)
{
    return t >= 1 && d >= 1 && t % d == 0 && gcd_l(d, t / d) == 1;
}

std::vector<long> divisors(long n)
{
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long> unitary_divisors(long t)
{
    if (t < 1)
        throw std::invalid_argument("unitary_divisors expects t >= 1");
    std::vector<long> out;
    for (long d : divisors(t))
        if (gcd_l(d, t / d) == 1)
            out.push_back(d);
    return out;
}

std::vector<long> prime_power_parts(long t)
{
    std::vector<long> out;
    for (auto [p, e] : factorize(t)) {
        long q = 1;
        for (int i = 0; i < e; ++i)
            q *= p;
        out.push_back(q);
    }
    return out;
}

int nu(long t) { return static_cast<int>(factorize(t).size()); }

XiElement xi_element(long t, long d)
{
    if (!is_unitary_divisor(t, d))
        throw std::invalid_argument("xi_element: " + std::to_string(d) + " is not a unitary divisor of " +
                                    std::to_string(t));
    const long n = 2 * t;
    // 2d and 2(t/d) share exactly the factor 2, and both targets are odd, so CRT has one solution mod 2t.
    for (long x = 1; x < n; x += 2)
        if (mod_floor(x + 1, 2 * d) == 0 && mod_floor(x - 1, 2 * (t / d)) == 0)
            return {t, d, x};
    if (n == 2)
        return {t, d, 1};
    throw std::logic_error("xi_element: CRT found no solution");
}

std::vector<XiElement> xi_group(long t)
{
    std::vector<XiElement> g;
    for (long d : unitary_divisors(t))
        g.push_back(xi_element(t, d));
    std::sort(g.begin(), g.end(), [](const XiElement& a, const XiElement& b) { return a.value < b.value; });
    return g;
}

bool qr_solvable(long a, long m)
{
    if (m < 1)
        throw std::invalid_argument("qr_solvable expects m >= 1");
    long r = mod_floor(a, m);
    for (long x = 0; x < m; ++x)
        if ((x * x) % m == r)
            return true;
    return false;
}

namespace {

int jacobi_odd(long a, long n)
{
    // n odd positive
    a = mod_floor(a, n);
    int r = 1;
    while (a) {
        while (a % 2 == 0) {
            a /= 2;
            long m8 = n % 8;
            if (m8 == 3 || m8 == 5)
                r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

} // namespace

int kronecker_symbol(long a, long b)
{
    if (b == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int r = 1;
    if (b < 0) {
        b = -b;
        if (a < 0)
            r = -r;
    }
    int v = 0;
    while (b % 2 == 0) {
        b /= 2;
        ++v;
    }
    if (v > 0) {
        if (a % 2 == 0)
            return 0;
        long m8 = mod_floor(a, 8);
        if ((v & 1) && (m8 == 3 || m8 == 5))
            r = -r;
    }
    if (b == 1)
        return r;
    return r * jacobi_odd(a, b);
}

long square_part(long n)
{
    if (n < 1)
        throw std::invalid_argument("square_part expects n >= 1");
    long q = 1;
    for (auto [p, e] : factorize(n))
        for (int i = 0; i < e / 2; ++i)
            q *= p;
    return q;
}

long ext_gcd(long a, long b, long& x, long& y)
{
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b) {
        long q = a / b;
        long r = a - q * b;
        a = b;
        b = r;
        long nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

Q class_number_h1(long disc)
{
    if (disc == 0)
        return make_q(-1, 12);
    if (disc > 0)
        return Q(0);
    long m4 = mod_floor(disc, 4);
    if (m4 != 0 && m4 != 1)
        return Q(0);
    const long n = -disc;
    // reduced forms: |b| <= a <= c, b >= 0 if |b| = a or a = c
    Q h(0);
    for (long a = 1; 3 * a * a <= n; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b + n;
            if (num % (4 * a))
                continue;
            long c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (a == c && b == 0)
                h += make_q(1, 2); // multiple of x^2 + y^2
            else if (a == b && b == c)
                h += make_q(1, 3); // multiple of x^2 + xy + y^2
            else
                h += 1;
        }
    return h;
}

Q class_number_hn(long n, long disc)
{
    if (n < 1)
        throw std::invalid_argument("class_number_hn expects n >= 1");
    if (n == 1)
        return class_number_h1(disc);
    const long g = disc == 0 ? n : gcd_l(n, disc);
    const long a = square_part(g);
    const long b = g / (a * a);
    const long ab = a * b;
    if (disc % (ab * ab) != 0)
        return Q(0);
    const long reduced = disc / (ab * ab);
    return Q(a * a * b) * kronecker_symbol(reduced, n / (a * a * b)) * class_number_h1(reduced);
}

} // namespace paramodular

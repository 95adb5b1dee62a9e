#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramodular {

using Q = mpq_class;
using Z = mpz_class;

inline Q make_q(long num, long den = 1)
{
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Q& q)
{
    return q.get_str();
}

inline long to_long(const Q& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("rational " + q.get_str() + " is not a machine integer");
    return q.get_num().get_si();
}

// Gaussian rational a + b i.
struct GaussQ {
    Q re, im;

    GaussQ() = default;
    GaussQ(Q r) : re(std::move(r)) {}
    GaussQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}
    GaussQ(long r) : re(r) {}

    GaussQ conj() const { return {re, -im}; }
    Q norm() const { return re * re + im * im; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussQ operator-() const { return {-re, -im}; }
    GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
    GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
    GaussQ& operator*=(const GaussQ& o)
    {
        Q r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussQ& operator/=(const GaussQ& o)
    {
        if (o.is_zero())
            throw std::domain_error("division by zero Gaussian rational");
        Q n = o.norm();
        GaussQ c = o.conj();
        *this *= c;
        re /= n;
        im /= n;
        return *this;
    }
    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

// Dense row-major matrix over any exact ring with 0/1 constructible from long.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            for (const auto& x : row)
                a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += x * o(k, j);
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const
    {
        check_same(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const
    {
        check_same(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix operator-() const
    {
        Matrix r(*this);
        for (auto& x : r.a_)
            x = -x;
        return r;
    }
    Matrix scaled(const T& s) const
    {
        Matrix r(*this);
        for (auto& x : r.a_)
            x *= s;
        return r;
    }
    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    const std::vector<T>& data() const { return a_; }

private:
    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Q>;
using GMatrix = Matrix<GaussQ>;

// Gauss-Jordan over a field; throws on singular input.
template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    Matrix<T> a(m), inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == T(0))
            ++p;
        if (p == n)
            throw std::domain_error("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        T piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == T(0))
                continue;
            T f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

template <class T>
T determinant(Matrix<T> a)
{
    const std::size_t n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == T(0))
            ++p;
        if (p == n)
            return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == T(0))
                continue;
            T f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

inline GMatrix to_gauss(const QMatrix& m)
{
    GMatrix g(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g(i, j) = GaussQ(m(i, j));
    return g;
}

QMatrix qmatrix(std::initializer_list<std::initializer_list<long>> init);

} // namespace paramodular

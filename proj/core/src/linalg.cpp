#include "chtg/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "chtg/errors.hpp"

namespace chtg {

Vec21& Vec21::operator+=(const Vec21& o)
{
    for (std::size_t i = 0; i < 3; ++i)
        z[i] += o.z[i];
    return *this;
}

Vec21& Vec21::operator-=(const Vec21& o)
{
    for (std::size_t i = 0; i < 3; ++i)
        z[i] -= o.z[i];
    return *this;
}

Vec21& Vec21::operator*=(Complex s)
{
    for (auto& x : z)
        x *= s;
    return *this;
}

double Vec21::max_abs() const
{
    double m = 0.0;
    for (const auto& x : z)
        m = std::max(m, std::abs(x));
    return m;
}

Complex herm(const Vec21& z, const Vec21& w)
{
    return z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]) - z[2] * std::conj(w[2]);
}

Vec21 boxtimes(const Vec21& z, const Vec21& w)
{
    return {std::conj(z[2] * w[1] - z[1] * w[2]),
            std::conj(z[0] * w[2] - z[2] * w[0]),
            std::conj(z[0] * w[1] - z[1] * w[0])};
}

VectorKind vector_kind(const Vec21& z, double tol)
{
    const double q = herm(z, z).real();
    if (q < -tol)
        return VectorKind::Negative;
    if (q > tol)
        return VectorKind::Positive;
    return VectorKind::Null;
}

Mat21 Mat21::identity()
{
    return diagonal(1.0, 1.0, 1.0);
}

Mat21 Mat21::diagonal(Complex a, Complex b, Complex c)
{
    Mat21 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

Mat21 Mat21::form()
{
    return diagonal(1.0, 1.0, -1.0);
}

Vec21 Mat21::apply(const Vec21& v) const
{
    Vec21 out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
    return out;
}

Complex Mat21::trace() const
{
    return a_[0] + a_[4] + a_[8];
}

Complex Mat21::det() const
{
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat21 Mat21::adjoint() const
{
    Mat21 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out(i, j) = std::conj((*this)(j, i));
    return out;
}

Mat21 Mat21::form_adjoint() const
{
    const Mat21 j = form();
    return j * adjoint() * j;
}

double Mat21::max_abs() const
{
    double m = 0.0;
    for (const auto& x : a_)
        m = std::max(m, std::abs(x));
    return m;
}

Mat21& Mat21::operator+=(const Mat21& o)
{
    for (std::size_t i = 0; i < 9; ++i)
        a_[i] += o.a_[i];
    return *this;
}

Mat21& Mat21::operator-=(const Mat21& o)
{
    for (std::size_t i = 0; i < 9; ++i)
        a_[i] -= o.a_[i];
    return *this;
}

Mat21& Mat21::operator*=(Complex s)
{
    for (auto& x : a_)
        x *= s;
    return *this;
}

Mat21 operator*(const Mat21& a, const Mat21& b)
{
    Mat21 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return out;
}

bool preserves_form(const Mat21& m, double tol)
{
    return (m.adjoint() * Mat21::form() * m - Mat21::form()).max_abs() <= tol;
}

Mat21 rank_one(const Vec21& c, Complex scale)
{
    // (scale c c^*)_{ij} = scale * c_i * conj(c_j) * J_jj
    static constexpr std::array<double, 3> sign{1.0, 1.0, -1.0};
    Mat21 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = scale * c[i] * std::conj(c[j]) * sign[j];
    return m;
}

ProjPoint::ProjPoint(const Vec21& v)
{
    for (int i = 2; i >= 0; --i) {
        if (std::abs(v[i]) > kZeroThreshold) {
            rep_ = (1.0 / v[i]) * v;
            rep_[i] = 1.0;
            return;
        }
    }
    throw InvalidArgument("projective point of the zero vector");
}

bool ProjPoint::approx_equal(const ProjPoint& other, double tol) const
{
    return (rep_ - other.rep_).max_abs() <= tol;
}

} // namespace chtg

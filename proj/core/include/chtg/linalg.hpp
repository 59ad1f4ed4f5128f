#pragma once

// Linear algebra on C^{2,1}: the signature (2,1) Hermitian form
// <z,w> = z1 conj(w1) + z2 conj(w2) - z3 conj(w3), its cross product,
// 3x3 complex matrices and projective points.

#include <array>
#include <complex>
#include <cstddef>

namespace chtg {

using Complex = std::complex<double>;

struct Vec21 {
    std::array<Complex, 3> z{};

    constexpr Vec21() = default;
    constexpr Vec21(Complex z1, Complex z2, Complex z3) : z{z1, z2, z3} {}

    Complex& operator[](std::size_t i) { return z[i]; }
    const Complex& operator[](std::size_t i) const { return z[i]; }

    Vec21& operator+=(const Vec21& o);
    Vec21& operator-=(const Vec21& o);
    Vec21& operator*=(Complex s);

    friend Vec21 operator+(Vec21 a, const Vec21& b) { return a += b; }
    friend Vec21 operator-(Vec21 a, const Vec21& b) { return a -= b; }
    friend Vec21 operator*(Complex s, Vec21 a) { return a *= s; }
    friend Vec21 operator*(Vec21 a, Complex s) { return a *= s; }

    double max_abs() const;
};

/// The Hermitian form: linear in the first slot, conjugate-linear in the second.
Complex herm(const Vec21& z, const Vec21& w);

/// Hermitian cross product. The result is orthogonal to both arguments and
/// <a x b, a x b> = |<a,b>|^2 - <a,a><b,b>.
Vec21 boxtimes(const Vec21& z, const Vec21& w);

enum class VectorKind { Negative, Null, Positive };

VectorKind vector_kind(const Vec21& z, double tol = 1e-12);

/// 3x3 complex matrix. Row-major. Used both for elements of U(2,1) and for
/// general linear maps (e.g. the polar-basis representation).
class Mat21 {
public:
    constexpr Mat21() = default;

    static Mat21 identity();
    static Mat21 diagonal(Complex a, Complex b, Complex c);
    /// J = diag(1, 1, -1).
    static Mat21 form();

    Complex& operator()(std::size_t row, std::size_t col) { return a_[3 * row + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return a_[3 * row + col]; }

    Vec21 apply(const Vec21& v) const;
    Complex trace() const;
    Complex det() const;
    /// Conjugate transpose.
    Mat21 adjoint() const;
    /// J M^* J, which is the inverse when M preserves the form.
    Mat21 form_adjoint() const;
    double max_abs() const;

    Mat21& operator+=(const Mat21& o);
    Mat21& operator-=(const Mat21& o);
    Mat21& operator*=(Complex s);

    friend Mat21 operator+(Mat21 a, const Mat21& b) { return a += b; }
    friend Mat21 operator-(Mat21 a, const Mat21& b) { return a -= b; }
    friend Mat21 operator*(Complex s, Mat21 a) { return a *= s; }
    friend Mat21 operator*(const Mat21& a, const Mat21& b);
    friend Vec21 operator*(const Mat21& m, const Vec21& v) { return m.apply(v); }

private:
    std::array<Complex, 9> a_{};
};

/// True when M^* J M = J entrywise within tol.
bool preserves_form(const Mat21& m, double tol = 1e-12);

/// The map z -> scale * <z, c> * c.
Mat21 rank_one(const Vec21& c, Complex scale);

/// A point of P(C^{2,1}) stored through a representative whose last nonzero
/// coordinate (priority z3, z2, z1) is 1.
class ProjPoint {
public:
    static constexpr double kZeroThreshold = 1e-12;

    /// Throws InvalidArgument for the zero vector.
    explicit ProjPoint(const Vec21& v);

    const Vec21& representative() const { return rep_; }
    bool approx_equal(const ProjPoint& other, double tol = 1e-10) const;

private:
    Vec21 rep_;
};

} // namespace chtg

#pragma once

// Complex hyperbolic triangles from their invariants (r1, r2, r3, alpha):
// normalized polar vectors, complex (mu-)reflections, vertices and the
// classical invariants of Cartan, Brehm and Hakim-Sandler.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "chtg/linalg.hpp"

namespace chtg {

/// Order p of a vertex angle pi/p; p = infinity is an ideal vertex.
class Order {
public:
    constexpr Order() = default;
    static Order finite(int p);
    static constexpr Order infinite() { return Order(kInfinite); }
    /// "inf", "∞" or an integer >= 2.
    static Order parse(std::string_view text);

    bool is_infinite() const { return value_ == kInfinite; }
    /// Throws InvalidArgument for the infinite order.
    int value() const;
    /// cos(pi / p), or 1 for p = infinity.
    double radius() const;
    /// cos(2 pi / p), or 1 for p = infinity.
    double cos_two_pi_over() const;
    std::string str() const;

    bool operator==(const Order&) const = default;

private:
    static constexpr int kInfinite = 0;
    constexpr explicit Order(int v) : value_(v) {}
    int value_ = kInfinite;
};

struct TriangleParams {
    std::array<double, 3> r{1.0, 1.0, 1.0};
    /// Stored in [0, 2 pi).
    double alpha = 3.141592653589793;

    std::optional<std::array<Order, 3>> signature;
    std::optional<std::array<double, 3>> lengths;
    /// Order of the rotation iota_{3132} for G(p1,p2,p3;n) groups.
    std::optional<Order> rotation_order;

    double product() const { return r[0] * r[1] * r[2]; }
    /// cot(alpha / 2); +inf at alpha = 0.
    double t() const;
    /// Representative of alpha in (0, pi] up to the anti-holomorphic symmetry.
    double canonical_alpha() const;

    TriangleParams with_alpha(double alpha) const;
    TriangleParams with_t(double t) const;
    TriangleParams with_cos_alpha(double c) const;
};

/// r_k = cos(pi / p_k). Throws InvalidArgument for p_k < 2.
TriangleParams from_signature(Order p1, Order p2, Order p3);
/// r_k = cosh(l_k / 2). Throws InvalidArgument unless l_k > 0.
TriangleParams from_lengths(double l1, double l2, double l3);
TriangleParams from_radii(double r1, double r2, double r3);

/// c_inf = (r1^2 + r2^2 + r3^2 - 1) / (2 r1 r2 r3); +-inf when the product vanishes.
double existence_bound(const std::array<double, 3>& r);
/// det of the Gram matrix of the polar vectors,
/// 1 - (r1^2 + r2^2 + r3^2) + 2 r1 r2 r3 cos(alpha). Negative iff the triangle exists.
double gram_determinant(const TriangleParams& p);
bool satisfies_existence(const TriangleParams& p, double tol = 1e-12);

/// Gram matrix <c_i, c_j> in the gauge <c3,c2> = r1, <c1,c3> = r2,
/// <c2,c1> = r3 e^{i alpha}.
Mat21 gram_matrix(const TriangleParams& p);

struct TriangleRealization {
    std::array<Vec21, 3> polar;
    std::array<Mat21, 3> reflections;
    /// v_k = c_{k-1} x c_{k+1}.
    std::array<Vec21, 3> vertices;

    /// <c_{k-1}, c_{k+1}> for k in {1,2,3}.
    Complex pairing(int k) const;
    std::array<double, 3> radii() const;
    /// arg of the triple product, in [0, 2 pi).
    double angular_invariant() const;
};

/// Builds reflections and vertices from three polar vectors.
TriangleRealization realization_from_polars(const std::array<Vec21, 3>& polar);

/// Throws ExistenceViolation on or beyond the existence bound and
/// DegenerateNormalization if the chart degenerates.
TriangleRealization realize(const TriangleParams& p);

/// The explicit (p1, p2, infinity) parameterisation. Requires p1, p2 >= 3.
TriangleRealization realize_pinfty(int p1, int p2, double alpha);

/// z -> -z + 2 <z,c>/<c,c> c. Throws InvalidArgument unless <c,c> > 0.
Mat21 reflection(const Vec21& c);
/// z -> z + (mu - 1) <z,c>/<c,c> c.
Mat21 mu_reflection(const Vec21& c, Complex mu);

/// arg(-<v1,v2><v2,v3><v3,v1>) in (-pi, pi].
double cartan_invariant(const Vec21& v1, const Vec21& v2, const Vec21& v3);
double cartan_invariant(const TriangleRealization& tri);

double brehm_sigma(const TriangleRealization& tri);
double brehm_sigma_closed_form(const TriangleParams& p);

Complex hakim_sandler_eta(const TriangleRealization& tri);
Complex hakim_sandler_eta_closed_form(const TriangleParams& p);

/// Wraps into [0, 2 pi).
double wrap_two_pi(double angle);
/// Wraps into (-pi, pi].
double wrap_pi(double angle);

} // namespace chtg

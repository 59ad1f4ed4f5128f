#include "chtg/triangle.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "chtg/errors.hpp"

namespace chtg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// The null chart is used when |1 - r1^2| is below this; the other two
// charts divide by sqrt(|1 - r1^2|) and lose accuracy as r1 nears 1.
constexpr double kChartSwitch = 0.5;
constexpr double kDivisorFloor = 1e-12;

std::size_t prev_index(std::size_t k) { return (k + 2) % 3; }
std::size_t next_index(std::size_t k) { return (k + 1) % 3; }

} // namespace

Order Order::finite(int p)
{
    if (p < 2)
        throw InvalidArgument("vertex order must be >= 2, got " + std::to_string(p));
    return Order(p);
}

Order Order::parse(std::string_view text)
{
    if (text == "inf" || text == "Inf" || text == "infinity" || text == "\xE2\x88\x9E")
        return infinite();
    int p = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, p);
    if (ec != std::errc{} || ptr != end)
        throw InvalidArgument("invalid order \"" + std::string(text) + "\"");
    return finite(p);
}

int Order::value() const
{
    if (is_infinite())
        throw InvalidArgument("infinite order has no integer value");
    return value_;
}

double Order::radius() const
{
    return is_infinite() ? 1.0 : std::cos(kPi / value_);
}

double Order::cos_two_pi_over() const
{
    return is_infinite() ? 1.0 : std::cos(2.0 * kPi / value_);
}

std::string Order::str() const
{
    return is_infinite() ? "inf" : std::to_string(value_);
}

double wrap_two_pi(double angle)
{
    double a = std::fmod(angle, 2.0 * kPi);
    if (a < 0)
        a += 2.0 * kPi;
    if (a >= 2.0 * kPi)
        a = 0.0;
    return a;
}

double wrap_pi(double angle)
{
    double a = wrap_two_pi(angle);
    return a > kPi ? a - 2.0 * kPi : a;
}

double TriangleParams::t() const
{
    if (alpha == 0.0)
        return kInf;
    return std::cos(alpha / 2.0) / std::sin(alpha / 2.0);
}

double TriangleParams::canonical_alpha() const
{
    return alpha > kPi ? 2.0 * kPi - alpha : alpha;
}

TriangleParams TriangleParams::with_alpha(double a) const
{
    TriangleParams p = *this;
    p.alpha = wrap_two_pi(a);
    return p;
}

TriangleParams TriangleParams::with_t(double tv) const
{
    return with_alpha(2.0 * std::atan2(1.0, tv));
}

TriangleParams TriangleParams::with_cos_alpha(double c) const
{
    if (!(c >= -1.0 && c <= 1.0))
        throw InvalidArgument("cos(alpha) outside [-1, 1]");
    return with_alpha(std::acos(c));
}

TriangleParams from_signature(Order p1, Order p2, Order p3)
{
    TriangleParams p;
    p.r = {p1.radius(), p2.radius(), p3.radius()};
    p.signature = std::array<Order, 3>{p1, p2, p3};
    return p;
}

TriangleParams from_lengths(double l1, double l2, double l3)
{
    if (!(l1 > 0 && l2 > 0 && l3 > 0))
        throw InvalidArgument("ultra-parallel distances must be positive");
    TriangleParams p;
    p.r = {std::cosh(l1 / 2), std::cosh(l2 / 2), std::cosh(l3 / 2)};
    p.lengths = std::array<double, 3>{l1, l2, l3};
    return p;
}

TriangleParams from_radii(double r1, double r2, double r3)
{
    if (!(r1 >= 0 && r2 >= 0 && r3 >= 0))
        throw InvalidArgument("radii must be nonnegative");
    TriangleParams p;
    p.r = {r1, r2, r3};
    return p;
}

double existence_bound(const std::array<double, 3>& r)
{
    const double num = r[0] * r[0] + r[1] * r[1] + r[2] * r[2] - 1.0;
    const double den = 2.0 * r[0] * r[1] * r[2];
    if (den == 0.0)
        return num > 0 ? kInf : -kInf;
    return num / den;
}

double gram_determinant(const TriangleParams& p)
{
    const auto& r = p.r;
    return 1.0 - (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]) + 2.0 * p.product() * std::cos(p.alpha);
}

bool satisfies_existence(const TriangleParams& p, double tol)
{
    return gram_determinant(p) < -tol;
}

Mat21 gram_matrix(const TriangleParams& p)
{
    const Complex e = std::polar(1.0, p.alpha);
    Mat21 g = Mat21::identity();
    g(2, 1) = g(1, 2) = p.r[0];
    g(0, 2) = g(2, 0) = p.r[1];
    g(1, 0) = p.r[2] * e;
    g(0, 1) = p.r[2] * std::conj(e);
    return g;
}

Complex TriangleRealization::pairing(int k) const
{
    const auto i = static_cast<std::size_t>(k - 1);
    return herm(polar[prev_index(i)], polar[next_index(i)]);
}

std::array<double, 3> TriangleRealization::radii() const
{
    return {std::abs(pairing(1)), std::abs(pairing(2)), std::abs(pairing(3))};
}

double TriangleRealization::angular_invariant() const
{
    return wrap_two_pi(std::arg(pairing(1) * pairing(2) * pairing(3)));
}

TriangleRealization realization_from_polars(const std::array<Vec21, 3>& polar)
{
    TriangleRealization tri;
    tri.polar = polar;
    for (std::size_t k = 0; k < 3; ++k) {
        tri.reflections[k] = reflection(polar[k]);
        tri.vertices[k] = boxtimes(polar[prev_index(k)], polar[next_index(k)]);
    }
    return tri;
}

TriangleRealization realize(const TriangleParams& p)
{
    if (!satisfies_existence(p))
        throw ExistenceViolation("no triangle: cos(alpha) = " + std::to_string(std::cos(p.alpha))
                                 + " is not below the bound " + std::to_string(existence_bound(p.r)));

    const auto [r1, r2, r3] = p.r;
    // c3 = (0,1,0), c2 = (x, r1, y) with x^2 - y^2 = 1 - r1^2 and
    // c1 = (conj a, r2, conj b) subject to x a - y b = K, |a|^2 - |b|^2 = 1 - r2^2.
    const Complex K = r3 * std::polar(1.0, p.alpha) - r1 * r2;
    const double m = 1.0 - r1 * r1;
    const double rest = 1.0 - r2 * r2;

    double x = 0, y = 0;
    Complex a, b;
    const bool null_chart = std::abs(m) < kChartSwitch && std::abs(K) >= kDivisorFloor;
    if (!null_chart && m > kDivisorFloor) {
        x = std::sqrt(m);
        a = K / x;
        const double b2 = std::norm(a) - rest;
        if (b2 < -kDivisorFloor)
            throw DegenerateNormalization("negative |b|^2 in the angle chart");
        b = std::sqrt(std::max(0.0, b2));
    } else if (!null_chart && m < -kDivisorFloor) {
        y = std::sqrt(-m);
        b = -K / y;
        const double a2 = rest + std::norm(b);
        if (a2 < -kDivisorFloor)
            throw DegenerateNormalization("negative |a|^2 in the ultra-parallel chart");
        a = std::sqrt(std::max(0.0, a2));
    } else {
        x = (1.0 + m) / 2.0;
        y = (1.0 - m) / 2.0;
        const double k_abs = std::abs(K);
        if (k_abs < kDivisorFloor)
            throw DegenerateNormalization("r3 e^{i alpha} = r1 r2 in the null chart");
        const double B = x * k_abs;
        const double C = k_abs * k_abs + y * y * rest;
        const double disc = B * B - m * C;
        if (disc < 0)
            throw DegenerateNormalization("negative discriminant in the null chart");
        const double lambda = C / (B + std::sqrt(disc));
        a = lambda * K / k_abs;
        b = (x * a - K) / y;
    }

    const Vec21 c1{std::conj(a), r2, std::conj(b)};
    const Vec21 c2{x, r1, y};
    const Vec21 c3{0.0, 1.0, 0.0};
    return realization_from_polars({c1, c2, c3});
}

TriangleRealization realize_pinfty(int p1, int p2, double alpha)
{
    if (p1 < 3 || p2 < 3)
        throw InvalidArgument("realize_pinfty needs p1, p2 >= 3");
    const Complex z1 = std::cos(kPi / p1) * std::polar(1.0, -alpha / 2.0);
    const Complex z2 = std::cos(kPi / p2) * std::polar(1.0, alpha / 2.0);
    return realization_from_polars({Vec21{1.0, z2, -z2}, Vec21{1.0, z1, -z1}, Vec21{0.0, 1.0, 0.0}});
}

Mat21 reflection(const Vec21& c)
{
    const double cc = herm(c, c).real();
    if (!(cc > 0))
        throw InvalidArgument("reflection needs a positive polar vector");
    return rank_one(c, 2.0 / cc) - Mat21::identity();
}

Mat21 mu_reflection(const Vec21& c, Complex mu)
{
    const double cc = herm(c, c).real();
    if (!(cc > 0))
        throw InvalidArgument("mu-reflection needs a positive polar vector");
    return Mat21::identity() + rank_one(c, (mu - 1.0) / cc);
}

double cartan_invariant(const Vec21& v1, const Vec21& v2, const Vec21& v3)
{
    const Complex prod = herm(v1, v2) * herm(v2, v3) * herm(v3, v1);
    if (std::abs(prod) < kDivisorFloor)
        throw DegenerateNormalization("Cartan invariant of a degenerate configuration");
    return std::arg(-prod);
}

double cartan_invariant(const TriangleRealization& tri)
{
    return cartan_invariant(tri.vertices[0], tri.vertices[1], tri.vertices[2]);
}

double brehm_sigma(const TriangleRealization& tri)
{
    const auto& v = tri.vertices;
    Complex den = 1.0;
    for (const auto& vk : v) {
        const Complex q = herm(vk, vk);
        if (std::abs(q) < 1e-10)
            throw IdealVertexDegenerate("shape invariant needs non-ideal vertices");
        den *= q;
    }
    return (herm(v[0], v[1]) * herm(v[1], v[2]) * herm(v[2], v[0]) / den).real();
}

double brehm_sigma_closed_form(const TriangleParams& p)
{
    const auto [r1, r2, r3] = p.r;
    const double den = (1 - r1 * r1) * (1 - r2 * r2) * (1 - r3 * r3);
    if (std::abs(den) < kDivisorFloor)
        throw IdealVertexDegenerate("shape invariant needs r_k != 1");
    const double R = p.product();
    const double num = R * R * std::cos(2 * p.alpha)
                     - R * (r1 * r1 + r2 * r2 + r3 * r3 + 1) * std::cos(p.alpha)
                     + (r1 * r1 * r2 * r2 + r2 * r2 * r3 * r3 + r3 * r3 * r1 * r1);
    return num / den;
}

Complex hakim_sandler_eta(const TriangleRealization& tri)
{
    const auto& v = tri.vertices;
    const Complex v11 = herm(v[0], v[0]);
    const Complex v32 = herm(v[2], v[1]);
    if (std::abs(v11) < 1e-10 || std::abs(v32) < 1e-10)
        throw IdealVertexDegenerate("eta needs <v1,v1> != 0 and <v3,v2> != 0");
    return herm(v[2], v[0]) * herm(v[0], v[1]) / (v32 * v11);
}

Complex hakim_sandler_eta_closed_form(const TriangleParams& p)
{
    // Obtained from <v_{k-1},v_{k+1}> = e^{i theta_k}(r_k - r_{k-1} r_{k+1} e^{-i alpha}).
    const auto [r1, r2, r3] = p.r;
    const Complex e = std::polar(1.0, p.alpha);
    const Complex den = (r1 - r2 * r3 * std::conj(e)) * (r1 * r1 - 1.0);
    if (std::abs(den) < kDivisorFloor)
        throw IdealVertexDegenerate("eta closed form needs r1 != 1");
    return std::conj(e) * (r2 - r1 * r3 * e) * (r3 - r1 * r2 * e) / den;
}

} // namespace chtg

#include "chtg/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chtg/errors.hpp"

namespace chtg {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::RegularElliptic: return "RegularElliptic";
    case Verdict::Hyperbolic: return "Hyperbolic";
    case Verdict::Unipotent: return "Unipotent";
    case Verdict::BoundaryNonUnipotent: return "BoundaryNonUnipotent";
    case Verdict::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

double discriminant(Complex z)
{
    const double n = std::norm(z);
    return n * n - 8.0 * (z * z * z).real() + 18.0 * n - 27.0;
}

namespace {

// rho vanishes to third order at 3 and its rotations by cube roots of unity,
// so a rho-band of width tol admits traces about cbrt(tol) away from them.
double distance_to_unipotent(Complex tau)
{
    double d = std::abs(tau - 3.0);
    for (int k = 1; k <= 2; ++k)
        d = std::min(d, std::abs(tau - std::polar(3.0, 2 * std::numbers::pi * k / 3)));
    return d;
}

} // namespace

IsometryClass classify(Complex tau, bool det_is_one, double tol)
{
    if (!det_is_one)
        throw NormalizationRequired("classification needs the trace of a determinant-one matrix");

    IsometryClass c;
    c.tau = tau;
    c.tol = tol;
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
        c.rho = std::nan("");
        return c;
    }
    c.rho = discriminant(tau);
    if (c.rho < -tol)
        c.verdict = Verdict::RegularElliptic;
    else if (c.rho > tol)
        c.verdict = Verdict::Hyperbolic;
    else if (distance_to_unipotent(tau) <= std::cbrt(tol))
        c.verdict = Verdict::Unipotent;
    else
        c.verdict = Verdict::BoundaryNonUnipotent;
    return c;
}

} // namespace chtg

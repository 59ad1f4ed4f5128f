#pragma once

// Isometry type from the trace alone, via Goldman's discriminant.

#include <string_view>

#include "chtg/linalg.hpp"

namespace chtg {

enum class Verdict {
    RegularElliptic,
    Hyperbolic,
    Unipotent,
    /// rho = 0 but tau^3 != 27: complex reflections or ellipto-parabolics,
    /// which the trace cannot tell apart.
    BoundaryNonUnipotent,
    Indeterminate,
};

std::string_view to_string(Verdict v);

inline constexpr double kDefaultClassifyTol = 1e-9;

struct IsometryClass {
    Verdict verdict = Verdict::Indeterminate;
    double rho = 0.0;
    Complex tau;
    double tol = kDefaultClassifyTol;
};

/// |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27.
double discriminant(Complex z);

/// rho within tol of 0 is the boundary band; there tau counts as unipotent
/// when it lies within cbrt(tol) of 3, 3w or 3w^2. Throws
/// NormalizationRequired unless det_is_one. Non-finite traces give
/// Indeterminate.
IsometryClass classify(Complex tau, bool det_is_one = true, double tol = kDefaultClassifyTol);

} // namespace chtg

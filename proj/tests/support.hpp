#pragma once

// Deterministic random inputs shared by the unit, property and acceptance suites.

#include <cmath>
#include <numbers>
#include <random>

#include "chtg/linalg.hpp"
#include "chtg/triangle.hpp"
#include "chtg/words.hpp"

namespace chtg::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng)
{
    return {uniform(rng, -1, 1), uniform(rng, -1, 1)};
}

inline Complex random_phase(Rng& rng)
{
    return std::polar(1.0, uniform(rng, 0, 2 * std::numbers::pi));
}

inline Vec21 random_vec(Rng& rng)
{
    return {random_complex(rng), random_complex(rng), random_complex(rng)};
}

/// A vector with <c,c> = 1 and entries of modulus at most max_abs.
inline Vec21 random_positive(Rng& rng, double max_abs = 1e9)
{
    for (;;) {
        const Vec21 v = random_vec(rng);
        const double n = herm(v, v).real();
        if (n < 0.05)
            continue;
        const Vec21 c = (1.0 / std::sqrt(n)) * v;
        if (c.max_abs() <= max_abs)
            return c;
    }
}

/// Product of reflections in random positive vectors and a random diagonal
/// phase. The vectors are kept short so the isometry stays well conditioned.
inline Mat21 random_isometry(Rng& rng)
{
    Mat21 u = Mat21::diagonal(random_phase(rng), random_phase(rng), random_phase(rng));
    for (int i = 0; i < 3; ++i)
        u = reflection(random_positive(rng, 1.5)) * u;
    return u;
}

inline Word random_word(Rng& rng, std::size_t min_len, std::size_t max_len)
{
    const auto n = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
    std::uniform_int_distribution<int> letter(1, 3);
    std::vector<Letter> a(n);
    for (auto& x : a)
        x = static_cast<Letter>(letter(rng));
    return Word(std::move(a));
}

/// Radii in [r_lo, r_hi] and alpha in (0, 2 pi), kept off the existence bound.
inline TriangleParams random_params(Rng& rng, double r_lo = 0.3, double r_hi = 1.0)
{
    for (;;) {
        const TriangleParams p = from_radii(uniform(rng, r_lo, r_hi), uniform(rng, r_lo, r_hi),
                                            uniform(rng, r_lo, r_hi))
                                     .with_alpha(uniform(rng, 0.01, 2 * std::numbers::pi - 0.01));
        if (gram_determinant(p) < -1e-3)
            return p;
    }
}

} // namespace chtg::testing

#pragma once

// Integer polynomials in X1, X2, X3 (standing for 4 r_k^2) with 64-bit
// coefficients. Overflow is detected and reported, never wrapped.

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace chtg {

class IntPoly {
public:
    using Exponents = std::array<int, 3>;

    IntPoly() = default;
    static IntPoly constant(std::int64_t c);
    static IntPoly monomial(std::int64_t c, Exponents e);

    /// Adds c * X^e; zero coefficients are dropped.
    void add_term(std::int64_t c, Exponents e);

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }

    double evaluate(const std::array<double, 3>& x) const;
    /// Throws std::overflow_error if an intermediate leaves int64.
    std::int64_t evaluate_exact(const std::array<std::int64_t, 3>& x) const;

    /// Monomials by descending exponent tuple, e.g. "X1^2*X3 - 4*X2 + 1".
    std::string str() const;

    bool operator==(const IntPoly&) const = default;

private:
    std::map<Exponents, std::int64_t> terms_;
};

} // namespace chtg

#pragma once

// Traces of words in the generators of a triangle group. Three independent
// routes: the literal matrix product, the subset expansion over the letters
// of the word and the tail recursion on deletions. Also the mu-reflection
// variant and an exact mode over Z[X1, X2, X3] with X_k = 4 r_k^2.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

#include "chtg/exact_poly.hpp"
#include "chtg/linalg.hpp"
#include "chtg/triangle.hpp"
#include "chtg/words.hpp"

namespace chtg {

enum class TraceMethod { Oracle, Combinatorial, Recursive, ClosedForm };

std::string_view to_string(TraceMethod m);

struct TraceValue {
    Complex tau;
    TraceMethod method;
};

inline constexpr std::size_t kCombinatorialCap = 20;
inline constexpr std::size_t kExactCap = 16;

using MuTriple = std::array<Complex, 3>;

/// Product g_{a_1} ... g_{a_n}; the identity for the empty word.
Mat21 word_matrix(const Word& a, const std::array<Mat21, 3>& generators);

TraceValue trace_oracle(const Word& a, const TriangleRealization& tri);

/// Throws CapExceeded when a.size() > cap.
TraceValue trace_combinatorial(const Word& a, const TriangleParams& p,
                               std::size_t cap = kCombinatorialCap);

/// Fourier coefficients q_w of the subset sum, with r substituted.
struct NumericTracePolynomial {
    std::size_t length = 0;
    std::map<int, Complex> coeffs;

    /// sum_w q_w e^{i alpha w}
    Complex fourier(double alpha) const;
    /// (-1)^n (2 + fourier(alpha))
    Complex trace(double alpha) const;
};

NumericTracePolynomial trace_polynomial(const Word& a, const std::array<double, 3>& r,
                                        std::size_t cap = kCombinatorialCap);

/// Reduce/straighten move counts of one subsequence a|_S.
struct SubsetShape {
    int winding = 0;
    int reductions = 0;
    std::array<int, 3> straightenings{};

    /// |S| = 3|w| + reductions + 2 * (total straightenings).
    int size() const;
    auto operator<=>(const SubsetShape&) const = default;
};

/// Number of subsets S of the positions of a per shape. Checks on every
/// subset that u_k(a|_S) = |w| + 2 s_k and the length identity above
/// (std::logic_error if one fails). Throws CapExceeded when a.size() > cap.
std::map<SubsetShape, std::int64_t> subset_census(const Word& a, std::size_t cap = kExactCap);

/// q_w = (8 r1 r2 r3)^{|w|} P_w(4 r1^2, 4 r2^2, 4 r3^2) with integer P_w.
struct ExactTracePolynomial {
    std::size_t length = 0;
    std::map<int, IntPoly> coeffs;

    NumericTracePolynomial substitute(const std::array<double, 3>& r) const;
    Complex trace(const TriangleParams& p) const;
    /// sum_w 8^{|w|} P_w(4,4,4), which is q summed at r = (1,1,1); equals (-1)^n.
    std::int64_t ideal_checksum() const;
};

/// Each subset contributes (-1)^{|S|} 2^{reductions} X^{straightenings} to
/// P_{w(S)}. Throws CapExceeded when a.size() > cap.
ExactTracePolynomial trace_polynomial_exact(const Word& a, std::size_t cap = kExactCap);

/// Memoized evaluation of the deletion recursion. One instance per thread.
class RecursiveTraceEvaluator {
public:
    /// Throws ZeroRadiusUnsupported if some r_k = 0.
    explicit RecursiveTraceEvaluator(const TriangleParams& p);

    /// Rotates a to its minimal rotation first.
    Complex operator()(const Word& a);

    std::size_t memo_size() const { return memo_.size(); }

private:
    Complex eval(std::vector<Letter> a);

    std::array<double, 3> r_;
    double alpha_;
    std::unordered_map<std::string, Complex> memo_;
};

TraceValue trace_recursive(const Word& a, const TriangleParams& p);

/// 8 r1 r2 r3 e^{i alpha} - (4(r1^2 + r2^2 + r3^2) - 3)
Complex tau_123(const TriangleParams& p);
/// (16 r1^2 r3^2 + 4 r2^2 - 1) - 16 r1 r2 r3 cos(alpha)
double tau_2321(const TriangleParams& p);
/// tau of (k, k-1, k, k+1): 4 |2 r_{k-1} r_{k+1} e^{i alpha} - r_k|^2 - 1.
double sigma_closed_form(Letter k, const TriangleParams& p);
/// The word (k, k-1, k, k+1).
Word sigma_word(Letter k);

/// Trace of the product of mu-reflections in the realized polar vectors.
Complex trace_mu(const Word& a, const TriangleRealization& tri, const MuTriple& mu);

/// Same trace computed in the basis c1, c2, c3 from the Gram matrix alone,
/// so it needs no realization (the Gram matrix may have any signature).
Complex trace_mu_gram(const Word& a, const TriangleParams& p, const MuTriple& mu);

/// 2 + sum_S prod (mu_k - 1)^{n_k(S)} r^{u(S)} e^{i alpha w(S)}.
Complex trace_mu_combinatorial(const Word& a, const TriangleParams& p, const MuTriple& mu,
                               std::size_t cap = kCombinatorialCap);

} // namespace chtg

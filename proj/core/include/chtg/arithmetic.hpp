#pragma once

// Arithmetic of traces: the groups G(p1,p2,p3;n) in which (3,1,3,2) has
// order n, integrality of 2 Re(tau) and |tau|^2, membership in Z[2cos(2pi/q)]
// from Galois conjugates, and Mostow's groups Gamma(p, rho).

#include <cstdint>
#include <span>
#include <vector>

#include "chtg/traces.hpp"
#include "chtg/triangle.hpp"
#include "chtg/words.hpp"

namespace chtg {

struct GroupWithRotation {
    TriangleParams params;
    Order n;
    double cos_alpha = 0;
};

/// cos(alpha) = ((8 r1^2 r2^2 + 2 r3^2 - 1) - cos(2 pi / n)) / (8 r1 r2 r3).
/// Throws ExistenceViolation when that value is not an admissible angle.
GroupWithRotation group_with_rotation(Order p1, Order p2, Order p3, Order n);

struct IntegerRingVerdict {
    bool passed = false;
    double two_re = 0, abs2 = 0;
    double residual_two_re = 0, residual_abs2 = 0;
};

IntegerRingVerdict integer_ring_check(Complex tau, double tol = 1e-7);

struct IntegerRingSweep {
    std::size_t words = 0;
    std::size_t failures = 0;
    double max_residual = 0;
};

/// integer_ring_check on the matrix trace of every cyclically reduced word
/// class up to max_len.
IntegerRingSweep integer_ring_sweep(const GroupWithRotation& g, std::size_t max_len, double tol = 1e-7);

/// 1 <= j < q/2 with gcd(j, q) = 1; j indexes the embedding
/// 2cos(2pi/q) -> 2cos(2pi j/q). The first entry is the identity.
std::vector<int> embedding_indices(int q);

struct BasisVerdict {
    bool passed = false;
    /// Coefficients on 1, theta, theta^2, ... with theta = 2cos(2pi/q).
    std::vector<std::int64_t> coeffs;
    double residual = 0;
    double condition = 0;
    /// Floating-point membership is a heuristic.
    bool experimental = true;
};

/// conjugates[i] is the quantity under embedding_indices(q)[i]. Solves the
/// Vandermonde system in theta's conjugates and accepts iff the rounded
/// integer solution reproduces every conjugate within tol. Throws
/// IllConditionedBasis above condition number 1e12.
BasisVerdict basis_ring_check(std::span<const double> conjugates, int q, double tol = 1e-7);

struct ConjugateQuantities {
    std::vector<double> two_re;
    std::vector<double> abs2;
};

/// 2 Re(tau_a) and |tau_a|^2 under each embedding of Q(2cos(2pi/q)), from the
/// exact trace polynomial. Orders of G other than q must be in
/// {2,3,4,6,inf}; otherwise InvalidArgument.
ConjugateQuantities conjugate_ring_quantities(const Word& a, const GroupWithRotation& g, int q);

struct MostowGroup {
    int p = 3;
    double rho = 0;
    Complex mu;
    double r = 0;
    double alpha = 0;
    TriangleParams params;
    /// Whether (r, r, r, alpha) satisfies the existence bound.
    bool realizable = false;
};

/// Throws InvalidArgument unless p in {3,4,5} and rho > 0.
MostowGroup mostow_group(int p, double rho);

/// |(mu - 1) r - i e^{i pi / p}|.
double mostow_identity_residual(const MostowGroup& g);

/// Trace of the mu-reflection word, computed from the Gram matrix.
Complex mostow_trace(const Word& a, const MostowGroup& g);

/// Element of Z[x]/(x^L - 1); evaluated at x = e^{2 pi i / L}.
struct CyclotomicInteger {
    int order = 1;
    std::vector<std::int64_t> coeffs;

    Complex evaluate() const;
};

struct MostowFieldVerdict {
    bool passed = false;
    Complex tau;
    CyclotomicInteger exact;
    double residual = 0;
};

/// Writes tau_a in Z[zeta_L], L = lcm(p, rho), subset by subset, and checks
/// it against the matrix trace. Needs an integer rho.
MostowFieldVerdict mostow_trace_field_check(const Word& a, const MostowGroup& g, double tol = 1e-9);

/// max_w |q_w / ((mu - 1) r)^{3|w|} - (its exact value in Z[mu])|.
double mostow_coefficient_echo(const Word& a, const MostowGroup& g);

} // namespace chtg

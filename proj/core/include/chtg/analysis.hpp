#pragma once

// Closed-form thresholds in the t = cot(alpha/2) coordinate: the existence
// bound, the w_A ellipticity threshold, the quartic f_B of the special family
// r1^2 + r2^2 + r3^2 = 1 + 2 r1 r2 r3, and a parallel scanner for regular
// elliptic words.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "chtg/classify.hpp"
#include "chtg/triangle.hpp"
#include "chtg/words.hpp"

namespace chtg {

/// cot(alpha / 2); +inf at alpha = 0 (mod 2 pi).
double t_of_alpha(double alpha);
/// 2 atan2(1, t), in (0, 2 pi); +-inf map to 0 and 2 pi.
double alpha_of_t(double t);
/// sqrt((1 + c)/(1 - c)), with +inf for c >= 1 and -inf for c < -1.
double t_of_cos(double c);

/// (13 + sqrt(297)) / 32.
double type_b_bound();

/// f_B(t) = 1024 R (a4 t^4 + a2 t^2 + a0) on the special family.
struct FamilyQuartic {
    double R = 0;
    double a4 = 0, a2 = 0, a0 = 0;
    /// Positive roots ordered t_minus <= t_plus. Absent when there is no such
    /// root; t_plus is +inf at R = 1.
    std::optional<double> t_minus, t_plus;

    double operator()(double t) const;
};

FamilyQuartic family_quartic(double R);

struct Thresholds {
    double R = 0;
    double c_inf = 0, t_inf = 0;
    double c_A = 0, t_A = 0;
    bool in_family = false;
    std::optional<FamilyQuartic> quartic;
};

inline constexpr double kFamilyTol = 1e-10;

/// Requires every r_k > 0 (InvalidArgument otherwise).
Thresholds thresholds(const TriangleParams& p);

bool family_membership(const TriangleParams& p, double tol = kFamilyTol);

enum class FamilyType { TypeB, OutOfCriterion };
std::string_view to_string(FamilyType t);

/// TypeB for ultra-parallel members and for members with R >= type_b_bound();
/// OutOfCriterion otherwise (the criterion never certifies type A).
/// Throws NotInFamily.
FamilyType family_type(const TriangleParams& p);

/// The family's own expression for c_A (from the angles, or from the
/// ultra-parallel lengths) next to the general one. Absent off the family or
/// when neither the signature nor the lengths are known.
struct PrintedCACheck {
    double printed = 0;
    double general = 0;
    bool agrees = false;
};
std::optional<PrintedCACheck> printed_family_c_A(const TriangleParams& p, double tol = 1e-9);

/// rho(tau_123) (t^2 + 1)^3 evaluated pointwise from the tau_123 closed form.
double scaled_w_b_discriminant(const TriangleParams& p, double t);

struct SigmaBoundReport {
    bool holds = true;
    double min_sigma = 0;
};
/// Checks sigma_k > -1 for k = 1,2,3 on `samples` values of alpha in (0, 2 pi).
SigmaBoundReport sigma_lower_bound_check(const TriangleParams& p, int samples = 100);

struct NonDiscretenessCertificate {
    Word word;
    Complex tau;
    double rho = 0;
    double t = 0;
    double t_A = 0;
};

/// Present iff |t| > t_A and the matrix trace of w_A = (3,2,3,1) classifies
/// as regular elliptic.
std::optional<NonDiscretenessCertificate> non_discreteness_certificate(const TriangleParams& p);

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double locate_root(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-14);

struct ScanFilters {
    bool cyclically_reduced = true;
    /// Drop words built from two letters only, i.e. powers of (k-1, k+1).
    bool exclude_alternations = false;
};

struct ScanEntry {
    Word word;
    IsometryClass cls;
};

struct ScanReport {
    TriangleParams params;
    std::size_t max_len = 0;
    std::vector<ScanEntry> entries;

    std::size_t hits() const;
};

inline constexpr std::size_t kScanMaxLen = 24;

/// Classifies the matrix trace of one word per class (rotation and
/// reversal) up to max_len. Lengths are spread over `jobs` threads; the
/// output order is length, then lexicographic.
ScanReport scan_elliptic(const TriangleParams& p, std::size_t max_len, const ScanFilters& filters = {},
                         unsigned jobs = 1, double tol = kDefaultClassifyTol);

} // namespace chtg

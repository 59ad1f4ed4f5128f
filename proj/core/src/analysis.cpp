#include "chtg/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <boost/math/tools/roots.hpp>

#include "chtg/errors.hpp"
#include "chtg/traces.hpp"

namespace chtg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Double root of the quartic in t^2.
constexpr double kDoubleRootR = 7.0 / 8.0;

} // namespace

double t_of_alpha(double alpha)
{
    return from_radii(1, 1, 1).with_alpha(alpha).t();
}

double alpha_of_t(double t)
{
    if (t == kInf)
        return 0.0;
    if (t == -kInf)
        return 2 * kPi;
    return 2.0 * std::atan2(1.0, t);
}

double t_of_cos(double c)
{
    if (c >= 1.0)
        return kInf;
    if (c < -1.0)
        return -kInf;
    return std::sqrt((1.0 + c) / (1.0 - c));
}

double type_b_bound()
{
    return (13.0 + std::sqrt(297.0)) / 32.0;
}

double FamilyQuartic::operator()(double t) const
{
    const double s = t * t;
    return 1024.0 * R * ((a4 * s + a2) * s + a0);
}

FamilyQuartic family_quartic(double R)
{
    FamilyQuartic q;
    q.R = R;
    q.a4 = 1.0 - R;
    q.a2 = ((64.0 * R - 80.0) * R + 11.0) * R + 2.0;
    q.a0 = ((64.0 * R + 48.0) * R + 12.0) * R + 1.0;

    if (R == 1.0) {
        // Degenerates to a2 t^2 + a0 with a2 = -3, a0 = 125.
        q.t_minus = std::sqrt(-q.a0 / q.a2);
        q.t_plus = kInf;
        return q;
    }
    if (R < kDoubleRootR)
        return q;

    // Roots in s = t^2 are (a2 +- R sqrt(D)) / (2 (R - 1)), D = (8R-7)^3 (8R+1).
    const double D = std::pow(8.0 * R - 7.0, 3) * (8.0 * R + 1.0);
    const double root = R * std::sqrt(std::max(0.0, D));
    const double den = 2.0 * (R - 1.0);
    std::vector<double> positive;
    for (double s : {(q.a2 + root) / den, (q.a2 - root) / den})
        if (s > 0)
            positive.push_back(std::sqrt(s));
    std::sort(positive.begin(), positive.end());
    if (positive.size() == 2) {
        q.t_minus = positive[0];
        q.t_plus = positive[1];
    } else if (positive.size() == 1) {
        q.t_plus = positive[0];
    }
    return q;
}

bool family_membership(const TriangleParams& p, double tol)
{
    const auto& r = p.r;
    return std::abs(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] - 1.0 - 2.0 * p.product()) < tol;
}

Thresholds thresholds(const TriangleParams& p)
{
    const auto& r = p.r;
    if (!(r[0] > 0 && r[1] > 0 && r[2] > 0))
        throw InvalidArgument("thresholds need every r_k > 0");
    Thresholds th;
    th.R = p.product();
    th.c_inf = existence_bound(r);
    th.t_inf = t_of_cos(th.c_inf);
    th.c_A = (4 * r[0] * r[0] * r[1] * r[1] + r[2] * r[2] - 1) / (4 * th.R);
    th.t_A = t_of_cos(th.c_A);
    th.in_family = family_membership(p);
    if (th.in_family)
        th.quartic = family_quartic(th.R);
    return th;
}

std::string_view to_string(FamilyType t)
{
    return t == FamilyType::TypeB ? "TypeB" : "OutOfCriterion";
}

FamilyType family_type(const TriangleParams& p)
{
    if (!family_membership(p))
        throw NotInFamily("r1^2 + r2^2 + r3^2 != 1 + 2 r1 r2 r3");
    const bool ultra = p.lengths.has_value() || std::ranges::all_of(p.r, [](double rk) { return rk > 1.0; });
    if (ultra || p.product() >= type_b_bound())
        return FamilyType::TypeB;
    return FamilyType::OutOfCriterion;
}

std::optional<PrintedCACheck> printed_family_c_A(const TriangleParams& p, double tol)
{
    if (!family_membership(p))
        return std::nullopt;
    const double R = p.product();
    PrintedCACheck check;
    check.general = thresholds(p).c_A;
    if (p.lengths) {
        const auto& l = *p.lengths;
        check.printed = 1.0 + std::pow(std::sinh(l[0] - l[1]), 2) / (4 * R);
    } else if (p.signature) {
        const auto phi = [&](std::size_t k) {
            const Order& o = (*p.signature)[k];
            return o.is_infinite() ? 0.0 : kPi / o.value();
        };
        check.printed = 1.0 - std::pow(std::sin(phi(0) + phi(1)), 2) / (4 * R);
    } else {
        return std::nullopt;
    }
    check.agrees = std::abs(check.printed - check.general) <= tol;
    return check;
}

double scaled_w_b_discriminant(const TriangleParams& p, double t)
{
    const double s = t * t + 1.0;
    return discriminant(tau_123(p.with_t(t))) * s * s * s;
}

SigmaBoundReport sigma_lower_bound_check(const TriangleParams& p, int samples)
{
    SigmaBoundReport rep;
    rep.min_sigma = kInf;
    for (int j = 0; j < samples; ++j) {
        const TriangleParams q = p.with_alpha(2 * kPi * (j + 0.5) / samples);
        for (Letter k = 1; k <= 3; ++k) {
            const double s = sigma_closed_form(k, q);
            rep.min_sigma = std::min(rep.min_sigma, s);
            if (!(s > -1.0))
                rep.holds = false;
        }
    }
    return rep;
}

std::optional<NonDiscretenessCertificate> non_discreteness_certificate(const TriangleParams& p)
{
    const Thresholds th = thresholds(p);
    const double t = p.t();
    if (!(std::abs(t) > th.t_A) || !satisfies_existence(p))
        return std::nullopt;

    const Word w_a{3, 2, 3, 1};
    const Complex tau = trace_oracle(w_a, realize(p)).tau;
    const IsometryClass cls = classify(tau);
    if (cls.verdict != Verdict::RegularElliptic)
        return std::nullopt;
    return NonDiscretenessCertificate{w_a, tau, cls.rho, t, th.t_A};
}

double locate_root(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    if (std::signbit(f(lo)) == std::signbit(f(hi)))
        throw InvalidArgument("locate_root: no sign change on the bracket");
    const auto [a, b] = boost::math::tools::bisect(
        f, lo, hi, [tol](double x, double y) { return std::abs(y - x) <= tol; });
    return 0.5 * (a + b);
}

std::size_t ScanReport::hits() const
{
    return static_cast<std::size_t>(std::ranges::count_if(
        entries, [](const ScanEntry& e) { return e.cls.verdict == Verdict::RegularElliptic; }));
}

ScanReport scan_elliptic(const TriangleParams& p, std::size_t max_len, const ScanFilters& filters,
                         unsigned jobs, double tol)
{
    if (max_len < 1 || max_len > kScanMaxLen)
        throw InvalidArgument("scan length must be in [1, " + std::to_string(kScanMaxLen) + "]");

    const TriangleRealization tri = realize(p);
    std::vector<Word> words;
    for_each_word(1, max_len, filters.cyclically_reduced, [&](const Word& w) {
        if (filters.exclude_alternations && w.size() > 1) {
            const auto distinct = std::ranges::count_if(std::array<Letter, 3>{1, 2, 3}, [&](Letter k) {
                return n_count(k, w) > 0;
            });
            if (distinct <= 2)
                return;
        }
        words.push_back(w);
    });

    ScanReport rep;
    rep.params = p;
    rep.max_len = max_len;
    rep.entries.resize(words.size());

    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 256;
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= words.size())
                return;
            const std::size_t end = std::min(words.size(), begin + kChunk);
            for (std::size_t i = begin; i < end; ++i)
                rep.entries[i] = {words[i], classify(trace_oracle(words[i], tri).tau, true, tol)};
        }
    };

    jobs = std::max(1u, jobs);
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    return rep;
}

} // namespace chtg

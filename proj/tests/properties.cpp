#include "properties.hpp"

#include <algorithm>
#include <cmath>

#include "chtg/classify.hpp"
#include "chtg/traces.hpp"
#include "support.hpp"

namespace chtg::testing {

namespace {

constexpr double kPi = std::numbers::pi;

class Tracker {
public:
    Tracker(std::string name, int cases) { res_.name = std::move(name), res_.cases = cases; }

    void record(double deviation, double tol)
    {
        res_.worst = std::max(res_.worst, deviation);
        if (!(deviation <= tol))
            ++res_.failures;
    }
    void record(bool ok)
    {
        if (!ok)
            ++res_.failures;
    }

    PropertyResult result() const { return res_; }

private:
    PropertyResult res_;
};

double rel(Complex a, Complex b)
{
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

Word slice(const Word& a, std::size_t from, std::size_t to)
{
    return Word(std::vector<Letter>(a.begin() + from, a.begin() + to));
}

Complex polar_triple(const TriangleRealization& tri)
{
    const auto& c = tri.polar;
    return herm(c[0], c[1]) * herm(c[1], c[2]) * herm(c[2], c[0]);
}

} // namespace

PropertyResult herm_sesquilinear(int cases)
{
    Rng rng(101);
    Tracker t("herm sesquilinear", cases);
    for (int i = 0; i < cases; ++i) {
        const Vec21 z = random_vec(rng), z2 = random_vec(rng), w = random_vec(rng);
        const Complex s = random_complex(rng);
        t.record(std::abs(herm(s * z + z2, w) - (s * herm(z, w) + herm(z2, w))), 1e-12);
        t.record(std::abs(herm(w, s * z + z2) - (std::conj(s) * herm(w, z) + herm(w, z2))), 1e-12);
        t.record(std::abs(herm(z, w) - std::conj(herm(w, z))), 1e-12);
    }
    return t.result();
}

PropertyResult cross_orthogonal(int cases)
{
    Rng rng(102);
    Tracker t("cross product orthogonal to its factors", cases);
    for (int i = 0; i < cases; ++i) {
        const Vec21 z = random_vec(rng), w = random_vec(rng);
        const Vec21 x = boxtimes(z, w);
        t.record(std::abs(herm(x, z)), 1e-10);
        t.record(std::abs(herm(x, w)), 1e-10);
    }
    return t.result();
}

PropertyResult cross_pairing(int cases)
{
    Rng rng(103);
    Tracker t("pairing of cross products with a common factor", cases);
    for (int i = 0; i < cases; ++i) {
        const Vec21 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        const Complex lhs = herm(boxtimes(a, c), boxtimes(b, c));
        const Complex rhs = std::conj(herm(a, c) * herm(c, b) - herm(a, b) * herm(c, c));
        t.record(rel(lhs, rhs), 1e-10);
    }
    return t.result();
}

PropertyResult cross_norm(int cases)
{
    Rng rng(104);
    Tracker t("norm of a cross product", cases);
    for (int i = 0; i < cases; ++i) {
        const Vec21 a = random_vec(rng), b = random_vec(rng);
        const Vec21 x = boxtimes(a, b);
        const Complex rhs = std::norm(herm(a, b)) - herm(a, a) * herm(b, b);
        t.record(rel(herm(x, x), rhs), 1e-10);
    }
    return t.result();
}

PropertyResult polar_intersection_negative(int cases)
{
    Rng rng(105);
    Tracker t("intersecting complex geodesics meet in a negative point", cases);
    for (int i = 0; i < cases;) {
        const Vec21 c1 = random_positive(rng), c2 = random_positive(rng);
        if (std::abs(herm(c1, c2)) >= 0.999)
            continue;
        const Vec21 v = boxtimes(c1, c2);
        t.record(herm(v, v).real() < 0);
        ++i;
    }
    return t.result();
}

PropertyResult winding_splitting(int cases)
{
    Rng rng(201);
    Tracker t("winding splits at an interior letter", cases);
    for (int i = 0; i < cases; ++i) {
        const Word a = random_word(rng, 3, 16);
        const std::size_t n = a.size();
        const auto m = std::uniform_int_distribution<std::size_t>(2, n - 1)(rng);
        // The second piece starts at a_{m+1}; starting it at a_m breaks the identity.
        const int rhs = winding(slice(a, 0, m)) + winding(slice(a, m, n))
                      + winding(Word{a[0], a[m - 1], a[m], a[n - 1]});
        t.record(winding(a) == rhs);
    }
    return t.result();
}

PropertyResult winding_appending(int cases)
{
    Rng rng(202);
    Tracker t("winding under appending a letter", cases);
    for (int i = 0; i < cases; ++i) {
        const Word a = random_word(rng, 2, 16);
        const std::size_t n = a.size();
        const int rhs = winding(slice(a, 0, n - 1)) + winding(Word{a[0], a[n - 2], a[n - 1]});
        t.record(winding(a) == rhs);
    }
    return t.result();
}

PropertyResult winding_chi_sum(int cases)
{
    Rng rng(203);
    Tracker t("three times the winding is the chi sum", cases);
    for (int i = 0; i < cases; ++i) {
        const Word a = random_word(rng, 0, 20);
        const int s = chi_sum(a.letters());
        t.record(s % 3 == 0 && 3 * winding(a) == s);
    }
    return t.result();
}

PropertyResult u_appending(int cases)
{
    Rng rng(204);
    Tracker t("u_k under appending a letter", cases);
    for (int i = 0; i < cases; ++i) {
        const Word a = random_word(rng, 2, 16);
        const std::size_t n = a.size();
        const Word head = slice(a, 0, n - 1);
        for (Letter k = 1; k <= 3; ++k)
            t.record(u_count(k, a) == u_count(k, head) + v_count(k, a[n - 2], a[n - 1], a[0]));
    }
    return t.result();
}

PropertyResult reduce_straighten_to_power(int cases)
{
    Rng rng(205);
    Tracker t("reduce/straighten keeps the winding and ends at (1,2,3)^w", cases);
    for (int i = 0; i < cases; ++i) {
        const Word a = random_word(rng, 0, 16);
        const int w = winding(a);
        const ReductionResult red = reduce_straighten(a);
        bool ok = std::ranges::all_of(red.steps, [&](const ReductionStep& s) { return winding(s.after) == w; });
        ok = ok && red.result == CyclicWord(Word{1, 2, 3}.power(w));
        t.record(ok);
    }
    return t.result();
}

PropertyResult realize_round_trip(int cases)
{
    Rng rng(301);
    Tracker t("realization recovers (r1, r2, r3, alpha)", cases);
    for (int i = 0; i < cases; ++i) {
        const TriangleParams p = random_params(rng, 0.3, 1.3);
        const TriangleRealization tri = realize(p);
        const auto r = tri.radii();
        double dev = std::abs(wrap_pi(tri.angular_invariant() - p.alpha));
        for (int k = 0; k < 3; ++k)
            dev = std::max(dev, std::abs(r[k] - p.r[k]));
        t.record(dev, 1e-10);
    }
    return t.result();
}

PropertyResult vertex_triple_product(int cases)
{
    Rng rng(302);
    Tracker t("triple product of the vertices", cases);
    for (int i = 0; i < cases; ++i) {
        const TriangleParams p = random_params(rng, 0.3, 1.3);
        const TriangleRealization tri = realize(p);
        const auto& v = tri.vertices;
        const Complex lhs = herm(v[0], v[1]) * herm(v[1], v[2]) * herm(v[2], v[0]);
        const Complex e = std::polar(1.0, p.alpha);
        Complex rhs = std::conj(e);
        for (int k = 0; k < 3; ++k)
            rhs *= p.r[k] - p.r[(k + 2) % 3] * p.r[(k + 1) % 3] * e;
        t.record(rel(lhs, rhs), 1e-9);
    }
    return t.result();
}

PropertyResult triangle_conjugation_invariance(int cases)
{
    Rng rng(303);
    Tracker t("triangle invariants under an isometry", cases);
    for (int i = 0; i < cases; ++i) {
        const TriangleParams p = random_params(rng, 0.3, 0.95);
        const TriangleRealization tri = realize(p);
        const Mat21 u = random_isometry(rng);
        const TriangleRealization moved =
            realization_from_polars({u * tri.polar[0], u * tri.polar[1], u * tri.polar[2]});
        double dev = std::abs(wrap_pi(moved.angular_invariant() - tri.angular_invariant()));
        for (int k = 0; k < 3; ++k)
            dev = std::max(dev, std::abs(moved.radii()[k] - tri.radii()[k]));
        dev = std::max(dev, std::abs(wrap_pi(cartan_invariant(moved) - cartan_invariant(tri))));
        dev = std::max(dev, rel(brehm_sigma(moved), brehm_sigma(tri)));
        dev = std::max(dev, rel(hakim_sandler_eta(moved), hakim_sandler_eta(tri)));
        t.record(dev, 1e-9);
    }
    return t.result();
}

PropertyResult anti_holomorphic_conjugate(int cases)
{
    Rng rng(304);
    Tracker t("alpha and 2pi - alpha give conjugate triple products", cases);
    for (int i = 0; i < cases; ++i) {
        const TriangleParams p = random_params(rng, 0.3, 1.3);
        const TriangleParams q = p.with_alpha(2 * kPi - p.alpha);
        t.record(rel(polar_triple(realize(q)), std::conj(polar_triple(realize(p)))), 1e-10);
    }
    return t.result();
}

PropertyResult trace_cyclic_invariance(int cases)
{
    Rng rng(401);
    Tracker t("trace invariant under rotation of the word", cases);
    for (int i = 0; i < cases; ++i) {
        const TriangleParams p = random_params(rng);
        const TriangleRealization tri = realize(p);
        const Word a = random_word(rng, 1, 12);
        const auto k = std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng);
        t.record(rel(trace_oracle(a.rotated(k), tri).tau, trace_oracle(a, tri).tau), 1e-10);
    }
    return t.result();
}

PropertyResult classify_real_interval(int cases)
{
    Rng rng(501);
    Tracker t("real traces are elliptic exactly inside (-1, 3)", cases);
    for (int i = 0; i < cases;) {
        const double x = uniform(rng, -4, 7);
        if (std::abs(x + 1) < 1e-6 || std::abs(x - 3) < 1e-6)
            continue;
        const Verdict v = classify(x).verdict;
        t.record((x > -1 && x < 3) ? v == Verdict::RegularElliptic : v == Verdict::Hyperbolic);
        ++i;
    }
    return t.result();
}

PropertyResult classify_conjugation_invariance(int cases)
{
    Rng rng(502);
    Tracker t("classification invariant under conjugation", cases);
    for (int i = 0; i < cases;) {
        const TriangleRealization tri = realize(random_params(rng));
        const Mat21 m = word_matrix(random_word(rng, 1, 8), tri.reflections);
        const Mat21 u = random_isometry(rng);
        const Complex tau = m.trace();
        if (std::abs(discriminant(tau)) < 1e-6)
            continue;
        const Complex moved = (u * m * u.form_adjoint()).trace();
        t.record(classify(moved).verdict == classify(tau).verdict);
        ++i;
    }
    return t.result();
}

const std::vector<NamedProperty>& all_properties()
{
    static const std::vector<NamedProperty> props = {
        {"herm_sesquilinear", herm_sesquilinear},
        {"cross_orthogonal", cross_orthogonal},
        {"cross_pairing", cross_pairing},
        {"cross_norm", cross_norm},
        {"polar_intersection_negative", polar_intersection_negative},
        {"winding_splitting", winding_splitting},
        {"winding_appending", winding_appending},
        {"winding_chi_sum", winding_chi_sum},
        {"u_appending", u_appending},
        {"reduce_straighten_to_power", reduce_straighten_to_power},
        {"realize_round_trip", realize_round_trip},
        {"vertex_triple_product", vertex_triple_product},
        {"triangle_conjugation_invariance", triangle_conjugation_invariance},
        {"anti_holomorphic_conjugate", anti_holomorphic_conjugate},
        {"trace_cyclic_invariance", trace_cyclic_invariance},
        {"classify_real_interval", classify_real_interval},
        {"classify_conjugation_invariance", classify_conjugation_invariance},
    };
    return props;
}

} // namespace chtg::testing

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chtg/errors.hpp"
#include "chtg/traces.hpp"
#include "support.hpp"

using namespace chtg;

namespace {

constexpr double kPi = std::numbers::pi;

struct Fixture {
    const char* word;
    std::array<double, 3> r;
    double alpha;
    Complex tau;
};

// Frozen from an independent realization (eigen-decomposition of the Gram
// matrix, numpy) rather than from this library.
const Fixture kFixtures[] = {
    {"1213", {0.7, 0.8, 0.9}, 1.0, {4.8974022054793185, 0.0}},
    {"12323", {0.7, 0.8, 0.9}, 1.0, {-4.099742161369729, -0.13571244042982}},
    {"123123", {0.6, 0.75, 0.95}, 2.5, {59.4508847368594, -24.724675122884424}},
    {"3231", {0.7071067811865476, 0.7071067811865476, 1.0}, 0.9272952180016122, {2.2, 0.0}},
    {"13231312", {1.1, 0.9, 1.2}, 0.4, {18.305285774690738, 8.040390545644101}},
};

TriangleParams params_of(const Fixture& f)
{
    return from_radii(f.r[0], f.r[1], f.r[2]).with_alpha(f.alpha);
}

} // namespace

TEST_CASE("frozen trace fixtures by all three methods")
{
    for (const auto& f : kFixtures) {
        CAPTURE(f.word);
        const Word a = Word::parse(f.word);
        const TriangleParams p = params_of(f);
        CHECK(std::abs(trace_oracle(a, realize(p)).tau - f.tau) < 1e-10);
        CHECK(std::abs(trace_combinatorial(a, p).tau - f.tau) < 1e-10);
        CHECK(std::abs(trace_recursive(a, p).tau - f.tau) < 1e-10);
        CHECK(std::abs(trace_polynomial_exact(a).trace(p) - f.tau) < 1e-10);
    }
}

TEST_CASE("base cases")
{
    testing::Rng rng(31);
    const TriangleParams p = testing::random_params(rng);
    const TriangleRealization tri = realize(p);
    CHECK(trace_oracle(Word{}, tri).tau == Complex(3));
    CHECK(trace_combinatorial(Word{}, p).tau == Complex(3));
    CHECK(trace_recursive(Word{}, p).tau == Complex(3));
    for (int k = 1; k <= 3; ++k) {
        CHECK(std::abs(trace_combinatorial(Word{k}, p).tau + 1.0) < 1e-15);
        CHECK(std::abs(trace_recursive(Word{k, k}, p).tau - 3.0) < 1e-15);
    }
    // Subsets of (1,2): 1 - 2 - 2 + 4 r3^2, plus 2.
    CHECK(std::abs(trace_combinatorial(Word{1, 2}, p).tau - (4 * p.r[2] * p.r[2] - 1)) < 1e-14);
}

TEST_CASE("tau_231 equals tau_123")
{
    testing::Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const TriangleParams p = testing::random_params(rng);
        const TriangleRealization tri = realize(p);
        const Complex t = tau_123(p);
        for (const Word& a : {Word{1, 2, 3}, Word{2, 3, 1}, Word{3, 1, 2}})
            CHECK(std::abs(trace_oracle(a, tri).tau - t) < 1e-10);
        CHECK(std::abs(trace_oracle(Word{2, 3, 2, 1}, tri).tau - tau_2321(p)) < 1e-10);
    }
}

TEST_CASE("three routes to sigma_3 across a parameter sweep")
{
    const TriangleParams base = from_radii(0.6, 0.8, 0.9);
    for (int j = 1; j < 40; ++j) {
        const TriangleParams p = base.with_alpha(2 * kPi * j / 40);
        if (!satisfies_existence(p))
            continue;
        const Word s = sigma_word(3);
        const double closed = sigma_closed_form(3, p);
        CHECK(std::abs(trace_oracle(s, realize(p)).tau - closed) < 1e-9);
        CHECK(std::abs(trace_recursive(s, p).tau - closed) < 1e-9);
    }
    CHECK(sigma_word(1).str() == "1312");
    CHECK(sigma_word(3).str() == "3231");
}

TEST_CASE("exact polynomial of (1,2,3)")
{
    const ExactTracePolynomial poly = trace_polynomial_exact(Word{1, 2, 3});
    REQUIRE(poly.coeffs.size() == 2);
    CHECK(poly.coeffs.at(1).str() == "-1");
    CHECK(poly.coeffs.at(0).str() == "X1 + X2 + X3 - 5");
    CHECK(poly.ideal_checksum() == -1);
}

TEST_CASE("sigma difference identity holds exactly")
{
    for (Letter k = 1; k <= 3; ++k) {
        const Letter up = next_letter(k), down = prev_letter(k);
        const ExactTracePolynomial a = trace_polynomial_exact(sigma_word(k));
        const ExactTracePolynomial b = trace_polynomial_exact(sigma_word(up));
        const auto X = [](Letter m) {
            IntPoly::Exponents e{};
            e[m - 1] = 1;
            return IntPoly::monomial(1, e);
        };
        const IntPoly expected = (X(k) - X(up)) * (IntPoly::constant(1) - X(down));
        for (int w = -2; w <= 2; ++w) {
            const IntPoly pa = a.coeffs.contains(w) ? a.coeffs.at(w) : IntPoly{};
            const IntPoly pb = b.coeffs.contains(w) ? b.coeffs.at(w) : IntPoly{};
            CHECK((pa - pb) == (w == 0 ? expected : IntPoly{}));
        }
    }
}

TEST_CASE("sigma ordering in its regime")
{
    testing::Rng rng(33);
    for (int i = 0; i < 500; ++i) {
        std::array<double, 3> r{testing::uniform(rng, 0.5, 1.2), testing::uniform(rng, 0.5, 1.2),
                                testing::uniform(rng, 0.5, 1.2)};
        std::ranges::sort(r);
        const TriangleParams p = from_radii(r[0], r[1], r[2]).with_alpha(testing::uniform(rng, 0, 2 * kPi));
        CHECK(sigma_closed_form(1, p) >= sigma_closed_form(2, p) - 1e-12);
        CHECK(sigma_closed_form(2, p) >= sigma_closed_form(3, p) - 1e-12);
    }
}

TEST_CASE("subset census covers every subset")
{
    testing::Rng rng(34);
    for (int i = 0; i < 30; ++i) {
        const Word a = testing::random_word(rng, 0, 12);
        std::int64_t total = 0;
        for (const auto& [shape, count] : subset_census(a)) {
            total += count;
            CHECK(shape.size() <= static_cast<int>(a.size()));
        }
        CHECK(total == (std::int64_t{1} << a.size()));
    }
}

TEST_CASE("caps and unsupported inputs")
{
    const TriangleParams p = from_radii(0.7, 0.8, 0.9).with_alpha(1.0);
    CHECK_THROWS_AS(trace_combinatorial(Word{1, 2, 3}.power(7), p), CapExceeded);
    CHECK_THROWS_AS(trace_polynomial_exact(Word{1, 2, 3}.power(6)), CapExceeded);
    CHECK_THROWS_AS(trace_recursive(Word{1, 2}, from_radii(0, 0.8, 0.9)), ZeroRadiusUnsupported);
}

TEST_CASE("recursive evaluator memoizes")
{
    const TriangleParams p = from_radii(0.7, 0.8, 0.9).with_alpha(1.0);
    RecursiveTraceEvaluator eval(p);
    const Complex first = eval(Word{1, 2, 3, 1, 3, 2, 1, 2});
    const std::size_t size = eval.memo_size();
    CHECK(size > 0);
    CHECK(eval(Word{2, 3, 1, 3, 2, 1, 2, 1}) == first);
    CHECK(eval.memo_size() == size);
}

TEST_CASE("mu-reflection traces")
{
    testing::Rng rng(35);
    for (int i = 0; i < 100; ++i) {
        const TriangleParams p = testing::random_params(rng);
        const TriangleRealization tri = realize(p);
        const MuTriple mu{testing::random_phase(rng), testing::random_phase(rng), testing::random_phase(rng)};
        const Word a = testing::random_word(rng, 0, 10);
        const Complex direct = trace_mu(a, tri, mu);
        CHECK(std::abs(direct - trace_mu_gram(a, p, mu)) < 1e-9);
        CHECK(std::abs(direct - trace_mu_combinatorial(a, p, mu)) < 1e-9);
    }
    const TriangleParams p = from_radii(0.7, 0.8, 0.9).with_alpha(1.0);
    const MuTriple mu{Complex(0, 1), Complex(0, 1), Complex(0, 1)};
    CHECK(std::abs(trace_mu(Word{1}, realize(p), mu) - Complex(2, 1)) < 1e-12);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chtg/arithmetic.hpp"
#include "chtg/classify.hpp"
#include "chtg/errors.hpp"
#include "support.hpp"

using namespace chtg;

namespace {

constexpr double kPi = std::numbers::pi;

Order ord(int p)
{
    return p ? Order::finite(p) : Order::infinite();
}

} // namespace

TEST_CASE("G(p1,p2,p3;n) fixes alpha")
{
    const GroupWithRotation g = group_with_rotation(ord(4), ord(4), ord(4), ord(7));
    CHECK(g.cos_alpha == doctest::Approx(std::pow(2.0, -1.5) * (2 - std::cos(2 * kPi / 7))));
    CHECK(std::cos(g.params.alpha) == doctest::Approx(g.cos_alpha));
    CHECK(g.params.rotation_order == ord(7));
    CHECK_THROWS_AS(group_with_rotation(ord(3), ord(3), ord(4), ord(5)), ExistenceViolation);

    for (const auto& [p, n] : {std::pair{std::array{4, 4, 0}, 0}, {std::array{3, 4, 0}, 0}, {std::array{4, 4, 4}, 7},
                               {std::array{3, 3, 4}, 7}, {std::array{6, 6, 0}, 4}}) {
        const GroupWithRotation h = group_with_rotation(ord(p[0]), ord(p[1]), ord(p[2]), ord(n));
        const double expected = 1 + 2 * (n ? std::cos(2 * kPi / n) : 1.0);
        CHECK(sigma_closed_form(3, h.params) == doctest::Approx(expected).epsilon(1e-12));
        const Complex tau = trace_oracle(Word{3, 1, 3, 2}, realize(h.params)).tau;
        CHECK(std::abs(tau - expected) < 1e-9);
        if (n == 0)
            CHECK(classify(tau).verdict == Verdict::Unipotent);
        else
            CHECK(classify(tau).verdict == Verdict::RegularElliptic);
    }
}

TEST_CASE("integer ring check")
{
    const GroupWithRotation g = group_with_rotation(ord(4), ord(4), ord(0), ord(0));
    const IntegerRingVerdict v = integer_ring_check(tau_123(g.params), 1e-8);
    CHECK(v.passed);
    CHECK(v.residual_two_re < 1e-8);
    CHECK(v.residual_abs2 < 1e-8);

    const IntegerRingSweep sweep = integer_ring_sweep(group_with_rotation(ord(6), ord(6), ord(0), ord(4)), 10);
    CHECK(sweep.words > 100);
    CHECK(sweep.failures == 0);
    CHECK(sweep.max_residual < 1e-7);

    GroupWithRotation generic = g;
    generic.params = g.params.with_alpha(1.0);
    CHECK(integer_ring_sweep(generic, 4).failures > 0);
    CHECK_FALSE(integer_ring_check(Complex(0.3, 0.1)).passed);
}

TEST_CASE("embeddings of Q(2cos(2pi/q))")
{
    CHECK(embedding_indices(3) == std::vector<int>{1});
    CHECK(embedding_indices(5) == std::vector<int>{1, 2});
    CHECK(embedding_indices(7) == std::vector<int>{1, 2, 3});
    CHECK(embedding_indices(12) == std::vector<int>{1, 5});
}

TEST_CASE("basis ring check")
{
    const GroupWithRotation g = group_with_rotation(ord(4), ord(4), ord(4), ord(7));
    const ConjugateQuantities cq = conjugate_ring_quantities(Word{3, 1, 3, 2}, g, 7);
    REQUIRE(cq.two_re.size() == 3);
    const BasisVerdict re = basis_ring_check(cq.two_re, 7);
    CHECK(re.passed);
    CHECK(re.experimental);
    CHECK(re.coeffs == std::vector<std::int64_t>{2, 2, 0});
    CHECK(cq.two_re[0] == doctest::Approx(2 + 4 * std::cos(2 * kPi / 7)));

    const double one[] = {5.0};
    const BasisVerdict q3 = basis_ring_check(one, 3);
    CHECK(q3.passed);
    CHECK(q3.coeffs == std::vector<std::int64_t>{5});

    testing::Rng rng(51);
    const double random[] = {testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5), testing::uniform(rng, -5, 5)};
    CHECK_FALSE(basis_ring_check(random, 7).passed);

    const std::vector<double> many(48, 1.0);
    CHECK_THROWS_AS(basis_ring_check(many, 97), IllConditionedBasis);
    CHECK_THROWS_AS(conjugate_ring_quantities(Word{1, 2}, g, 5), InvalidArgument);
}

TEST_CASE("basis ring check on every short word of G(4,4,4;7)")
{
    const GroupWithRotation g = group_with_rotation(ord(4), ord(4), ord(4), ord(7));
    for_each_word(1, 6, true, [&](const Word& a) {
        const ConjugateQuantities cq = conjugate_ring_quantities(a, g, 7);
        CHECK(basis_ring_check(cq.two_re, 7).passed);
        CHECK(basis_ring_check(cq.abs2, 7).passed);
        CHECK(cq.two_re[0] == doctest::Approx(2 * trace_oracle(a, realize(g.params)).tau.real()).epsilon(1e-9));
    });
}

TEST_CASE("Mostow groups")
{
    for (int p = 3; p <= 5; ++p) {
        const MostowGroup g = mostow_group(p, 4);
        CHECK(mostow_identity_residual(g) < 1e-12);
        CHECK(g.r == doctest::Approx(1 / (2 * std::sin(kPi / p))));
        CHECK(std::abs(mostow_trace(Word{}, g) - 3.0) < 1e-15);
    }
    CHECK_THROWS_AS(mostow_group(6, 4), InvalidArgument);
    CHECK_THROWS_AS(mostow_group(3, 0), InvalidArgument);

    const MostowGroup g = mostow_group(3, 5);
    const MuTriple mu{g.mu, g.mu, g.mu};
    CHECK(std::abs(mostow_trace(Word{1, 2, 3}, g) - trace_mu_combinatorial(Word{1, 2, 3}, g.params, mu)) < 1e-9);
}

TEST_CASE("Mostow trace field check")
{
    for (const auto& [p, rho] : {std::pair{3, 4}, {3, 5}, {4, 6}, {5, 3}}) {
        const MostowGroup g = mostow_group(p, rho);
        for_each_word(1, 6, true, [&](const Word& a) {
            const MostowFieldVerdict v = mostow_trace_field_check(a, g);
            CHECK(v.passed);
            CHECK(v.exact.order % p == 0);
            CHECK(v.exact.order % rho == 0);
        });
        CHECK(mostow_coefficient_echo(Word{1, 2, 3, 2, 1, 3}, g) < 1e-9);
    }
    CHECK_THROWS_AS(mostow_trace_field_check(Word{1, 2}, mostow_group(3, 4.5)), InvalidArgument);
}

#include "chtg/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "chtg/errors.hpp"

namespace chtg {

namespace {

constexpr double kPi = std::numbers::pi;

double two_cos(int j, int m)
{
    return 2.0 * std::cos(2.0 * kPi * j / m);
}

bool has_rational_cosine(int m)
{
    return m == 1 || m == 2 || m == 3 || m == 4 || m == 6;
}

// (8R)^m cos(m alpha) from C = 8R cos(alpha) and P = 64 R^2, m = 0..max.
std::vector<double> chebyshev_scaled(double C, double P, int max)
{
    std::vector<double> a(static_cast<std::size_t>(max + 1));
    a[0] = 1.0;
    if (max >= 1)
        a[1] = C;
    for (int m = 1; m < max; ++m)
        a[static_cast<std::size_t>(m + 1)] = 2.0 * C * a[static_cast<std::size_t>(m)]
                                           - P * a[static_cast<std::size_t>(m - 1)];
    return a;
}

int rounded_int(double rho)
{
    const double r = std::round(rho);
    if (std::abs(rho - r) > 1e-12 || r < 1)
        throw InvalidArgument("the field check needs a positive integer rho");
    return static_cast<int>(r);
}

} // namespace

GroupWithRotation group_with_rotation(Order p1, Order p2, Order p3, Order n)
{
    GroupWithRotation g;
    g.params = from_signature(p1, p2, p3);
    g.params.rotation_order = n;
    g.n = n;
    const auto& r = g.params.r;
    const double R = g.params.product();
    if (R == 0.0)
        throw ExistenceViolation("G(p1,p2,p3;n) needs every p_k > 2");
    g.cos_alpha = ((8 * r[0] * r[0] * r[1] * r[1] + 2 * r[2] * r[2] - 1) - n.cos_two_pi_over()) / (8 * R);
    if (!(g.cos_alpha >= -1.0 && g.cos_alpha <= 1.0))
        throw ExistenceViolation("induced cos(alpha) = " + std::to_string(g.cos_alpha) + " is outside [-1, 1]");
    g.params = g.params.with_cos_alpha(g.cos_alpha);
    if (!satisfies_existence(g.params))
        throw ExistenceViolation("induced alpha violates the existence bound");
    return g;
}

IntegerRingVerdict integer_ring_check(Complex tau, double tol)
{
    IntegerRingVerdict v;
    v.two_re = 2.0 * tau.real();
    v.abs2 = std::norm(tau);
    v.residual_two_re = std::abs(v.two_re - std::round(v.two_re));
    v.residual_abs2 = std::abs(v.abs2 - std::round(v.abs2));
    v.passed = v.residual_two_re < tol && v.residual_abs2 < tol;
    return v;
}

IntegerRingSweep integer_ring_sweep(const GroupWithRotation& g, std::size_t max_len, double tol)
{
    const TriangleRealization tri = realize(g.params);
    IntegerRingSweep sweep;
    for_each_word(1, max_len, true, [&](const Word& w) {
        const IntegerRingVerdict v = integer_ring_check(trace_oracle(w, tri).tau, tol);
        ++sweep.words;
        if (!v.passed)
            ++sweep.failures;
        sweep.max_residual = std::max({sweep.max_residual, v.residual_two_re, v.residual_abs2});
    });
    return sweep;
}

std::vector<int> embedding_indices(int q)
{
    if (q < 3)
        throw InvalidArgument("embedding_indices needs q >= 3");
    std::vector<int> out;
    for (int j = 1; 2 * j < q; ++j)
        if (std::gcd(j, q) == 1)
            out.push_back(j);
    return out;
}

BasisVerdict basis_ring_check(std::span<const double> conjugates, int q, double tol)
{
    const std::vector<int> idx = embedding_indices(q);
    const auto d = static_cast<Eigen::Index>(idx.size());
    if (conjugates.size() != idx.size())
        throw InvalidArgument("basis_ring_check: expected " + std::to_string(idx.size()) + " conjugates");

    Eigen::MatrixXd V(d, d);
    Eigen::VectorXd b(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double theta = two_cos(idx[static_cast<std::size_t>(i)], q);
        double pw = 1.0;
        for (Eigen::Index k = 0; k < d; ++k, pw *= theta)
            V(i, k) = pw;
        b(i) = conjugates[static_cast<std::size_t>(i)];
    }

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    BasisVerdict v;
    v.condition = sv(0) / sv(d - 1);
    if (!(v.condition <= 1e12))
        throw IllConditionedBasis("basis condition number " + std::to_string(v.condition));

    const Eigen::VectorXd c = svd.solve(b);
    Eigen::VectorXd ci(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        ci(k) = std::round(c(k));
        v.coeffs.push_back(static_cast<std::int64_t>(ci(k)));
    }
    v.residual = (V * ci - b).cwiseAbs().maxCoeff();
    v.passed = v.residual <= tol;
    return v;
}

ConjugateQuantities conjugate_ring_quantities(const Word& a, const GroupWithRotation& g, int q)
{
    if (!g.params.signature)
        throw InvalidArgument("conjugate_ring_quantities needs a signature");
    const ExactTracePolynomial poly = trace_polynomial_exact(a);
    const double sign = a.size() % 2 ? -1.0 : 1.0;
    int wmax = 0;
    for (const auto& [w, P] : poly.coeffs)
        wmax = std::max(wmax, std::abs(w));

    ConjugateQuantities out;
    for (int j : embedding_indices(q)) {
        const auto conj_two_cos = [&](const Order& m) {
            if (m.is_infinite())
                return 2.0;
            const int v = m.value();
            if (has_rational_cosine(v))
                return two_cos(1, v);
            if (v == q)
                return two_cos(j, q);
            throw InvalidArgument("order " + std::to_string(v) + " is neither rational nor q = "
                                  + std::to_string(q));
        };
        const auto& sig = *g.params.signature;
        const std::array<double, 3> x{2.0 + conj_two_cos(sig[0]), 2.0 + conj_two_cos(sig[1]),
                                      2.0 + conj_two_cos(sig[2])};
        const double P = x[0] * x[1] * x[2];
        const double C = x[0] * x[1] / 2 + x[2] / 2 - 1 - conj_two_cos(g.n) / 2;
        const auto A = chebyshev_scaled(C, P, 2 * wmax);

        std::map<int, double> pw;
        for (const auto& [w, Pw] : poly.coeffs)
            pw[w] = Pw.evaluate(x);

        double re_sum = 0.0;
        for (const auto& [w, v] : pw)
            re_sum += v * A[static_cast<std::size_t>(std::abs(w))];
        double abs2 = 4.0 + 4.0 * re_sum;
        for (const auto& [w1, v1] : pw) {
            for (const auto& [w2, v2] : pw) {
                const int d = std::abs(w1 - w2);
                const int excess = (std::abs(w1) + std::abs(w2) - d) / 2;
                abs2 += v1 * v2 * A[static_cast<std::size_t>(d)] * std::pow(P, excess);
            }
        }
        out.two_re.push_back(sign * (4.0 + 2.0 * re_sum));
        out.abs2.push_back(abs2);
    }
    return out;
}

MostowGroup mostow_group(int p, double rho)
{
    if (p < 3 || p > 5)
        throw InvalidArgument("Mostow groups are defined here for p in {3,4,5}");
    if (!(rho > 0))
        throw InvalidArgument("rho must be positive");
    MostowGroup g;
    g.p = p;
    g.rho = rho;
    g.mu = std::polar(1.0, 2 * kPi / p);
    g.r = 1.0 / (2.0 * std::sin(kPi / p));
    g.alpha = wrap_two_pi(2 * kPi / rho + kPi / p - kPi / 2);
    g.params = from_radii(g.r, g.r, g.r).with_alpha(g.alpha);
    g.realizable = satisfies_existence(g.params);
    return g;
}

double mostow_identity_residual(const MostowGroup& g)
{
    return std::abs((g.mu - 1.0) * g.r - Complex(0, 1) * std::polar(1.0, kPi / g.p));
}

Complex mostow_trace(const Word& a, const MostowGroup& g)
{
    return trace_mu_gram(a, g.params, {g.mu, g.mu, g.mu});
}

Complex CyclotomicInteger::evaluate() const
{
    std::complex<long double> s = 0;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0)
            s += static_cast<long double>(coeffs[e])
               * std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * e / order);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

namespace {

// Terms of Z[x]/(x^L - 1).
class CyclotomicAccumulator {
public:
    explicit CyclotomicAccumulator(int order) : order_(order), c_(static_cast<std::size_t>(order), 0) {}

    // Adds c * x^e * (x^m - 1)^k.
    void add(std::int64_t c, long e, int m, int k)
    {
        // Binomial expansion of (x^m - 1)^k.
        std::int64_t binom = 1;
        for (int i = 0; i <= k; ++i) {
            const std::int64_t sgn = (k - i) % 2 ? -1 : 1;
            c_[index(e + static_cast<long>(m) * i)] += c * sgn * binom;
            binom = binom * (k - i) / (i + 1);
        }
    }

    CyclotomicInteger result() const { return {order_, c_}; }

private:
    std::size_t index(long e) const
    {
        const long r = ((e % order_) + order_) % order_;
        return static_cast<std::size_t>(r);
    }

    int order_;
    std::vector<std::int64_t> c_;
};

} // namespace

MostowFieldVerdict mostow_trace_field_check(const Word& a, const MostowGroup& g, double tol)
{
    // With eps = (mu - 1) r = i e^{i pi/p}, eps^2 = -mu, a subset of shape
    // (w, red, s) contributes (mu - 1)^red eps^{3|w| + 2s} e^{i alpha w}, and
    // eps^3 e^{i alpha} = -mu^2 zeta, eps^3 e^{-i alpha} = mu / zeta with
    // zeta = e^{2 pi i / rho}.
    const int rho = rounded_int(g.rho);
    const int L = std::lcm(g.p, rho);
    const int mu_e = L / g.p;
    const int zeta_e = L / rho;

    CyclotomicAccumulator acc(L);
    acc.add(2, 0, mu_e, 0);
    for (const auto& [shape, count] : subset_census(a)) {
        const int s = shape.straightenings[0] + shape.straightenings[1] + shape.straightenings[2];
        const int w = shape.winding;
        std::int64_t sign = s % 2 ? -1 : 1;
        long e = static_cast<long>(mu_e) * s;
        if (w >= 0) {
            if (w % 2)
                sign = -sign;
            e += static_cast<long>(2 * mu_e + zeta_e) * w;
        } else {
            e += static_cast<long>(mu_e - zeta_e) * (-w);
        }
        acc.add(sign * count, e, mu_e, shape.reductions);
    }

    MostowFieldVerdict v;
    v.exact = acc.result();
    v.tau = mostow_trace(a, g);
    v.residual = std::abs(v.exact.evaluate() - v.tau);
    v.passed = v.residual <= tol;
    return v;
}

double mostow_coefficient_echo(const Word& a, const MostowGroup& g)
{
    // q_w from the matrix trace by a discrete Fourier transform in alpha.
    const int wmax = static_cast<int>(a.size() / 3);
    const int N = 2 * wmax + 3;
    const MuTriple mu{g.mu, g.mu, g.mu};
    std::vector<Complex> samples;
    for (int j = 0; j < N; ++j)
        samples.push_back(trace_mu_gram(a, g.params.with_alpha(2 * kPi * j / N), mu) - 2.0);

    // Exact q_w / eps^{3|w|} = sum over shapes of (mu - 1)^red (-mu)^s.
    std::map<int, Complex> exact;
    for (const auto& [shape, count] : subset_census(a)) {
        const int s = shape.straightenings[0] + shape.straightenings[1] + shape.straightenings[2];
        exact[shape.winding] += static_cast<double>(count) * std::pow(g.mu - 1.0, shape.reductions)
                              * std::pow(-g.mu, s);
    }

    const Complex eps = (g.mu - 1.0) * g.r;
    double worst = 0.0;
    for (int w = -wmax; w <= wmax; ++w) {
        Complex qw = 0;
        for (int j = 0; j < N; ++j)
            qw += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -2 * kPi * j * w / N);
        qw /= static_cast<double>(N);
        const Complex reduced = qw / std::pow(eps, 3 * std::abs(w));
        const auto it = exact.find(w);
        worst = std::max(worst, std::abs(reduced - (it == exact.end() ? Complex{} : it->second)));
    }
    return worst;
}

} // namespace chtg

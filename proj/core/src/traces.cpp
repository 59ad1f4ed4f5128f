#include "chtg/traces.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "chtg/errors.hpp"

namespace chtg {

namespace {

using LComplex = std::complex<long double>;

struct SubsetStats {
    std::uint32_t mask = 0;
    int size = 0;
    int chi_sum = 0;
    std::array<int, 3> u{};
    std::array<int, 3> count{};

    int winding() const { return chi_sum / 3; }
};

void check_cap(const Word& a, std::size_t cap)
{
    if (a.size() > cap)
        throw CapExceeded("word of length " + std::to_string(a.size()) + " exceeds the cap "
                          + std::to_string(cap));
}

// Visits every subset S of the positions of a together with the counters of
// the subsequence a|_S read as a cyclic word.
template <class F>
void for_each_subset(std::span<const Letter> a, F&& f)
{
    const std::size_t n = a.size();
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        SubsetStats st;
        st.mask = mask;
        Letter first = 0, prev = 0;
        auto link = [&st](Letter x, Letter y) {
            if (x == y)
                return;
            st.chi_sum += chi(int(y) - int(x));
            ++st.u[third_letter(x, y) - 1];
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1u))
                continue;
            const Letter l = a[i];
            if (st.size == 0)
                first = l;
            else
                link(prev, l);
            prev = l;
            ++st.count[l - 1];
            ++st.size;
        }
        if (st.size > 1)
            link(prev, first);
        f(st);
    }
}

std::vector<std::vector<long double>> power_table(const std::array<double, 3>& base, std::size_t n)
{
    std::vector<std::vector<long double>> t(3, std::vector<long double>(n + 1, 1.0L));
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 1; j <= n; ++j)
            t[k][j] = t[k][j - 1] * base[k];
    return t;
}

} // namespace

std::string_view to_string(TraceMethod m)
{
    switch (m) {
    case TraceMethod::Oracle: return "oracle";
    case TraceMethod::Combinatorial: return "combinatorial";
    case TraceMethod::Recursive: return "recursive";
    case TraceMethod::ClosedForm: return "closed-form";
    }
    return "unknown";
}

Mat21 word_matrix(const Word& a, const std::array<Mat21, 3>& generators)
{
    Mat21 m = Mat21::identity();
    for (Letter l : a)
        m = m * generators[l - 1];
    return m;
}

TraceValue trace_oracle(const Word& a, const TriangleRealization& tri)
{
    return {word_matrix(a, tri.reflections).trace(), TraceMethod::Oracle};
}

NumericTracePolynomial trace_polynomial(const Word& a, const std::array<double, 3>& r, std::size_t cap)
{
    check_cap(a, cap);
    const std::size_t n = a.size();
    const int wmax = static_cast<int>(n / 3);
    const auto rp = power_table(r, n);
    std::vector<long double> q(static_cast<std::size_t>(2 * wmax + 1), 0.0L);

    for_each_subset(a.letters(), [&](const SubsetStats& st) {
        long double term = (st.size % 2 ? -1.0L : 1.0L) * std::ldexp(1.0L, st.size);
        for (std::size_t k = 0; k < 3; ++k)
            term *= rp[k][static_cast<std::size_t>(st.u[k])];
        q[static_cast<std::size_t>(st.winding() + wmax)] += term;
    });

    NumericTracePolynomial out;
    out.length = n;
    for (int w = -wmax; w <= wmax; ++w) {
        const long double v = q[static_cast<std::size_t>(w + wmax)];
        if (v != 0.0L)
            out.coeffs[w] = Complex(static_cast<double>(v), 0.0);
    }
    return out;
}

Complex NumericTracePolynomial::fourier(double alpha) const
{
    LComplex s = 0;
    for (const auto& [w, q] : coeffs)
        s += LComplex(q.real(), q.imag()) * std::polar(1.0L, static_cast<long double>(alpha) * w);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

Complex NumericTracePolynomial::trace(double alpha) const
{
    const double sign = length % 2 ? -1.0 : 1.0;
    return sign * (2.0 + fourier(alpha));
}

TraceValue trace_combinatorial(const Word& a, const TriangleParams& p, std::size_t cap)
{
    return {trace_polynomial(a, p.r, cap).trace(p.alpha), TraceMethod::Combinatorial};
}

int SubsetShape::size() const
{
    return 3 * std::abs(winding) + reductions + 2 * (straightenings[0] + straightenings[1] + straightenings[2]);
}

std::map<SubsetShape, std::int64_t> subset_census(const Word& a, std::size_t cap)
{
    check_cap(a, cap);
    const auto letters = a.letters();
    const std::size_t n = letters.size();
    std::vector<Letter> sub;
    sub.reserve(n);
    std::map<SubsetShape, std::int64_t> census;

    for_each_subset(letters, [&](const SubsetStats& st) {
        sub.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (st.mask >> i & 1u)
                sub.push_back(letters[i]);

        const ReductionTally tally = tally_reductions(sub);
        const SubsetShape shape{st.winding(), tally.reductions, tally.straightenings};
        const int aw = std::abs(shape.winding);
        for (std::size_t k = 0; k < 3; ++k)
            if (st.u[k] != aw + 2 * tally.straightenings[k])
                throw std::logic_error("adjacency count does not match the straightenings of "
                                       + Word(sub).str());
        if (st.size != shape.size() || tally.final_length != static_cast<std::size_t>(3 * aw))
            throw std::logic_error("subset length does not match the moves of " + Word(sub).str());
        ++census[shape];
    });
    return census;
}

ExactTracePolynomial trace_polynomial_exact(const Word& a, std::size_t cap)
{
    ExactTracePolynomial out;
    out.length = a.size();
    for (const auto& [shape, count] : subset_census(a, cap)) {
        const std::int64_t sign = shape.size() % 2 ? -1 : 1;
        out.coeffs[shape.winding].add_term(sign * count * (std::int64_t{1} << shape.reductions),
                                           shape.straightenings);
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

NumericTracePolynomial ExactTracePolynomial::substitute(const std::array<double, 3>& r) const
{
    const std::array<double, 3> x{4 * r[0] * r[0], 4 * r[1] * r[1], 4 * r[2] * r[2]};
    const double scale = 8 * r[0] * r[1] * r[2];
    NumericTracePolynomial out;
    out.length = length;
    for (const auto& [w, poly] : coeffs)
        out.coeffs[w] = std::pow(scale, std::abs(w)) * poly.evaluate(x);
    return out;
}

Complex ExactTracePolynomial::trace(const TriangleParams& p) const
{
    return substitute(p.r).trace(p.alpha);
}

std::int64_t ExactTracePolynomial::ideal_checksum() const
{
    std::int64_t s = 0;
    for (const auto& [w, poly] : coeffs) {
        std::int64_t scale = 1;
        for (int j = 0; j < std::abs(w); ++j)
            scale *= 8;
        s += scale * poly.evaluate_exact({4, 4, 4});
    }
    return s;
}

RecursiveTraceEvaluator::RecursiveTraceEvaluator(const TriangleParams& p) : r_(p.r), alpha_(p.alpha)
{
    for (double rk : r_)
        if (rk == 0.0)
            throw ZeroRadiusUnsupported("the recursive formula needs every r_k > 0");
}

Complex RecursiveTraceEvaluator::operator()(const Word& a)
{
    const Word start = min_rotation(a);
    return eval(std::vector<Letter>(start.begin(), start.end()));
}

Complex RecursiveTraceEvaluator::eval(std::vector<Letter> a)
{
    // The generators are involutions: cancel adjacent repeats, then equal
    // letters at both ends (conjugation).
    std::vector<Letter> red;
    red.reserve(a.size());
    for (Letter l : a) {
        if (!red.empty() && red.back() == l)
            red.pop_back();
        else
            red.push_back(l);
    }
    std::size_t lo = 0, hi = red.size();
    while (hi - lo >= 2 && red[lo] == red[hi - 1]) {
        ++lo;
        --hi;
    }
    a.assign(red.begin() + static_cast<std::ptrdiff_t>(lo), red.begin() + static_cast<std::ptrdiff_t>(hi));

    const std::size_t n = a.size();
    if (n == 0)
        return 3.0;
    if (n == 1)
        return -1.0;
    if (n == 2) {
        const double rm = r_[third_letter(a[0], a[1]) - 1];
        return 4 * rm * rm - 1;
    }

    std::string key(a.begin(), a.end());
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const Letter t0 = a[n - 3], t1 = a[n - 2], t2 = a[n - 1];
    const std::array<Letter, 3> tail{t0, t1, t2};
    double mag = 2.0;
    for (Letter k = 1; k <= 3; ++k)
        mag *= std::pow(r_[k - 1], v_count(k, t0, t1, t2));
    const Complex beta = mag * std::polar(1.0, alpha_ * winding(tail)) - 1.0;

    // Drops the positions n-3+i for each i in {0,1,2} set in `drop`.
    auto without = [&](unsigned drop) {
        std::vector<Letter> out(a.begin(), a.end() - 3);
        for (unsigned i = 0; i < 3; ++i)
            if (!(drop >> i & 1u))
                out.push_back(tail[i]);
        return out;
    };
    constexpr unsigned kLast = 4, kPen = 2, kAnte = 1;

    const Complex value = -(eval(without(kLast)) + eval(without(kAnte)) + eval(without(kAnte | kLast)))
                        + beta * (eval(without(kPen)) + eval(without(kPen | kLast))
                                  + eval(without(kAnte | kPen)) + eval(without(kAnte | kPen | kLast)));
    memo_.emplace(std::move(key), value);
    return value;
}

TraceValue trace_recursive(const Word& a, const TriangleParams& p)
{
    RecursiveTraceEvaluator eval(p);
    return {eval(a), TraceMethod::Recursive};
}

Complex tau_123(const TriangleParams& p)
{
    const auto& r = p.r;
    return 8 * p.product() * std::polar(1.0, p.alpha)
         - (4 * (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]) - 3);
}

double tau_2321(const TriangleParams& p)
{
    const auto& r = p.r;
    return (16 * r[0] * r[0] * r[2] * r[2] + 4 * r[1] * r[1] - 1) - 16 * p.product() * std::cos(p.alpha);
}

double sigma_closed_form(Letter k, const TriangleParams& p)
{
    const double rk = p.r[k - 1];
    const double rp = p.r[prev_letter(k) - 1];
    const double rn = p.r[next_letter(k) - 1];
    return 4 * std::norm(2 * rp * rn * std::polar(1.0, p.alpha) - rk) - 1;
}

Word sigma_word(Letter k)
{
    return Word(std::vector<Letter>{k, prev_letter(k), k, next_letter(k)});
}

Complex trace_mu(const Word& a, const TriangleRealization& tri, const MuTriple& mu)
{
    std::array<Mat21, 3> gens;
    for (std::size_t k = 0; k < 3; ++k)
        gens[k] = mu_reflection(tri.polar[k], mu[k]);
    return word_matrix(a, gens).trace();
}

Complex trace_mu_gram(const Word& a, const TriangleParams& p, const MuTriple& mu)
{
    // In the basis c1, c2, c3 the map z -> z + (mu_k - 1) <z, c_k> c_k sends
    // c_i to c_i + (mu_k - 1) G(i, k) c_k.
    const Mat21 g = gram_matrix(p);
    std::array<Mat21, 3> gens;
    for (std::size_t k = 0; k < 3; ++k) {
        gens[k] = Mat21::identity();
        for (std::size_t i = 0; i < 3; ++i)
            gens[k](k, i) += (mu[k] - 1.0) * g(i, k);
    }
    return word_matrix(a, gens).trace();
}

Complex trace_mu_combinatorial(const Word& a, const TriangleParams& p, const MuTriple& mu, std::size_t cap)
{
    check_cap(a, cap);
    const std::size_t n = a.size();
    const auto rp = power_table(p.r, n);
    std::array<std::vector<LComplex>, 3> mp;
    for (std::size_t k = 0; k < 3; ++k) {
        mp[k].assign(n + 1, 1.0L);
        const LComplex base(mu[k].real() - 1.0L, mu[k].imag());
        for (std::size_t j = 1; j <= n; ++j)
            mp[k][j] = mp[k][j - 1] * base;
    }
    const int wmax = static_cast<int>(n / 3);
    std::vector<LComplex> q(static_cast<std::size_t>(2 * wmax + 1), 0.0L);

    for_each_subset(a.letters(), [&](const SubsetStats& st) {
        LComplex term = 1.0L;
        for (std::size_t k = 0; k < 3; ++k)
            term *= mp[k][static_cast<std::size_t>(st.count[k])] * rp[k][static_cast<std::size_t>(st.u[k])];
        q[static_cast<std::size_t>(st.winding() + wmax)] += term;
    });

    LComplex s = 2.0L;
    for (int w = -wmax; w <= wmax; ++w)
        s += q[static_cast<std::size_t>(w + wmax)] * std::polar(1.0L, static_cast<long double>(p.alpha) * w);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

} // namespace chtg

#include "chtg/exact_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace chtg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer polynomial coefficient overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer polynomial coefficient overflow");
    return out;
}

} // namespace

IntPoly IntPoly::constant(std::int64_t c)
{
    return monomial(c, {0, 0, 0});
}

IntPoly IntPoly::monomial(std::int64_t c, Exponents e)
{
    IntPoly p;
    p.add_term(c, e);
    return p;
}

void IntPoly::add_term(std::int64_t c, Exponents e)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted)
        return;
    it->second = checked_add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(c, e);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(checked_mul(c, -1), e);
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    IntPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(checked_mul(ca, cb), {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
    return out;
}

double IntPoly::evaluate(const std::array<double, 3>& x) const
{
    long double s = 0;
    for (const auto& [e, c] : terms_) {
        long double m = static_cast<long double>(c);
        for (std::size_t k = 0; k < 3; ++k)
            m *= std::pow(static_cast<long double>(x[k]), e[k]);
        s += m;
    }
    return static_cast<double>(s);
}

std::int64_t IntPoly::evaluate_exact(const std::array<std::int64_t, 3>& x) const
{
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t m = c;
        for (std::size_t k = 0; k < 3; ++k)
            for (int j = 0; j < e[k]; ++j)
                m = checked_mul(m, x[k]);
        s = checked_add(s, m);
    }
    return s;
}

std::string IntPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool first = out.empty();
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";

        std::string mono;
        for (std::size_t k = 0; k < 3; ++k) {
            if (e[k] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += "X" + std::to_string(k + 1);
            if (e[k] > 1)
                mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += std::to_string(mag) + "*" + mono;
    }
    return out;
}

} // namespace chtg

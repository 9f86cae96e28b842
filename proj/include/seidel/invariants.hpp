#ifndef SEIDEL_INVARIANTS_HPP
#define SEIDEL_INVARIANTS_HPP

// Characteristic polynomial of the Seidel matrix S = J - I - 2A
// (0 on the diagonal, -1 for edges, +1 for non-edges). Switching conjugates
// S by a +-1 diagonal matrix, so the polynomial is constant on a switching
// class.

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

inline constexpr int kMaxPolyOrder = 16;

/// Monic integer polynomial, coefficients constant term first.
template <class Int = std::int64_t>
struct BasicIntPolynomial {
    std::vector<Int> coefficients;

    int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    const Int& operator[](int k) const { return coefficients[static_cast<std::size_t>(k)]; }

    Int evaluate(const Int& x) const
    {
        Int acc = 0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const BasicIntPolynomial&, const BasicIntPolynomial&) = default;
    friend auto operator<=>(const BasicIntPolynomial& a, const BasicIntPolynomial& b)
    {
        if (a.coefficients.size() != b.coefficients.size())
            return a.coefficients.size() <=> b.coefficients.size();
        for (std::size_t i = 0; i < a.coefficients.size(); ++i)
            if (a.coefficients[i] != b.coefficients[i])
                return a.coefficients[i] < b.coefficients[i] ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

using IntPolynomial = BasicIntPolynomial<>;

namespace detail {

// Exact arithmetic: builtin integers trap on overflow instead of wrapping.
template <class Int>
Int add_exact(const Int& a, const Int& b)
{
    if constexpr (std::integral<Int>) {
        Int r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("seidel_char_poly: integer overflow");
        return r;
    } else {
        return a + b;
    }
}

} // namespace detail

inline int seidel_entry(const Graph& g, int i, int j)
{
    if (i == j)
        return 0;
    return g.adjacent(i, j) ? -1 : 1;
}

inline std::vector<std::vector<int>> seidel_matrix(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<int>> s(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s[i][j] = seidel_entry(g, static_cast<int>(i), static_cast<int>(j));
    return s;
}

/// det(xI - S) via the Faddeev-LeVerrier recurrence
///   M_1 = I,  c_{n-k} = -tr(S M_k) / k,  M_{k+1} = S M_k + c_{n-k} I,
/// where every division is exact.
template <class Int = std::int64_t>
BasicIntPolynomial<Int> seidel_char_poly(const Graph& g)
{
    const int n = g.order();
    check_bound("seidel_char_poly", n, kMaxPolyOrder);
    const auto un = static_cast<std::size_t>(n);
    const auto s = seidel_matrix(g);

    std::vector<Int> c(un + 1, Int(0));
    c[un] = Int(1);
    std::vector<std::vector<Int>> m(un, std::vector<Int>(un, Int(0)));
    std::vector<std::vector<Int>> sm(un, std::vector<Int>(un, Int(0)));
    for (std::size_t i = 0; i < un; ++i)
        m[i][i] = Int(1);

    for (std::size_t k = 1; k <= un; ++k) {
        // sm = S * m; entries of S are in {-1, 0, 1}.
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) {
                Int acc = 0;
                for (std::size_t l = 0; l < un; ++l) {
                    const int e = s[i][l];
                    if (e == 1)
                        acc = detail::add_exact(acc, m[l][j]);
                    else if (e == -1)
                        acc = detail::add_exact(acc, Int(-m[l][j]));
                }
                sm[i][j] = acc;
            }
        Int trace = 0;
        for (std::size_t i = 0; i < un; ++i)
            trace = detail::add_exact(trace, sm[i][i]);
        const Int kk(static_cast<long long>(k));
        if (trace % kk != 0)
            throw std::logic_error("seidel_char_poly: inexact division in recurrence");
        const Int coeff = Int(-(trace / kk));
        c[un - k] = coeff;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j)
                m[i][j] = i == j ? detail::add_exact(sm[i][j], coeff) : sm[i][j];
    }
    return {std::move(c)};
}

/// Necessary condition for two graphs to be switching equivalent.
struct ClassSignature {
    int order;
    IntPolynomial poly;

    friend bool operator==(const ClassSignature&, const ClassSignature&) = default;
};

inline ClassSignature class_signature(const Graph& g)
{
    return {g.order(), seidel_char_poly(g)};
}

} // namespace seidel

#endif // SEIDEL_INVARIANTS_HPP

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rootix/error.hpp"
#include "rootix/graph.hpp"
#include "rootix/spectrum.hpp"

namespace rootix {

/// q_1 x + q_2 x^2 + ... + q_d x^d with nonnegative integer coefficients and
/// no constant term. Always normalized: q_d > 0, so the zero polynomial
/// cannot be represented.
class Polynomial {
public:
    /// `coeffs[i]` is the coefficient of x^(i + 1). Trailing zeros are dropped.
    explicit Polynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs))
    {
        if (std::any_of(c_.begin(), c_.end(), [](std::int64_t q) { return q < 0; }))
            throw InputError("polynomial coefficients must be nonnegative");
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
        if (c_.empty())
            throw InputError("zero polynomial");
    }

    int degree() const noexcept { return static_cast<int>(c_.size()); }

    /// Coefficient of x^k, zero outside 1..degree().
    std::int64_t coefficient(int k) const
    {
        return (k >= 1 && k <= degree()) ? c_[static_cast<std::size_t>(k - 1)] : 0;
    }

    std::span<const std::int64_t> coefficients() const noexcept { return c_; }

    std::int64_t sum() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<std::int64_t> c_;
};

/// "x^7 + 4x^6 + ... + 16x": highest power first, zero terms omitted.
inline std::string to_string(const Polynomial& p)
{
    std::string out;
    for (int k = p.degree(); k >= 1; --k) {
        const auto q = p.coefficient(k);
        if (q == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (q != 1)
            out += std::to_string(q);
        out += "x";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

inline Polynomial build(const DistanceSpectrum& s) { return Polynomial(s.weights); }

/// H, H_e, Sc or Gut of a connected graph.
inline Polynomial build(const Graph& g, PolyKind kind) { return build(spectrum(g, kind)); }

/// First derivative at 1: W, W_e, Sc or Gut depending on the source kind.
inline std::int64_t classic_index(const Polynomial& p)
{
    std::int64_t total = 0;
    for (int k = 1; k <= p.degree(); ++k)
        total += k * p.coefficient(k);
    return total;
}

/// MH, MH_e, MS or MG.
inline std::int64_t max_coefficient(const Polynomial& p)
{
    auto c = p.coefficients();
    return *std::max_element(c.begin(), c.end());
}

// ---------------------------------------------------------------------------
// Closed forms for the standard families.

enum class FamilyShape { complete, cycle, star, wheel, path };

inline std::string_view to_string(FamilyShape f)
{
    switch (f) {
    case FamilyShape::complete: return "complete";
    case FamilyShape::cycle: return "cycle";
    case FamilyShape::star: return "star";
    case FamilyShape::wheel: return "wheel";
    case FamilyShape::path: return "path";
    }
    return "?";
}

/// K_n, C_n, P_n have n vertices; the star S_n and wheel W_n have n + 1.
struct GraphFamily {
    FamilyShape shape;
    int n;
};

inline Graph construct(GraphFamily f)
{
    switch (f.shape) {
    case FamilyShape::complete: return families::complete(f.n);
    case FamilyShape::cycle: return families::cycle(f.n);
    case FamilyShape::star: return families::star(f.n);
    case FamilyShape::wheel: return families::wheel(f.n);
    case FamilyShape::path: return families::path(f.n);
    }
    throw InputError("unknown family");
}

/// Smallest n for which the closed form of (shape, kind) is valid.
///
/// The wheel's edge-Hosoya formula goes wrong below n = 5 (at n = 3 it
/// disagrees with K_4, at n = 4 it has a negative coefficient).
inline int closed_form_min_n(FamilyShape shape, PolyKind kind)
{
    const bool edge = kind == PolyKind::edge_hosoya;
    switch (shape) {
    case FamilyShape::complete: return edge ? 3 : 2;
    case FamilyShape::cycle: return 3;
    case FamilyShape::star: return edge ? 2 : 1;
    case FamilyShape::wheel: return edge ? 5 : 3;
    case FamilyShape::path: return 3;
    }
    return 0;
}

namespace detail {

// Coefficient pattern shared by the cycle formulas: `scale` * n for
// k = 1 .. floor((n-1)/2), plus scale * n/2 at k = n/2 when n is even.
inline std::vector<std::int64_t> cycle_coefficients(std::int64_t n, std::int64_t scale)
{
    std::vector<std::int64_t> c;
    if (n % 2 == 0) {
        for (std::int64_t k = 1; k <= n / 2 - 1; ++k)
            c.push_back(scale * n);
        c.push_back(scale * n / 2);
    } else {
        for (std::int64_t k = 1; k <= (n - 1) / 2; ++k)
            c.push_back(scale * n);
    }
    return c;
}

} // namespace detail

/// Literal family formula. Throws InputError outside its validated range.
inline Polynomial closed_form(GraphFamily f, PolyKind kind)
{
    const int min_n = closed_form_min_n(f.shape, kind);
    if (f.n < min_n)
        throw InputError("closed form for " + std::string(to_string(f.shape)) + " " +
                         std::string(to_string(kind)) + " requires n >= " + std::to_string(min_n));
    const std::int64_t n = f.n;
    std::vector<std::int64_t> c;
    switch (f.shape) {
    case FamilyShape::complete:
        switch (kind) {
        case PolyKind::hosoya: c = {n * (n - 1) / 2}; break;
        case PolyKind::schultz: c = {n * (n - 1) * (n - 1)}; break;
        case PolyKind::gutman: c = {n * (n - 1) * (n - 1) * (n - 1) / 2}; break;
        case PolyKind::edge_hosoya:
            c = {(n * n * n - 3 * n * n + 2 * n) / 2,
                 (n * n * n * n - 6 * n * n * n + 11 * n * n - 6 * n) / 8};
            break;
        }
        break;
    case FamilyShape::cycle:
        c = detail::cycle_coefficients(n, (kind == PolyKind::schultz || kind == PolyKind::gutman) ? 4 : 1);
        break;
    case FamilyShape::star:
        switch (kind) {
        case PolyKind::hosoya: c = {n, n * (n - 1) / 2}; break;
        case PolyKind::schultz: c = {n * (n + 1), n * (n - 1)}; break;
        case PolyKind::gutman: c = {n * n, n * (n - 1) / 2}; break;
        case PolyKind::edge_hosoya: c = {n * (n - 1) / 2}; break;
        }
        break;
    case FamilyShape::wheel:
        switch (kind) {
        case PolyKind::hosoya: c = {2 * n, n * (n - 3) / 2}; break;
        case PolyKind::schultz: c = {n * (n + 9), 3 * n * (n - 3)}; break;
        case PolyKind::gutman: c = {3 * n * (n + 3), 9 * n * (n - 3) / 2}; break;
        case PolyKind::edge_hosoya: c = {n * (n + 5) / 2, n * (n - 1), n * (n - 5) / 2}; break;
        }
        break;
    case FamilyShape::path:
        switch (kind) {
        case PolyKind::hosoya:
            for (std::int64_t i = 1; i <= n - 1; ++i)
                c.push_back(n - i);
            break;
        case PolyKind::schultz:
            for (std::int64_t i = 1; i <= n - 2; ++i)
                c.push_back(4 * n - 2 - 4 * i);
            c.push_back(2);
            break;
        case PolyKind::gutman:
            for (std::int64_t i = 1; i <= n - 2; ++i)
                c.push_back(4 * (n - 1 - i));
            c.push_back(1);
            break;
        case PolyKind::edge_hosoya:
            for (std::int64_t i = 1; i <= n - 2; ++i)
                c.push_back(n - 1 - i);
            break;
        }
        break;
    }
    return Polynomial(std::move(c));
}

} // namespace rootix

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numeric>
#include <span>
#include <vector>

#include "rootix/error.hpp"
#include "rootix/polynomial.hpp"
#include "rootix/spectrum.hpp"

namespace rootix {

/// Unique root of 1 - Q(x) on (0, 1].
struct RootResult {
    double delta = 1.0;
    /// Width of the final bracket [lo, hi] with Q(lo) <= 1 <= Q(hi); zero for exact hits.
    double bracket_width = 0.0;
    /// 1 / (max coefficient + 1).
    double lower_bound = 0.0;
    /// Coefficient sum is exactly 1, hence delta == 1 without any numerics.
    bool is_exactly_one = false;
};

/// Bracket width at which bisection hands over to Newton polishing.
inline constexpr double kRootBracketWidth = 1e-13;

namespace detail {

// Horner evaluation of q_1 x + ... + q_d x^d and its derivative.
inline double eval_shifted(std::span<const double> q, double x)
{
    double acc = 0.0;
    for (auto it = q.rbegin(); it != q.rend(); ++it)
        acc = acc * x + *it;
    return acc * x;
}

inline double eval_derivative(std::span<const double> q, double x)
{
    double acc = 0.0;
    for (std::size_t k = q.size(); k >= 1; --k)
        acc = acc * x + static_cast<double>(k) * q[k - 1];
    return acc;
}

} // namespace detail

/// Solves Q(x) = 1 on (0, 1] for Q(x) = q[0] x + q[1] x^2 + ..., with every
/// q[i] >= 0 and sum(q) >= 1.
///
/// Bisection on [0, 1] down to kRootBracketWidth, then at most three Newton
/// steps, each kept only if it lands inside the current bracket. The result
/// is bit-for-bit deterministic for a given coefficient sequence.
template <class Coeff>
    requires std::integral<Coeff> || std::floating_point<Coeff>
RootResult solve_unit_root(std::span<const Coeff> q)
{
    if (std::any_of(q.begin(), q.end(), [](Coeff c) { return c < 0; }))
        throw InputError("root solver needs nonnegative coefficients");
    const Coeff total = std::accumulate(q.begin(), q.end(), Coeff{0});
    if (total < Coeff{1})
        throw InputError("root solver needs coefficient sum >= 1");

    RootResult r;
    r.lower_bound = 1.0 / (static_cast<double>(*std::max_element(q.begin(), q.end())) + 1.0);
    if (total == Coeff{1}) {
        r.is_exactly_one = true;
        return r;
    }

    std::vector<double> qd(q.begin(), q.end());
    double lo = 0.0, hi = 1.0;
    auto residual = [&](double x) { return detail::eval_shifted(qd, x) - 1.0; };

    while (hi - lo > kRootBracketWidth) {
        const double mid = lo + (hi - lo) / 2;
        const double f = residual(mid);
        if (f == 0.0) {
            r.delta = mid;
            r.bracket_width = 0.0;
            return r;
        }
        (f < 0.0 ? lo : hi) = mid;
    }

    double x = lo + (hi - lo) / 2;
    for (int step = 0; step < 3; ++step) {
        const double f = residual(x);
        if (f == 0.0) {
            lo = hi = x;
            break;
        }
        (f < 0.0 ? lo : hi) = x;
        const double slope = detail::eval_derivative(qd, x);
        if (!(slope > 0.0))
            break;
        const double next = x - f / slope;
        if (!(next >= lo && next <= hi) || next == x)
            break;
        x = next;
    }
    if (residual(lo) > 0.0 || residual(hi) < 0.0)
        throw InvariantError("root bracket lost its sign change");
    r.delta = x;
    r.bracket_width = hi - lo;
    return r;
}

template <class Coeff>
RootResult solve_unit_root(const std::vector<Coeff>& q)
{
    return solve_unit_root(std::span<const Coeff>(q));
}

/// delta(Q*) for Q* = 1 - Q.
inline RootResult root_index(const Polynomial& p) { return solve_unit_root(p.coefficients()); }

/// Strict lower bound 1 / (M + 1) on delta for graphs with at least three vertices.
inline double lower_bound(const Polynomial& p)
{
    return 1.0 / (static_cast<double>(max_coefficient(p)) + 1.0);
}

/// Exact root-index of K_n for the hosoya, schultz and gutman kinds.
inline double complete_graph_root(PolyKind kind, int n)
{
    if (n < 2)
        throw InputError("complete-graph root needs n >= 2");
    const double m = n, m1 = n - 1;
    switch (kind) {
    case PolyKind::hosoya: return 2.0 / (m * m1);
    case PolyKind::schultz: return 1.0 / (m * m1 * m1);
    case PolyKind::gutman: return 2.0 / (m * m1 * m1 * m1);
    case PolyKind::edge_hosoya: break;
    }
    throw InputError("no closed-form complete-graph root for edge-hosoya");
}

} // namespace rootix

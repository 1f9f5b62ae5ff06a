#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tshift::costmodel {

// Counts are exact integer evaluations of the cost polynomials; direct-path
// FLOPs reach ~10^21 for N up to 1e9, so 128-bit arithmetic throughout.
using Count = __int128;

inline std::string to_string(Count v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

inline void check_dims(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 1) throw std::invalid_argument("cost model: n, d must be >= 1");
}

// --------------------------------------------------------------------------
// Single-head counts.
//   direct FLOPs:    4 N^2 d + 6 N^2
//   efficient FLOPs: N (4 d^3 + 10 d^2 + 9 d + 4)
//   direct entries:  d N + 2 N^2
//   efficient entries: d^2 (d+1) + 2 d N + (d+1) N + d^2 N
// --------------------------------------------------------------------------

inline Count ops_direct(std::int64_t n, std::int64_t d) {
    check_dims(n, d);
    const Count N = n, D = d;
    return 4 * N * N * D + 6 * N * N;
}

inline Count ops_efficient(std::int64_t n, std::int64_t d) {
    check_dims(n, d);
    const Count N = n, D = d;
    return N * (4 * D * D * D + 10 * D * D + 9 * D + 4);
}

inline Count entries_direct(std::int64_t n, std::int64_t d) {
    check_dims(n, d);
    const Count N = n, D = d;
    return D * N + 2 * N * N;
}

inline Count entries_efficient(std::int64_t n, std::int64_t d) {
    check_dims(n, d);
    const Count N = n, D = d;
    return D * D * (D + 1) + 2 * D * N + (D + 1) * N + D * D * N;
}

// --------------------------------------------------------------------------
// Transition points. n0/n1 are the smallest integer N where the efficient
// implementation wins (ties favor efficient); they equal ceil of the exact
// crossover values.
// --------------------------------------------------------------------------

struct TransitionPoints {
    std::int64_t d = 0;
    std::int64_t n0_num = 0, n0_den = 0;  // exact rational N0 (reduced)
    double n0_exact = 0.0;
    std::int64_t n0 = 0;
    double n1_exact = 0.0;
    std::int64_t n1 = 0;
};

inline TransitionPoints n0(std::int64_t d) {
    check_dims(1, d);
    TransitionPoints t;
    t.d = d;
    std::int64_t num = 4 * d * d * d + 10 * d * d + 9 * d + 4;
    std::int64_t den = 4 * d + 6;
    const std::int64_t g = std::gcd(num, den);
    t.n0_num = num / g;
    t.n0_den = den / g;
    t.n0_exact = static_cast<double>(t.n0_num) / static_cast<double>(t.n0_den);
    t.n0 = (t.n0_num + t.n0_den - 1) / t.n0_den;  // ceil
    return t;
}

inline TransitionPoints n1(std::int64_t d) {
    check_dims(1, d);
    TransitionPoints t = n0(d);
    const double dd = static_cast<double>(d);
    const double disc = dd * dd * dd * dd + 12 * dd * dd * dd + 14 * dd * dd + 4 * dd + 1;
    t.n1_exact = 0.25 * (dd * dd + 2 * dd + 1 + std::sqrt(disc));
    // Locate the integer crossover with exact arithmetic; the float root only
    // seeds the search.
    std::int64_t lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(t.n1_exact) - 4);
    while (lo > 1 && entries_efficient(lo, d) <= entries_direct(lo, d)) --lo;
    std::int64_t n = lo;
    while (entries_efficient(n, d) > entries_direct(n, d)) ++n;
    t.n1 = n;
    return t;
}

// --------------------------------------------------------------------------
// Multi-head forms: h heads of width d = d_emb / h; exactly h times the
// per-head cost.
// --------------------------------------------------------------------------

enum class Impl { direct, efficient };

inline std::int64_t head_dim(std::int64_t d_emb, std::int64_t h) {
    if (h < 1 || d_emb < 1 || d_emb % h != 0)
        throw std::invalid_argument("mhsa: h must divide d_emb");
    return d_emb / h;
}

inline Count mhsa_ops(std::int64_t n, std::int64_t d_emb, std::int64_t h, Impl impl) {
    const std::int64_t d = head_dim(d_emb, h);
    return Count(h) * (impl == Impl::direct ? ops_direct(n, d) : ops_efficient(n, d));
}

inline Count mhsa_entries(std::int64_t n, std::int64_t d_emb, std::int64_t h, Impl impl) {
    const std::int64_t d = head_dim(d_emb, h);
    return Count(h) * (impl == Impl::direct ? entries_direct(n, d) : entries_efficient(n, d));
}

// --------------------------------------------------------------------------
// Head-count optimizers.
// --------------------------------------------------------------------------

// Bisection root of a continuous f on [lo, hi] with f(lo) < 0 < f(hi).
template <class F>
double bisect(F f, double lo, double hi) {
    double flo = f(lo);
    if (flo > 0) throw std::invalid_argument("bisect: f(lo) must be <= 0");
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct HeadDimOptimum {
    double closed_form = 0.0;  // d* = (alpha + 100/alpha - 10) / 27
    double root = 0.0;         // bisection root of 9 d^3 + 10 d^2 - 4
    double alpha = 0.0;        // cbrt(3374 + 54 sqrt(3561))
    double residual = 0.0;     // |9 d*^3 + 10 d*^2 - 4| at the closed form
};

// The per-head dimension minimizing efficient-MHSA FLOPs: the unique positive
// solution of 9 d^3 + 10 d^2 = 4 (~0.52), computed both ways.
inline HeadDimOptimum optimal_head_dim_ops() {
    HeadDimOptimum o;
    o.alpha = std::cbrt(3374.0 + 54.0 * std::sqrt(3561.0));
    o.closed_form = (o.alpha + 100.0 / o.alpha - 10.0) / 27.0;
    auto f = [](double d) { return 9 * d * d * d + 10 * d * d - 4; };
    o.root = bisect(f, 0.0, 1.0);
    o.residual = std::fabs(f(o.closed_form));
    return o;
}

// Root in (0,1) of 2 d^3 + (N+1) d^2 = N (memory-optimal head dimension).
inline double optimal_head_dim_entries(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("optimal_head_dim_entries: n must be >= 1");
    const double N = static_cast<double>(n);
    auto f = [N](double d) { return 2 * d * d * d + (N + 1) * d * d - N; };
    return bisect(f, 0.0, 1.0);
}

// --------------------------------------------------------------------------
// Report sweep.
// --------------------------------------------------------------------------

struct CostReport {
    std::int64_t n = 0, d = 0, h = 1;
    Count ops_direct = 0, ops_eff = 0;
    Count entries_direct = 0, entries_eff = 0;
};

inline CostReport cost_point(std::int64_t n, std::int64_t d, std::int64_t h = 1) {
    CostReport r;
    r.n = n;
    r.d = d;
    r.h = h;
    const std::int64_t d_emb = d * h;
    r.ops_direct = mhsa_ops(n, d_emb, h, Impl::direct);
    r.ops_eff = mhsa_ops(n, d_emb, h, Impl::efficient);
    r.entries_direct = mhsa_entries(n, d_emb, h, Impl::direct);
    r.entries_eff = mhsa_entries(n, d_emb, h, Impl::efficient);
    return r;
}

inline std::vector<CostReport> cost_sweep(const std::vector<std::int64_t>& d_list,
                                          const std::vector<std::int64_t>& n_list,
                                          const std::vector<std::int64_t>& h_list = {1}) {
    if (d_list.empty() || n_list.empty() || h_list.empty())
        throw std::invalid_argument("cost_sweep: empty sweep list");
    std::vector<CostReport> out;
    out.reserve(d_list.size() * n_list.size() * h_list.size());
    for (auto d : d_list)
        for (auto n : n_list)
            for (auto h : h_list) out.push_back(cost_point(n, d, h));
    return out;
}

}  // namespace tshift::costmodel

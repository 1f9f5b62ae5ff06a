#pragma once

#include "tshift/matrix.hpp"

#include <cstdint>
#include <random>

namespace tshift {

// ---------------------------------------------------------------------------
// Reproducible randomness: identical (seed, stream) pairs reproduce identical
// sample sequences within this implementation. The RNG is always an explicit
// value, never ambient state.
// ---------------------------------------------------------------------------
struct RandomSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    RandomSeed derived(std::uint64_t substream) const {
        // splitmix64 step keeps derived streams decorrelated
        std::uint64_t z = stream + 0x9e3779b97f4a7c15ull * (substream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return {seed, z ^ (z >> 31)};
    }

    std::mt19937_64 engine() const {
        std::seed_seq seq{seed & 0xffffffffull, seed >> 32, stream & 0xffffffffull, stream >> 32};
        return std::mt19937_64(seq);
    }
};

// ---------------------------------------------------------------------------
// Core dense operations. All are pure functions of their inputs.
// ---------------------------------------------------------------------------

template <class S>
Mat<S> matmul(const Mat<S>& a, const Mat<S>& b) {
    require(a.cols() == b.rows(), "matmul: inner dimensions disagree");
    return a * b;
}

// Row-wise tensor product (boxtimes): row n of the result is the flattened
// outer product of row n of a with row n of b. Flattening is row-major,
// pi(k, l) = k*d + l, fixed library-wide.
template <class S>
Mat<S> tensor_rows(const Mat<S>& a, const Mat<S>& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "tensor_rows: shape mismatch");
    const Index n = a.rows(), d = a.cols();
    Mat<S> out(n, d * d);
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < d; ++k)
            out.row(i).segment(k * d, d) = a(i, k) * b.row(i);
    return out;
}

template <class S>
Mat<S> hadamard_pow(const Mat<S>& a, int n) {
    require(n >= 1, "hadamard_pow: exponent must be positive");
    Mat<S> out = a;
    for (int i = 1; i < n; ++i) out.array() *= a.array();
    return out;
}

template <class S>
Mat<S> hadamard_div(const Mat<S>& a, const Mat<S>& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "hadamard_div: shape mismatch");
    require((b.array() != S(0)).all(), "hadamard_div: zero divisor entry");
    return (a.array() / b.array()).matrix();
}

// Rescale each row to l2 norm |scale|.
template <class S>
Mat<S> row_normalize(const Mat<S>& a, S scale) {
    Mat<S> out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        const S nrm = a.row(i).norm();
        require(nrm > S(0), "row_normalize: zero row");
        out.row(i) = a.row(i) * (scale / nrm);
    }
    return out;
}

template <class S>
Mat<S> col_sums(const Mat<S>& a) {
    Mat<S> out(1, a.cols());
    out = a.colwise().sum();
    return out;
}

// [ ones_scale*all_scale | all_scale*v ], the augmentation of Algorithm line 5.
template <class S>
Mat<S> prepend_scaled_ones(const Mat<S>& v, S ones_scale, S all_scale) {
    Mat<S> out(v.rows(), v.cols() + 1);
    out.col(0).setConstant(ones_scale * all_scale);
    out.rightCols(v.cols()) = all_scale * v;
    return out;
}

// Rows i.i.d. uniform on the unit sphere in R^d (normalized Gaussians).
template <class S = double>
Mat<S> sample_sphere_rows(Index n, Index d, RandomSeed seed) {
    require(n >= 1 && d >= 1, "sample_sphere_rows: dimensions must be >= 1");
    auto eng = seed.engine();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat<S> out(n, d);
    for (Index i = 0; i < n; ++i) {
        double norm2;
        do {
            norm2 = 0.0;
            for (Index j = 0; j < d; ++j) {
                const double g = gauss(eng);
                out(i, j) = static_cast<S>(g);
                norm2 += g * g;
            }
        } while (norm2 == 0.0);
        out.row(i) /= out.row(i).norm();
    }
    return out;
}

// Rows with i.i.d. standard normal entries (row norm ~ sqrt(d)).
template <class S = double>
Mat<S> sample_gaussian(Index n, Index d, RandomSeed seed) {
    require(n >= 1 && d >= 1, "sample_gaussian: dimensions must be >= 1");
    auto eng = seed.engine();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat<S> out(n, d);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < d; ++j) out(i, j) = static_cast<S>(gauss(eng));
    return out;
}

}  // namespace tshift

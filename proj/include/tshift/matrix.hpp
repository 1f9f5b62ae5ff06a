#pragma once

#include <Eigen/Dense>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tshift {

// Dense row-major matrix, scalar-generic. Row-major matches the library-wide
// flattening convention pi(k,l) = k*d + l and the plain-text file format.
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

template <class S>
bool all_finite(const Mat<S>& m) {
    return m.allFinite();
}

// ---------------------------------------------------------------------------
// Plain-text matrix format: line 1 "rows cols", then one whitespace-separated
// row per line. Doubles are written with 17 significant digits so that
// write -> read reproduces the in-memory values bit-exactly.
// ---------------------------------------------------------------------------

template <class S>
void write_matrix(std::ostream& os, const Mat<S>& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    char buf[64];
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(m(i, j)));
            os << buf << (j + 1 < m.cols() ? ' ' : '\n');
        }
    }
}

template <class S>
void write_matrix_file(const std::string& path, const Mat<S>& m) {
    std::ofstream os(path);
    require(os.good(), "cannot open for writing: " + path);
    write_matrix(os, m);
}

template <class S = double>
Mat<S> read_matrix(std::istream& is) {
    Index rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("matrix header: expected \"rows cols\"");
    require(rows > 0 && cols > 0, "matrix header: dimensions must be positive");
    Mat<S> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            double x;
            if (!(is >> x)) {
                std::ostringstream err;
                err << "matrix body: expected " << rows * cols << " values, ran out at ("
                    << i << "," << j << ")";
                throw std::invalid_argument(err.str());
            }
            m(i, j) = static_cast<S>(x);
        }
    return m;
}

template <class S = double>
Mat<S> read_matrix_file(const std::string& path) {
    std::ifstream is(path);
    require(is.good(), "cannot open for reading: " + path);
    return read_matrix<S>(is);
}

}  // namespace tshift

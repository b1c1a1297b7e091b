#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mixdiff/errors.hpp"

namespace mixdiff {

using Vec = std::vector<double>;

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size()) {
        throw ShapeError(std::string(where) + ": dimension mismatch (" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

inline double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double squared_norm(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(squared_norm(a)); }

/// acc += s * v
inline void add_scaled(Vec& acc, const Vec& v, double s) {
    check_same_dim(acc, v, "add_scaled");
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

inline Vec scaled(const Vec& v, double s) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Dense row-major matrix, minimal surface for Gram/covariance work.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

inline double frobenius_norm_sq(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data) s += v * v;
    return s;
}

inline double frobenius_norm(const Matrix& m) { return std::sqrt(frobenius_norm_sq(m)); }

inline double frobenius_distance_sq(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ShapeError("frobenius_distance_sq: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        s += d * d;
    }
    return s;
}

} // namespace mixdiff

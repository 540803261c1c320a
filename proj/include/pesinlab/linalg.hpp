#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "pesinlab/errors.hpp"

namespace pesinlab {

/// Fixed-size column vector, d = 2 or 3 throughout the library.
template <int D>
struct Vec {
    std::array<double, D> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < D; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < D; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double a) {
        for (double& x : c) x *= a;
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double a, Vec v) { return v *= a; }
    friend Vec operator*(Vec v, double a) { return v *= a; }
    friend Vec operator-(Vec v) { return v *= -1.0; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <int D>
inline double dot(const Vec<D>& a, const Vec<D>& b) {
    double s = 0.0;
    for (int i = 0; i < D; ++i) s += a[i] * b[i];
    return s;
}

template <int D>
inline double norm(const Vec<D>& v) {
    return std::sqrt(dot(v, v));
}

template <int D>
inline Vec<D> normalized(const Vec<D>& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("normalized: zero or non-finite vector");
    return (1.0 / n) * v;
}

inline double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

/// Angle between vectors in [0, pi].
template <int D>
inline double vector_angle(const Vec<D>& a, const Vec<D>& b) {
    double cs = dot(a, b);
    double sn;
    if constexpr (D == 2) {
        sn = std::fabs(cross(a, b));
    } else {
        sn = norm(cross(a, b));
    }
    return std::atan2(sn, cs);
}

/// Angle between the lines spanned by a and b, in [0, pi/2]. Direction sign is ignored.
template <int D>
inline double line_angle(const Vec<D>& a, const Vec<D>& b) {
    double cs = std::fabs(dot(a, b));
    double sn;
    if constexpr (D == 2) {
        sn = std::fabs(cross(a, b));
    } else {
        sn = norm(cross(a, b));
    }
    return std::atan2(sn, cs);
}

/// Row-major d x d matrix.
template <int D>
struct Mat {
    std::array<double, D * D> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i * D + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i * D + j)]; }

    static Mat identity() {
        Mat m;
        for (int i = 0; i < D; ++i) m(i, i) = 1.0;
        return m;
    }

    friend Vec<D> operator*(const Mat& m, const Vec<D>& v) {
        Vec<D> r;
        for (int i = 0; i < D; ++i) {
            double s = 0.0;
            for (int j = 0; j < D; ++j) s += m(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
    friend Mat operator*(const Mat& m, const Mat& n) {
        Mat r;
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) {
                double s = 0.0;
                for (int k = 0; k < D; ++k) s += m(i, k) * n(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

template <int D>
inline double det(const Mat<D>& m) {
    if constexpr (D == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    } else {
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
}

/// Solve m x = b for a 2x2 system by Cramer's rule.
inline Vec2 solve2(const Mat2& m, const Vec2& b) {
    const double d = det(m);
    if (std::fabs(d) < 1e-300) throw DegenerateFrameError("solve2: singular system");
    return Vec2{{(b[0] * m(1, 1) - b[1] * m(0, 1)) / d, (m(0, 0) * b[1] - m(1, 0) * b[0]) / d}};
}

/// Modified Gram-Schmidt in place. Returns the stretch factor of each column
/// (the diagonal of R in the QR factorization of the incoming frame).
template <int D>
inline std::array<double, D> orthonormalize(std::array<Vec<D>, D>& frame) {
    std::array<double, D> stretch{};
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < i; ++j) {
            const double p = dot(frame[i], frame[j]);
            frame[i] -= p * frame[j];
        }
        const double r = norm(frame[i]);
        if (!(r > 1e-300) || !std::isfinite(r))
            throw DegenerateFrameError("orthonormalize: frame collapsed");
        frame[i] *= 1.0 / r;
        stretch[i] = r;
    }
    return stretch;
}

/// Eigenvalue moduli of a 2x2 matrix, larger first.
inline std::array<double, 2> eigen_moduli(const Mat2& m) {
    const double t = m(0, 0) + m(1, 1);
    const double d = det(m);
    const double disc = t * t - 4.0 * d;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        double l1 = std::fabs((t + r) / 2.0);
        double l2 = std::fabs((t - r) / 2.0);
        if (l1 < l2) std::swap(l1, l2);
        // guard the near-zero root against cancellation: |l1 l2| = |det|
        if (l1 > 0.0 && std::fabs(d) > 0.0) l2 = std::fabs(d) / l1;
        return {l1, l2};
    }
    const double r = std::sqrt(std::fabs(d));
    return {r, r};
}

/// Real eigenvectors of a hyperbolic 2x2 matrix: first the expanding one
/// (|lambda| > 1), then the contracting one. Throws if eigenvalues are not
/// real and distinct.
inline std::array<Vec2, 2> eigen_directions(const Mat2& m) {
    const double t = m(0, 0) + m(1, 1);
    const double d = det(m);
    const double disc = t * t - 4.0 * d;
    if (!(disc > 0.0)) throw std::invalid_argument("eigen_directions: eigenvalues not real-distinct");
    const double r = std::sqrt(disc);
    const double l1 = (t + r) / 2.0;
    const double l2 = (t - r) / 2.0;
    auto evec = [&](double lam) -> Vec2 {
        if (std::fabs(m(0, 1)) > 1e-300) return normalized(Vec2{{m(0, 1), lam - m(0, 0)}});
        if (std::fabs(m(1, 0)) > 1e-300) return normalized(Vec2{{lam - m(1, 1), m(1, 0)}});
        // diagonal matrix
        return std::fabs(m(0, 0) - lam) < std::fabs(m(1, 1) - lam) ? Vec2{{1.0, 0.0}}
                                                                   : Vec2{{0.0, 1.0}};
    };
    const Vec2 v1 = evec(l1);
    const Vec2 v2 = evec(l2);
    if (std::fabs(l1) >= std::fabs(l2)) return {v1, v2};
    return {v2, v1};
}

}  // namespace pesinlab

#pragma once

#include <cmath>
#include <stdexcept>

#include "pesinlab/linalg.hpp"

namespace pesinlab {

/// Point of the flat torus R^d / Z^d, every coordinate kept in [0, 1).
/// Construct through torus_reduce so the invariant holds after every
/// arithmetic step.
template <int D>
struct TorusPoint {
    Vec<D> x{};

    double operator[](int i) const { return x[i]; }
    friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.x == b.x; }
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.x.c < b.x.c; }
};

using TorusPoint2 = TorusPoint<2>;
using TorusPoint3 = TorusPoint<3>;

inline double reduce_mod1(double v) {
    double r = v - std::floor(v);
    if (r >= 1.0) r = 0.0;  // floor rounding at the seam
    return r;
}

template <int D>
inline TorusPoint<D> torus_reduce(const Vec<D>& raw) {
    TorusPoint<D> p;
    for (int i = 0; i < D; ++i) {
        if (!std::isfinite(raw[i])) throw std::invalid_argument("torus_reduce: non-finite coordinate");
        p.x[i] = reduce_mod1(raw[i]);
    }
    return p;
}

inline TorusPoint2 torus_reduce(double a, double b) { return torus_reduce(Vec2{{a, b}}); }
inline TorusPoint3 torus_reduce(double a, double b, double c) { return torus_reduce(Vec3{{a, b, c}}); }

/// Signed per-coordinate displacement a - b, wrapped into [-1/2, 1/2).
inline double wrap_delta(double a, double b) {
    double d = a - b;
    d -= std::round(d);
    return d;
}

template <int D>
inline Vec<D> torus_displacement(const TorusPoint<D>& a, const TorusPoint<D>& b) {
    Vec<D> d;
    for (int i = 0; i < D; ++i) d[i] = wrap_delta(a[i], b[i]);
    return d;
}

/// Flat (quotient) distance on the torus.
template <int D>
inline double torus_distance(const TorusPoint<D>& a, const TorusPoint<D>& b) {
    return norm(torus_displacement(a, b));
}

/// Tangent vector at a base point, in the flat chart.
template <int D>
struct TangentVector {
    TorusPoint<D> base;
    Vec<D> dir;
};

}  // namespace pesinlab

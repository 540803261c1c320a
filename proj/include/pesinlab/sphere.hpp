#pragma once

#include <algorithm>
#include <array>

#include "pesinlab/torus.hpp"

namespace pesinlab {

/// Point of the sphere obtained as T^2 / (x ~ -x). Stored through its
/// canonical representative: the lexicographically smaller of the two
/// reduced lifts, which gives a deterministic equality test. The four
/// 2-torsion points (0,0), (1/2,0), (0,1/2), (1/2,1/2) are the cone
/// singularities of the quotient.
struct SpherePoint {
    TorusPoint2 rep;
    bool singular = false;
};

inline bool is_two_torsion(const TorusPoint2& p, double tol = 1e-12) {
    auto half_or_zero = [tol](double v) {
        return std::fabs(wrap_delta(v, 0.0)) <= tol || std::fabs(wrap_delta(v, 0.5)) <= tol;
    };
    return half_or_zero(p[0]) && half_or_zero(p[1]);
}

inline SpherePoint sphere_project(const TorusPoint2& p) {
    const TorusPoint2 neg = torus_reduce(-p.x[0], -p.x[1]);
    SpherePoint s;
    s.rep = std::min(p, neg);
    s.singular = is_two_torsion(p);
    return s;
}

/// Quotient metric: minimum flat-torus distance over the 2x2 representative pairs.
/// Since -(-x) = x, minimizing over one side's pair suffices.
inline double sphere_distance(const SpherePoint& a, const SpherePoint& b) {
    const TorusPoint2 bneg = torus_reduce(-b.rep.x[0], -b.rep.x[1]);
    return std::min(torus_distance(a.rep, b.rep), torus_distance(a.rep, bneg));
}

inline bool same_sphere_point(const SpherePoint& a, const SpherePoint& b, double tol = 1e-12) {
    return sphere_distance(a, b) <= tol;
}

}  // namespace pesinlab

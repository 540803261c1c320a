#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "pesinlab/errors.hpp"
#include "pesinlab/linalg.hpp"
#include "pesinlab/rng.hpp"
#include "pesinlab/sphere.hpp"
#include "pesinlab/torus.hpp"

namespace pesinlab {

/// 2x2 integer lattice matrix; the generator of every toral automorphism here.
struct IntMat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    friend IntMat2 operator*(const IntMat2& m, const IntMat2& n) {
        return IntMat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                       m.c * n.b + m.d * n.d};
    }

    /// Exact inverse, valid when det = +-1.
    IntMat2 inverse_unimodular() const {
        const std::int64_t dt = det();
        if (dt != 1 && dt != -1) throw std::invalid_argument("IntMat2: determinant must be +-1");
        return IntMat2{d * dt, -b * dt, -c * dt, a * dt};
    }

    Mat2 as_mat() const {
        Mat2 m;
        m(0, 0) = static_cast<double>(a);
        m(0, 1) = static_cast<double>(b);
        m(1, 0) = static_cast<double>(c);
        m(1, 1) = static_cast<double>(d);
        return m;
    }
};

inline IntMat2 cat_matrix() { return IntMat2{2, 1, 1, 1}; }

/// Rejects matrices that are not volume-preserving lattice automorphisms or
/// that have an eigenvalue on the unit circle. Used when loading a matrix
/// override from a run configuration.
inline void validate_automorphism(const IntMat2& m) {
    const std::int64_t dt = m.det();
    if (dt != 1 && dt != -1)
        throw std::invalid_argument("matrix override: determinant must be +-1");
    const auto moduli = eigen_moduli(m.as_mat());
    for (double mod : moduli)
        if (std::fabs(mod - 1.0) <= 1e-9)
            throw std::invalid_argument("matrix override: eigenvalue on the unit circle");
}

enum class SpaceKind { Torus2, Torus3, SphereQuotient };
enum class MeasureKind { Lebesgue, SpherePushforward };

/// A point space with an invertible map, its differential, and an invariant
/// reference measure. Sphere-quotient systems work in the torus-lift chart:
/// the state is the canonical representative and tangent vectors live on the
/// lift; the four cone points are excluded from differential queries.
template <int D>
struct DynamicalSystem {
    std::string name;
    SpaceKind space = SpaceKind::Torus2;
    MeasureKind measure = MeasureKind::Lebesgue;
    bool volume_preserving = true;
    std::int64_t horizon = 100000000;

    std::function<TorusPoint<D>(const TorusPoint<D>&)> forward;
    std::function<TorusPoint<D>(const TorusPoint<D>&)> inverse;
    std::function<Mat<D>(const TorusPoint<D>&)> differential;
    std::function<bool(const TorusPoint<D>&)> regular;
    std::function<double(const TorusPoint<D>&, const TorusPoint<D>&)> distance;
    std::function<TorusPoint<D>(const TorusPoint<D>&)> canonical;

    /// Lattice block of the map on the torus factor, when the system is
    /// generated by one (all catalogue systems are).
    std::optional<IntMat2> lattice;

    TorusPoint<D> step(const TorusPoint<D>& p, bool fwd) const { return fwd ? forward(p) : inverse(p); }
};

template <int D>
inline TorusPoint<D> apply(const DynamicalSystem<D>& sys, const TorusPoint<D>& x, std::int64_t steps) {
    const std::int64_t n = steps >= 0 ? steps : -steps;
    if (n > sys.horizon) throw HorizonError("apply: |steps| exceeds the configured horizon");
    TorusPoint<D> p = x;
    for (std::int64_t k = 0; k < n; ++k) p = sys.step(p, steps >= 0);
    return p;
}

/// Uniform sample from the reference measure (Lebesgue, or its pushforward on
/// the sphere quotient).
template <int D>
inline TorusPoint<D> random_point(const DynamicalSystem<D>& sys, CounterRng& rng) {
    Vec<D> raw;
    for (int i = 0; i < D; ++i) raw[i] = rng.uniform();
    return sys.canonical(torus_reduce(raw));
}

/// Linear automorphism of T^2: x -> Mx mod Z^2.
inline DynamicalSystem<2> make_toral_automorphism(const IntMat2& m, std::string name = "toral") {
    const std::int64_t dt = m.det();
    if (dt != 1 && dt != -1)
        throw std::invalid_argument("make_toral_automorphism: determinant must be +-1");
    const IntMat2 minv = m.inverse_unimodular();
    const Mat2 dm = m.as_mat();

    DynamicalSystem<2> sys;
    sys.name = std::move(name);
    sys.space = SpaceKind::Torus2;
    sys.lattice = m;
    sys.forward = [m](const TorusPoint2& p) {
        return torus_reduce(static_cast<double>(m.a) * p[0] + static_cast<double>(m.b) * p[1],
                            static_cast<double>(m.c) * p[0] + static_cast<double>(m.d) * p[1]);
    };
    sys.inverse = [minv](const TorusPoint2& p) {
        return torus_reduce(static_cast<double>(minv.a) * p[0] + static_cast<double>(minv.b) * p[1],
                            static_cast<double>(minv.c) * p[0] + static_cast<double>(minv.d) * p[1]);
    };
    sys.differential = [dm](const TorusPoint2&) { return dm; };
    sys.regular = [](const TorusPoint2&) { return true; };
    sys.distance = [](const TorusPoint2& a, const TorusPoint2& b) { return torus_distance(a, b); };
    sys.canonical = [](const TorusPoint2& p) { return p; };
    return sys;
}

inline DynamicalSystem<2> make_cat_map() { return make_toral_automorphism(cat_matrix(), "cat"); }

/// Product M x id on T^3 = T^2 x S^1; the circle coordinate is carried
/// untouched and the differential is block-diagonal [M | 1].
inline DynamicalSystem<3> make_product_with_identity(const IntMat2& m, std::string name = "cat_x_id") {
    const IntMat2 minv = m.inverse_unimodular();
    Mat3 dm;
    dm(0, 0) = static_cast<double>(m.a);
    dm(0, 1) = static_cast<double>(m.b);
    dm(1, 0) = static_cast<double>(m.c);
    dm(1, 1) = static_cast<double>(m.d);
    dm(2, 2) = 1.0;

    DynamicalSystem<3> sys;
    sys.name = std::move(name);
    sys.space = SpaceKind::Torus3;
    sys.lattice = m;
    sys.forward = [m](const TorusPoint3& p) {
        return torus_reduce(static_cast<double>(m.a) * p[0] + static_cast<double>(m.b) * p[1],
                            static_cast<double>(m.c) * p[0] + static_cast<double>(m.d) * p[1], p[2]);
    };
    sys.inverse = [minv](const TorusPoint3& p) {
        return torus_reduce(static_cast<double>(minv.a) * p[0] + static_cast<double>(minv.b) * p[1],
                            static_cast<double>(minv.c) * p[0] + static_cast<double>(minv.d) * p[1],
                            p[2]);
    };
    sys.differential = [dm](const TorusPoint3&) { return dm; };
    sys.regular = [](const TorusPoint3&) { return true; };
    sys.distance = [](const TorusPoint3& a, const TorusPoint3& b) { return torus_distance(a, b); };
    sys.canonical = [](const TorusPoint3& p) { return p; };
    return sys;
}

/// Quotient of a toral automorphism by x ~ -x. States are canonical
/// representatives; the chart for differentials is the torus lift, so the
/// differential is the lattice matrix away from the four cone points.
inline DynamicalSystem<2> make_sphere_quotient(const IntMat2& m = cat_matrix(),
                                               std::string name = "sphere_quotient") {
    DynamicalSystem<2> lift = make_toral_automorphism(m, name + "_lift");
    const Mat2 dm = m.as_mat();

    DynamicalSystem<2> sys;
    sys.name = std::move(name);
    sys.space = SpaceKind::SphereQuotient;
    sys.measure = MeasureKind::SpherePushforward;
    sys.lattice = m;
    sys.forward = [lift](const TorusPoint2& p) { return sphere_project(lift.forward(p)).rep; };
    sys.inverse = [lift](const TorusPoint2& p) { return sphere_project(lift.inverse(p)).rep; };
    sys.differential = [dm](const TorusPoint2& p) -> Mat2 {
        if (is_two_torsion(p))
            throw SingularPointError("differential requested at a cone point of the sphere quotient");
        return dm;
    };
    sys.regular = [](const TorusPoint2& p) { return !is_two_torsion(p); };
    sys.distance = [](const TorusPoint2& a, const TorusPoint2& b) {
        return sphere_distance(SpherePoint{a, false}, SpherePoint{b, false});
    };
    sys.canonical = [](const TorusPoint2& p) { return sphere_project(p).rep; };
    return sys;
}

}  // namespace pesinlab

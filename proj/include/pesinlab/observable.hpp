#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pesinlab/system.hpp"

namespace pesinlab {

/// Trigonometric observable cos/sin(2 pi k.x). The family over all small
/// frequencies is L^1-dense, which is what the ergodicity tests rely on.
/// On the sphere quotient only cosines are constructible: they are even under
/// x -> -x, so their value is independent of the representative.
template <int D>
struct Observable {
    enum class Kind { Cosine, Sine };

    std::array<int, D> k{};
    Kind kind = Kind::Cosine;

    double operator()(const TorusPoint<D>& p) const {
        double phase = 0.0;
        for (int i = 0; i < D; ++i) phase += static_cast<double>(k[i]) * p[i];
        phase *= 2.0 * std::numbers::pi;
        return kind == Kind::Cosine ? std::cos(phase) : std::sin(phase);
    }

    bool constant() const {
        for (int v : k)
            if (v != 0) return false;
        return true;
    }

    std::string id() const {
        std::string s = kind == Kind::Cosine ? "cos(" : "sin(";
        for (int i = 0; i < D; ++i) {
            if (i) s += ',';
            s += std::to_string(k[i]);
        }
        s += ')';
        return s;
    }
};

template <int D>
inline Observable<D> make_observable(const DynamicalSystem<D>& sys, std::array<int, D> k,
                                     typename Observable<D>::Kind kind) {
    if (sys.space == SpaceKind::SphereQuotient && kind == Observable<D>::Kind::Sine)
        throw std::invalid_argument("sine observables are not well defined on the sphere quotient");
    return Observable<D>{k, kind};
}

/// Exact reference-measure average: 1 for the constant cosine, 0 otherwise.
/// The pushforward measure on the sphere integrates an even observable
/// exactly as Lebesgue integrates its lift.
template <int D>
inline double space_average(const Observable<D>& obs) {
    if (obs.constant()) return obs.kind == Observable<D>::Kind::Cosine ? 1.0 : 0.0;
    return 0.0;
}

/// Default family: all nonconstant frequencies with max-norm <= 1, one
/// representative per +-k pair, cosine and sine kinds (cosine only on the
/// sphere quotient). On T^2 this is 8 observables.
template <int D>
inline std::vector<Observable<D>> default_family(const DynamicalSystem<D>& sys) {
    std::vector<Observable<D>> fam;
    std::array<int, D> k{};
    auto first_nonzero_positive = [](const std::array<int, D>& v) {
        for (int c : v) {
            if (c > 0) return true;
            if (c < 0) return false;
        }
        return false;  // all zero
    };
    const int total = [] {
        int t = 1;
        for (int i = 0; i < D; ++i) t *= 3;
        return t;
    }();
    for (int code = 0; code < total; ++code) {
        int c = code;
        for (int i = 0; i < D; ++i) {
            k[i] = c % 3 - 1;
            c /= 3;
        }
        if (!first_nonzero_positive(k)) continue;  // skip 0 and one of each +-k pair
        fam.push_back(Observable<D>{k, Observable<D>::Kind::Cosine});
        if (sys.space != SpaceKind::SphereQuotient)
            fam.push_back(Observable<D>{k, Observable<D>::Kind::Sine});
    }
    return fam;
}

}  // namespace pesinlab

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "common.hpp"
#include "image.hpp"

namespace flowct {

/// Parallel-beam acquisition: uniformly spaced view angles over [0, pi),
/// a centered linear detector array, and the square image it measures.
struct geometry {
    int n_angles = 0;
    int n_detectors = 0;
    int image_size = 0;
    double detector_spacing = 1.0;
    std::vector<double> angles;
};

inline geometry make_geometry(int n_angles, int n_detectors, int image_size) {
    require(n_angles >= 1, "n_angles must be >= 1");
    require(n_detectors >= 1, "n_detectors must be >= 1");
    require(image_size >= 1, "image_size must be >= 1");
    geometry g;
    g.n_angles = n_angles;
    g.n_detectors = n_detectors;
    g.image_size = image_size;
    g.detector_spacing = 1.0;
    g.angles.resize(n_angles);
    for (int i = 0; i < n_angles; ++i) {
        g.angles[i] = std::numbers::pi * i / n_angles;
    }
    return g;
}

/// Detector bins that cover a 1.5x image side at unit spacing; corner pixels
/// stay inside the array at every angle.
inline int default_detector_count(int image_size) {
    return static_cast<int>(std::ceil(1.5 * image_size));
}

namespace detail {

/// Joseph-style traversal of one ray: march along the dominant axis, linear
/// interpolation across the other. Emits (pixel_index, weight) pairs through
/// `f`. Forward projection and backprojection iterate the identical pairs,
/// which makes the pair an exact matched transpose.
///
/// Ray parameterization: p(tau) = s * (cos a, sin a) + tau * (-sin a, cos a),
/// image coordinates centered at ((n-1)/2, (n-1)/2), pixel units.
template <class F>
inline void for_each_ray_sample(int n, double angle, double s, F&& f) {
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const double half = 0.5 * (n - 1);
    if (std::abs(c) >= std::abs(sn)) {
        const double w = 1.0 / std::abs(c);
        for (int row = 0; row < n; ++row) {
            const double y = row - half;
            const double tau = (y - s * sn) / c;
            const double u = s * c - tau * sn + half;
            const int i0 = static_cast<int>(std::floor(u));
            const double fr = u - i0;
            if (i0 >= 0 && i0 < n) f(static_cast<std::size_t>(row) * n + i0, (1.0 - fr) * w);
            if (i0 + 1 >= 0 && i0 + 1 < n) f(static_cast<std::size_t>(row) * n + i0 + 1, fr * w);
        }
    } else {
        const double w = 1.0 / std::abs(sn);
        for (int col = 0; col < n; ++col) {
            const double x = col - half;
            const double tau = (x - s * c) / (-sn);
            const double v = s * sn + tau * c + half;
            const int r0 = static_cast<int>(std::floor(v));
            const double fr = v - r0;
            if (r0 >= 0 && r0 < n) f(static_cast<std::size_t>(r0) * n + col, (1.0 - fr) * w);
            if (r0 + 1 >= 0 && r0 + 1 < n) f(static_cast<std::size_t>(r0 + 1) * n + col, fr * w);
        }
    }
}

inline double detector_offset(const geometry& g, int det) {
    return (det - 0.5 * (g.n_detectors - 1)) * g.detector_spacing;
}

}  // namespace detail

/// y = A x.
inline sinogram forward_project(const image& x, const geometry& g) {
    require(x.width == g.image_size && x.height == g.image_size,
            "forward_project: image does not match geometry");
    sinogram y(g.n_angles, g.n_detectors);
    for (int a = 0; a < g.n_angles; ++a) {
        const double angle = g.angles[a];
        for (int d = 0; d < g.n_detectors; ++d) {
            const double s = detail::detector_offset(g, d);
            double acc = 0.0;
            detail::for_each_ray_sample(g.image_size, angle, s,
                                        [&](std::size_t idx, double w) { acc += x.values[idx] * w; });
            y.at(a, d) = acc;
        }
    }
    return y;
}

/// A^T y, the exact transpose of forward_project.
inline image back_project(const sinogram& y, const geometry& g) {
    require(y.n_angles == g.n_angles && y.n_detectors == g.n_detectors,
            "back_project: sinogram does not match geometry");
    image x(g.image_size, g.image_size);
    for (int a = 0; a < g.n_angles; ++a) {
        const double angle = g.angles[a];
        for (int d = 0; d < g.n_detectors; ++d) {
            const double s = detail::detector_offset(g, d);
            const double val = y.at(a, d);
            detail::for_each_ray_sample(g.image_size, angle, s,
                                        [&](std::size_t idx, double w) { x.values[idx] += val * w; });
        }
    }
    return x;
}

}  // namespace flowct

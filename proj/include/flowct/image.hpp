#pragma once

#include <span>
#include <utility>

#include "common.hpp"

namespace flowct {

/// Square 2D attenuation grid, row-major doubles.
struct image {
    int width = 0;
    int height = 0;
    vec values;

    image() = default;
    image(int w, int h) : width(w), height(h), values(static_cast<std::size_t>(w) * h, 0.0) {
        require(w >= 1 && h >= 1, "image dimensions must be positive");
    }
    image(int w, int h, vec v) : width(w), height(h), values(std::move(v)) {
        require(w >= 1 && h >= 1, "image dimensions must be positive");
        require(values.size() == static_cast<std::size_t>(w) * h, "image value count mismatch");
    }

    double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return values.size(); }
};

/// Projection data, angle-major row-major doubles.
struct sinogram {
    int n_angles = 0;
    int n_detectors = 0;
    vec values;

    sinogram() = default;
    sinogram(int a, int d)
        : n_angles(a), n_detectors(d), values(static_cast<std::size_t>(a) * d, 0.0) {
        require(a >= 1 && d >= 1, "sinogram dimensions must be positive");
    }
    sinogram(int a, int d, vec v) : n_angles(a), n_detectors(d), values(std::move(v)) {
        require(a >= 1 && d >= 1, "sinogram dimensions must be positive");
        require(values.size() == static_cast<std::size_t>(a) * d, "sinogram value count mismatch");
    }

    double& at(int angle, int det) {
        return values[static_cast<std::size_t>(angle) * n_detectors + det];
    }
    double at(int angle, int det) const {
        return values[static_cast<std::size_t>(angle) * n_detectors + det];
    }
    std::size_t size() const { return values.size(); }
};

}  // namespace flowct

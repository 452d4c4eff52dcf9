#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "geometry.hpp"
#include "image.hpp"

namespace flowct {
namespace detail {

/// In-place iterative radix-2 FFT. Size must be a power of two.
inline void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        for (auto& v : a) v /= static_cast<double>(n);
    }
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Band-limited ramp filter kernel (discrete Ram-Lak), wrapped for circular
/// convolution of length nfft: h(0) = 1/(4 ds^2), h(n) = -1/(pi n ds)^2 for
/// odd n, 0 for even n.
inline std::vector<std::complex<double>> ram_lak_transfer(std::size_t nfft, double spacing) {
    std::vector<std::complex<double>> h(nfft, 0.0);
    h[0] = 1.0 / (4.0 * spacing * spacing);
    for (std::size_t k = 1; k <= nfft / 2; ++k) {
        if (k % 2 == 1) {
            const double v = -1.0 / std::pow(std::numbers::pi * static_cast<double>(k) * spacing, 2);
            h[k] = v;
            h[nfft - k] = v;
        }
    }
    fft_pow2(h, false);
    return h;
}

}  // namespace detail

/// Ram-Lak filtered backprojection. Filtering is frequency-domain
/// multiplication after zero-padding each angle row to the next power of two;
/// backprojection uses linear interpolation between detector bins.
inline image fbp(const sinogram& y, const geometry& g) {
    require(y.n_angles == g.n_angles && y.n_detectors == g.n_detectors,
            "fbp: sinogram does not match geometry");
    const int n = g.image_size;
    const int nd = g.n_detectors;
    const double ds = g.detector_spacing;
    const std::size_t nfft = detail::next_pow2(static_cast<std::size_t>(2 * nd));
    const auto transfer = detail::ram_lak_transfer(nfft, ds);

    std::vector<double> filtered(static_cast<std::size_t>(g.n_angles) * nd);
    std::vector<std::complex<double>> buf(nfft);
    for (int a = 0; a < g.n_angles; ++a) {
        std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
        for (int d = 0; d < nd; ++d) buf[d] = y.at(a, d);
        detail::fft_pow2(buf, false);
        for (std::size_t k = 0; k < nfft; ++k) buf[k] *= transfer[k];
        detail::fft_pow2(buf, true);
        for (int d = 0; d < nd; ++d) {
            filtered[static_cast<std::size_t>(a) * nd + d] = buf[d].real() * ds;
        }
    }

    image out(n, n);
    const double half = 0.5 * (n - 1);
    const double det_center = 0.5 * (nd - 1);
    const double dtheta = std::numbers::pi / g.n_angles;
    for (int a = 0; a < g.n_angles; ++a) {
        const double c = std::cos(g.angles[a]);
        const double sn = std::sin(g.angles[a]);
        const double* row = &filtered[static_cast<std::size_t>(a) * nd];
        for (int r = 0; r < n; ++r) {
            const double py = r - half;
            for (int col = 0; col < n; ++col) {
                const double px = col - half;
                const double s = px * c + py * sn;
                const double u = s / ds + det_center;
                const int i0 = static_cast<int>(std::floor(u));
                if (i0 < 0 || i0 + 1 >= nd) continue;
                const double fr = u - i0;
                out.at(r, col) += ((1.0 - fr) * row[i0] + fr * row[i0 + 1]) * dtheta;
            }
        }
    }
    return out;
}

}  // namespace flowct

// Copyright 2026 The ishm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ishm/errors.hpp"

namespace ishm {

enum class WaveletFamily { haar, daub4 };

inline WaveletFamily wavelet_family_from_string(const std::string& s) {
    if (s == "haar") return WaveletFamily::haar;
    if (s == "daub4") return WaveletFamily::daub4;
    throw ParamError("unknown wavelet family: " + s);
}

namespace detail {

inline std::vector<double> scaling_filter(WaveletFamily family) {
    switch (family) {
        case WaveletFamily::haar: {
            const double s = 1.0 / std::sqrt(2.0);
            return {s, s};
        }
        case WaveletFamily::daub4: {
            const double r3 = std::sqrt(3.0);
            const double d = 4.0 * std::sqrt(2.0);
            return {(1.0 + r3) / d, (3.0 + r3) / d, (3.0 - r3) / d, (1.0 - r3) / d};
        }
    }
    throw ParamError("unknown wavelet family");
}

// quadrature mirror: g[k] = (-1)^k h[L-1-k]
inline std::vector<double> detail_filter(const std::vector<double>& h) {
    const std::size_t L = h.size();
    std::vector<double> g(L);
    for (std::size_t k = 0; k < L; ++k) g[k] = ((k % 2 == 0) ? 1.0 : -1.0) * h[L - 1 - k];
    return g;
}

}  // namespace detail

/// One level of the periodized orthonormal transform.
/// x (even length n) -> approx (n/2) and detail (n/2).
inline void dwt_step(std::span<const double> x, const std::vector<double>& h, const std::vector<double>& g,
                     std::vector<double>& approx, std::vector<double>& detail) {
    const std::size_t n = x.size();
    if (n % 2 != 0) throw ShapeError("dwt level needs even length");
    const std::size_t half = n / 2;
    approx.assign(half, 0.0);
    detail.assign(half, 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        double a = 0.0, d = 0.0;
        for (std::size_t k = 0; k < h.size(); ++k) {
            const double v = x[(2 * i + k) % n];
            a += h[k] * v;
            d += g[k] * v;
        }
        approx[i] = a;
        detail[i] = d;
    }
}

inline void idwt_step(std::span<const double> approx, std::span<const double> detail, const std::vector<double>& h,
                      const std::vector<double>& g, std::vector<double>& x) {
    const std::size_t half = approx.size();
    const std::size_t n = 2 * half;
    x.assign(n, 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        for (std::size_t k = 0; k < h.size(); ++k) {
            const std::size_t j = (2 * i + k) % n;
            x[j] += h[k] * approx[i] + g[k] * detail[i];
        }
    }
}

/// Multilevel decomposition, coefficients laid out as
/// [approx_L | detail_L | detail_{L-1} | ... | detail_1]; length preserved.
inline std::vector<double> dwt(std::span<const double> x, WaveletFamily family, int levels) {
    if (levels < 1) throw ParamError("dwt needs levels >= 1");
    const std::size_t n = x.size();
    if (n == 0 || n % (std::size_t{1} << levels) != 0) throw ShapeError("signal length not divisible by 2^levels");
    const auto h = detail::scaling_filter(family);
    const auto g = detail::detail_filter(h);

    std::vector<double> out(n);
    std::vector<double> current(x.begin(), x.end());
    std::vector<double> approx, detail;
    std::size_t write_end = n;
    for (int level = 1; level <= levels; ++level) {
        dwt_step(current, h, g, approx, detail);
        write_end -= detail.size();
        std::copy(detail.begin(), detail.end(), out.begin() + static_cast<std::ptrdiff_t>(write_end));
        current = approx;
    }
    std::copy(current.begin(), current.end(), out.begin());
    return out;
}

inline std::vector<double> idwt(std::span<const double> coeffs, WaveletFamily family, int levels) {
    if (levels < 1) throw ParamError("idwt needs levels >= 1");
    const std::size_t n = coeffs.size();
    if (n == 0 || n % (std::size_t{1} << levels) != 0) throw ShapeError("coefficient length not divisible by 2^levels");
    const auto h = detail::scaling_filter(family);
    const auto g = detail::detail_filter(h);

    const std::size_t base = n >> levels;
    std::vector<double> current(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(base));
    std::size_t read_from = base;
    std::vector<double> rebuilt;
    for (int level = levels; level >= 1; --level) {
        const std::size_t half = current.size();
        std::span<const double> detail(coeffs.data() + read_from, half);
        idwt_step(current, detail, h, g, rebuilt);
        read_from += half;
        current = rebuilt;
    }
    return current;
}

}  // namespace ishm

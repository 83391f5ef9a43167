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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ishm/errors.hpp"

namespace ishm {

enum class KernelFamily {
    linear,
    polynomial,
    gaussian,  // alias of squared_exponential, kept for the SVR sweep naming
    exponential,
    squared_exponential,
    matern32,
    matern52,
    rational_quadratic,
    ard_exponential,
    ard_squared_exponential,
    ard_matern32,
    ard_matern52,
    ard_rational_quadratic,
};

inline std::string to_string(KernelFamily f) {
    switch (f) {
        case KernelFamily::linear: return "linear";
        case KernelFamily::polynomial: return "polynomial";
        case KernelFamily::gaussian: return "gaussian";
        case KernelFamily::exponential: return "exponential";
        case KernelFamily::squared_exponential: return "squared_exponential";
        case KernelFamily::matern32: return "matern32";
        case KernelFamily::matern52: return "matern52";
        case KernelFamily::rational_quadratic: return "rational_quadratic";
        case KernelFamily::ard_exponential: return "ard_exponential";
        case KernelFamily::ard_squared_exponential: return "ard_squared_exponential";
        case KernelFamily::ard_matern32: return "ard_matern32";
        case KernelFamily::ard_matern52: return "ard_matern52";
        case KernelFamily::ard_rational_quadratic: return "ard_rational_quadratic";
    }
    return "?";
}

inline KernelFamily kernel_family_from_string(const std::string& s) {
    for (const auto f : {KernelFamily::linear, KernelFamily::polynomial, KernelFamily::gaussian,
                         KernelFamily::exponential, KernelFamily::squared_exponential, KernelFamily::matern32,
                         KernelFamily::matern52, KernelFamily::rational_quadratic, KernelFamily::ard_exponential,
                         KernelFamily::ard_squared_exponential, KernelFamily::ard_matern32, KernelFamily::ard_matern52,
                         KernelFamily::ard_rational_quadratic}) {
        if (to_string(f) == s) return f;
    }
    throw ParamError("unknown kernel family: " + s);
}

inline bool is_ard(KernelFamily f) {
    return f == KernelFamily::ard_exponential || f == KernelFamily::ard_squared_exponential ||
           f == KernelFamily::ard_matern32 || f == KernelFamily::ard_matern52 ||
           f == KernelFamily::ard_rational_quadratic;
}

inline bool is_stationary(KernelFamily f) {
    return f != KernelFamily::linear && f != KernelFamily::polynomial;
}

struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    double scale = 1.0;                   // isotropic lengthscale
    std::vector<double> lengthscales;     // per-dimension, ARD families only
    int degree = 3;                       // polynomial only
    double signal_variance = 1.0;         // stationary families only
    double rq_alpha = 1.0;                // rational quadratic mixture exponent

    void validate(Eigen::Index dim) const {
        if (is_ard(family)) {
            if (static_cast<Eigen::Index>(lengthscales.size()) != dim)
                throw ShapeError("ARD kernel needs one lengthscale per input dimension");
            for (const double l : lengthscales)
                if (!(l > 0.0)) throw ParamError("ARD lengthscales must be strictly positive");
        } else if (family != KernelFamily::linear) {
            if (!(scale > 0.0)) throw ParamError("kernel scale must be strictly positive");
        }
        if (is_stationary(family) && !(signal_variance > 0.0))
            throw ParamError("signal variance must be strictly positive");
        if (family == KernelFamily::polynomial && degree < 1) throw ParamError("polynomial degree must be >= 1");
        if ((family == KernelFamily::rational_quadratic || family == KernelFamily::ard_rational_quadratic) &&
            !(rq_alpha > 0.0))
            throw ParamError("rational quadratic alpha must be strictly positive");
    }
};

namespace detail {

// non-linear-family stationary profiles as a function of the scaled distance s
inline double stationary_profile(KernelFamily f, double s, double rq_alpha) {
    switch (f) {
        case KernelFamily::gaussian:
        case KernelFamily::squared_exponential:
        case KernelFamily::ard_squared_exponential: return std::exp(-0.5 * s * s);
        case KernelFamily::exponential:
        case KernelFamily::ard_exponential: return std::exp(-s);
        case KernelFamily::matern32:
        case KernelFamily::ard_matern32: {
            const double t = std::sqrt(3.0) * s;
            return (1.0 + t) * std::exp(-t);
        }
        case KernelFamily::matern52:
        case KernelFamily::ard_matern52: {
            const double t = std::sqrt(5.0) * s;
            return (1.0 + t + t * t / 3.0) * std::exp(-t);
        }
        case KernelFamily::rational_quadratic:
        case KernelFamily::ard_rational_quadratic: return std::pow(1.0 + s * s / (2.0 * rq_alpha), -rq_alpha);
        default: throw ParamError("not a stationary kernel");
    }
}

}  // namespace detail

inline double eval_kernel(const KernelSpec& spec, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) throw ShapeError("kernel arguments differ in dimension");
    spec.validate(x.size());
    switch (spec.family) {
        case KernelFamily::linear: return x.dot(y);
        case KernelFamily::polynomial: {
            const double base = x.dot(y) / (spec.scale * spec.scale) + 1.0;
            return std::pow(base, spec.degree);
        }
        default: break;
    }
    double s2 = 0.0;
    if (is_ard(spec.family)) {
        for (Eigen::Index d = 0; d < x.size(); ++d) {
            const double z = (x[d] - y[d]) / spec.lengthscales[static_cast<std::size_t>(d)];
            s2 += z * z;
        }
    } else {
        s2 = (x - y).squaredNorm() / (spec.scale * spec.scale);
    }
    return spec.signal_variance * detail::stationary_profile(spec.family, std::sqrt(s2), spec.rq_alpha);
}

struct GramMatrix {
    Eigen::MatrixXd values;
    KernelSpec spec;
    bool symmetric = false;
};

/// Entry (i, j) = k(X_i, Y_j); rows of X and Y are points.
inline GramMatrix gram(const KernelSpec& spec, const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    if (X.cols() != Y.cols()) throw ShapeError("gram: input dimensions disagree");
    spec.validate(X.cols());
    GramMatrix g;
    g.spec = spec;
    g.values.resize(X.rows(), Y.rows());
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const Eigen::VectorXd xi = X.row(i);
        for (Eigen::Index j = 0; j < Y.rows(); ++j) g.values(i, j) = eval_kernel(spec, xi, Y.row(j));
    }
    return g;
}

/// Symmetric Gram matrix over one point set; only the upper triangle is
/// evaluated and mirrored.
inline GramMatrix gram(const KernelSpec& spec, const Eigen::MatrixXd& X) {
    spec.validate(X.cols());
    GramMatrix g;
    g.spec = spec;
    g.symmetric = true;
    g.values.resize(X.rows(), X.rows());
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const Eigen::VectorXd xi = X.row(i);
        for (Eigen::Index j = i; j < X.rows(); ++j) {
            const double v = eval_kernel(spec, xi, X.row(j));
            g.values(i, j) = v;
            g.values(j, i) = v;
        }
    }
    return g;
}

/// Median pairwise Euclidean distance between rows (even count: mean of the
/// two middle values). Used as the deterministic kernel-scale heuristic.
inline double default_scale_heuristic(const Eigen::MatrixXd& X) {
    const Eigen::Index n = X.rows();
    if (n < 2) throw ParamError("scale heuristic needs at least 2 points");
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) d.push_back((X.row(i) - X.row(j)).norm());
    std::sort(d.begin(), d.end());
    const std::size_t m = d.size();
    const double median = (m % 2 == 1) ? d[m / 2] : 0.5 * (d[m / 2 - 1] + d[m / 2]);
    if (!(median > 0.0)) throw ParamError("scale heuristic degenerate: all points identical");
    return median;
}

/// Per-dimension median absolute difference, falling back to the isotropic
/// median when a dimension is degenerate. Seeds ARD lengthscales.
inline std::vector<double> ard_scale_heuristic(const Eigen::MatrixXd& X) {
    const Eigen::Index n = X.rows();
    if (n < 2) throw ParamError("scale heuristic needs at least 2 points");
    const double iso = default_scale_heuristic(X);
    std::vector<double> scales(static_cast<std::size_t>(X.cols()), iso);
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        d.clear();
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j) d.push_back(std::abs(X(i, c) - X(j, c)));
        std::sort(d.begin(), d.end());
        const std::size_t m = d.size();
        const double median = (m % 2 == 1) ? d[m / 2] : 0.5 * (d[m / 2 - 1] + d[m / 2]);
        if (median > 0.0) scales[static_cast<std::size_t>(c)] = median;
    }
    return scales;
}

}  // namespace ishm

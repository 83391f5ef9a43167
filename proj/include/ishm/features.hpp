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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ishm/errors.hpp"
#include "ishm/fft.hpp"
#include "ishm/wavelet.hpp"

namespace ishm {

enum class FeatureKind { acceleration, fft, wavelet, pca_scores, combined };

inline std::string to_string(FeatureKind k) {
    switch (k) {
        case FeatureKind::acceleration: return "acceleration";
        case FeatureKind::fft: return "fft";
        case FeatureKind::wavelet: return "wavelet";
        case FeatureKind::pca_scores: return "pca_scores";
        case FeatureKind::combined: return "combined";
    }
    return "?";
}

inline FeatureKind feature_kind_from_string(const std::string& s) {
    if (s == "acceleration") return FeatureKind::acceleration;
    if (s == "fft") return FeatureKind::fft;
    if (s == "wavelet") return FeatureKind::wavelet;
    if (s == "pca_scores") return FeatureKind::pca_scores;
    if (s == "combined") return FeatureKind::combined;
    throw ParamError("unknown feature kind: " + s);
}

/// Rows are runs, columns are features. Labels carry the per-row mass in
/// grams. `channel` names the source sensor ("rear_axle", ..., or "stacked");
/// `blocks` is the number of equal-width channel blocks a row concatenates.
struct FeatureMatrix {
    FeatureKind kind = FeatureKind::acceleration;
    Eigen::MatrixXd values;
    std::vector<double> labels;
    std::string channel;
    int blocks = 1;

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }

    void check_consistent() const {
        if (static_cast<Eigen::Index>(labels.size()) != values.rows())
            throw ShapeError("feature matrix labels do not match row count");
        if (!values.allFinite()) throw DataError("feature matrix has non-finite values");
    }
};

/// Groups row indices by identical label, in ascending label order.
inline std::map<double, std::vector<Eigen::Index>> group_rows_by_label(const std::vector<double>& labels) {
    std::map<double, std::vector<Eigen::Index>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(static_cast<Eigen::Index>(i));
    return groups;
}

/// Subtracts the column-wise mean of a group of same-mass signals.
/// Output column means are zero up to rounding.
inline FeatureMatrix group_mean_normalize(const Eigen::MatrixXd& group, double mass_g, const std::string& channel,
                                          int blocks = 1) {
    if (group.rows() < 2) throw ParamError("group mean normalization needs at least 2 runs");
    FeatureMatrix out;
    out.kind = FeatureKind::acceleration;
    out.values = group.rowwise() - group.colwise().mean();
    out.labels.assign(static_cast<std::size_t>(group.rows()), mass_g);
    out.channel = channel;
    out.blocks = blocks;
    return out;
}

/// Stacks per-mass-group normalized matrices into one matrix (rows keep the
/// group order given).
inline FeatureMatrix stack_feature_groups(const std::vector<FeatureMatrix>& groups) {
    if (groups.empty()) throw ShapeError("no feature groups to stack");
    Eigen::Index rows = 0;
    for (const auto& g : groups) {
        if (g.cols() != groups.front().cols()) throw ShapeError("feature groups differ in column count");
        rows += g.rows();
    }
    FeatureMatrix out;
    out.kind = groups.front().kind;
    out.channel = groups.front().channel;
    out.blocks = groups.front().blocks;
    out.values.resize(rows, groups.front().cols());
    out.labels.reserve(static_cast<std::size_t>(rows));
    Eigen::Index r = 0;
    for (const auto& g : groups) {
        out.values.middleRows(r, g.rows()) = g.values;
        out.labels.insert(out.labels.end(), g.labels.begin(), g.labels.end());
        r += g.rows();
    }
    return out;
}

/// Row-wise magnitude spectrum (first N/2+1 bins). When the matrix stacks
/// several channel blocks, each block is transformed independently.
inline Eigen::MatrixXd fft_magnitude(const FeatureMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw ShapeError("fft of empty matrix");
    if (m.blocks < 1 || m.cols() % m.blocks != 0) throw ShapeError("channel blocks do not divide feature columns");
    const Eigen::Index block_len = m.cols() / m.blocks;
    const std::size_t padded = next_pow2(static_cast<std::size_t>(block_len));
    const Eigen::Index out_block = static_cast<Eigen::Index>(padded / 2 + 1);

    Eigen::MatrixXd spec(m.rows(), out_block * m.blocks);
    std::vector<double> row(static_cast<std::size_t>(block_len));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (int b = 0; b < m.blocks; ++b) {
            for (Eigen::Index c = 0; c < block_len; ++c) row[static_cast<std::size_t>(c)] = m.values(r, b * block_len + c);
            const auto mag = fft_magnitude_row(row);
            for (Eigen::Index c = 0; c < out_block; ++c) spec(r, b * out_block + c) = mag[static_cast<std::size_t>(c)];
        }
    }
    return spec;
}

/// Per mass group: v' = (v - min_group) / (max_group - min_group), where min
/// and max are scalars over the whole group block. Constant groups map to 0.
inline FeatureMatrix minmax_normalize_group(const Eigen::MatrixXd& values, const std::vector<double>& labels,
                                            FeatureKind kind, const std::string& channel, int blocks = 1) {
    if (static_cast<Eigen::Index>(labels.size()) != values.rows())
        throw ShapeError("labels do not match matrix rows for min-max normalization");
    FeatureMatrix out;
    out.kind = kind;
    out.values = values;
    out.labels = labels;
    out.channel = channel;
    out.blocks = blocks;
    for (const auto& [mass, idx] : group_rows_by_label(labels)) {
        double lo = values(idx.front(), 0), hi = lo;
        for (const Eigen::Index r : idx) {
            lo = std::min(lo, values.row(r).minCoeff());
            hi = std::max(hi, values.row(r).maxCoeff());
        }
        const double range = hi - lo;
        for (const Eigen::Index r : idx) {
            if (range > 0.0)
                out.values.row(r) = (values.row(r).array() - lo) / range;
            else
                out.values.row(r).setZero();
        }
    }
    return out;
}

/// Row-wise multilevel wavelet decomposition of group-mean-normalized
/// acceleration, followed by per-group min-max normalization. The transform
/// is length-preserving, so column count equals input column count.
inline FeatureMatrix wavelet_features(const FeatureMatrix& m, int levels,
                                      WaveletFamily family = WaveletFamily::daub4) {
    if (m.rows() == 0 || m.cols() == 0) throw ShapeError("wavelet transform of empty matrix");
    if (m.blocks < 1 || m.cols() % m.blocks != 0) throw ShapeError("channel blocks do not divide feature columns");
    const Eigen::Index block_len = m.cols() / m.blocks;
    if (block_len % (Eigen::Index{1} << levels) != 0) throw ShapeError("row length not divisible by 2^levels");

    Eigen::MatrixXd coeffs(m.rows(), m.cols());
    std::vector<double> row(static_cast<std::size_t>(block_len));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (int b = 0; b < m.blocks; ++b) {
            for (Eigen::Index c = 0; c < block_len; ++c) row[static_cast<std::size_t>(c)] = m.values(r, b * block_len + c);
            const auto w = dwt(row, family, levels);
            for (Eigen::Index c = 0; c < block_len; ++c) coeffs(r, b * block_len + c) = w[static_cast<std::size_t>(c)];
        }
    }
    return minmax_normalize_group(coeffs, m.labels, FeatureKind::wavelet, m.channel, m.blocks);
}

}  // namespace ishm

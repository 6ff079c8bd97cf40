#pragma once

#include <vector>

#include "msv/features.hpp"

namespace msv {

/// Dense attention weights between query positions (rows) and reference
/// positions (cols), row-major.
struct AttentionMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    AttentionMatrix() = default;
    AttentionMatrix(int r, int c)
        : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, 0.0) {}

    double at(int u, int v) const {
        return values[static_cast<std::size_t>(u) * cols + v];
    }
    double& at(int u, int v) {
        return values[static_cast<std::size_t>(u) * cols + v];
    }
};

/// Correlation attention: each entry is the cosine similarity of the
/// per-position channel vectors after subtracting their channel means,
/// so values lie in [-1,1]. Positions whose centered vector is zero
/// (flat across channels) correlate as 0 with everything.
AttentionMatrix attention_correlation(const FeatureMap& queries,
                                      const FeatureMap& keys);

/// ReLU the correlations, sharpen with a row-wise softmax over reference
/// positions (softmax of alpha * max(A,0)), and mix the value vectors:
/// every output position is a convex combination of value positions.
/// The output grid matches values' when the row count agrees, otherwise
/// it is returned as a single row of positions.
FeatureMap align_features(const AttentionMatrix& attention,
                          const FeatureMap& values, double alpha);

} // namespace msv

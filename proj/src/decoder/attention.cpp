#include "msv/attention.hpp"

#include <cmath>

#include "msv/error.hpp"

namespace msv {

namespace {

// Per-position channel vectors, centered on their channel mean, plus the
// Euclidean norm (0 for flat vectors).
struct CenteredVectors {
    int channels;
    int positions;
    std::vector<double> values; // position-major: values[p*channels + c]
    std::vector<double> norms;
};

CenteredVectors center(const FeatureMap& m) {
    CenteredVectors out;
    out.channels = m.channels;
    out.positions = m.positions();
    out.values.resize(static_cast<std::size_t>(out.positions) * out.channels);
    out.norms.resize(out.positions);
    for (int p = 0; p < out.positions; ++p) {
        double mean = 0.0;
        for (int c = 0; c < m.channels; ++c)
            mean += m.at_pos(c, p);
        mean /= m.channels;
        double sq = 0.0;
        for (int c = 0; c < m.channels; ++c) {
            double v = m.at_pos(c, p) - mean;
            out.values[static_cast<std::size_t>(p) * m.channels + c] = v;
            sq += v * v;
        }
        out.norms[p] = std::sqrt(sq);
    }
    return out;
}

} // namespace

AttentionMatrix attention_correlation(const FeatureMap& queries,
                                      const FeatureMap& keys) {
    if (queries.channels != keys.channels)
        throw ShapeError("attention_correlation: channel counts differ");
    CenteredVectors q = center(queries);
    CenteredVectors k = center(keys);

    AttentionMatrix out(q.positions, k.positions);
    const int C = q.channels;
    for (int u = 0; u < q.positions; ++u) {
        if (q.norms[u] == 0.0)
            continue; // row stays 0
        const double* qv = &q.values[static_cast<std::size_t>(u) * C];
        for (int v = 0; v < k.positions; ++v) {
            if (k.norms[v] == 0.0)
                continue;
            const double* kv = &k.values[static_cast<std::size_t>(v) * C];
            double dot = 0.0;
            for (int c = 0; c < C; ++c)
                dot += qv[c] * kv[c];
            out.at(u, v) = dot / (q.norms[u] * k.norms[v]);
        }
    }
    return out;
}

FeatureMap align_features(const AttentionMatrix& attention,
                          const FeatureMap& values, double alpha) {
    if (attention.cols != values.positions())
        throw ShapeError("align_features: column/value position mismatch");
    if (!(alpha > 0.0))
        throw ProtocolError("align_features: alpha must be positive");

    FeatureMap out(values.channels,
                   attention.rows == values.positions() ? values.height : 1,
                   attention.rows == values.positions() ? values.width
                                                        : attention.rows);

    const int n = attention.cols;
    std::vector<double> weights(n);
    for (int u = 0; u < attention.rows; ++u) {
        // Row softmax of alpha * ReLU(A); max-shifted for stability.
        double max_act = 0.0;
        for (int v = 0; v < n; ++v) {
            double a = std::max(attention.at(u, v), 0.0) * alpha;
            if (a > max_act)
                max_act = a;
        }
        double denom = 0.0;
        for (int v = 0; v < n; ++v) {
            double a = std::max(attention.at(u, v), 0.0) * alpha;
            weights[v] = std::exp(a - max_act);
            denom += weights[v];
        }
        for (int c = 0; c < values.channels; ++c) {
            double acc = 0.0;
            for (int v = 0; v < n; ++v)
                acc += weights[v] * values.at_pos(c, v);
            out.at_pos(c, u) = acc / denom;
        }
    }
    return out;
}

} // namespace msv

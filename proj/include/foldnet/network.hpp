#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "foldnet/geometry.hpp"

namespace foldnet {

/// Dense row-major matrix; one row per output neuron. Widths stay tiny
/// (<= 4 in the construction), so no sparse or BLAS machinery.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    Matrix(std::size_t r, std::size_t c, std::vector<double> d);

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

Matrix matmul(const Matrix& lhs, const Matrix& rhs);
std::vector<double> matvec(const Matrix& m, const std::vector<double>& v);

struct AffineLayer {
    Matrix weights;
    std::vector<double> bias;

    AffineLayer() = default;
    AffineLayer(Matrix w, std::vector<double> b);

    std::size_t in_dim() const { return weights.cols; }
    std::size_t out_dim() const { return weights.rows; }
    std::vector<double> apply(const std::vector<double>& v) const;
};

/// Composition: result(x) = outer(inner(x)).
AffineLayer compose(const AffineLayer& outer, const AffineLayer& inner);

struct OutputHead {
    double a, b, c;
    double apply(double x0, double x1) const { return a * x0 + b * x1 + c; }
};

/// Per ReLU layer, one bit per neuron; bit = 1 iff pre-activation > 0.
struct ActivationPattern {
    std::vector<std::vector<std::uint8_t>> bits;

    bool operator==(const ActivationPattern&) const = default;
    bool operator<(const ActivationPattern& o) const { return bits < o.bits; }
};

/// Rectified MLP: affine layers with an elementwise ReLU strictly between
/// consecutive ones, then a sign head on the last layer's two outputs.
/// A network with n affine layers applies n-1 ReLUs ("hidden ReLU layers").
class MlpNetwork {
public:
    MlpNetwork(std::vector<AffineLayer> layers, OutputHead head);

    const std::vector<AffineLayer>& layers() const { return layers_; }
    const OutputHead& head() const { return head_; }

    double evaluate_pre_sign(const Point2& p) const;
    /// +1 iff pre-sign strictly positive, else -1.
    int classify(const Point2& p) const;
    ActivationPattern activation_pattern(const Point2& p) const;

    int param_count() const;
    int max_width() const;
    /// Number of ReLU applications (= affine layer count - 1, 0 if empty).
    std::size_t relu_depth() const { return layers_.empty() ? 0 : layers_.size() - 1; }

private:
    std::vector<AffineLayer> layers_;
    OutputHead head_;
};

struct ReluStage {
    bool operator==(const ReluStage&) const = default;
};
using Stage = std::variant<AffineLayer, ReluStage>;

/// Network as an explicit stage sequence; consecutive affine stages are
/// allowed and get merged by collapse().
class StagedNetwork {
public:
    StagedNetwork(std::vector<Stage> stages, OutputHead head);

    const std::vector<Stage>& stages() const { return stages_; }
    const OutputHead& head() const { return head_; }

    double evaluate_pre_sign(const Point2& p) const;
    std::vector<double> evaluate_prefix(const Point2& p) const;

private:
    std::vector<Stage> stages_;
    OutputHead head_;
};

/// Evaluates just a stage sequence (no head) on a point.
std::vector<double> evaluate_stages(const std::vector<Stage>& stages, const Point2& p);

/// Merges every maximal run of consecutive affine stages into one layer,
/// so the result alternates affine / ReLU strictly.
MlpNetwork collapse(const StagedNetwork& staged);

}  // namespace foldnet

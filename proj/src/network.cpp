#include "foldnet/network.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace foldnet {

namespace {

void relu_inplace(std::vector<double>& v) {
    for (double& x : v) {
        if (x < 0.0) x = 0.0;
    }
}

}  // namespace

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<double> d)
    : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) {
        throw std::invalid_argument("matrix data size mismatch");
    }
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols != rhs.rows) {
        throw std::invalid_argument("matmul dimension mismatch");
    }
    Matrix out(lhs.rows, rhs.cols);
    for (std::size_t i = 0; i < lhs.rows; ++i) {
        for (std::size_t k = 0; k < lhs.cols; ++k) {
            const double v = lhs.at(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) {
                out.at(i, j) += v * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v) {
    if (m.cols != v.size()) {
        throw std::invalid_argument("matvec dimension mismatch");
    }
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            s += m.at(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

AffineLayer::AffineLayer(Matrix w, std::vector<double> b)
    : weights(std::move(w)), bias(std::move(b)) {
    if (weights.rows == 0 || weights.cols == 0) {
        throw std::invalid_argument("affine layer must have positive dimensions");
    }
    if (bias.size() != weights.rows) {
        throw std::invalid_argument("affine layer bias length mismatch");
    }
    for (double v : weights.data) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite weight");
    }
    for (double v : bias) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite bias");
    }
}

std::vector<double> AffineLayer::apply(const std::vector<double>& v) const {
    std::vector<double> out = matvec(weights, v);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += bias[i];
    }
    return out;
}

AffineLayer compose(const AffineLayer& outer, const AffineLayer& inner) {
    if (outer.in_dim() != inner.out_dim()) {
        throw std::invalid_argument("compose dimension mismatch");
    }
    std::vector<double> b = matvec(outer.weights, inner.bias);
    for (std::size_t i = 0; i < b.size(); ++i) {
        b[i] += outer.bias[i];
    }
    return AffineLayer(matmul(outer.weights, inner.weights), std::move(b));
}

MlpNetwork::MlpNetwork(std::vector<AffineLayer> layers, OutputHead head)
    : layers_(std::move(layers)), head_(head) {
    std::size_t dim = 2;
    for (const AffineLayer& l : layers_) {
        if (l.in_dim() != dim) {
            throw std::invalid_argument("layer input dimension does not chain");
        }
        dim = l.out_dim();
    }
    if (dim != 2) {
        throw std::invalid_argument("head must consume 2 values");
    }
    if (head_.a == 0.0 && head_.b == 0.0) {
        throw std::invalid_argument("degenerate output head");
    }
}

double MlpNetwork::evaluate_pre_sign(const Point2& p) const {
    std::vector<double> v{p.x, p.y};
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        v = layers_[i].apply(v);
        if (i + 1 < layers_.size()) relu_inplace(v);
    }
    return head_.apply(v[0], v[1]);
}

int MlpNetwork::classify(const Point2& p) const {
    return evaluate_pre_sign(p) > 0.0 ? 1 : -1;
}

ActivationPattern MlpNetwork::activation_pattern(const Point2& p) const {
    ActivationPattern pat;
    std::vector<double> v{p.x, p.y};
    for (std::size_t i = 0; i + 1 < layers_.size(); ++i) {
        v = layers_[i].apply(v);
        std::vector<std::uint8_t> bits(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            bits[j] = v[j] > 0.0 ? 1 : 0;
        }
        pat.bits.push_back(std::move(bits));
        relu_inplace(v);
    }
    return pat;
}

int MlpNetwork::param_count() const {
    int n = 3;  // head
    for (const AffineLayer& l : layers_) {
        n += static_cast<int>(l.out_dim() * l.in_dim() + l.out_dim());
    }
    return n;
}

int MlpNetwork::max_width() const {
    std::size_t w = 0;
    for (const AffineLayer& l : layers_) {
        w = std::max(w, l.out_dim());
    }
    return static_cast<int>(w);
}

StagedNetwork::StagedNetwork(std::vector<Stage> stages, OutputHead head)
    : stages_(std::move(stages)), head_(head) {
    std::size_t dim = 2;
    for (const Stage& s : stages_) {
        if (const auto* lin = std::get_if<AffineLayer>(&s)) {
            if (lin->in_dim() != dim) {
                throw std::invalid_argument("stage input dimension does not chain");
            }
            dim = lin->out_dim();
        }
    }
    if (dim != 2) {
        throw std::invalid_argument("staged head must consume 2 values");
    }
}

std::vector<double> evaluate_stages(const std::vector<Stage>& stages, const Point2& p) {
    std::vector<double> v{p.x, p.y};
    for (const Stage& s : stages) {
        if (const auto* lin = std::get_if<AffineLayer>(&s)) {
            v = lin->apply(v);
        } else {
            relu_inplace(v);
        }
    }
    return v;
}

std::vector<double> StagedNetwork::evaluate_prefix(const Point2& p) const {
    return evaluate_stages(stages_, p);
}

double StagedNetwork::evaluate_pre_sign(const Point2& p) const {
    const std::vector<double> v = evaluate_prefix(p);
    return head_.apply(v[0], v[1]);
}

MlpNetwork collapse(const StagedNetwork& staged) {
    std::vector<AffineLayer> layers;
    std::optional<AffineLayer> run;
    std::size_t dim = 2;
    auto identity = [](std::size_t n) {
        Matrix w(n, n);
        for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 1.0;
        return AffineLayer(std::move(w), std::vector<double>(n, 0.0));
    };
    for (const Stage& s : staged.stages()) {
        if (const auto* lin = std::get_if<AffineLayer>(&s)) {
            run = run ? compose(*lin, *run) : *lin;
            dim = lin->out_dim();
        } else {
            layers.push_back(run ? std::move(*run) : identity(dim));
            run.reset();
        }
    }
    // Trailing affine run feeds the head directly; if the sequence ended on
    // a ReLU, an identity layer stands in for it.
    layers.push_back(run ? std::move(*run) : identity(dim));
    return MlpNetwork(std::move(layers), staged.head());
}

}  // namespace foldnet

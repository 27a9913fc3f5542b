#include "foldnet/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace foldnet {

namespace {

using nlohmann::json;

json layer_to_json(const AffineLayer& layer) {
    json rows = json::array();
    for (std::size_t r = 0; r < layer.out_dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < layer.in_dim(); ++c) {
            row.push_back(layer.weights.at(r, c));
        }
        rows.push_back(std::move(row));
    }
    return json{{"weights", std::move(rows)}, {"bias", layer.bias}};
}

AffineLayer layer_from_json(const json& j) {
    const json& rows = j.at("weights");
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument("layer weights must be a non-empty array");
    }
    const std::size_t out_dim = rows.size();
    const std::size_t in_dim = rows.at(0).size();
    Matrix w(out_dim, in_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        const json& row = rows.at(r);
        if (row.size() != in_dim) {
            throw std::invalid_argument("ragged weight matrix");
        }
        for (std::size_t c = 0; c < in_dim; ++c) {
            w.at(r, c) = row.at(c).get<double>();
        }
    }
    return AffineLayer(std::move(w), j.at("bias").get<std::vector<double>>());
}

json head_to_json(const OutputHead& head) {
    return json{{"a", head.a}, {"b", head.b}, {"c", head.c}};
}

OutputHead head_from_json(const json& j) {
    return OutputHead{j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>()};
}

}  // namespace

std::string network_to_json(const MlpNetwork& net) {
    json layers = json::array();
    for (const AffineLayer& l : net.layers()) {
        layers.push_back(layer_to_json(l));
    }
    return json{{"hidden_layers", std::move(layers)}, {"head", head_to_json(net.head())}}.dump();
}

std::string staged_to_json(const StagedNetwork& net) {
    json stages = json::array();
    for (const Stage& s : net.stages()) {
        if (const auto* lin = std::get_if<AffineLayer>(&s)) {
            json j = layer_to_json(*lin);
            j["kind"] = "linear";
            stages.push_back(std::move(j));
        } else {
            stages.push_back(json{{"kind", "relu"}});
        }
    }
    const MlpNetwork collapsed = collapse(net);
    json layers = json::array();
    for (const AffineLayer& l : collapsed.layers()) {
        layers.push_back(layer_to_json(l));
    }
    return json{{"stages", std::move(stages)},
                {"hidden_layers", std::move(layers)},
                {"head", head_to_json(net.head())}}
        .dump();
}

MlpNetwork network_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid network JSON: ") + e.what());
    }
    try {
        const OutputHead head = head_from_json(j.at("head"));
        if (j.contains("stages")) {
            std::vector<Stage> stages;
            for (const json& s : j.at("stages")) {
                if (s.at("kind") == "relu") {
                    stages.emplace_back(ReluStage{});
                } else {
                    stages.emplace_back(layer_from_json(s));
                }
            }
            return collapse(StagedNetwork(std::move(stages), head));
        }
        std::vector<AffineLayer> layers;
        for (const json& l : j.at("hidden_layers")) {
            layers.push_back(layer_from_json(l));
        }
        return MlpNetwork(std::move(layers), head);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid network JSON: ") + e.what());
    }
}

std::string decomposition_to_json(const Decomposition& d) {
    json out = json::array();
    for (const Region& region : d.regions()) {
        json verts = json::array();
        for (const Point2& v : region.polygon.vertices()) {
            verts.push_back(json::array({v.x, v.y}));
        }
        json pattern = json::array();
        for (const std::vector<std::uint8_t>& layer : region.pattern.bits) {
            std::string s;
            s.reserve(layer.size());
            for (std::uint8_t b : layer) s.push_back(b ? '1' : '0');
            pattern.push_back(std::move(s));
        }
        out.push_back(json{{"vertices", std::move(verts)},
                           {"pattern", std::move(pattern)},
                           {"pre_sign", json::array({region.pre_sign_a, region.pre_sign_b,
                                                     region.pre_sign_c})}});
    }
    return out.dump();
}

std::string report_to_json(const VerificationReport& report) {
    return json{{"claim", report.claim}, {"passed", report.passed}, {"details", report.details}}
        .dump();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const VerificationReport& r : reports) {
        out.push_back(json::parse(report_to_json(r)));
    }
    return out.dump();
}

}  // namespace foldnet

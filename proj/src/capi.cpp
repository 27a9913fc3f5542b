#include "foldnet_c.h"

#include <cstring>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "foldnet/construction.hpp"
#include "foldnet/json_io.hpp"
#include "foldnet/regions.hpp"
#include "foldnet/svg.hpp"
#include "foldnet/verification.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

foldnet_status fail(foldnet_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
foldnet_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const foldnet::RegionBudgetExceeded& e) {
        return fail(FOLDNET_ERROR_BUDGET, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FOLDNET_ERROR_INTERNAL, e.what());
    }
}

}  // namespace

struct foldnet_network {
    foldnet::MlpNetwork collapsed;
    // Kept when built with staged=1 so serialization can emit the stage list.
    std::optional<foldnet::StagedNetwork> staged;
};

struct foldnet_decomposition {
    foldnet::Decomposition value;
};

extern "C" {

const char* foldnet_last_error(void) { return g_last_error.c_str(); }

void foldnet_string_free(char* s) { delete[] s; }

foldnet_status foldnet_build(int m, int staged, foldnet_network** out) {
    if (out == nullptr) return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "out is NULL");
    return guarded([&] {
        foldnet::StagedNetwork net = foldnet::build_network(m);
        foldnet::MlpNetwork collapsed = foldnet::collapse(net);
        auto* handle = new foldnet_network{std::move(collapsed), std::nullopt};
        if (staged != 0) handle->staged = std::move(net);
        *out = handle;
        return FOLDNET_OK;
    });
}

foldnet_status foldnet_network_from_json(const char* json, foldnet_network** out) {
    if (json == nullptr || out == nullptr) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    try {
        *out = new foldnet_network{foldnet::network_from_json(json), std::nullopt};
        return FOLDNET_OK;
    } catch (const std::exception& e) {
        return fail(FOLDNET_ERROR_PARSE, e.what());
    }
}

foldnet_status foldnet_network_to_json(const foldnet_network* net, char** out_json) {
    if (net == nullptr || out_json == nullptr) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        *out_json = dup_string(net->staged ? foldnet::staged_to_json(*net->staged)
                                           : foldnet::network_to_json(net->collapsed));
        return FOLDNET_OK;
    });
}

void foldnet_network_free(foldnet_network* net) { delete net; }

foldnet_status foldnet_network_eval(const foldnet_network* net, double x, double y,
                                    double* pre_sign, int* label) {
    if (net == nullptr) return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "net is NULL");
    return guarded([&] {
        const foldnet::Point2 p{x, y};
        const double v = net->collapsed.evaluate_pre_sign(p);
        if (pre_sign != nullptr) *pre_sign = v;
        if (label != nullptr) *label = v > 0.0 ? 1 : -1;
        return FOLDNET_OK;
    });
}

int foldnet_network_hidden_relu_layers(const foldnet_network* net) {
    return net == nullptr ? -1 : static_cast<int>(net->collapsed.relu_depth());
}

int foldnet_network_max_width(const foldnet_network* net) {
    return net == nullptr ? -1 : net->collapsed.max_width();
}

int foldnet_network_param_count(const foldnet_network* net) {
    return net == nullptr ? -1 : net->collapsed.param_count();
}

foldnet_status foldnet_enumerate_regions(const foldnet_network* net, double x0, double y0,
                                         double x1, double y1, foldnet_decomposition** out) {
    if (net == nullptr || out == nullptr) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        *out = new foldnet_decomposition{foldnet::enumerate_regions(
            net->collapsed, foldnet::ConvexPolygon::axis_aligned_box(x0, y0, x1, y1))};
        return FOLDNET_OK;
    });
}

long long foldnet_decomposition_count(const foldnet_decomposition* d) {
    return d == nullptr ? -1 : static_cast<long long>(d->value.regions().size());
}

foldnet_status foldnet_decomposition_to_json(const foldnet_decomposition* d, char** out_json) {
    if (d == nullptr || out_json == nullptr) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        *out_json = dup_string(foldnet::decomposition_to_json(d->value));
        return FOLDNET_OK;
    });
}

void foldnet_decomposition_free(foldnet_decomposition* d) { delete d; }

foldnet_status foldnet_region_upper_bound(int w, int d, long long* out) {
    if (out == nullptr) return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "out is NULL");
    return guarded([&] {
        *out = foldnet::region_upper_bound(w, d);
        return FOLDNET_OK;
    });
}

foldnet_status foldnet_line_arrangement_max_regions(long long n, long long* out) {
    if (out == nullptr) return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "out is NULL");
    return guarded([&] {
        *out = foldnet::line_arrangement_max_regions(n);
        return FOLDNET_OK;
    });
}

foldnet_status foldnet_verify(const char* suite, int m, unsigned long long seed,
                              const foldnet_network* override_net, char** out_report_json,
                              int* all_passed) {
    if (suite == nullptr || out_report_json == nullptr || all_passed == nullptr) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    const std::string which = suite;
    const bool all = which == "all";
    if (!all && which != "zero-error" && which != "lemma2" && which != "linearity" &&
        which != "bounds") {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "unknown suite: " + which);
    }
    return guarded([&] {
        std::vector<foldnet::VerificationReport> reports;
        const foldnet::MlpNetwork net =
            override_net ? override_net->collapsed : foldnet::collapse(foldnet::build_network(m));

        if (all || which == "zero-error") {
            reports.push_back(foldnet::verify_zero_error(net, m, 100000, seed, 1e-6));
        }
        if (all || which == "lemma2" || which == "linearity") {
            const foldnet::Decomposition d = foldnet::enumerate_regions(
                net, foldnet::ConvexPolygon::axis_aligned_box(-2, -2, 2, 2));
            if (all || which == "lemma2") {
                reports.push_back(foldnet::verify_lemma2(m, 1e-3, d));
            }
            if (all || which == "linearity") {
                reports.push_back(foldnet::verify_piecewise_linearity(net, d, 9, seed));
            }
        }
        if (all || which == "bounds") {
            std::vector<int> m_range;
            for (int i = 1; i <= 30; ++i) m_range.push_back(i);
            for (int d = 1; d <= 4; ++d) {
                reports.push_back(foldnet::verify_bound_consistency(m_range, d));
            }
        }

        int passed = 1;
        for (const foldnet::VerificationReport& r : reports) {
            if (!r.passed) passed = 0;
        }
        *out_report_json = dup_string(foldnet::reports_to_json(reports));
        *all_passed = passed;
        return FOLDNET_OK;
    });
}

foldnet_status foldnet_render(const char* target, int m, int n_lines, int width, int height,
                              unsigned long long seed, const char* out_path) {
    if (target == nullptr || out_path == nullptr) {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    const std::string which = target;
    foldnet::RenderSpec spec;
    if (which == "problem") {
        spec.target = foldnet::RenderSpec::Target::ProblemPolygons;
    } else if (which == "fold") {
        spec.target = foldnet::RenderSpec::Target::FoldSequence;
    } else if (which == "regions") {
        spec.target = foldnet::RenderSpec::Target::ResponseRegions;
    } else if (which == "chords") {
        spec.target = foldnet::RenderSpec::Target::WitnessChords;
    } else if (which == "arrangement") {
        spec.target = foldnet::RenderSpec::Target::ArrangementGrowth;
    } else {
        return fail(FOLDNET_ERROR_INVALID_ARGUMENT, "unknown render target: " + which);
    }
    spec.m = m;
    spec.n_lines = n_lines;
    spec.width = width;
    spec.height = height;
    spec.color_seed = seed;
    return guarded([&] {
        const std::string svg = foldnet::render_svg(spec);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return fail(FOLDNET_ERROR_IO, std::string("cannot open ") + out_path);
        out << svg;
        out.flush();
        if (!out) return fail(FOLDNET_ERROR_IO, std::string("write failed: ") + out_path);
        return FOLDNET_OK;
    });
}

}  // extern "C"

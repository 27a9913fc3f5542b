// Command-line front end for the foldnet library. Talks to the core
// exclusively through the C API in foldnet_c.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldnet_c.h"

namespace {

struct NetworkDeleter {
    void operator()(foldnet_network* n) const { foldnet_network_free(n); }
};
struct DecompositionDeleter {
    void operator()(foldnet_decomposition* d) const { foldnet_decomposition_free(d); }
};
using NetworkPtr = std::unique_ptr<foldnet_network, NetworkDeleter>;
using DecompositionPtr = std::unique_ptr<foldnet_decomposition, DecompositionDeleter>;

std::string take_string(char* s) {
    std::string out = s != nullptr ? s : "";
    foldnet_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

NetworkPtr load_network(const std::string& path) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return nullptr;
    }
    foldnet_network* net = nullptr;
    if (foldnet_network_from_json(text.c_str(), &net) != FOLDNET_OK) {
        std::cerr << "error: invalid network file " << path << ": " << foldnet_last_error()
                  << "\n";
        return nullptr;
    }
    return NetworkPtr(net);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_build(int m, bool staged, const std::string& out_path, bool quiet) {
    foldnet_network* raw = nullptr;
    if (foldnet_build(m, staged ? 1 : 0, &raw) != FOLDNET_OK) {
        std::cerr << "error: " << foldnet_last_error() << "\n";
        return 1;
    }
    NetworkPtr net(raw);
    if (!out_path.empty()) {
        char* json = nullptr;
        if (foldnet_network_to_json(net.get(), &json) != FOLDNET_OK) {
            std::cerr << "error: " << foldnet_last_error() << "\n";
            return 1;
        }
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            foldnet_string_free(json);
            return 1;
        }
        out << take_string(json) << "\n";
    }
    if (!quiet) {
        std::cout << "m=" << m << " hidden_layers=" << foldnet_network_hidden_relu_layers(net.get())
                  << " max_width=" << foldnet_network_max_width(net.get())
                  << " params=" << foldnet_network_param_count(net.get()) << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& net_path, double x, double y, bool quiet) {
    NetworkPtr net = load_network(net_path);
    if (!net) return 1;
    double pre_sign = 0.0;
    int label = 0;
    if (foldnet_network_eval(net.get(), x, y, &pre_sign, &label) != FOLDNET_OK) {
        std::cerr << "error: " << foldnet_last_error() << "\n";
        return 1;
    }
    if (!quiet) {
        std::cout << "class=" << (label > 0 ? "+1" : "-1") << " pre_sign=" << format_double(pre_sign)
                  << "\n";
    }
    return 0;
}

int cmd_regions(const std::string& net_path, const std::vector<double>& bbox,
                const std::string& out_path, bool count_only, bool quiet) {
    NetworkPtr net = load_network(net_path);
    if (!net) return 1;
    foldnet_decomposition* raw = nullptr;
    const foldnet_status status = foldnet_enumerate_regions(net.get(), bbox[0], bbox[1], bbox[2],
                                                            bbox[3], &raw);
    if (status == FOLDNET_ERROR_BUDGET) {
        std::cerr << "error: " << foldnet_last_error() << "\n";
        return 3;
    }
    if (status != FOLDNET_OK) {
        std::cerr << "error: " << foldnet_last_error() << "\n";
        return 1;
    }
    DecompositionPtr d(raw);

    std::string bound = "n/a";
    long long bound_value = 0;
    if (foldnet_region_upper_bound(foldnet_network_max_width(net.get()),
                                   foldnet_network_hidden_relu_layers(net.get()),
                                   &bound_value) == FOLDNET_OK) {
        bound = std::to_string(bound_value);
    }
    if (!quiet) {
        std::cout << "regions=" << foldnet_decomposition_count(d.get()) << " bound=" << bound
                  << "\n";
    }
    if (!count_only && !out_path.empty()) {
        char* json = nullptr;
        if (foldnet_decomposition_to_json(d.get(), &json) != FOLDNET_OK) {
            std::cerr << "error: " << foldnet_last_error() << "\n";
            return 1;
        }
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            foldnet_string_free(json);
            return 1;
        }
        out << take_string(json) << "\n";
    }
    return 0;
}

int cmd_verify(int m, const std::string& suite, unsigned long long seed,
               const std::string& net_path, bool as_json, bool quiet) {
    NetworkPtr override_net;
    if (!net_path.empty()) {
        override_net = load_network(net_path);
        if (!override_net) return 1;
    }
    char* report = nullptr;
    int all_passed = 0;
    if (foldnet_verify(suite.c_str(), m, seed, override_net.get(), &report, &all_passed) !=
        FOLDNET_OK) {
        std::cerr << "error: " << foldnet_last_error() << "\n";
        return 1;
    }
    const std::string report_json = take_string(report);
    if (!quiet) {
        if (as_json) {
            std::cout << report_json << "\n";
        } else {
            const nlohmann::json parsed = nlohmann::json::parse(report_json);
            for (const nlohmann::json& r : parsed) {
                std::cout << (r.at("passed").get<bool>() ? "PASS" : "FAIL") << "  "
                          << r.at("claim").get<std::string>();
                for (const auto& [key, value] : r.at("details").items()) {
                    std::cout << "  " << key << "=" << value.get<double>();
                }
                std::cout << "\n";
            }
        }
    }
    return all_passed ? 0 : 1;
}

int cmd_render(const std::string& target, int m, int n_lines, int width, int height,
               unsigned long long seed, const std::string& out_path, bool quiet) {
    if (foldnet_render(target.c_str(), m, n_lines, width, height, seed, out_path.c_str()) !=
        FOLDNET_OK) {
        std::cerr << "error: " << foldnet_last_error() << "\n";
        return 1;
    }
    if (!quiet) {
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fold-construction networks, linear-region enumeration, and claim checks"};
    app.require_subcommand(1);

    double tolerance = 1e-9;
    bool quiet = false;
    app.add_option("--tolerance", tolerance, "Geometric tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--quiet", quiet, "Suppress normal output");

    // build
    int build_m = 1;
    bool staged = false, collapsed = false;
    std::string build_out;
    CLI::App* build = app.add_subcommand("build", "Build the fold network for f_m");
    build->add_option("m", build_m, "Problem index")->required()->check(CLI::Range(1, 16));
    build->add_flag("--staged", staged, "Write the per-stage form");
    build->add_flag("--collapsed", collapsed, "Write the collapsed form (default)");
    build->add_option("--out", build_out, "Output network JSON file");

    // eval
    std::string eval_net;
    double eval_x = 0.0, eval_y = 0.0;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a network at a point");
    eval->add_option("--net", eval_net, "Network JSON file")->required();
    eval->add_option("--x", eval_x, "x coordinate")->required();
    eval->add_option("--y", eval_y, "y coordinate")->required();

    // regions
    std::string regions_net, regions_out;
    std::vector<double> bbox{-2.0, -2.0, 2.0, 2.0};
    bool count_only = false;
    CLI::App* regions = app.add_subcommand("regions", "Enumerate linear response regions");
    regions->add_option("--net", regions_net, "Network JSON file")->required();
    regions->add_option("--bbox", bbox, "Bounding box x0 y0 x1 y1")->expected(4);
    regions->add_option("--out", regions_out, "Decomposition JSON output file");
    regions->add_flag("--count-only", count_only, "Skip decomposition output");

    // verify
    int verify_m = 1;
    std::string suite = "all", verify_net;
    unsigned long long seed = 0;
    bool as_json = false;
    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--m", verify_m, "Problem index")->required()->check(CLI::Range(1, 16));
    verify->add_option("--suite", suite, "zero-error|lemma2|linearity|bounds|all")
        ->check(CLI::IsMember({"zero-error", "lemma2", "linearity", "bounds", "all"}));
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--net", verify_net, "Override network JSON file");
    verify->add_flag("--json", as_json, "Emit the JSON report");

    // render
    std::string target, render_out;
    int render_m = 2, n_lines = 4, width = 640, height = 640;
    unsigned long long render_seed = 0;
    CLI::App* render = app.add_subcommand("render", "Render an SVG figure");
    render->add_option("--target", target, "problem|fold|regions|chords|arrangement")
        ->required()
        ->check(CLI::IsMember({"problem", "fold", "regions", "chords", "arrangement"}));
    render->add_option("--m", render_m, "Problem index")->check(CLI::Range(1, 16));
    render->add_option("--n", n_lines, "Line count (arrangement)")->check(CLI::NonNegativeNumber);
    render->add_option("--width", width, "Pixel width")->check(CLI::Range(64, 16384));
    render->add_option("--height", height, "Pixel height")->check(CLI::Range(64, 16384));
    render->add_option("--seed", render_seed, "Color seed");
    render->add_option("--out", render_out, "Output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (build->parsed()) return cmd_build(build_m, staged && !collapsed, build_out, quiet);
    if (eval->parsed()) return cmd_eval(eval_net, eval_x, eval_y, quiet);
    if (regions->parsed()) return cmd_regions(regions_net, bbox, regions_out, count_only, quiet);
    if (verify->parsed()) return cmd_verify(verify_m, suite, seed, verify_net, as_json, quiet);
    if (render->parsed())
        return cmd_render(target, render_m, n_lines, width, height, render_seed, render_out, quiet);
    return 2;
}

#pragma once

#include <cstdint>
#include <string>

namespace foldnet {

struct RenderSpec {
    enum class Target {
        ProblemPolygons,
        FoldSequence,
        ResponseRegions,
        WitnessChords,
        ArrangementGrowth,
    };
    Target target = Target::ProblemPolygons;
    int m = 2;        // problem index (all targets except ArrangementGrowth)
    int n_lines = 4;  // ArrangementGrowth only
    int width = 640;
    int height = 640;
    std::uint64_t color_seed = 0;
};

/// Renders the requested figure as an SVG 1.1 document.
std::string render_svg(const RenderSpec& spec);

}  // namespace foldnet

#include "foldnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "foldnet/construction.hpp"
#include "foldnet/geometry.hpp"
#include "foldnet/regions.hpp"

namespace foldnet {

namespace {

// World-to-pixel mapping for a square world window [-extent, extent]^2.
struct Viewport {
    double extent;
    int width, height;

    double px(double x) const { return (x / extent * 0.5 + 0.5) * width; }
    double py(double y) const { return (0.5 - y / extent * 0.5) * height; }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// Injective index-to-color map so every region gets a distinct fill.
std::string palette_color(std::size_t index, std::uint64_t seed) {
    const std::uint64_t mixed = (index + seed * 0x9e3779b97f4a7c15ULL) * 2654435761ULL;
    const unsigned rgb = static_cast<unsigned>(mixed & 0xFFFFFFu);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%06x", rgb);
    return buf;
}

class SvgDoc {
public:
    SvgDoc(int width, int height) {
        ss_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
            << "\">\n";
    }

    void polygon(const std::vector<Point2>& pts, const Viewport& vp, const std::string& fill,
                 const std::string& stroke, double stroke_width = 1.0) {
        ss_ << "<polygon points=\"";
        for (const Point2& p : pts) {
            ss_ << fmt(vp.px(p.x)) << "," << fmt(vp.py(p.y)) << " ";
        }
        ss_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
            << stroke_width << "\"/>\n";
    }

    void line(const Point2& a, const Point2& b, const Viewport& vp, const std::string& stroke,
              double stroke_width = 1.5) {
        ss_ << "<line x1=\"" << fmt(vp.px(a.x)) << "\" y1=\"" << fmt(vp.py(a.y)) << "\" x2=\""
            << fmt(vp.px(b.x)) << "\" y2=\"" << fmt(vp.py(b.y)) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"" << stroke_width << "\"/>\n";
    }

    void circle(const Point2& c, double r_px, const Viewport& vp, const std::string& fill,
                const std::string& stroke = "none") {
        ss_ << "<circle cx=\"" << fmt(vp.px(c.x)) << "\" cy=\"" << fmt(vp.py(c.y)) << "\" r=\""
            << fmt(r_px) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }

    void text(double x_px, double y_px, const std::string& content) {
        ss_ << "<text x=\"" << fmt(x_px) << "\" y=\"" << fmt(y_px)
            << "\" font-family=\"sans-serif\" font-size=\"16\">" << content << "</text>\n";
    }

    std::string finish() {
        ss_ << "</svg>\n";
        return ss_.str();
    }

private:
    std::ostringstream ss_;
};

std::string render_problem(const RenderSpec& spec) {
    SvgDoc doc(spec.width, spec.height);
    const Viewport vp{1.3, spec.width, spec.height};
    doc.circle({0, 0}, vp.px(1.0) - vp.px(0.0), vp, "none", "#bbbbbb");
    const ConvexPolygon poly = regular_polygon(spec.m);
    doc.polygon(poly.vertices(), vp, "#dce7f5", "#2b5797", 2.0);
    doc.text(10, 24, "P_" + std::to_string(spec.m) + " (" +
                         std::to_string(poly.size()) + " edges)");
    return doc.finish();
}

std::string render_fold(const RenderSpec& spec) {
    const std::vector<Stage> stages = build_prefix(spec.m);
    const std::vector<Point2> samples{{-0.9, 0.35}, {0.55, -0.75}, {0.15, 0.95}};

    // One panel per stage boundary: raw input, then the image after each stage.
    const int panels = static_cast<int>(stages.size()) + 1;
    const int cols = std::min(panels, 4);
    const int rows = (panels + cols - 1) / cols;
    const int cell_w = spec.width / cols;
    const int cell_h = spec.height / rows;

    SvgDoc doc(spec.width, spec.height);
    std::ostringstream body;
    for (int panel = 0; panel < panels; ++panel) {
        const int cx = (panel % cols) * cell_w;
        const int cy = (panel / cols) * cell_h;
        const Viewport vp{1.4, cell_w, cell_h};
        body << "<g transform=\"translate(" << cx << "," << cy << ")\">\n";
        // axes
        body << "<line x1=\"0\" y1=\"" << cell_h / 2 << "\" x2=\"" << cell_w << "\" y2=\""
             << cell_h / 2 << "\" stroke=\"#dddddd\"/>\n";
        body << "<line x1=\"" << cell_w / 2 << "\" y1=\"0\" x2=\"" << cell_w / 2 << "\" y2=\""
             << cell_h << "\" stroke=\"#dddddd\"/>\n";
        for (std::size_t s = 0; s < samples.size(); ++s) {
            const std::vector<Stage> prefix(stages.begin(), stages.begin() + panel);
            const std::vector<double> img = evaluate_stages(prefix, samples[s]);
            // Post-ReLU images inside 3/4-wide fold blocks have no planar
            // meaning; project the first two coordinates.
            const Point2 q{img[0], img.size() > 1 ? img[1] : 0.0};
            body << "<circle cx=\"" << fmt(vp.px(q.x)) << "\" cy=\"" << fmt(vp.py(q.y))
                 << "\" r=\"4\" fill=\"" << palette_color(s * 97 + 11, spec.color_seed)
                 << "\"/>\n";
        }
        body << "<text x=\"6\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">stage "
             << panel << "</text>\n";
        body << "</g>\n";
    }
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
        << spec.height << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
}

std::string render_regions(const RenderSpec& spec) {
    const MlpNetwork net = collapse(build_network(spec.m));
    const Decomposition d =
        enumerate_regions(net, ConvexPolygon::axis_aligned_box(-2, -2, 2, 2));
    SvgDoc doc(spec.width, spec.height);
    const Viewport vp{2.0, spec.width, spec.height};
    for (std::size_t i = 0; i < d.regions().size(); ++i) {
        doc.polygon(d.regions()[i].polygon.vertices(), vp, palette_color(i, spec.color_seed),
                    "#333333", 0.5);
    }
    doc.text(10, 24, std::to_string(d.regions().size()) + " regions");
    return doc.finish();
}

std::string render_chords(const RenderSpec& spec) {
    SvgDoc doc(spec.width, spec.height);
    const Viewport vp{1.3, spec.width, spec.height};
    const ProblemInstance problem(spec.m);
    doc.polygon(problem.polygon().vertices(), vp, "#f2f2f2", "#2b5797", 2.0);
    const std::vector<Point2> witnesses = problem.v_even_prime(0.05);
    if (witnesses.size() >= 2) {
        doc.line(witnesses[0], witnesses[1], vp, "#2e8b57", 2.0);
    }
    for (const Point2& w : witnesses) {
        doc.circle(w, 4.0, vp, "#c0392b");
    }
    doc.text(10, 24, "V'_even, |V'_even| = " + std::to_string(witnesses.size()));
    return doc.finish();
}

std::string render_arrangement(const RenderSpec& spec) {
    if (spec.n_lines < 0) throw std::invalid_argument("render: n must be >= 0");
    SvgDoc doc(spec.width, spec.height);
    const Viewport vp{1.5, spec.width, spec.height};
    std::mt19937_64 rng(spec.color_seed + 1);
    std::uniform_real_distribution<double> angle(0.0, 3.14159);
    std::uniform_real_distribution<double> offset(-0.6, 0.6);
    for (int i = 0; i < spec.n_lines; ++i) {
        const double t = angle(rng);
        const double o = offset(rng);
        const Point2 dir{std::cos(t), std::sin(t)};
        const Point2 base{-dir.y * o, dir.x * o};
        doc.line({base.x - 5 * dir.x, base.y - 5 * dir.y}, {base.x + 5 * dir.x, base.y + 5 * dir.y},
                 vp, palette_color(static_cast<std::size_t>(i), spec.color_seed), 1.5);
    }
    doc.text(10, 24,
             std::to_string(line_arrangement_max_regions(spec.n_lines)) + " regions");
    return doc.finish();
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
    if (spec.width < 64 || spec.height < 64) {
        throw std::invalid_argument("render: dimensions must be >= 64");
    }
    switch (spec.target) {
        case RenderSpec::Target::ProblemPolygons:
            return render_problem(spec);
        case RenderSpec::Target::FoldSequence:
            return render_fold(spec);
        case RenderSpec::Target::ResponseRegions:
            return render_regions(spec);
        case RenderSpec::Target::WitnessChords:
            return render_chords(spec);
        case RenderSpec::Target::ArrangementGrowth:
            return render_arrangement(spec);
    }
    throw std::invalid_argument("render: unknown target");
}

}  // namespace foldnet

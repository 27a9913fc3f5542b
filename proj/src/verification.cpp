#include "foldnet/verification.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace foldnet {

double width_lower_bound(int m, int d) {
    if (m < 1 || d < 1) throw std::invalid_argument("width_lower_bound: m, d must be >= 1");
    return std::exp2(static_cast<double>(m) / (2.0 * d));
}

VerificationReport verify_lemma2(int m, double epsilon, const Decomposition& decomposition) {
    const ProblemInstance problem(m);
    const std::vector<Point2> witnesses = problem.v_even_prime(epsilon);

    int misclassified = 0;
    std::set<std::size_t> indices;
    for (const Point2& p : witnesses) {
        if (!decomposition.bbox().contains(p)) {
            throw std::domain_error("verify_lemma2: witness point outside bounding box");
        }
        if (decomposition.net().classify(p) != -1) ++misclassified;
        indices.insert(decomposition.region_of_point(p));
    }

    int chords_missing = 0;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
            if (!problem.chord_crosses_boundary(witnesses[i], witnesses[j])) ++chords_missing;
        }
    }

    const double expected = std::exp2(m);
    VerificationReport report;
    report.claim = "lemma2-witnesses-m" + std::to_string(m);
    report.details["witness_count"] = static_cast<double>(witnesses.size());
    report.details["misclassified"] = misclassified;
    report.details["distinct_regions"] = static_cast<double>(indices.size());
    report.details["region_count"] = static_cast<double>(decomposition.regions().size());
    report.details["chords_missing_boundary"] = chords_missing;
    report.passed = misclassified == 0 &&
                    static_cast<double>(indices.size()) == expected &&
                    static_cast<double>(decomposition.regions().size()) >= expected &&
                    chords_missing == 0;
    return report;
}

VerificationReport verify_zero_error(const MlpNetwork& net, int m, int n_random,
                                     std::uint64_t seed, double margin) {
    if (margin < 0.0) throw std::invalid_argument("verify_zero_error: margin must be >= 0");
    const ProblemInstance problem(m);

    std::vector<Point2> points;
    points.reserve(static_cast<std::size_t>(n_random) + 4 * problem.edge_count());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int i = 0; i < n_random; ++i) {
        points.push_back({coord(rng), coord(rng)});
    }
    // Adversarial set: vertices and edge midpoints nudged just inside and
    // just outside the boundary.
    const std::vector<Point2>& vs = problem.polygon().vertices();
    const std::size_t n = vs.size();
    for (double scale : {1.0 - 10.0 * margin, 1.0 + 10.0 * margin}) {
        for (std::size_t i = 0; i < n; ++i) {
            points.push_back({vs[i].x * scale, vs[i].y * scale});
            const Point2 mid{0.5 * (vs[i].x + vs[(i + 1) % n].x),
                             0.5 * (vs[i].y + vs[(i + 1) % n].y)};
            points.push_back({mid.x * scale, mid.y * scale});
        }
    }

    int mismatches = 0;
    long long checked = 0;
    for (const Point2& p : points) {
        const Label truth = problem.classify_point(p);
        if (truth == Label::Boundary || problem.boundary_distance(p) < margin) continue;
        ++checked;
        if (net.classify(p) != static_cast<int>(truth)) ++mismatches;
    }

    VerificationReport report;
    report.claim = "zero-error-m" + std::to_string(m);
    report.details["sampled"] = static_cast<double>(points.size());
    report.details["checked"] = static_cast<double>(checked);
    report.details["mismatches"] = mismatches;
    report.passed = mismatches == 0 && checked > 0;
    return report;
}

VerificationReport verify_piecewise_linearity(const MlpNetwork& net, const Decomposition& d,
                                              int samples_per_region, std::uint64_t seed) {
    if (samples_per_region < 3) {
        throw std::invalid_argument("verify_piecewise_linearity: need >= 3 samples per region");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double max_deviation = 0.0;

    for (const Region& region : d.regions()) {
        const std::vector<Point2>& vs = region.polygon.vertices();
        const Point2 centroid = region.polygon.centroid();
        // Interior point: convex mix of the centroid and a random vertex blend.
        auto interior = [&]() -> Point2 {
            double wsum = 0.0;
            Point2 p{0.0, 0.0};
            for (const Point2& v : vs) {
                const double w = unit(rng);
                p.x += w * v.x;
                p.y += w * v.y;
                wsum += w;
            }
            p.x /= wsum;
            p.y /= wsum;
            const double t = 0.5 * unit(rng);  // pull toward the centroid
            return {centroid.x + (1.0 - t) * (p.x - centroid.x),
                    centroid.y + (1.0 - t) * (p.y - centroid.y)};
        };
        for (int s = 0; s < samples_per_region; ++s) {
            const Point2 p = interior();
            const Point2 q = interior();
            const double lambda = unit(rng);
            const Point2 r{lambda * p.x + (1.0 - lambda) * q.x,
                           lambda * p.y + (1.0 - lambda) * q.y};
            const double expected = lambda * net.evaluate_pre_sign(p) +
                                    (1.0 - lambda) * net.evaluate_pre_sign(q);
            max_deviation = std::max(max_deviation,
                                     std::abs(net.evaluate_pre_sign(r) - expected));
        }
    }

    VerificationReport report;
    report.claim = "piecewise-linearity";
    report.details["regions"] = static_cast<double>(d.regions().size());
    report.details["max_deviation"] = max_deviation;
    report.passed = max_deviation <= 1e-8;
    return report;
}

VerificationReport verify_bound_consistency(const std::vector<int>& m_range, int d) {
    VerificationReport report;
    report.claim = "bound-consistency-d" + std::to_string(d);
    int failures = 0;
    for (int m : m_range) {
        const double w_min = width_lower_bound(m, d);
        const int w = static_cast<int>(std::ceil(w_min - 1e-12));
        const long long bound = region_upper_bound(w, d);
        if (static_cast<double>(bound) < std::exp2(m)) ++failures;
    }
    report.details["checked"] = static_cast<double>(m_range.size());
    report.details["failures"] = failures;
    report.passed = failures == 0 && !m_range.empty();
    return report;
}

}  // namespace foldnet

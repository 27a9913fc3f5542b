#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "foldnet/regions.hpp"

namespace foldnet {

struct VerificationReport {
    std::string claim;
    bool passed = false;
    std::map<std::string, double> details;
};

/// 2^(m/(2d)): minimal width a depth-d network needs for f_m.
double width_lower_bound(int m, int d);

/// Checks the witness procedure: 2^m outward-pushed even vertices classify
/// -1, land in pairwise-distinct regions, and every chord between them
/// crosses the class boundary.
VerificationReport verify_lemma2(int m, double epsilon, const Decomposition& decomposition);

/// Compares the network against the ground-truth polygon classifier on
/// seeded random points plus an adversarial vertex/midpoint set, excluding
/// a margin band around the boundary.
VerificationReport verify_zero_error(const MlpNetwork& net, int m, int n_random,
                                     std::uint64_t seed, double margin);

/// Samples interior triples per region and checks the affine interpolation
/// identity of the pre-sign value within 1e-8.
VerificationReport verify_piecewise_linearity(const MlpNetwork& net, const Decomposition& d,
                                              int samples_per_region, std::uint64_t seed);

/// Pure arithmetic: ceil(width_lower_bound)^(2d) >= 2^m for each m.
VerificationReport verify_bound_consistency(const std::vector<int>& m_range, int d);

}  // namespace foldnet

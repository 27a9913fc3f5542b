#include <cmath>

#include <doctest.h>

#include "foldnet/construction.hpp"
#include "foldnet/verification.hpp"

using namespace foldnet;

namespace {

Decomposition decompose(const MlpNetwork& net) {
    return enumerate_regions(net, ConvexPolygon::axis_aligned_box(-2, -2, 2, 2));
}

MlpNetwork sign_flipped(const MlpNetwork& net) {
    const OutputHead h = net.head();
    return MlpNetwork(net.layers(), OutputHead{-h.a, -h.b, -h.c});
}

// Drops the last rotate + foldX round but keeps the original head.
MlpNetwork dropped_final_fold(int m) {
    const StagedNetwork full = build_network(m);
    std::vector<Stage> stages = full.stages();
    REQUIRE(stages.size() >= 7);
    stages.resize(stages.size() - 4);
    return collapse(StagedNetwork(std::move(stages), full.head()));
}

}  // namespace

TEST_CASE("width_lower_bound") {
    CHECK(width_lower_bound(4, 2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(width_lower_bound(6, 3) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(width_lower_bound(20, 2) == doctest::Approx(32.0).epsilon(1e-15));
    CHECK_THROWS_AS(width_lower_bound(0, 1), std::invalid_argument);

    // monotone in m, antitone in d
    for (int d = 1; d <= 4; ++d) {
        for (int m = 1; m <= 20; ++m) {
            CHECK(width_lower_bound(m + 1, d) > width_lower_bound(m, d));
            CHECK(width_lower_bound(m, d + 1) < width_lower_bound(m, d));
        }
    }
}

TEST_CASE("verify_lemma2") {
    SUBCASE("m=1") {
        const MlpNetwork net = collapse(build_network(1));
        const VerificationReport r = verify_lemma2(1, 1e-3, decompose(net));
        CHECK(r.passed);
        CHECK(r.details.at("witness_count") == 2);
        CHECK(r.details.at("distinct_regions") == 2);
    }
    SUBCASE("m=3") {
        const MlpNetwork net = collapse(build_network(3));
        const VerificationReport r = verify_lemma2(3, 1e-3, decompose(net));
        CHECK(r.passed);
        CHECK(r.details.at("distinct_regions") == 8);
        CHECK(r.details.at("chords_missing_boundary") == 0);
    }
    SUBCASE("sign-flipped head fails the class check") {
        const MlpNetwork bad = sign_flipped(collapse(build_network(2)));
        const VerificationReport r = verify_lemma2(2, 1e-3, decompose(bad));
        CHECK(!r.passed);
        CHECK(r.details.at("misclassified") > 0);
    }
}

TEST_CASE("verify_zero_error") {
    const MlpNetwork net = collapse(build_network(5));
    const VerificationReport good = verify_zero_error(net, 5, 100000, 7, 1e-6);
    CHECK(good.passed);
    CHECK(good.details.at("mismatches") == 0);

    CHECK(net.classify({0, 0}) == 1);

    const MlpNetwork shifted(net.layers(),
                             OutputHead{net.head().a, net.head().b, net.head().c + 10});
    const VerificationReport bad = verify_zero_error(shifted, 5, 10000, 7, 1e-6);
    CHECK(!bad.passed);
    CHECK(bad.details.at("mismatches") > 0);
}

TEST_CASE("verify_zero_error is reproducible for a fixed seed") {
    const MlpNetwork net = collapse(build_network(3));
    const VerificationReport a = verify_zero_error(net, 3, 5000, 99, 1e-6);
    const VerificationReport b = verify_zero_error(net, 3, 5000, 99, 1e-6);
    CHECK(a.details == b.details);
}

TEST_CASE("verify_piecewise_linearity") {
    const MlpNetwork net = collapse(build_network(4));
    const VerificationReport r = verify_piecewise_linearity(net, decompose(net), 9, 0);
    CHECK(r.passed);
    CHECK(r.details.at("max_deviation") <= 1e-8);

    // a network with no ReLU layer is globally affine
    const MlpNetwork affine({AffineLayer(Matrix(2, 2, {1, 0, 0, 1}), {0, 0})}, OutputHead{1, 2, 3});
    const Decomposition one = decompose(affine);
    REQUIRE(one.regions().size() == 1);
    const VerificationReport exact = verify_piecewise_linearity(affine, one, 9, 0);
    CHECK(exact.passed);
}

TEST_CASE("verify_bound_consistency") {
    std::vector<int> ms;
    for (int m = 1; m <= 30; ++m) ms.push_back(m);
    for (int d = 1; d <= 4; ++d) {
        CHECK(verify_bound_consistency(ms, d).passed);
    }
    // m=6, d=1: w_min = 8 exactly, 8^2 = 64 = 2^6
    CHECK(width_lower_bound(6, 1) == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("lemma2 scale law on constructed networks") {
    for (int m = 1; m <= 6; ++m) {
        const MlpNetwork net = collapse(build_network(m));
        const VerificationReport r = verify_lemma2(m, 1e-3, decompose(net));
        CHECK(r.passed);
        CHECK(r.details.at("distinct_regions") == std::exp2(m));
    }
}

TEST_CASE("negative controls fail zero-error") {
    for (int m = 2; m <= 4; ++m) {
        const MlpNetwork flipped = sign_flipped(collapse(build_network(m)));
        CHECK(!verify_zero_error(flipped, m, 20000, 1, 1e-6).passed);
        CHECK(!verify_zero_error(dropped_final_fold(m), m, 20000, 1, 1e-6).passed);
    }
}

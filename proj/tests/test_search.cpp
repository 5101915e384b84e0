#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pframe/rng.hpp"
#include "pframe/search.hpp"

using namespace pframe;

namespace {

constexpr double kPi = 3.14159265358979323846;

OptimizerConfig cfg_with_seed(std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.seed = seed;
    return cfg;
}

// Exhaustive oracle for the rotated-ONB family in dim 2: grid over the
// rotation angle and the evaluation angle.
double rotated_grid_min(double angle_step) {
    double best = std::numeric_limits<double>::infinity();
    for (double rot = 0.0; rot < kPi / 2; rot += angle_step) { // symmetry: period pi/2
        const double cr = std::cos(rot), sr = std::sin(rot);
        for (double th = 0.0; th < 2 * kPi; th += angle_step) {
            const double c = std::cos(th), s = std::sin(th);
            const double a0 = c * c, a1 = s * s;
            const double b0c = cr * c + sr * s, b1c = -sr * c + cr * s;
            const double b0 = b0c * b0c, b1 = b1c * b1c;
            double lhs = 0.0;
            for (double t : {a0, a1, b0, b1})
                if (t > 1e-300) lhs -= t * std::log(t);
            const double m = std::sqrt(std::max(a0, a1) * std::max(b0, b1));
            best = std::min(best, lhs + 2.0 * std::log(m));
        }
    }
    return best;
}

} // namespace

TEST_CASE("equality gap on fixed configurations") {
    const auto coord = make_coordinate_frame(2.0, 2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(equality_gap(coord, coord, make_vector({s, s})) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // oracle: 2 H(0.9, 0.1) + 2 log 0.9 evaluated directly
    const double H = -(0.9 * std::log(0.9) + 0.1 * std::log(0.1));
    const double oracle = 2.0 * H + 2.0 * std::log(0.9);
    CHECK(oracle == doctest::Approx(0.43944491546724385).epsilon(1e-12));
    CHECK(equality_gap(coord, coord, make_vector({std::sqrt(0.9), std::sqrt(0.1)})) ==
          doctest::Approx(oracle).epsilon(1e-12));

    const auto std2 = make_standard_frame(2);
    const auto four2 = make_fourier_frame(2);
    const double th = kPi / 8.0;
    // difference of the frozen certificate values: 0.832991... - 0.316694...
    CHECK(equality_gap(std2, four2, make_vector({std::cos(th), std::sin(th)})) ==
          doctest::Approx(0.5162966937586251).epsilon(1e-9));
}

TEST_CASE("equality gap is nonnegative on random instances") {
    GaussianSampler g(3);
    const auto f = make_random_parseval2(4, 3, 5);
    const auto fr = make_random_parseval2(5, 3, 6);
    for (int rep = 0; rep < 200; ++rep) {
        Vector x;
        for (int i = 0; i < 3; ++i) x.coords.emplace_back(g(), 0.0);
        if (norm(f.space, x) < 1e-8) continue;
        CHECK(equality_gap(f, fr, x) >= -1e-9);
    }
}

TEST_CASE("family parameter validation") {
    FamilyParams bad;
    bad.family = FrameFamily::RotatedOnb;
    bad.dim = 2;
    bad.parameters = {7.0}; // out of [0, 2*pi)
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    FamilyParams w;
    w.family = FrameFamily::WeightedCoordinate;
    w.dim = 2;
    w.p = 2.0;
    w.copies = {2, 1};
    w.parameters = {0.6, 0.3, 1.0}; // first group sums to 0.9
    CHECK_THROWS_AS(w.validate(), ConfigError);
    w.parameters = {0.6, 0.4, 1.0};
    CHECK_NOTHROW(w.validate());
    const auto [f, g] = realize_family(w);
    CHECK(f.size() == 3);
    CHECK(parseval_defect(f, 100, 1) <= 1e-12);
}

TEST_CASE("weighted coordinate family reaches a near-zero gap at the uniform point") {
    FamilyParams fam;
    fam.family = FrameFamily::WeightedCoordinate;
    fam.dim = 2;
    fam.p = 2.0;
    fam.copies = {1, 1};
    fam.parameters = {1.0, 1.0};
    const auto rec = minimize_gap(fam, cfg_with_seed(7));
    CHECK(rec.gap >= -1e-9);
    CHECK(rec.gap <= 1e-6);
    CHECK(rec.certificate.passes.all());
}

TEST_CASE("rotated ONB family: minimized gap is consistent with the grid oracle") {
    FamilyParams fam;
    fam.family = FrameFamily::RotatedOnb;
    fam.dim = 2;
    fam.parameters = {0.0};
    const auto rec = minimize_gap(fam, cfg_with_seed(8));
    const double grid = rotated_grid_min(1e-3);
    CHECK(rec.gap >= -1e-9);
    CHECK(rec.gap <= grid + 1e-4); // the descent should do at least as well as the grid
}

TEST_CASE("minimize_gap is reproducible given the seed") {
    FamilyParams fam;
    fam.family = FrameFamily::RotatedOnb;
    fam.dim = 2;
    fam.parameters = {1.0};
    const auto a = minimize_gap(fam, cfg_with_seed(9));
    const auto b = minimize_gap(fam, cfg_with_seed(9));
    CHECK(a.gap == b.gap);
    CHECK(a.params.parameters[0] == b.params.parameters[0]);
}

TEST_CASE("Renyi sweep: uniform curve is flat at log(nm)") {
    const auto coord = make_coordinate_frame(2.0, 3);
    Vector ones;
    ones.coords.assign(3, Complex(1.0, 0.0));
    const double alphas[] = {0.25, 0.5, 0.999, 1.001, 2.0, 3.0};
    const auto curve = renyi_sweep(coord, coord, ones, alphas);
    for (const auto& [a, v] : curve) CHECK(v == doctest::Approx(std::log(9.0)).epsilon(1e-9));
}

TEST_CASE("Renyi sweep approaches the Shannon sum near alpha = 1 and decreases") {
    GaussianSampler g(10);
    const auto f = make_standard_frame(3);
    const auto h = make_fourier_frame(3);
    for (int rep = 0; rep < 100; ++rep) {
        Vector x;
        for (int i = 0; i < 3; ++i) x.coords.emplace_back(g(), g());
        const double shannon =
            p_shannon_entropy(f, x).value + p_shannon_entropy(h, x).value;
        const double alphas[] = {0.5, 0.9, 0.999, 1.001, 2.0, 4.0};
        const auto curve = renyi_sweep(f, h, x, alphas);
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& [a, v] : curve) {
            CHECK(v <= prev + 1e-9);
            prev = v;
            if (std::fabs(a - 1.0) < 2e-3) CHECK(std::fabs(v - shannon) <= 1e-2);
        }
    }
    const double bad_alpha[] = {1.0};
    Vector ones;
    ones.coords.assign(3, Complex(1.0, 0.0));
    CHECK_THROWS_AS(renyi_sweep(f, h, ones, bad_alpha), ConfigError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pframe/certify.hpp"
#include "pframe/rng.hpp"

using namespace pframe;

namespace {

constexpr double kPi = 3.14159265358979323846;

OptimizerConfig cfg_with_seed(std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.seed = seed;
    return cfg;
}

// Independent oracle for the standard-vs-Fourier(2) pair: walk the real
// circle and evaluate max(|cos|,|sin|) * max(|cos+sin|,|cos-sin|)/sqrt(2).
double circle_grid_sup(int steps) {
    double best = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double th = 2.0 * kPi * i / steps;
        const double c = std::cos(th), s = std::sin(th);
        const double a = std::max(std::fabs(c), std::fabs(s));
        const double b = std::max(std::fabs(c + s), std::fabs(c - s)) / std::sqrt(2.0);
        best = std::max(best, a * b);
    }
    return best;
}

} // namespace

TEST_CASE("pointwise max product on fixed points") {
    const auto coord = make_coordinate_frame(2.0, 2);
    const double s = 1.0 / std::sqrt(2.0);
    // symmetry saturates the floor (nm)^(-1/2) = 1/2
    CHECK(pointwise_max_product(coord, coord, make_vector({s, s})) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pointwise_max_product(coord, coord, make_vector({1.0, 0.0})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // scale invariance (normalized internally)
    CHECK(pointwise_max_product(coord, coord, make_vector({3.0, 3.0})) ==
          doctest::Approx(0.5).epsilon(1e-12));

    const auto std2 = make_standard_frame(2);
    const auto four2 = make_fourier_frame(2);
    const double th = kPi / 8.0;
    const Vector x = make_vector({std::cos(th), std::sin(th)});
    const double c2 = std::cos(th) * std::cos(th);
    CHECK(pointwise_max_product(std2, four2, x) == doctest::Approx(c2).epsilon(1e-12));

    CHECK_THROWS_AS(pointwise_max_product(coord, coord, make_vector({0.0, 0.0})), InputError);
    CHECK_THROWS_AS(pointwise_max_product(coord, make_coordinate_frame(3.0, 2), x), InputError);
    CHECK_THROWS_AS(pointwise_max_product(std2, make_fourier_frame(3), x), InputError);
}

TEST_CASE("pointwise floor holds at every unit sample") {
    GaussianSampler g(1);
    const struct {
        AnalysisFrame f, fg;
    } pairs[] = {
        {make_coordinate_frame(1.0, 3), make_split_coordinate_frame(1.0, 3, 5)},
        {make_coordinate_frame(3.0, 3), make_coordinate_frame(3.0, 3)},
        {make_standard_frame(4), make_fourier_frame(4)},
        {make_random_parseval2(5, 3, 1), make_random_parseval2(6, 3, 2)},
    };
    for (const auto& pr : pairs) {
        const double nm = double(pr.f.size()) * double(pr.fg.size());
        const auto samples = sample_unit_sphere(pr.f.space, 200, 77);
        for (const auto& z : samples) {
            const double m = pointwise_max_product(pr.f, pr.fg, z);
            CHECK(nm * std::pow(m, pr.f.p) >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("sup estimate: coordinate pair attains 1 at a basis direction") {
    const auto coord = make_coordinate_frame(2.0, 2);
    const auto est = estimate_sup_c(coord, coord, cfg_with_seed(5));
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-9));
    // witness is (up to sign/phase) a basis vector
    double mx = 0.0;
    for (const auto& z : est.witness.coords) mx = std::max(mx, std::abs(z));
    CHECK(mx == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sup estimate matches the circle-grid oracle for standard vs fourier(2)") {
    const double oracle = circle_grid_sup(2000000);
    CHECK(oracle == doctest::Approx(0.8535533905932737).epsilon(1e-9)); // (1+1/sqrt(2))/2

    const auto std2 = make_standard_frame(2);
    const auto four2 = make_fourier_frame(2);
    const auto est = estimate_sup_c(std2, four2, cfg_with_seed(7));
    CHECK(est.value == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(std::fabs(est.value - 0.8535533905932737) <= 1e-6);
}

TEST_CASE("sup estimate never falls below the theorem floor") {
    const struct {
        AnalysisFrame f, g;
    } pairs[] = {
        {make_coordinate_frame(1.5, 2), make_split_coordinate_frame(1.5, 2, 4)},
        {make_fourier_frame(3), make_fourier_frame(3)},
        {make_random_parseval2(4, 2, 3), make_random_parseval2(4, 2, 4)},
    };
    std::uint64_t seed = 30;
    for (const auto& pr : pairs) {
        const double nm = double(pr.f.size()) * double(pr.g.size());
        const auto est = estimate_sup_c(pr.f, pr.g, cfg_with_seed(seed++));
        CHECK(est.value >= std::pow(nm, -1.0 / pr.f.p) - 1e-9);
    }
}

TEST_CASE("certificate at (cos pi/8, sin pi/8) for standard vs fourier(2)") {
    const auto std2 = make_standard_frame(2);
    const auto four2 = make_fourier_frame(2);
    const double th = kPi / 8.0;
    const Vector x = make_vector({std::cos(th), std::sin(th)});
    const auto cert = certify_point(std2, four2, x, cfg_with_seed(9));

    // oracle values by direct arithmetic (see entropy tests for lhs)
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    const double lhs = -2.0 * (c2 * std::log(c2) + s2 * std::log(s2));
    CHECK(lhs == doctest::Approx(0.832991061399375).epsilon(1e-12));

    CHECK(cert.lhs == doctest::Approx(lhs).epsilon(1e-12));
    CHECK(cert.upper == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(cert.m_point == doctest::Approx(c2).epsilon(1e-12));
    CHECK(cert.rhs_point == doctest::Approx(-2.0 * std::log(c2)).epsilon(1e-12));
    CHECK(cert.rhs_point == doctest::Approx(0.31669436764074993).epsilon(1e-9));
    CHECK(cert.floor == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cert.in_support);
    CHECK(cert.passes.upper_ok);
    CHECK(cert.passes.point_ok);
    CHECK(cert.passes.global_ok);
    CHECK(cert.passes.floor_ok);
    CHECK(cert.passes.all());
    // m_point <= c_hat because x joins the start set
    CHECK(cert.m_point <= cert.c_hat + 1e-12);
    CHECK(cert.rhs_global <= cert.rhs_point + 1e-12);
}

TEST_CASE("uniform point saturates the pointwise bound for the coordinate pair") {
    const auto coord = make_coordinate_frame(2.0, 2);
    const double s = 1.0 / std::sqrt(2.0);
    const auto cert = certify_point(coord, coord, make_vector({s, s}), cfg_with_seed(11));
    CHECK(cert.lhs == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(cert.m_point == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cert.rhs_point == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(cert.floor == doctest::Approx(cert.m_point).epsilon(1e-12));
    CHECK(cert.passes.all());
}

TEST_CASE("random Parseval-2 pairs certify at random points") {
    std::uint64_t sample_seed = 500;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = make_random_parseval2(5, 3, seed);
        const auto g = make_random_parseval2(5, 3, seed + 100);
        const auto report = counterexample_scan(f, g, 100, sample_seed++);
        CHECK(report.violations.empty());
        for (const auto& cert : report.certificates) {
            CHECK(cert.m_point <= cert.c_hat + 1e-12);
            CHECK(cert.rhs_global <= cert.rhs_point + 1e-12);
            CHECK(cert.m_point >= cert.floor - 1e-9);
        }
    }
}

TEST_CASE("scan flags a deliberately broken frame") {
    auto f = make_coordinate_frame(2.0, 2);
    for (auto& fn : f.functionals)
        for (auto& z : fn.coords) z *= 0.4; // far from Parseval
    const auto g = make_coordinate_frame(2.0, 2);
    const auto report = counterexample_scan(f, g, 200, 3);
    CHECK_FALSE(report.violations.empty());
}

TEST_CASE("scan is deterministic in (frames, cfg, seed)") {
    const auto f = make_standard_frame(3);
    const auto g = make_fourier_frame(3);
    const auto a = counterexample_scan(f, g, 50, 21);
    const auto b = counterexample_scan(f, g, 50, 21);
    REQUIRE(a.certificates.size() == b.certificates.size());
    CHECK(a.c_hat_base == b.c_hat_base);
    for (std::size_t i = 0; i < a.certificates.size(); ++i) {
        CHECK(a.certificates[i].lhs == b.certificates[i].lhs);
        CHECK(a.certificates[i].m_point == b.certificates[i].m_point);
        CHECK(a.certificates[i].c_hat == b.certificates[i].c_hat);
    }
}

TEST_CASE("mutual coherence and overlap bound on fixed bases") {
    const auto std2 = make_standard_frame(2);
    const auto four2 = make_fourier_frame(2);
    CHECK(mutual_coherence(std2, four2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(buzano_overlap_bound(std2, four2) ==
          doctest::Approx(0.8535533905932737).epsilon(1e-12));
    CHECK(buzano_overlap_bound(std2, std2) == doctest::Approx(1.0).epsilon(1e-12));

    const auto std4 = make_standard_frame(4);
    const auto four4 = make_fourier_frame(4);
    CHECK(buzano_overlap_bound(std4, four4) == doctest::Approx(0.75).epsilon(1e-12));

    // rejects p != 2 and non-orthonormal inputs
    CHECK_THROWS_AS(buzano_overlap_bound(make_coordinate_frame(3.0, 2), std2), InputError);
    CHECK_THROWS_AS(buzano_overlap_bound(make_random_parseval2(5, 3, 0),
                                         make_random_parseval2(3, 3, 0)),
                    ConfigError); // 5x3 rows are not a basis
}

TEST_CASE("overlap bound dominates the sup estimate for random ONB pairs") {
    std::uint64_t seed = 1000;
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        for (int rep = 0; rep < 13; ++rep) {
            const Field field = rep % 2 == 0 ? Field::Real : Field::Complex;
            const auto tau = make_random_parseval2(dim, dim, seed++, field);
            const auto omega = make_random_parseval2(dim, dim, seed++, field);
            REQUIRE(is_orthonormal_frame(tau));
            REQUIRE(is_orthonormal_frame(omega));
            const double bound = buzano_overlap_bound(tau, omega);
            const auto est = estimate_sup_c(tau, omega, cfg_with_seed(seed++));
            CHECK(est.value <= bound + 1e-6);
        }
    }
}

TEST_CASE("rhs_global is strictly positive whenever c_hat < 1") {
    const auto std3 = make_standard_frame(3);
    const auto four3 = make_fourier_frame(3);
    const auto cert = certify_point(std3, four3, make_vector({0.3, 0.5, 0.9}), cfg_with_seed(2));
    CHECK(cert.c_hat < 1.0);
    CHECK(cert.rhs_global > 0.0);
}

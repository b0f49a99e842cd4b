#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "anisogpe/hermite.hpp"
#include "support.hpp"

using namespace anisogpe;
using support::kPi;

TEST_CASE("chi_0 at the origin") {
    std::vector<double> out(1);
    hermite_functions(0.0, out);
    CHECK(out[0] == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));
    CHECK(out[0] == doctest::Approx(0.7511255).epsilon(1e-7));
}

TEST_CASE("recurrence agrees with the reference and has the +z^n sign") {
    std::vector<double> out(40);
    for (double z : {-3.5, -0.7, 0.0, 0.3, 2.25, 6.0}) {
        hermite_functions(z, out);
        for (int n = 0; n < 40; ++n) CHECK(out[n] == doctest::Approx(support::chi_ref(n, z)).epsilon(1e-12));
    }
    hermite_functions(9.0, out);
    for (int n = 0; n < 20; ++n) CHECK(out[n] > 0.0);
}

TEST_CASE("discrete orthonormality with 32 modes") {
    for (int q : {32, 48}) {
        const HermiteBasis1D b = build_basis(32, q);
        double worst = 0.0;
        for (int m = 0; m < 32; ++m)
            for (int n = 0; n < 32; ++n) {
                double s = 0.0;
                for (int j = 0; j < q; ++j) s += b.weights()[j] * b.chi(m, j) * b.chi(n, j);
                worst = std::max(worst, std::abs(s - (m == n ? 1.0 : 0.0)));
            }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("eigenvalues are n + 1/2") {
    const HermiteBasis1D b = build_basis(8, 8);
    for (int n = 0; n < 8; ++n) CHECK(b.eigenvalues()[n] == n + 0.5);
}

TEST_CASE("basis construction rejects bad sizes") {
    CHECK_THROWS_AS(build_basis(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_basis(8, 7), std::invalid_argument);
}

TEST_CASE("forward and backward transforms") {
    const HermiteBasis1D b = build_basis(16, 20);
    std::vector<cplx> vals(20);
    for (int j = 0; j < 20; ++j) vals[j] = b.chi(2, j);
    const auto c = hermite_forward(b, vals);
    for (int n = 0; n < 16; ++n) CHECK(std::abs(c[n] - cplx(n == 2 ? 1.0 : 0.0)) < 1e-13);

    std::vector<cplx> e01(16);
    e01[0] = e01[1] = 1.0;
    const auto v = hermite_backward(b, e01);
    for (int j = 0; j < 20; ++j) CHECK(std::abs(v[j] - (b.chi(0, j) + b.chi(1, j))) < 1e-14);

    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<cplx> r(16);
    for (auto& x : r) x = {g(rng), g(rng)};
    const auto back = hermite_forward(b, hermite_backward(b, r));
    CHECK(support::max_abs_diff(back, r) < 1e-11);
    CHECK_THROWS(hermite_forward(b, std::vector<cplx>(5)));
}

TEST_CASE("exp(-i theta H_z) phases") {
    std::vector<cplx> c{{1.0, 0.5}, {-0.3, 2.0}, {0.7, 0.0}, {0.0, -1.0}};
    auto orig = c;
    apply_exp_Hz(0.0, c);
    CHECK(support::max_abs_diff(c, orig) == 0.0);

    c = orig;
    apply_exp_Hz(2.0 * kPi, c);
    for (std::size_t n = 0; n < c.size(); ++n) CHECK(std::abs(c[n] + orig[n]) < 1e-14);

    std::vector<cplx> e0{1.0};
    apply_exp_Hz(kPi, e0);
    CHECK(std::abs(e0[0] - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("propagator: unitarity, group law, periodicity") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    std::vector<cplx> c(24);
    for (auto& x : c) x = {g(rng), g(rng)};
    double n0 = 0.0;
    for (auto x : c) n0 += std::norm(x);
    for (double t1 : {0.3, 1.7, -4.2, 123.0}) {
        auto a = c;
        apply_exp_Hz(t1, a);
        double n1 = 0.0;
        for (auto x : a) n1 += std::norm(x);
        CHECK(std::abs(n1 - n0) < 1e-12 * n0);

        const double t2 = 0.9;
        apply_exp_Hz(t2, a);
        auto b = c;
        apply_exp_Hz(t1 + t2, b);
        CHECK(support::max_abs_diff(a, b) < 1e-12);

        auto p = c, q = c;
        apply_exp_Hz(t1 + 2.0 * kPi, p);
        apply_exp_Hz(t1, q);
        for (std::size_t n = 0; n < c.size(); ++n) CHECK(std::abs(p[n] + q[n]) < 1e-12);
    }
}

TEST_CASE("kappa_n closed forms and quadrature oracle") {
    CHECK(std::abs(kappa_n(0, 1.0, 1.0) - 1.0 / std::sqrt(2.0 * kPi)) < 1e-12);
    CHECK(std::abs(kappa_n(1, 1.0, 1.0) - 3.0 / (4.0 * std::sqrt(2.0 * kPi))) < 1e-12);
    CHECK(kappa_n(0, 1.0, 1.0) == doctest::Approx(0.3989423).epsilon(1e-7));
    CHECK(kappa_n(1, 1.0, 1.0) == doctest::Approx(0.2992067).epsilon(1e-7));
    CHECK(kappa_n(3, 1.0, 0.0) == 0.0);
    CHECK(kappa_n(0, 1.0, 1.0) > kappa_n(1, 1.0, 1.0));
    CHECK(kappa_n(2, 1.0, -2.0) == doctest::Approx(-2.0 * kappa_n(2, 1.0, 1.0)));

    for (int n : {0, 2, 5}) {
        for (double s : {1.0, 1.5, 1.9}) {
            const double ref =
                support::simpson([&](double z) { return std::pow(std::abs(support::chi_ref(n, z)), 2.0 * s + 2.0); });
            CHECK(kappa_n(n, s, 1.0) == doctest::Approx(ref).epsilon(1e-9));
        }
    }
}

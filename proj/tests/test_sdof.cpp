#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shock/sdof.hpp"
#include "test_util.hpp"

using namespace shock;

TEST_CASE("log grid doubles per octave") {
    auto g = log_freq_grid(100.0, 800.0, 1);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == doctest::Approx(100.0));
    CHECK(g[1] == doctest::Approx(200.0));
    CHECK(g[2] == doctest::Approx(400.0));
    CHECK(g[3] == doctest::Approx(800.0));
}

TEST_CASE("degenerate grid range yields a singleton") {
    auto g = log_freq_grid(100.0, 100.0, 6);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == 100.0);
}

TEST_CASE("standard analysis grid has 49 points up to 25600 Hz") {
    auto g = log_freq_grid(100.0, 25600.0, 6);
    REQUIRE(g.size() == 49);
    CHECK(g.back() == doctest::Approx(25600.0).epsilon(1e-12));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("fmax not on the lattice is appended") {
    auto g = log_freq_grid(100.0, 300.0, 1);
    REQUIRE(g.size() == 3);
    CHECK(g[1] == doctest::Approx(200.0));
    CHECK(g[2] == 300.0);
}

TEST_CASE("grid parameter validation") {
    CHECK_THROWS_AS(log_freq_grid(0.0, 100.0, 6), ParameterError);
    CHECK_THROWS_AS(log_freq_grid(-5.0, 100.0, 6), ParameterError);
    CHECK_THROWS_AS(log_freq_grid(200.0, 100.0, 6), ParameterError);
    CHECK_THROWS_AS(log_freq_grid(100.0, 200.0, 0), ParameterError);
}

TEST_CASE("bank invariants") {
    CHECK_THROWS_AS(make_bank(100.0, 800.0, 1, 0.4), ParameterError);
    OscillatorBank b{{200.0, 100.0}, 10.0};
    CHECK_THROWS_AS(validate_bank(b), ParameterError);
    CHECK(make_bank(100.0, 800.0, 1, 10.0).zeta() == doctest::Approx(0.05));
}

TEST_CASE("filter: zero input gives zero output") {
    Signal zero;
    zero.dt = 1e-4;
    zero.samples.assign(500, 0.0);
    Signal r = sdof_response_filter(zero, 100.0, 0.05);
    for (double v : r.samples) CHECK(v == 0.0);
}

TEST_CASE("filter: step peak matches the closed-form overshoot") {
    const double zeta = 0.05;
    const double expected =
        1.0 + std::exp(-zeta * std::numbers::pi / std::sqrt(1.0 - zeta * zeta));
    Signal step;
    step.dt = 1e-5;
    step.samples.assign(10000, 2.5); // a0 = 2.5 m/s²
    for (double fn : {20.0, 50.0, 130.0}) {
        Signal r = sdof_response_filter(step, fn, zeta);
        CHECK(testutil::peak_abs(r) == doctest::Approx(2.5 * expected).epsilon(0.01));
    }
}

TEST_CASE("filter is linear to machine precision") {
    Signal x = gen_damped_sine_sum({{300.0, 1.0, 50.0, 0.0}}, 0.02, 1e-5);
    Signal y = gen_damped_sine_sum({{700.0, 2.0, 80.0, 1.0}}, 0.02, 1e-5);
    Signal combo = x;
    for (std::size_t i = 0; i < combo.samples.size(); ++i)
        combo.samples[i] = 2.0 * x.samples[i] + 3.0 * y.samples[i];

    Signal rx = sdof_response_filter(x, 450.0, 0.05);
    Signal ry = sdof_response_filter(y, 450.0, 0.05);
    Signal rc = sdof_response_filter(combo, 450.0, 0.05);

    double scale = testutil::peak_abs(rc);
    for (std::size_t i = 0; i < rc.samples.size(); ++i) {
        const double lin = 2.0 * rx.samples[i] + 3.0 * ry.samples[i];
        CHECK(std::abs(rc.samples[i] - lin) <= 1e-12 * scale);
    }
}

TEST_CASE("filter is time invariant: leading zeros shift the response exactly") {
    Signal x = gen_damped_sine_sum({{250.0, 1.5, 100.0, 0.5}}, 0.01, 1e-5);
    const std::size_t k = 37;
    Signal shifted;
    shifted.dt = x.dt;
    shifted.samples.assign(k, 0.0);
    shifted.samples.insert(shifted.samples.end(), x.samples.begin(), x.samples.end());

    Signal r = sdof_response_filter(x, 500.0, 0.05);
    Signal rs = sdof_response_filter(shifted, 500.0, 0.05);
    for (std::size_t i = 0; i < k; ++i) CHECK(rs.samples[i] == 0.0);
    for (std::size_t i = 0; i < r.samples.size(); ++i)
        CHECK(rs.samples[i + k] == r.samples[i]);
}

TEST_CASE("filter refuses frequencies near Nyquist") {
    Signal x;
    x.dt = 1e-4; // Nyquist 5000 Hz, guard at 4000 Hz
    x.samples.assign(100, 1.0);
    CHECK_THROWS_AS(sdof_response_filter(x, 4500.0, 0.05), AliasError);
    CHECK_NOTHROW(sdof_response_filter(x, 3500.0, 0.05));
    CHECK_THROWS_AS(sdof_response_filter(x, 100.0, 0.0), ParameterError);
    CHECK_THROWS_AS(sdof_response_filter(x, 100.0, 1.0), ParameterError);
}

TEST_CASE("oracle: zero input gives zero output") {
    Signal zero;
    zero.dt = 1e-4;
    zero.samples.assign(200, 0.0);
    Signal r = sdof_response_oracle(zero, 100.0, 0.05);
    for (double v : r.samples) CHECK(v == 0.0);
}

TEST_CASE("oracle: resonant drive settles near the Q amplification") {
    const double fn = 100.0;
    Signal drive = gen_damped_sine_sum({{fn, 1.0, 0.0, 0.0}}, 1.0, 1e-4);
    Signal r = sdof_response_oracle(drive, fn, 0.05);
    double steady = 0.0;
    for (std::size_t i = r.samples.size() * 7 / 10; i < r.samples.size(); ++i)
        steady = std::max(steady, std::abs(r.samples[i]));
    CHECK(steady == doctest::Approx(10.0).epsilon(0.03));
}

TEST_CASE("oracle substep validation") {
    Signal x;
    x.dt = 1e-4;
    x.samples.assign(10, 1.0);
    CHECK_THROWS_AS(sdof_response_oracle(x, 100.0, 0.05, 3), ParameterError);
}

TEST_CASE("filter and oracle agree on peak response within 2%") {
    Signal pulse = gen_half_sine(50.0, 0.004, 2e-5, 0.02);
    Signal ring = testutil::pyro_fixture(2e-5, 0.03);
    for (const Signal* sig : {&pulse, &ring}) {
        for (double fn : {80.0, 300.0, 1200.0, 4000.0}) {
            CAPTURE(fn);
            Signal a = sdof_response_filter(*sig, fn, 0.05);
            Signal b = sdof_response_oracle(*sig, fn, 0.05);
            CHECK(testutil::peak_abs(a) ==
                  doctest::Approx(testutil::peak_abs(b)).epsilon(0.02));
        }
    }
}

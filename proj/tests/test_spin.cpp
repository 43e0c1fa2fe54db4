#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "pqs/interferometer.hpp"
#include "pqs/random.hpp"
#include "pqs/spin.hpp"

using namespace pqs;

TEST_CASE("spin quantum number validation") {
    CHECK(SpinQuantumNumber::from_j(0.5).two_j == 1);
    CHECK(SpinQuantumNumber::from_j(3.0).dimension() == 7);
    CHECK(SpinQuantumNumber::from_two_j(0).dimension() == 1);
    CHECK(SpinQuantumNumber::from_j(1.5).casimir() == doctest::Approx(3.75));
    CHECK_THROWS_AS(SpinQuantumNumber::from_j(0.3), std::invalid_argument);
    CHECK_THROWS_AS(SpinQuantumNumber::from_j(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(SpinQuantumNumber::from_two_j(-2), std::invalid_argument);
}

TEST_CASE("operator set matches the low-spin matrices") {
    SUBCASE("J=1/2 is Pauli/2") {
        const auto ops = build_operator_set(SpinQuantumNumber::from_j(0.5));
        CHECK(ops.jz_diagonal(0) == doctest::Approx(-0.5));
        CHECK(ops.jz_diagonal(1) == doctest::Approx(0.5));
        CHECK(ops.jx()(0, 1) == doctest::Approx(0.5));
        CHECK(ops.jx()(0, 0) == 0.0);
    }
    SUBCASE("J=1 ladder entries") {
        const auto ops = build_operator_set(SpinQuantumNumber::from_j(1.0));
        CHECK(ops.jz_diagonal(0) == doctest::Approx(-1.0));
        CHECK(ops.jz_diagonal(1) == doctest::Approx(0.0));
        CHECK(ops.jz_diagonal(2) == doctest::Approx(1.0));
        CHECK(ops.jx()(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(ops.jx()(1, 2) == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
    SUBCASE("J=3/2 raising element <3/2|J+|1/2>") {
        const auto ops = build_operator_set(SpinQuantumNumber::from_j(1.5));
        // m = 1/2 lives at index 2
        CHECK(ops.ladder_superdiagonal(2) == doctest::Approx(std::sqrt(3.0)));
    }
}

TEST_CASE("operator structural invariants") {
    for (double jv : {0.5, 1.0, 1.5, 2.0, 5.0, 16.5}) {
        const auto j = SpinQuantumNumber::from_j(jv);
        const auto ops = build_operator_set(j);
        const Eigen::MatrixXcd jx = ops.jx().cast<Complex>();
        const Eigen::MatrixXcd jy = ops.jy();
        const Eigen::MatrixXcd jz = ops.jz().cast<Complex>();
        CHECK((jx - jx.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((jy - jy.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        const Eigen::MatrixXcd total = jx * jx + jy * jy + jz * jz;
        const Eigen::MatrixXcd expected =
            j.casimir() * Eigen::MatrixXcd::Identity(j.dimension(), j.dimension());
        CHECK((total - expected).cwiseAbs().maxCoeff() < 1e-10);
        // commutator [J_X, J_Y] = i J_Z
        const Eigen::MatrixXcd comm = jx * jy - jy * jx;
        CHECK((comm - Complex(0, 1) * jz).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("states are normalized on construction") {
    Eigen::VectorXcd amp(3);
    amp << Complex(3, 0), Complex(0, 4), Complex(0, 0);
    const SpinState state(SpinQuantumNumber::from_j(1.0), Eigen::VectorXcd(amp));
    CHECK(std::abs(state.amplitudes().squaredNorm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(SpinState(SpinQuantumNumber::from_j(1.0), Eigen::VectorXcd::Zero(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpinState(SpinQuantumNumber::from_j(1.0), Eigen::VectorXcd::Ones(4)),
                    std::invalid_argument);
}

TEST_CASE("moments of extremal and symmetric states") {
    for (double jv : {0.5, 2.0, 3.5}) {
        const auto j = SpinQuantumNumber::from_j(jv);
        const auto m = moments(SpinState::basis_state(j, jv));
        CHECK(m.mean(2) == doctest::Approx(jv).epsilon(1e-12));
        CHECK(m.variances(0) == doctest::Approx(jv / 2).epsilon(1e-12));
        CHECK(m.variances(1) == doctest::Approx(jv / 2).epsilon(1e-12));
        CHECK(m.planar_sum == doctest::Approx(jv).epsilon(1e-12));
    }
    // (|1,-1> + |1,+1>)/sqrt(2): planar sum = J(J+1) - <Jz^2> = 2 - 1 = 1
    Eigen::VectorXd amp(3);
    amp << 1, 0, 1;
    const auto m = moments(SpinState::from_real(SpinQuantumNumber::from_j(1.0), amp));
    CHECK(m.planar_sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.mean(0) == doctest::Approx(0.0));
    CHECK(m.mean(2) == doctest::Approx(0.0));
}

TEST_CASE("real-amplitude states have <J_Y> = 0 and cov(X,Y) = 0") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto state = random_real_state(SpinQuantumNumber::from_two_j(9), rng);
        const auto m = moments(state);
        CHECK(std::abs(m.mean(1)) < 1e-12);
        CHECK(std::abs(m.covariance(0, 1)) < 1e-12);
    }
}

TEST_CASE("total-spin identity and planar-sum structure on random states") {
    std::mt19937_64 rng(42);
    for (double jv : {0.5, 1.0, 2.5, 7.0}) {
        const auto j = SpinQuantumNumber::from_j(jv);
        for (int t = 0; t < 250; ++t) {
            const auto state = random_state(j, rng);
            const auto m = moments(state);
            CHECK(std::abs(m.second.trace() - j.casimir()) < 1e-10);
            // planar_sum = J(J+1) - <Jz^2> - <Jx>^2 - <Jy>^2
            const double structural = j.casimir() - m.second(2, 2) -
                                      m.mean(0) * m.mean(0) - m.mean(1) * m.mean(1);
            CHECK(std::abs(m.planar_sum - structural) < 1e-10);
            CHECK(m.variances.minCoeff() > -1e-12);
        }
    }
}

TEST_CASE("z-rotation basics") {
    const auto j = SpinQuantumNumber::from_j(2.5);
    std::mt19937_64 rng(3);
    const auto state = random_state(j, rng);

    SUBCASE("zero angle is the identity") {
        const auto rotated = rotate_about_z(state, 0.0);
        CHECK((rotated.amplitudes() - state.amplitudes()).norm() == 0.0);
    }
    SUBCASE("2pi gives a global phase (-1)^(2J)") {
        const auto full = rotate_about_z(state, 2.0 * std::numbers::pi);
        // half-integer J: global phase -1
        CHECK((full.amplitudes() + state.amplitudes()).norm() < 1e-10);
        const auto ji = SpinQuantumNumber::from_j(3.0);
        const auto si = random_state(ji, rng);
        const auto fi = rotate_about_z(si, 2.0 * std::numbers::pi);
        CHECK((fi.amplitudes() - si.amplitudes()).norm() < 1e-10);
    }
    SUBCASE("planar sum, <Jz> and var(Jz) are rotation invariants") {
        std::uniform_real_distribution<double> angle(-8.0, 8.0);
        for (int t = 0; t < 100; ++t) {
            const auto s = random_state(j, rng);
            const auto m0 = moments(s);
            const auto m1 = moments(rotate_about_z(s, angle(rng)));
            CHECK(std::abs(m0.planar_sum - m1.planar_sum) < 1e-10);
            CHECK(std::abs(m0.mean(2) - m1.mean(2)) < 1e-12);
            CHECK(std::abs(m0.variances(2) - m1.variances(2)) < 1e-10);
        }
    }
    SUBCASE("pi/2 rotation maps <Jx> onto <Jy>") {
        const auto basis = jx_eigenbasis(j);
        const SpinState coherent =
            SpinState::from_real(j, basis.vectors.col(j.dimension() - 1));
        const auto before = moments(coherent);
        CHECK(before.mean(0) == doctest::Approx(j.j()).epsilon(1e-10));
        const auto after = moments(rotate_about_z(coherent, 0.5 * std::numbers::pi));
        CHECK(std::abs(after.mean(1) - before.mean(0)) < 1e-10);
        CHECK(std::abs(after.mean(0)) < 1e-10);
    }
}

TEST_CASE("amplitude-formula cross-checks agree with operator matrices") {
    std::mt19937_64 rng(7);
    for (double jv : {0.5, 1.0, 1.5, 4.0, 10.5}) {
        const auto j = SpinQuantumNumber::from_j(jv);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int t = 0; t < 40; ++t) {
            Eigen::VectorXd r(j.dimension());
            for (int k = 0; k < j.dimension(); ++k) r(k) = gauss(rng);
            const SpinState state = SpinState::from_real(j, r);
            const auto m = moments(state);
            const double planar_square = m.second(0, 0) + m.second(1, 1);
            CHECK(std::abs(planar_square_sum_formula(j, r) - planar_square) < 1e-10);
            CHECK(std::abs(mean_x_formula(j, r) - m.mean(0)) < 1e-10);
        }
    }
}

#include <doctest.h>

#include "dimer/errors.hpp"
#include "dimer/fms.hpp"
#include "dimer/toeplitz.hpp"
#include "test_util.hpp"

using namespace dimer;
using testutil::rel_err;

TEST_CASE("floor and parity conventions, enumerated by hand") {
    // floor((k-j)/2) for k-j in [-3, 3]
    const int args[] = {-3, -2, -1, 0, 1, 2, 3};
    const int want[] = {-2, -1, -1, 0, 0, 1, 1};
    for (int i = 0; i < 7; ++i) CHECK(floor_div2(args[i]) == want[i]);
    CHECK(parity_sign(-1) == -1.0);
    CHECK(parity_sign(-2) == 1.0);
    CHECK(parity_sign(0) == 1.0);
    CHECK(parity_sign(3) == -1.0);

    // R_jk assembly for j,k in [1,4] against hand-expanded entries.
    const double t = 0.3;
    const RqTable tab = rq_batch(t, -2, 4);
    const FmsMatrices m = build_fms(t, 4);
    // (j,k) = (1,1): 2(-1)^0 R_1; (1,2): 2 R_2; (2,1): -2 R_0 + 1;
    // (3,1): -2 R_{-1} + t; (1,4): 2 (-1)^1 R_4.
    CHECK(m.r_block(0, 0) == doctest::Approx(2.0 * tab.R(1)).epsilon(1e-12));
    CHECK(m.r_block(0, 1) == doctest::Approx(2.0 * tab.R(2)).epsilon(1e-12));
    CHECK(m.r_block(1, 0) == doctest::Approx(-2.0 * tab.R(0) + 1.0).epsilon(1e-12));
    CHECK(m.r_block(2, 0) == doctest::Approx(-2.0 * tab.R(-1) + t).epsilon(1e-12));
    CHECK(m.r_block(0, 3) == doctest::Approx(-2.0 * tab.R(4)).epsilon(1e-12));
    // Q_jk: (1,1): n+1-k-j = 3 odd -> 2i(-1)^1 Q_3; (2,2): n+1-4 = 1 -> 2i(-1)^2 Q_1.
    CHECK(std::abs(m.q_block(0, 0) - 2.0 * I * (-1.0) * tab.Q(3)) < 1e-12);
    CHECK(std::abs(m.q_block(1, 1) - 2.0 * I * tab.Q(1)) < 1e-12);
}

TEST_CASE("commuting-block determinant identity") {
    for (double t : {0.3, 0.6}) {
        const double full = fms_k2(t, 6);
        const double split = fms_k2_block_identity(t, 6);
        CHECK(rel_err(full, split) < 1e-10);
    }
}

TEST_CASE("saturation toward the order parameter") {
    const double k2inf = k2_infinity(0.3);
    double prev = 1e9;
    for (int n : {4, 6, 8, 10, 12}) {
        const double gap = std::abs(fms_k2(0.3, n) - k2inf);
        CHECK(gap < prev + 1e-12);
        prev = gap;
    }
}

TEST_CASE("route agreement against the block Toeplitz determinant") {
    for (double t : {0.2, 0.3, 0.6, 0.8}) {
        const Parameters p = compute_parameters(t);
        for (int n : {4, 8}) {
            CAPTURE(t);
            CAPTURE(n);
            CHECK(std::abs(fms_k2(t, n) / toeplitz_k2(p, n) - 1.0) < 1e-7);
        }
    }
}

TEST_CASE("oracle scale guard") {
    CHECK_THROWS_AS(build_fms(0.3, 0), DomainError);
    CHECK_THROWS_AS(build_fms(0.3, 17), DomainError);
}

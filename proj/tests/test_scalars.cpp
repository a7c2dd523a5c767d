#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mtc/complex_approx.hpp"
#include "mtc/root_of_unity.hpp"

using mtc::RootOfUnity;

namespace {

RootOfUnity rou(long long p, long long q) {
    return RootOfUnity::from_fraction(mtc::Int(p), mtc::Int(q));
}

} // namespace

TEST_CASE("root of unity multiplication adds exponents mod 1", "[scalars]") {
    CHECK(rou(1, 4) * rou(1, 4) == rou(1, 2)); // i * i = -1
    CHECK(rou(3, 4) * rou(1, 2) == rou(1, 4)); // 5/4 mod 1
    CHECK(rou(0, 1) * rou(5, 7) == rou(5, 7)); // identity
}

TEST_CASE("root of unity powers", "[scalars]") {
    CHECK(rou(1, 3).pow(3).is_one());
    CHECK(rou(1, 4).pow(-1) == rou(3, 4));
    CHECK(rou(1, 2).pow(2).is_one());
}

TEST_CASE("exact complex values on the axes", "[scalars]") {
    CHECK(rou(0, 1).to_complex() == std::complex<double>(1.0, 0.0));
    CHECK(rou(1, 2).to_complex() == std::complex<double>(-1.0, 0.0));
    CHECK(rou(1, 4).to_complex() == std::complex<double>(0.0, 1.0));
    CHECK(rou(3, 4).to_complex() == std::complex<double>(0.0, -1.0));
}

TEST_CASE("exponents are canonical after every operation", "[scalars]") {
    CHECK(rou(2, 4) == rou(1, 2));
    CHECK(rou(-1, 4) == rou(3, 4));
    CHECK(rou(9, 4) == rou(1, 4));
    CHECK(rou(5, 5).is_one());
    const RootOfUnity x = rou(7, 12);
    CHECK(numerator(x.exponent()) == 7);
    CHECK(denominator(x.exponent()) == 12);
}

TEST_CASE("inverse and order invariants", "[scalars]") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> den(1, 64);
    for (int trial = 0; trial < 200; ++trial) {
        const long long q = den(rng);
        const long long p = std::uniform_int_distribution<long long>(0, q - 1)(rng);
        const RootOfUnity a = rou(p, q);
        CHECK((a * a.pow(-1)).is_one());
        CHECK(a.pow(denominator(a.exponent())).is_one());
        CHECK((a * a.conjugate()).is_one());
    }
}

TEST_CASE("complex embedding respects multiplication", "[scalars]") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> den(1, 64);
    for (int trial = 0; trial < 500; ++trial) {
        const long long qa = den(rng), qb = den(rng);
        const RootOfUnity a = rou(std::uniform_int_distribution<long long>(0, qa - 1)(rng), qa);
        const RootOfUnity b = rou(std::uniform_int_distribution<long long>(0, qb - 1)(rng), qb);
        const auto lhs = (a * b).to_complex();
        const auto rhs = a.to_complex() * b.to_complex();
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("square roots square back", "[scalars]") {
    for (long long q : {1, 2, 3, 4, 5, 8, 12})
        for (long long p = 0; p < q; ++p) {
            const RootOfUnity a = rou(p, q);
            const auto roots = a.square_roots();
            CHECK(roots[0] * roots[0] == a);
            CHECK(roots[1] * roots[1] == a);
            CHECK(!(roots[0] == roots[1]));
        }
}

TEST_CASE("fraction serialization", "[scalars]") {
    CHECK(rou(3, 4).str() == "3/4");
    CHECK(RootOfUnity().str() == "0/1");
    CHECK(RootOfUnity::parse("2/4") == rou(1, 2)); // canonicalized
    CHECK(RootOfUnity::parse("3/4").str() == "3/4");
    CHECK(RootOfUnity::parse("5/4") == rou(1, 4));
    CHECK_THROWS_AS(RootOfUnity::parse("1/0"), mtc::ParseError);
    CHECK_THROWS_AS(RootOfUnity::parse("x/4"), mtc::ParseError);
    CHECK_THROWS_AS(RootOfUnity::parse(""), mtc::ParseError);
    CHECK_THROWS_AS(RootOfUnity::parse("1/4/2"), mtc::ParseError);
}

TEST_CASE("tolerance-relative complex comparison", "[scalars]") {
    mtc::ComplexApprox a{{1.0, 0.0}, 1e-8};
    CHECK(a.equals({1.0 + 5e-9, 0.0}));
    CHECK(!a.equals({1.0 + 5e-7, 0.0}));
    // relative at large magnitude
    mtc::ComplexApprox big{{1e6, 0.0}, 1e-8};
    CHECK(big.equals({1e6 + 5e-3, 0.0}));
    CHECK(!big.equals({1e6 + 1.0, 0.0}));
}

TEST_CASE("decimal formatting keeps at least 12 significant digits", "[scalars]") {
    const double x = 0.70710678118654752;
    const std::string s = mtc::format_decimal(x);
    CHECK(std::abs(std::stod(s) - x) < 1e-14);
    CHECK(s.size() >= 12);
}

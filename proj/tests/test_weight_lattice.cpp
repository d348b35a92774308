#include <doctest.h>

#include <set>

#include "isospec/error.hpp"
#include "isospec/weight_lattice.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

const GroupFamily D2 = GroupFamily::make(FamilyKind::D, 2);
const GroupFamily A2 = GroupFamily::make(FamilyKind::A, 2);

Weight w(std::vector<std::int64_t> c) { return Weight{std::move(c)}; }

} // namespace

TEST_SUITE("weight_lattice") {

TEST_CASE("congruence lattice from the bijection example: b == 1 mod 4")
{
    const auto L = CongruenceLattice::make(D2, {4, {0, 1}, 1});
    for (std::int64_t a = -6; a <= 6; ++a) {
        for (std::int64_t b = -6; b <= 6; ++b) {
            CHECK(membership(L, w({a, b})) == (oracle::mod(b, 4) == 1));
        }
    }
}

TEST_CASE("q = 1 gives the full lattice")
{
    const auto L = CongruenceLattice::make(D2, {1, {0, 0}, 0});
    for (std::int64_t a = -3; a <= 3; ++a) {
        CHECK(membership(L, w({a, 2 - a})));
    }
}

TEST_CASE("family A: s = (0,1) with s3 = -1 is {b == c mod 6}")
{
    const auto L = CongruenceLattice::make(A2, {6, {0, 1}, 0});
    CHECK(L.exponents() == std::vector<std::int64_t>{0, 1, 5});
    for (std::int64_t a = -7; a <= 7; ++a) {
        for (std::int64_t b = -7; b <= 7; ++b) {
            const std::int64_t c = -a - b;
            CHECK(membership(L, w({a, b, c})) == (oracle::mod(b - c, 6) == 0));
        }
    }
    const auto full = CongruenceLattice::make(A2, {6, {0, 1, 5}, 0});
    CHECK(full == L);
    CHECK(membership(full, w({6, 0, -6})));
    CHECK(membership(full, w({-2, 1, 1})));
}

TEST_CASE("membership examples")
{
    CHECK(membership(CongruenceLattice::make(D2, {4, {1, 2}, 1}), w({1, 0})));
    CHECK(membership(CongruenceLattice::make(D2, {9, {2, 7}, 0}), w({0, 0})));
    CHECK_FALSE(membership(CongruenceLattice::make(D2, {9, {2, 7}, 3}), w({0, 0})));
    CHECK_THROWS_AS(membership(CongruenceLattice::make(A2, {6, {0, 1}, 0}), w({1, 0, 0})), Error);
}

TEST_CASE("norms")
{
    CHECK(norm(w({1, -2, 1}), Norm::One) == 4);
    CHECK(norm(w({0, 0, 0}), Norm::One) == 0);
    CHECK(norm(w({0, 0, 0}), Norm::Two) == 0);
    CHECK(norm(w({0, 0, 0}), Norm::Inf) == 0);
    CHECK(norm(w({3, -1}), Norm::Inf) == 3);
    CHECK(norm(w({3, -1}), Norm::Two) == 10);
    CHECK(default_norm(GroupFamily::make(FamilyKind::A, 3)) == Norm::One);
    CHECK(default_norm(GroupFamily::make(FamilyKind::C2, 2)) == Norm::Inf);
    CHECK(default_norm(GroupFamily::make(FamilyKind::D, 4)) == Norm::One);
}

TEST_CASE("validation errors")
{
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("no error raised");
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([] { CongruenceLattice::make(D2, {4, {2, 2}, 0}); }) == ErrorCode::GcdViolation);
    CHECK(code_of([] { CongruenceLattice::make(D2, {0, {1, 2}, 0}); }) == ErrorCode::ZeroOrder);
    CHECK(code_of([] { CongruenceLattice::make(D2, {5, {1, 2}, 0}, true); }) == ErrorCode::IllegalEvenSublattice);
    CHECK(code_of([] { CongruenceLattice::make(D2, {5, {1, 2, 3}, 0}); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { CongruenceLattice::make(A2, {5, {1, 2, 3}, 0}); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { GroupFamily::make(FamilyKind::C2, 3); }) == ErrorCode::InvalidFamily);
    CHECK(code_of([] { GroupFamily::make(FamilyKind::D, 0); }) == ErrorCode::InvalidFamily);
}

TEST_CASE("conjugacy examples")
{
    CHECK(is_conjugate(D2, 7, std::vector<std::int64_t>{1, 2}, std::vector<std::int64_t>{1, 2}));
    CHECK(is_conjugate(D2, 7, std::vector<std::int64_t>{1, 2}, std::vector<std::int64_t>{2, 4}));
    const auto D3 = GroupFamily::make(FamilyKind::D, 3);
    CHECK_FALSE(is_conjugate(D3, 11, std::vector<std::int64_t>{1, 2, 3}, std::vector<std::int64_t>{1, 2, 4}));
    CHECK(canonical_form(D2, 7, std::vector<std::int64_t>{2, 4}) == std::vector<std::int64_t>{1, 2});
    CHECK(canonical_form(D2, 7, std::vector<std::int64_t>{1, 2}) == std::vector<std::int64_t>{1, 2});
    CHECK(canonical_form(A2, 6, std::vector<std::int64_t>{1, 2, 3}) !=
          canonical_form(A2, 6, std::vector<std::int64_t>{0, 1, 5}));
    CHECK_FALSE(is_conjugate(A2, 6, std::vector<std::int64_t>{1, 2, 3}, std::vector<std::int64_t>{0, 1, 5}));
}

TEST_CASE("representatives")
{
    for (int n = 1; n <= 4; ++n) {
        const auto reps = enumerate_representatives(GroupFamily::make(FamilyKind::D, n), 1);
        REQUIRE(reps.size() == 1);
        CHECK(reps[0] == std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    }
    // Brute-force orbit partition for (D, 2, 5).
    const auto raw = oracle::raw_parameters(oracle::Kind::D, 5, 2);
    std::vector<oracle::Vec> leaders;
    for (const auto& s : raw) {
        bool seen = false;
        for (const auto& l : leaders) {
            seen = seen || oracle::conjugate(oracle::Kind::D, 5, l, s);
        }
        if (!seen) {
            leaders.push_back(s);
        }
    }
    const auto reps = enumerate_representatives(D2, 5);
    CHECK(reps.size() == leaders.size());
    CHECK(reps == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("manifolds and singularities")
{
    CHECK(is_manifold(D2, 5, std::vector<std::int64_t>{1, 2}));
    CHECK_FALSE(is_manifold(D2, 5, std::vector<std::int64_t>{0, 1}));
    CHECK(is_manifold(A2, 1, std::vector<std::int64_t>{0, 0, 0}));
    CHECK(is_manifold(GroupFamily::make(FamilyKind::B, 3), 1, std::vector<std::int64_t>{0, 0, 0}));
    CHECK(singularity_profile(15, std::vector<std::int64_t>{1, 2, 6}) == std::vector<std::int64_t>{1, 1, 3});
    CHECK(singularity_profile(9, std::vector<std::int64_t>{1, 1, 1}) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(singularity_profile(4, std::vector<std::int64_t>{0, 1}) == std::vector<std::int64_t>{1, 4});
    CHECK(units_mod(12) == std::vector<std::int64_t>{1, 5, 7, 11});
}

TEST_CASE("character and sublattice variants")
{
    const auto C2 = GroupFamily::make(FamilyKind::C2, 2);
    const auto L = CongruenceLattice::make(C2, {4, {0, 1}, 0});
    const auto E = L.with_even_sublattice(true);
    CHECK(E.even_sublattice());
    CHECK(membership(L, w({1, 0})));
    CHECK_FALSE(membership(E, w({1, 0})));
    CHECK(membership(E, w({2, 0})));
    CHECK(L.with_character(5).u() == 1);
    CHECK_THROWS_AS(CongruenceLattice::make(D2, {4, {0, 1}, 0}).with_even_sublattice(true), Error);
}

TEST_CASE("code lattices")
{
    // Repetition code of length 3 and its dual, the even-weight code.
    const auto R = CodeLattice::make(3, {{1, 1, 1}});
    CHECK(R.words() == std::vector<std::uint32_t>{0, 7});
    CHECK(R.contains(w({3, -1, 5})));
    CHECK_FALSE(R.contains(w({2, 1, 1})));
    const auto E = R.dual();
    CHECK(E.words() == std::vector<std::uint32_t>{0, 3, 5, 6});
    CHECK(E.contains(w({1, 1, 0})));
    CHECK(E.dual().words() == R.words());
    CHECK_THROWS_AS(CodeLattice::make(3, {{1, 2, 0}}), Error);
}

} // TEST_SUITE

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "skewcc/block_code.hpp"

using namespace skewcc;

namespace {

const std::vector<std::vector<Code>> kHamming74{
    {1, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 1, 0, 1},
    {0, 0, 1, 0, 1, 1, 0},
    {0, 0, 0, 1, 1, 1, 1},
};

}  // namespace

TEST_SUITE("block_code") {

TEST_CASE("row reduction canonicalizes the presentation") {
    auto f = FieldSpec::make(3, 1);
    auto a = LinearCode::from_rows(f, 3, {{1, 2, 0}, {0, 1, 1}});
    auto b = LinearCode::from_rows(f, 3, {{1, 0, 1}, {0, 2, 2}, {1, 2, 0}});
    CHECK(a == b);  // same span, different generators
    CHECK(a.dim() == 2);
    CHECK(a.pivots() == std::vector<std::uint32_t>{0, 1});
    // Rows come back reduced: pivot columns carry a lone 1.
    CHECK(a.matrix() == std::vector<Code>{1, 0, 1, 0, 1, 1});

    CHECK(LinearCode::zero(f, 4).dim() == 0);
    CHECK(LinearCode::full(f, 4).dim() == 4);
    CHECK_THROWS_AS(LinearCode::from_rows(f, 3, {{1, 2}}), error);
    CHECK_THROWS_AS(LinearCode::from_rows(f, 3, {{1, 2, 3}}), error);
    CHECK_THROWS_AS(LinearCode::from_flat(f, 0, {}), error);
    CHECK_THROWS_AS(LinearCode::from_flat(f, 3, {1, 2}), error);
}

TEST_CASE("membership") {
    auto f = FieldSpec::make(2, 1);
    auto c = LinearCode::from_rows(f, 7, kHamming74);
    for (const auto& w : oracle::all_words(c)) CHECK(c.contains(w));
    std::vector<Code> not_in{1, 1, 0, 0, 0, 0, 0};
    CHECK_FALSE(c.contains(not_in));
    CHECK(c.is_subcode_of(LinearCode::full(f, 7)));
    CHECK(LinearCode::zero(f, 7).is_subcode_of(c));
    CHECK_FALSE(c.is_subcode_of(LinearCode::zero(f, 7)));
    std::vector<Code> short_word{1, 0};
    CHECK_THROWS_AS(c.contains(short_word), error);
}

TEST_CASE("dual of the hamming code and involution") {
    auto f = FieldSpec::make(2, 1);
    auto c = LinearCode::from_rows(f, 7, kHamming74);
    auto d = dual(c);
    CHECK(d.dim() == 3);
    for (const auto& u : oracle::all_words(c)) {
        for (const auto& v : oracle::all_words(d)) {
            Code acc = 0;
            for (std::size_t i = 0; i < 7; ++i) acc = f->add(acc, f->mul(u[i], v[i]));
            CHECK(acc == 0);
        }
    }
    CHECK(dual(d) == c);

    std::mt19937 rng(61);
    for (auto p : {2u, 3u, 5u}) {
        auto fp = FieldSpec::make(p, 1);
        for (int i = 0; i < 40; ++i) {
            auto code = oracle::rand_linear_code(rng, fp, 2 + rng() % 6, 4);
            CHECK(dual(dual(code)) == code);
            CHECK(dual(code).dim() == code.length() - code.dim());
        }
    }
    // A self-dual code is its own dual.
    auto sd = LinearCode::from_rows(f, 2, {{1, 1}});
    CHECK(dual(sd) == sd);
}

TEST_CASE("sums and intersections") {
    std::mt19937 rng(67);
    auto f = FieldSpec::make(3, 1);
    for (int i = 0; i < 60; ++i) {
        auto a = oracle::rand_linear_code(rng, f, 5, 3);
        auto b = oracle::rand_linear_code(rng, f, 5, 3);
        auto s = sum_codes(a, b);
        CHECK(a.is_subcode_of(s));
        CHECK(b.is_subcode_of(s));
        // dim(A) + dim(B) = dim(A + B) + dim(A n B)
        CHECK(a.dim() + b.dim() == s.dim() + intersection_dim(a, b));
        // Count the intersection directly.
        auto words_b = oracle::all_words(b);
        std::set<std::vector<Code>> set_b(words_b.begin(), words_b.end());
        std::uint64_t shared = 0;
        for (const auto& w : oracle::all_words(a)) shared += set_b.count(w);
        CHECK(shared == oracle::ipow(3, intersection_dim(a, b)));
    }
}

TEST_CASE("minimum distance on known codes") {
    auto f = FieldSpec::make(2, 1);
    auto hamming = LinearCode::from_rows(f, 7, kHamming74);
    CHECK(min_distance(hamming) == 3);
    CHECK(min_distance(dual(hamming)) == 4);
    auto rep = LinearCode::from_rows(f, 5, {{1, 1, 1, 1, 1}});
    CHECK(min_distance(rep) == 5);
    CHECK(min_distance(LinearCode::full(f, 5)) == 1);
    CHECK_THROWS_AS(min_distance(LinearCode::zero(f, 5)), error);
}

TEST_CASE("minimum distance matches exhaustive search") {
    std::mt19937 rng(71);
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto f = FieldSpec::make(p, r);
        for (int i = 0; i < 40; ++i) {
            auto c = oracle::rand_linear_code(rng, f, 3 + rng() % 6, 4);
            if (c.dim() == 0) continue;
            std::uint32_t d = min_distance(c);
            CHECK(d == oracle::min_distance_naive(c));
            CHECK(d <= c.length() - c.dim() + 1);  // Singleton bound
        }
    }
}

TEST_CASE("weight enumerator") {
    auto f = FieldSpec::make(2, 1);
    auto hamming = LinearCode::from_rows(f, 7, kHamming74);
    CHECK(weight_enumerator(hamming) ==
          std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});

    std::mt19937 rng(73);
    auto f3 = FieldSpec::make(3, 1);
    for (int i = 0; i < 25; ++i) {
        auto c = oracle::rand_linear_code(rng, f3, 3 + rng() % 5, 3);
        if (c.dim() == 0) continue;
        auto w = weight_enumerator(c);
        CHECK(w == oracle::weight_histogram_naive(c));
        std::uint64_t total = 0;
        for (auto x : w) total += x;
        CHECK(total == oracle::ipow(3, c.dim()));
    }
}

TEST_CASE("worker split gives the same answers") {
    auto f = FieldSpec::make(3, 1);
    std::mt19937 rng(79);
    for (int i = 0; i < 10; ++i) {
        auto c = oracle::rand_linear_code(rng, f, 6, 4);
        if (c.dim() < 2) continue;
        CHECK(min_distance(c, kDefaultWalkBudget, 4) == min_distance(c, kDefaultWalkBudget, 1));
        CHECK(weight_enumerator(c, kDefaultWalkBudget, 4) ==
              weight_enumerator(c, kDefaultWalkBudget, 1));
    }
}

TEST_CASE("walk budget") {
    auto f = FieldSpec::make(2, 1);
    auto c = LinearCode::full(f, 10);
    CHECK_THROWS_AS(min_distance(c, 1023), error);
    CHECK(min_distance(c, 1024) == 1);  // budget equal to q^k is allowed
    try {
        min_distance(c, 16);
    } catch (const error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
}

TEST_CASE("twisted shift map") {
    auto f = FieldSpec::make(2, 2);
    ShiftMap m(FieldAutomorphism(f, 1), FieldElement{f, 2});
    std::vector<Code> w{1, 2, 3};
    // (c0, c1, c2) -> (lambda theta(c2), theta(c0), theta(c1))
    CHECK(m.apply(w) == std::vector<Code>{3, 1, 3});

    ShiftMap plain(FieldAutomorphism(f, 0), FieldElement{f, 1});
    CHECK(plain.apply(w) == std::vector<Code>{3, 1, 2});

    CHECK_THROWS_AS(ShiftMap(FieldAutomorphism(f, 1), FieldElement{f, 0}), error);
    auto g = FieldSpec::make(2, 1);
    CHECK_THROWS_AS(ShiftMap(FieldAutomorphism(f, 1), FieldElement{g, 1}), error);
}

TEST_CASE("closure and images under the shift") {
    auto f = FieldSpec::make(2, 1);
    auto c = LinearCode::from_rows(f, 3, {{1, 0, 0}});
    ShiftMap rho(FieldAutomorphism(f, 0), FieldElement{f, 1});
    CHECK_FALSE(is_closed_under(c, rho));
    CHECK(image_under(c, rho) == LinearCode::from_rows(f, 3, {{0, 1, 0}}));

    // The shift is bijective, so images keep their dimension.
    std::mt19937 rng(83);
    auto f4 = FieldSpec::make(2, 2);
    ShiftMap tw(FieldAutomorphism(f4, 1), FieldElement{f4, 3});
    for (int i = 0; i < 30; ++i) {
        auto code = oracle::rand_linear_code(rng, f4, 4, 3);
        CHECK(image_under(code, tw).dim() == code.dim());
    }

    // Codes built from right divisors are closed under their own shift.
    for (Code lam = 1; lam < 4; ++lam) {
        for (std::uint32_t e = 0; e < 2; ++e) {
            FieldAutomorphism th(f4, e);
            TwistContext ctx(4, FieldElement{f4, lam}, th);
            ShiftMap shift(th, FieldElement{f4, lam});
            for (const auto& g : right_divisors(ctx)) {
                auto code = code_from_skew_generator(ctx, g);
                CHECK(is_closed_under(code, shift));
                if (code.dim() > 0) CHECK(image_under(code, shift) == code);
            }
        }
    }
}

TEST_CASE("quasi-twisted detection") {
    auto f = FieldSpec::make(2, 1);
    // Cyclic codes are quasi-cyclic of index 1.
    auto cyc = LinearCode::from_rows(f, 3, {{1, 1, 1}});
    CHECK(is_quasi_twisted(cyc, FieldElement{f, 1}, 1));

    // Two-block repetition: invariant under the double shift but not the
    // single one.
    auto qc = LinearCode::from_rows(f, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK_FALSE(is_quasi_twisted(qc, FieldElement{f, 1}, 1));
    CHECK(is_quasi_twisted(qc, FieldElement{f, 1}, 2));
    CHECK(is_quasi_twisted(qc, FieldElement{f, 1}, 4));

    // Negacyclic codes over F_3 are quasi-twisted of index 1 for lambda = -1.
    auto f3 = FieldSpec::make(3, 1);
    FieldAutomorphism id3(f3, 0);
    TwistContext neg(4, FieldElement{f3, 2}, id3);
    auto nc = code_from_skew_generator(neg, SkewPoly::from_coeffs(id3, {2, 1, 1}));
    CHECK(is_quasi_twisted(nc, FieldElement{f3, 2}, 1));
    CHECK_FALSE(is_quasi_twisted(nc, FieldElement{f3, 1}, 1));

    CHECK_THROWS_AS(is_quasi_twisted(cyc, FieldElement{f, 1}, 0), error);
    CHECK_THROWS_AS(is_quasi_twisted(cyc, FieldElement{f, 1}, 4), error);
}

TEST_CASE("code from a skew generator") {
    auto f = FieldSpec::make(2, 2);
    FieldAutomorphism frob(f, 1);
    TwistContext ctx(3, FieldElement{f, 2}, frob);
    auto g = SkewPoly::from_coeffs(frob, {2, 1});
    auto code = code_from_skew_generator(ctx, g);
    CHECK(code.dim() == 2);
    // Rows are the generator and its twisted shift.
    CHECK(code == LinearCode::from_rows(f, 3, {{2, 1, 0}, {0, 3, 1}}));

    CHECK(code_from_skew_generator(ctx, ctx.modulus()) == LinearCode::zero(f, 3));
    CHECK(code_from_skew_generator(ctx, SkewPoly::constant(frob, 1)) == LinearCode::full(f, 3));
    CHECK_THROWS_AS(code_from_skew_generator(ctx, SkewPoly::monomial(frob, 1, 1)), error);
    CHECK_THROWS_AS(code_from_skew_generator(ctx, SkewPoly::zero(frob)), error);
}

TEST_CASE("generator recovery round trip") {
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
        auto f = FieldSpec::make(p, r);
        for (std::uint32_t e = 0; e < r; ++e) {
            FieldAutomorphism th(f, e);
            for (std::uint32_t n = 1; n <= 5; ++n) {
                for (Code lam = 1; lam < f->q(); ++lam) {
                    TwistContext ctx(n, FieldElement{f, lam}, th);
                    for (const auto& g : right_divisors(ctx)) {
                        auto code = code_from_skew_generator(ctx, g);
                        if (code.dim() == 0) continue;
                        CHECK(generator_skew_polynomial(code, ctx) == g);
                    }
                }
            }
        }
    }

    auto f = FieldSpec::make(2, 1);
    FieldAutomorphism id(f, 0);
    TwistContext ctx(3, FieldElement{f, 1}, id);
    CHECK(generator_skew_polynomial(LinearCode::full(f, 3), ctx) == SkewPoly::constant(id, 1));
    CHECK_THROWS_AS(generator_skew_polynomial(LinearCode::zero(f, 3), ctx), error);
    // Not closed under the shift: no generator exists.
    auto stray = LinearCode::from_rows(f, 3, {{1, 0, 0}});
    CHECK_THROWS_AS(generator_skew_polynomial(stray, ctx), error);
    try {
        generator_skew_polynomial(stray, ctx);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_skew_constacyclic);
    }
    CHECK_THROWS_AS(generator_skew_polynomial(LinearCode::full(f, 4), ctx), error);
}

}  // TEST_SUITE("block_code")

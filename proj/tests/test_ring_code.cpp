#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "skewcc/ring_code.hpp"
#include "skewcc/skew_poly.hpp"

using namespace skewcc;

namespace {

RingAutomorphism cycle_aut(const RingRef& ring) {
    std::uint32_t t = ring->t();
    std::vector<std::uint32_t> perm(t), exps(t, 0);
    for (std::uint32_t j = 0; j < t; ++j) perm[j] = (j + 1) % t;
    return RingAutomorphism::make(ring, perm, exps);
}

// All codewords of a ring code, by combining component codewords.
std::vector<std::vector<RingElement>> all_ring_words(const RingLinearCode& c) {
    std::uint32_t t = c.ring()->t(), n = c.length();
    std::vector<std::vector<std::vector<Code>>> per_comp;
    for (std::uint32_t j = 0; j < t; ++j) per_comp.push_back(oracle::all_words(c.component(j)));
    std::vector<std::size_t> pick(t, 0);
    std::vector<std::vector<RingElement>> out;
    for (;;) {
        std::vector<RingElement> word;
        for (std::uint32_t i = 0; i < n; ++i) {
            std::vector<Code> comps(t);
            for (std::uint32_t j = 0; j < t; ++j) comps[j] = per_comp[j][pick[j]][i];
            word.push_back(ring_from(c.ring(), comps));
        }
        out.push_back(std::move(word));
        std::uint32_t pos = t;
        bool more = false;
        while (pos-- > 0) {
            if (++pick[pos] < per_comp[pos].size()) {
                more = true;
                break;
            }
            pick[pos] = 0;
        }
        if (!more) return out;
    }
}

RingLinearCode rand_ring_code(std::mt19937& rng, const RingRef& ring, std::uint32_t n,
                              std::uint32_t max_rows) {
    std::vector<LinearCode> comps;
    for (std::uint32_t j = 0; j < ring->t(); ++j)
        comps.push_back(oracle::rand_linear_code(rng, ring->field(), n, max_rows));
    return RingLinearCode::from_components(ring, n, comps);
}

}  // namespace

TEST_SUITE("ring_code") {

TEST_CASE("construction from components and from ring rows") {
    auto f = FieldSpec::make(2, 1);
    auto ring = make_ring(f, 2);
    auto genmat = std::vector<std::vector<RingElement>>{
        {ring_from(ring, {1, 1}), ring_from(ring, {0, 1})}};
    auto c = RingLinearCode::from_ring_genmat(ring, 2, genmat);
    // Component projections of the single row (1|1, 0|1) are spanned
    // separately: (1,0) on the first factor, (1,1) on the second.
    CHECK(c.component(0) == LinearCode::from_rows(f, 2, {{1, 0}}));
    CHECK(c.component(1) == LinearCode::from_rows(f, 2, {{1, 1}}));
    CHECK(c.total_dim() == 2);
    CHECK(RingLinearCode::from_components(ring, 2, {c.component(0), c.component(1)}) == c);
    CHECK(RingLinearCode::zero(ring, 3).total_dim() == 0);

    CHECK_THROWS_AS(RingLinearCode::from_components(ring, 2, {c.component(0)}), error);
    CHECK_THROWS_AS(
        RingLinearCode::from_components(ring, 3, {c.component(0), c.component(1)}), error);
    auto f3 = FieldSpec::make(3, 1);
    CHECK_THROWS_AS(RingLinearCode::from_components(
                        ring, 2, {LinearCode::zero(f3, 2), LinearCode::zero(f3, 2)}),
                    error);
}

TEST_CASE("membership and cardinality") {
    auto ring = make_ring(FieldSpec::make(2, 1), 2);
    std::mt19937 rng(101);
    for (int i = 0; i < 20; ++i) {
        auto c = rand_ring_code(rng, ring, 3, 2);
        auto words = all_ring_words(c);
        // |C| = q^(k_1 + ... + k_t)
        CHECK(words.size() == oracle::ipow(2, c.total_dim()));
        for (const auto& w : words) CHECK(c.contains(w));
    }
    auto c = RingLinearCode::from_components(
        ring, 2,
        {LinearCode::from_rows(ring->field(), 2, {{1, 1}}), LinearCode::zero(ring->field(), 2)});
    std::vector<RingElement> outside{ring_one(ring), ring_one(ring)};
    CHECK_FALSE(c.contains(outside));
    std::vector<RingElement> short_word{ring_one(ring)};
    CHECK_THROWS_AS(c.contains(short_word), error);
}

TEST_CASE("duals are componentwise") {
    auto ring = make_ring(FieldSpec::make(3, 1), 2);
    std::mt19937 rng(103);
    for (int i = 0; i < 20; ++i) {
        auto c = rand_ring_code(rng, ring, 4, 3);
        auto d = ring_dual(c);
        for (std::uint32_t j = 0; j < 2; ++j) CHECK(d.component(j) == dual(c.component(j)));
        CHECK(ring_dual(d) == c);
        CHECK(d.total_dim() == 2 * 4 - c.total_dim());
    }
}

TEST_CASE("sigma is additive and twisted-linear") {
    auto f = FieldSpec::make(2, 2);
    auto ring = make_ring(f, 2);
    auto theta = RingAutomorphism::make(ring, {1, 0}, {1, 0});
    auto lambda = ring_from(ring, {2, 1});
    RingTwist tw(theta, lambda);
    std::mt19937 rng(107);
    auto rand_word = [&](std::uint32_t n) {
        std::vector<RingElement> w;
        for (std::uint32_t i = 0; i < n; ++i)
            w.push_back(ring_from(ring, oracle::rand_vector(rng, 4, 2)));
        return w;
    };
    for (int i = 0; i < 50; ++i) {
        auto u = rand_word(4), v = rand_word(4);
        auto sum = u;
        for (std::uint32_t k = 0; k < 4; ++k) sum[k] = ring_add(u[k], v[k]);
        auto lhs = apply_sigma(tw, sum);
        auto rhs_u = apply_sigma(tw, u);
        auto rhs_v = apply_sigma(tw, v);
        for (std::uint32_t k = 0; k < 4; ++k) CHECK(lhs[k] == ring_add(rhs_u[k], rhs_v[k]));

        auto a = ring_from(ring, oracle::rand_vector(rng, 4, 2));
        auto scaled = u;
        for (std::uint32_t k = 0; k < 4; ++k) scaled[k] = ring_mul(a, u[k]);
        auto lhs2 = apply_sigma(tw, scaled);
        auto ta = theta.apply(a);
        for (std::uint32_t k = 0; k < 4; ++k) CHECK(lhs2[k] == ring_mul(ta, rhs_u[k]));
    }
    CHECK_THROWS_AS(RingTwist(theta, ring_from(ring, {0, 1})), error);
}

TEST_CASE("invariance characterization agrees with direct closure") {
    std::mt19937 rng(109);
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
        auto f = FieldSpec::make(p, r);
        for (std::uint32_t t = 1; t <= 2; ++t) {
            auto ring = make_ring(f, t);
            auto auts = enumerate_aut(ring);
            std::vector<RingElement> lambdas;
            for (Code c0 = 1; c0 < f->q(); ++c0) {
                if (t == 1) {
                    lambdas.push_back(ring_from(ring, {c0}));
                    continue;
                }
                for (Code c1 = 1; c1 < f->q(); ++c1)
                    lambdas.push_back(ring_from(ring, {c0, c1}));
            }
            for (std::uint32_t n = 2; n <= 3; ++n) {
                for (int i = 0; i < 25; ++i) {
                    auto code = rand_ring_code(rng, ring, n, 2);
                    const auto& theta = auts[rng() % auts.size()];
                    const auto& lambda = lambdas[rng() % lambdas.size()];
                    RingTwist tw(theta, lambda);
                    CHECK(is_ring_skew_constacyclic(code, tw) == closed_under_sigma(code, tw));
                }
            }
        }
    }
}

TEST_CASE("invariant codes from matched divisor components") {
    // With theta acting componentwise, picking component j as a code whose
    // generator right-divides x^n - lambda_j under psi_j gives an invariant
    // ring code.
    auto f = FieldSpec::make(2, 2);
    auto ring = make_ring(f, 2);
    auto theta = RingAutomorphism::make(ring, {0, 1}, {1, 1});
    auto lambda = ring_from(ring, {2, 1});
    RingTwist tw(theta, lambda);
    FieldAutomorphism frob(f, 1);
    TwistContext c1(3, FieldElement{f, 2}, frob);
    TwistContext c2(3, FieldElement{f, 1}, frob);
    for (const auto& g1 : right_divisors(c1)) {
        for (const auto& g2 : right_divisors(c2)) {
            auto code = RingLinearCode::from_components(
                ring, 3,
                {code_from_skew_generator(c1, g1), code_from_skew_generator(c2, g2)});
            CHECK(is_ring_skew_constacyclic(code, tw));
            CHECK(closed_under_sigma(code, tw));
        }
    }
    // Swapping in a mismatched component breaks invariance.
    auto bad = RingLinearCode::from_components(
        ring, 3,
        {LinearCode::from_rows(f, 3, {{1, 0, 0}}), code_from_skew_generator(c2, SkewPoly::constant(frob, 1))});
    CHECK_FALSE(is_ring_skew_constacyclic(bad, tw));
    CHECK_FALSE(closed_under_sigma(bad, tw));
}

TEST_CASE("cycle construction from a seed code") {
    auto f = FieldSpec::make(2, 1);

    // t = 2, n = 3: gcd is 1, so the seed must be fully shift-invariant.
    auto ring2 = make_ring(f, 2);
    auto seed = LinearCode::from_rows(f, 3, {{1, 1, 1}});
    auto built = build_case_two(seed, ring2, 3, cycle_aut(ring2));
    CHECK(built.component(0) == seed);
    CHECK(built.component(1) == seed);
    RingTwist tw2(cycle_aut(ring2), ring_one(ring2));
    CHECK(is_ring_skew_constacyclic(built, tw2));

    // t = 2, n = 4: the seed only needs invariance under the double shift.
    auto qc = LinearCode::from_rows(f, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto built2 = build_case_two(qc, ring2, 4, cycle_aut(ring2));
    CHECK(built2.component(0) == qc);
    CHECK(built2.component(1) ==
          LinearCode::from_rows(f, 4, {{0, 1, 1, 0}, {1, 0, 0, 1}}));
    CHECK(is_ring_skew_constacyclic(built2, RingTwist(cycle_aut(ring2), ring_one(ring2))));

    auto lone = LinearCode::from_rows(f, 4, {{1, 1, 0, 0}});
    CHECK_THROWS_AS(build_case_two(lone, ring2, 4, cycle_aut(ring2)), error);
    try {
        build_case_two(lone, ring2, 4, cycle_aut(ring2));
    } catch (const error& e) {
        CHECK(e.code() == errc::not_quasi_cyclic_index_ell);
    }

    // t = 3, n = 3: gcd 3 means any seed closes up around the cycle.
    auto ring3 = make_ring(f, 3);
    auto seed3 = LinearCode::from_rows(f, 3, {{1, 1, 0}});
    auto built3 = build_case_two(seed3, ring3, 3, cycle_aut(ring3));
    CHECK(built3.component(0) == seed3);
    CHECK(is_ring_skew_constacyclic(built3, RingTwist(cycle_aut(ring3), ring_one(ring3))));

    // Scope: only pure full-cycle permutations are covered.
    auto f4 = FieldSpec::make(2, 2);
    auto ring4 = make_ring(f4, 2);
    auto seed4 = LinearCode::from_rows(f4, 3, {{1, 1, 1}});
    auto with_frob = RingAutomorphism::make(ring4, {1, 0}, {1, 0});
    CHECK_THROWS_AS(build_case_two(seed4, ring4, 3, with_frob), error);
    CHECK_THROWS_AS(
        build_case_two(seed4, ring4, 3, RingAutomorphism::identity(ring4)), error);
    try {
        build_case_two(seed4, ring4, 3, RingAutomorphism::identity(ring4));
    } catch (const error& e) {
        CHECK(e.code() == errc::scope_restriction);
    }
    CHECK_THROWS_AS(build_case_two(seed, ring2, 4, cycle_aut(ring2)), error);  // length clash
}

TEST_CASE("generator tuple for componentwise twists") {
    auto f = FieldSpec::make(2, 2);
    auto ring = make_ring(f, 2);
    auto theta = RingAutomorphism::make(ring, {0, 1}, {0, 1});
    auto lambda = ring_from(ring, {1, 2});
    RingTwist tw(theta, lambda);
    FieldAutomorphism id(f, 0), frob(f, 1);
    TwistContext c1(3, FieldElement{f, 1}, id);
    TwistContext c2(3, FieldElement{f, 2}, frob);
    auto g1 = SkewPoly::from_coeffs(id, {1, 1});
    auto g2 = SkewPoly::from_coeffs(frob, {2, 1});
    auto code = RingLinearCode::from_components(
        ring, 3, {code_from_skew_generator(c1, g1), code_from_skew_generator(c2, g2)});
    auto gen = ring_generator_polynomial(code, tw);
    REQUIRE(gen.components.size() == 2);
    CHECK(gen.components[0] == g1);
    CHECK(gen.components[1] == g2);
    CHECK(gen.to_string() == "(x + 1)e_1 + (x + 2)e_2");
    CHECK(gen.to_string(true) == "(x + 1)e_1 + (x + a)e_2");

    // A zero component is reported as the full modulus.
    auto with_zero = RingLinearCode::from_components(
        ring, 3, {code_from_skew_generator(c1, g1), LinearCode::zero(f, 3)});
    auto gen2 = ring_generator_polynomial(with_zero, tw);
    CHECK(gen2.components[1] == c2.modulus());
    // Rebuilding from the tuple recovers the code, modulus meaning "zero".
    CHECK(code_from_skew_generator(c2, gen2.components[1]) == LinearCode::zero(f, 3));

    CHECK_THROWS_AS(ring_generator_polynomial(RingLinearCode::zero(ring, 3), tw), error);
    auto swap = RingAutomorphism::make(ring, {1, 0}, {0, 0});
    CHECK_THROWS_AS(ring_generator_polynomial(code, RingTwist(swap, lambda)), error);
    try {
        ring_generator_polynomial(code, RingTwist(swap, lambda));
    } catch (const error& e) {
        CHECK(e.code() == errc::scope_restriction);
    }
}

TEST_CASE("counting cycle-invariant codes") {
    auto f2 = FieldSpec::make(2, 1);
    auto ring = make_ring(f2, 2);
    CHECK(count_theta_cyclic_coprime(ring, 3, cycle_aut(ring)) == 4);

    // x^4 - 1 = (x + 1)^4 over F_2: five divisors.
    auto ring3 = make_ring(f2, 3);
    CHECK(count_theta_cyclic_coprime(ring3, 4, cycle_aut(ring3)) == 5);

    // The count only depends on the factor structure of x^n - 1, not on t.
    auto f3 = FieldSpec::make(3, 1);
    auto r3 = make_ring(f3, 3);
    CHECK(count_theta_cyclic_coprime(r3, 10, cycle_aut(r3)) == 16);

    // Exhaustive cross-check for the smallest case: a cycle-invariant pair
    // must satisfy rho(C_1) = C_2 and rho(C_2) = C_1, which forces C_1 to be
    // plain cyclic and C_2 equal to it.
    std::uint64_t direct = 0;
    ShiftMap rho(FieldAutomorphism(f2, 0), FieldElement{f2, 1});
    for (const auto& c1 : oracle::all_subspaces(f2, 3)) {
        for (const auto& c2 : oracle::all_subspaces(f2, 3)) {
            if (image_under(c1, rho) == c2 && image_under(c2, rho) == c1) ++direct;
        }
    }
    CHECK(direct == 4);

    auto r2 = make_ring(f3, 2);
    CHECK_THROWS_AS(count_theta_cyclic_coprime(r2, 10, cycle_aut(r2)), error);
    try {
        count_theta_cyclic_coprime(r2, 10, cycle_aut(r2));
    } catch (const error& e) {
        CHECK(e.code() == errc::coprimality_violated);
    }
    CHECK_THROWS_AS(count_theta_cyclic_coprime(r2, 3, RingAutomorphism::identity(r2)), error);
    // Any Frobenius part also falls outside the counting scope.
    auto r4 = make_ring(FieldSpec::make(2, 2), 2);
    CHECK_THROWS_AS(
        count_theta_cyclic_coprime(r4, 3, RingAutomorphism::make(r4, {1, 0}, {1, 0})), error);
}

TEST_CASE("gray weight and minimum distance") {
    auto f = FieldSpec::make(2, 1);
    auto ring = make_ring(f, 2);
    std::vector<RingElement> w{ring_from(ring, {1, 0}), ring_from(ring, {0, 0}),
                               ring_from(ring, {1, 1})};
    CHECK(gray_weight(w) == 3);
    CHECK(gray_weight(std::vector<RingElement>{}) == 0);

    auto rep = LinearCode::from_rows(f, 3, {{1, 1, 1}});
    auto c = RingLinearCode::from_components(ring, 3, {rep, LinearCode::full(f, 3)});
    CHECK(ring_min_distance(c) == 1);
    auto reps = RingLinearCode::from_components(ring, 3, {rep, rep});
    CHECK(ring_min_distance(reps) == 3);
    auto half = RingLinearCode::from_components(ring, 3, {rep, LinearCode::zero(f, 3)});
    CHECK(ring_min_distance(half) == 3);
    CHECK_THROWS_AS(ring_min_distance(RingLinearCode::zero(ring, 3)), error);

    // The Gray distance of the whole code is the smallest Gray weight of a
    // nonzero word; brute force over all words agrees.
    std::mt19937 rng(113);
    for (int i = 0; i < 15; ++i) {
        auto code = rand_ring_code(rng, ring, 3, 2);
        if (code.total_dim() == 0) continue;
        std::uint32_t best = 99;
        for (const auto& word : all_ring_words(code)) {
            auto wt = gray_weight(word);
            if (wt > 0 && wt < best) best = wt;
        }
        CHECK(ring_min_distance(code) == best);
    }
}

}  // TEST_SUITE("ring_code")

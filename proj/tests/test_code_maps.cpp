#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "skewcc/code_maps.hpp"
#include "skewcc/skew_poly.hpp"

using namespace skewcc;

namespace {

RingLinearCode rand_ring_code(std::mt19937& rng, const RingRef& ring, std::uint32_t n,
                              std::uint32_t max_rows) {
    std::vector<LinearCode> comps;
    for (std::uint32_t j = 0; j < ring->t(); ++j)
        comps.push_back(oracle::rand_linear_code(rng, ring->field(), n, max_rows));
    return RingLinearCode::from_components(ring, n, comps);
}

}  // namespace

TEST_SUITE("code_maps") {

TEST_CASE("matrix basics") {
    auto f = FieldSpec::make(3, 1);
    auto m = map_matrix(f, 2, 2, {1, 1, 1, 2});
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 1) == 2);
    CHECK(matrix_rank(m) == 2);
    CHECK(is_invertible(m));
    CHECK_FALSE(is_invertible(map_matrix(f, 2, 2, {1, 1, 2, 2})));
    CHECK_FALSE(is_invertible(map_matrix(f, 2, 3, {1, 0, 0, 0, 1, 0})));
    CHECK(matrix_rank(map_matrix(f, 2, 3, {1, 0, 0, 0, 1, 0})) == 2);
    CHECK(identity_matrix(f, 3).entries == std::vector<Code>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(map_matrix(f, 2, 2, {1, 1, 1}), error);
    CHECK_THROWS_AS(map_matrix(f, 2, 2, {1, 1, 1, 3}), error);
    CHECK_THROWS_AS(map_matrix(f, 0, 2, {}), error);
}

TEST_CASE("matrix product code is the plotkin construction for its classic matrix") {
    auto f = FieldSpec::make(2, 1);
    auto c1 = LinearCode::from_rows(f, 2, {{1, 1}});
    auto c2 = LinearCode::from_rows(f, 2, {{1, 0}});
    auto plotkin = map_matrix(f, 2, 2, {1, 1, 0, 1});
    auto mpc = matrix_product_code({c1, c2}, plotkin);
    CHECK(mpc.length() == 4);
    CHECK(mpc.dim() == 2);
    // (u | u + v) for u in C1, v in C2.
    std::set<std::vector<Code>> want;
    for (const auto& u : oracle::all_words(c1)) {
        for (const auto& v : oracle::all_words(c2)) {
            std::vector<Code> w;
            for (auto x : u) w.push_back(x);
            for (std::size_t i = 0; i < 2; ++i) w.push_back(f->add(u[i], v[i]));
            want.insert(w);
        }
    }
    auto words = oracle::all_words(mpc);
    CHECK(std::set<std::vector<Code>>(words.begin(), words.end()) == want);

    CHECK_THROWS_AS(matrix_product_code({c1}, plotkin), error);
    auto c3 = LinearCode::from_rows(f, 3, {{1, 0, 1}});
    CHECK_THROWS_AS(matrix_product_code({c1, c3}, plotkin), error);
}

TEST_CASE("phi glues components side by side") {
    auto f = FieldSpec::make(2, 1);
    auto ring = make_ring(f, 2);
    auto c = RingLinearCode::from_components(
        ring, 2,
        {LinearCode::from_rows(f, 2, {{1, 1}}), LinearCode::from_rows(f, 2, {{1, 0}})});
    auto image = phi_map(c);
    CHECK(image.length() == 4);
    CHECK(image.dim() == c.total_dim());
    std::set<std::vector<Code>> want;
    for (const auto& v1 : oracle::all_words(c.component(0))) {
        for (const auto& v2 : oracle::all_words(c.component(1))) {
            std::vector<Code> w(v1);
            w.insert(w.end(), v2.begin(), v2.end());
            want.insert(w);
        }
    }
    auto words = oracle::all_words(image);
    CHECK(std::set<std::vector<Code>>(words.begin(), words.end()) == want);

    // Doubling a parity-check code gives the expected parameters.
    auto parity = LinearCode::from_rows(f, 3, {{1, 1, 0}, {0, 1, 1}});
    auto doubled = phi_map(RingLinearCode::from_components(ring, 3, {parity, parity}));
    CHECK(doubled.length() == 6);
    CHECK(doubled.dim() == 4);
    CHECK(min_distance(doubled) == 2);
}

TEST_CASE("eta equals flattening followed by the kronecker block map") {
    std::mt19937 rng(127);
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}}) {
        auto f = FieldSpec::make(p, r);
        for (std::uint32_t t = 2; t <= 3; ++t) {
            auto ring = make_ring(f, t);
            for (int trial = 0; trial < 12; ++trial) {
                std::uint32_t n = 2 + rng() % 3;
                auto code = rand_ring_code(rng, ring, n, 2);
                // Random invertible mixer.
                MapMatrix m = identity_matrix(f, t);
                do {
                    m.entries = oracle::rand_vector(rng, f->q(), (std::size_t)t * t);
                } while (!is_invertible(m));
                auto image = eta_map(m, code);
                CHECK(image.dim() == code.total_dim());

                // Build M (x) E_n explicitly and push phi rows through it.
                auto phi_image = phi_map(code);
                std::uint32_t big = t * n;
                std::vector<std::vector<Code>> rows;
                for (std::uint32_t i = 0; i < phi_image.dim(); ++i) {
                    auto row = phi_image.row(i);
                    std::vector<Code> out(big, 0);
                    for (std::uint32_t bj = 0; bj < t; ++bj) {
                        for (std::uint32_t bk = 0; bk < t; ++bk) {
                            Code scale = m.at(bj, bk);
                            if (scale == 0) continue;
                            for (std::uint32_t s = 0; s < n; ++s) {
                                auto& slot = out[bk * n + s];
                                slot = f->add(slot, f->mul(row[bj * n + s], scale));
                            }
                        }
                    }
                    rows.push_back(std::move(out));
                }
                CHECK(image == LinearCode::from_rows(f, big, rows));
            }
        }
    }
    auto f = FieldSpec::make(3, 1);
    auto ring = make_ring(f, 2);
    auto code = RingLinearCode::zero(ring, 2);
    CHECK_THROWS_AS(eta_map(map_matrix(f, 2, 2, {1, 1, 2, 2}), code), error);
    CHECK_THROWS_AS(eta_map(map_matrix(f, 2, 3, {1, 1, 2, 2, 0, 0}), code), error);
}

TEST_CASE("psi takes the component sum") {
    auto f = FieldSpec::make(3, 1);
    auto ring = make_ring(f, 2);
    std::mt19937 rng(131);
    for (int i = 0; i < 25; ++i) {
        auto code = rand_ring_code(rng, ring, 4, 2);
        auto image = psi_map(code);
        CHECK(image == sum_codes(code.component(0), code.component(1)));
        CHECK(image.dim() <= code.total_dim());
    }
    // Dimensions add exactly when the components only share the zero word.
    auto a = LinearCode::from_rows(f, 4, {{1, 0, 0, 0}});
    auto b = LinearCode::from_rows(f, 4, {{0, 1, 0, 0}});
    CHECK(psi_map(RingLinearCode::from_components(ring, 4, {a, b})).dim() == 2);
    CHECK(psi_map(RingLinearCode::from_components(ring, 4, {a, a})).dim() == 1);
}

TEST_CASE("cyclic and negacyclic codes meet trivially when short enough") {
    auto f3 = FieldSpec::make(3, 1);
    FieldAutomorphism id(f3, 0);
    TwistContext cyc(4, FieldElement{f3, 1}, id);
    TwistContext neg(4, FieldElement{f3, 2}, id);
    // k1 = 1 and k2 = 2 with k1 + k2 < 4.
    auto c1 = code_from_skew_generator(cyc, SkewPoly::from_coeffs(id, {1, 1, 1, 1}));
    auto c2 = code_from_skew_generator(neg, SkewPoly::from_coeffs(id, {2, 1, 1}));
    auto verdict = cyclic_negacyclic_intersection_trivial(c1, c2);
    CHECK(verdict.preconditions_met);
    CHECK(verdict.trivial);
    CHECK(intersection_dim(c1, c2) == 0);

    // Dimensions too large: the guarantee lapses and these two really meet.
    auto big1 = code_from_skew_generator(cyc, SkewPoly::from_coeffs(id, {2, 1}));
    auto verdict2 = cyclic_negacyclic_intersection_trivial(big1, c2);
    CHECK_FALSE(verdict2.preconditions_met);
    CHECK_FALSE(verdict2.trivial);

    // Characteristic 2 is excluded even when everything else lines up.
    auto f2 = FieldSpec::make(2, 1);
    FieldAutomorphism id2(f2, 0);
    TwistContext cyc2(4, FieldElement{f2, 1}, id2);
    auto d1 = code_from_skew_generator(cyc2, SkewPoly::from_coeffs(id2, {1, 1, 1, 1}));
    auto verdict3 = cyclic_negacyclic_intersection_trivial(d1, d1);
    CHECK_FALSE(verdict3.preconditions_met);

    // A non-cyclic first argument fails the preconditions too.
    auto stray = LinearCode::from_rows(f3, 4, {{1, 0, 0, 0}});
    CHECK_FALSE(cyclic_negacyclic_intersection_trivial(stray, c2).preconditions_met);
}

TEST_CASE("vandermonde mixer") {
    auto f5 = FieldSpec::make(5, 1);
    // All four units are fourth roots of unity over F_5.
    std::vector<Code> roots{1, 2, 4, 3};
    auto m = vandermonde_map(f5, {1, 1, 1, 1}, roots);
    CHECK(m.rows == 4);
    for (std::uint32_t j = 0; j < 4; ++j) {
        for (std::uint32_t k = 0; k < 4; ++k) {
            CHECK(m.at(j, k) == f5->pow(roots[j], k));
        }
    }
    CHECK(is_invertible(m));

    // Row scalars multiply through.
    auto scaled = vandermonde_map(f5, {2, 3}, {1, 4});
    CHECK(scaled.at(0, 0) == 2);
    CHECK(scaled.at(1, 1) == f5->mul(3, 4));

    auto f3 = FieldSpec::make(3, 1);
    auto small = vandermonde_map(f3, {1, 1}, {1, 2});
    CHECK(small.entries == std::vector<Code>{1, 1, 1, 2});

    auto f4 = FieldSpec::make(2, 2);
    CHECK(vandermonde_map(f4, {1, 1, 1}, {1, 2, 3}).rows == 3);  // cube roots in F_4

    CHECK_THROWS_AS(vandermonde_map(f4, {1, 1}, {1, 2}), error);  // 2 does not divide q - 1
    try {
        vandermonde_map(f4, {1, 1}, {1, 2});
    } catch (const error& e) {
        CHECK(e.code() == errc::divisibility_violated);
    }
    CHECK_THROWS_AS(vandermonde_map(f5, {1, 1}, {1, 1}), error);      // repeated root
    CHECK_THROWS_AS(vandermonde_map(f5, {1, 0}, {1, 4}), error);      // zero scalar
    CHECK_THROWS_AS(vandermonde_map(f5, {1, 1}, {1, 3}), error);      // 3^2 = 4 != 1
    CHECK_THROWS_AS(vandermonde_map(f5, {1, 1}, {1, 0}), error);      // root must be a unit
    CHECK_THROWS_AS(vandermonde_map(f5, {1, 1, 1}, {1, 4}), error);   // list length clash
}

TEST_CASE("duality transport") {
    auto f3 = FieldSpec::make(3, 1);
    auto ring = make_ring(f3, 2);
    auto m = map_matrix(f3, 2, 2, {1, 1, 1, 2});  // M M^T = 2 E_2
    std::mt19937 rng(137);
    for (int i = 0; i < 20; ++i) {
        auto code = rand_ring_code(rng, ring, 1 + rng() % 5, 3);
        CHECK(duality_transport_check(m, code));
    }

    // Identity mixer: phi itself transports duals.
    auto f2 = FieldSpec::make(2, 1);
    auto ring2 = make_ring(f2, 2);
    for (int i = 0; i < 20; ++i) {
        auto code = rand_ring_code(rng, ring2, 1 + rng() % 4, 2);
        CHECK(duality_transport_check(identity_matrix(f2, 2), code));
    }

    // The plotkin matrix is not row-orthogonal, so the check refuses it.
    auto code = rand_ring_code(rng, ring2, 3, 2);
    CHECK_THROWS_AS(duality_transport_check(map_matrix(f2, 2, 2, {1, 1, 0, 1}), code), error);
    try {
        duality_transport_check(map_matrix(f2, 2, 2, {1, 1, 0, 1}), code);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_scaled_orthogonal);
    }
    CHECK_THROWS_AS(
        duality_transport_check(map_matrix(f3, 2, 2, {0, 0, 0, 0}), rand_ring_code(rng, ring, 2, 2)),
        error);
}

}  // TEST_SUITE("code_maps")

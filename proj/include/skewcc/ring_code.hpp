#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcc/block_code.hpp"
#include "skewcc/product_ring.hpp"

namespace skewcc {

// Linear code over R = F^t of length n. Every R-submodule of R^n splits as a
// direct sum over the coordinate idempotents, so the code is stored as its t
// component codes over F, each of length n.
class RingLinearCode {
  public:
    static RingLinearCode from_components(RingRef ring, std::uint32_t n,
                                          std::vector<LinearCode> components);
    static RingLinearCode from_ring_genmat(RingRef ring, std::uint32_t n,
                                           const std::vector<std::vector<RingElement>>& rows);
    static RingLinearCode zero(RingRef ring, std::uint32_t n);

    const RingRef& ring() const { return ring_; }
    std::uint32_t length() const { return n_; }
    const std::vector<LinearCode>& components() const { return components_; }
    const LinearCode& component(std::uint32_t j) const { return components_[j]; }
    std::uint32_t total_dim() const;

    bool contains(const std::vector<RingElement>& word) const;

    std::string to_string() const;

  private:
    RingLinearCode(RingRef ring, std::uint32_t n, std::vector<LinearCode> components)
        : ring_(std::move(ring)), n_(n), components_(std::move(components)) {}

    RingRef ring_;
    std::uint32_t n_;
    std::vector<LinearCode> components_;
};

bool operator==(const RingLinearCode& a, const RingLinearCode& b);
bool operator!=(const RingLinearCode& a, const RingLinearCode& b);

// Componentwise Euclidean dual.
RingLinearCode ring_dual(const RingLinearCode& c);

// The twisted shift data over the ring: an automorphism theta of R and a unit
// constant lambda.
struct RingTwist {
    RingAutomorphism theta;
    RingElement lambda;

    RingTwist(RingAutomorphism th, RingElement la);
};

// sigma(v_0, ..., v_{n-1}) = (lambda * theta(v_{n-1}), theta(v_0), ..., theta(v_{n-2})).
std::vector<RingElement> apply_sigma(const RingTwist& tw, const std::vector<RingElement>& word);

// Direct check: apply sigma to a module generating set and test membership.
bool closed_under_sigma(const RingLinearCode& c, const RingTwist& tw);

// Componentwise criterion: with theta sending component j to perm[j] via the
// Frobenius power exps[j], the code is sigma-closed exactly when the twisted
// shift by (exps[j], lambda_{perm[j]}) maps component j onto component
// perm[j], for every j. Agrees with closed_under_sigma; costs t small span
// computations instead of a membership sweep.
bool is_ring_skew_constacyclic(const RingLinearCode& c, const RingTwist& tw);

// For a pure full-cycle coordinate permutation theta (lambda = 1), a sigma-
// closed code is determined by one seed component: walking the cycle from
// coordinate 0, each next component is the cyclic shift of the previous one.
// Consistency around the cycle requires the seed to be invariant under
// shifting gcd(t, n) times; otherwise the seed is rejected.
RingLinearCode build_case_two(const LinearCode& seed, const RingRef& ring, std::uint32_t n,
                              const RingAutomorphism& theta);

// Generator of a sigma-closed code for theta fixing every coordinate: one
// skew polynomial per component, with the convention that a zero component
// is generated by the modulus x^n - lambda_j itself.
struct RingGenerator {
    std::vector<SkewPoly> components;

    std::string to_string(bool pretty = false) const;
};

RingGenerator ring_generator_polynomial(const RingLinearCode& c, const RingTwist& tw);

// Number of sigma-closed codes of length n for a full-cycle permutation theta
// with lambda = 1, in the coprime case gcd(t, n) = 1: every component equals
// the seed, the seed must be cyclic, and cyclic codes of length n are counted
// by the divisors of x^n - 1.
std::uint64_t count_theta_cyclic_coprime(const RingRef& ring, std::uint32_t n,
                                         const RingAutomorphism& theta);

// Weight of a ring word: nonzero field entries across all components.
std::uint32_t gray_weight(const std::vector<RingElement>& word);

// Minimum weight of a nonzero codeword, which splits as the smallest of the
// component minimum distances over the nonzero components.
std::uint32_t ring_min_distance(const RingLinearCode& c, std::uint64_t budget = kDefaultWalkBudget,
                                std::uint32_t workers = 1);

}  // namespace skewcc

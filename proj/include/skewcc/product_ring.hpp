#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewcc/field.hpp"

namespace skewcc {

inline constexpr std::uint64_t kDefaultAutCap = 1000000;

// The product ring R = F^t with componentwise operations. Elements are tuples
// of field codes; e_j denotes the j-th coordinate idempotent.
class RingSpec {
  public:
    static std::shared_ptr<const RingSpec> make(FieldRef field, std::uint32_t t);

    const FieldRef& field() const { return field_; }
    std::uint32_t t() const { return t_; }

    // (q - 1)^t, the number of units.
    std::uint64_t unit_count() const;

  private:
    RingSpec(FieldRef field, std::uint32_t t) : field_(std::move(field)), t_(t) {}
    FieldRef field_;
    std::uint32_t t_;
};

using RingRef = std::shared_ptr<const RingSpec>;

RingRef make_ring(FieldRef field, std::uint32_t t);

void ensure_same_ring(const RingRef& a, const RingRef& b);

struct RingElement {
    RingRef ring;
    std::vector<Code> comps;  // length t
};

RingElement ring_zero(RingRef ring);
RingElement ring_one(RingRef ring);
RingElement ring_idempotent(RingRef ring, std::uint32_t j);
RingElement ring_from(RingRef ring, std::vector<Code> comps);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_scale(Code c, const RingElement& a);

bool operator==(const RingElement& a, const RingElement& b);
bool operator!=(const RingElement& a, const RingElement& b);

// A unit of F^t is a tuple with every component nonzero.
bool is_unit(const RingElement& a);
RingElement ring_inv(const RingElement& a);

std::string to_string(const RingElement& a);

// Ideals of F^t are in bijection with coordinate supports: the ideal with
// support S is { a : a_j = 0 for j outside S }. Maximal ideals are the ones
// missing exactly one coordinate.
struct Ideal {
    RingRef ring;
    std::uint32_t support;  // bitmask over coordinates

    bool contains(const RingElement& a) const;
    std::uint32_t rank() const;  // popcount
    bool is_maximal() const;
    std::string to_string() const;
};

// All 2^t ideals in ascending mask order. Guarded for small t only.
std::vector<Ideal> list_ideals(const RingRef& ring);

// Ring automorphism a = sum a_j e_j  |->  sum psi_j(a_j) e_{perm[j]} with
// psi_j a power of the Frobenius. perm is stored 0-based as the image list
// j -> perm[j]; exps[j] is the Frobenius exponent applied to component j
// before it moves.
struct RingAutomorphism {
    RingRef ring;
    std::vector<std::uint32_t> perm;
    std::vector<std::uint32_t> exps;

    static RingAutomorphism identity(RingRef ring);
    static RingAutomorphism make(RingRef ring, std::vector<std::uint32_t> perm,
                                 std::vector<std::uint32_t> exps);

    RingElement apply(const RingElement& a) const;

    // G1: automorphisms that fix every coordinate (perm = id).
    bool in_g1() const;
    // G2: pure coordinate permutations (all exponents zero).
    bool in_g2() const;
    bool is_identity() const;

    // this after other.
    RingAutomorphism compose(const RingAutomorphism& other) const;
    RingAutomorphism inverse() const;
    std::uint32_t order() const;

    std::string to_string() const;  // 1-based, e.g. "perm:[2,3,1] exps:[1,0,1]"
};

bool operator==(const RingAutomorphism& a, const RingAutomorphism& b);
bool operator!=(const RingAutomorphism& a, const RingAutomorphism& b);

// Writes theta as g1 . g2 with g1 in G1 and g2 in G2 (the group is the
// semidirect product of the two).
struct AutFactors {
    RingAutomorphism g1;
    RingAutomorphism g2;
};

AutFactors factor_aut(const RingAutomorphism& theta);

// Every automorphism, permutations in lexicographic order and exponent
// tuples in odometer order within each permutation. The full group has
// r^t * t! elements; enumeration refuses when that exceeds the cap.
std::vector<RingAutomorphism> enumerate_aut(const RingRef& ring,
                                            std::uint64_t cap = kDefaultAutCap);

}  // namespace skewcc

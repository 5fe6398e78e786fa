#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skewcc/skew_poly.hpp"

namespace skewcc {

inline constexpr std::uint64_t kDefaultWalkBudget = 1ull << 27;

// Linear [n, k] code over GF(q), held in reduced row echelon form. Two codes
// are equal exactly when their canonical matrices are equal, which makes
// span comparisons cheap and deterministic everywhere else in the library.
class LinearCode {
  public:
    static LinearCode from_rows(FieldRef field, std::uint32_t n,
                                const std::vector<std::vector<Code>>& rows);
    static LinearCode from_flat(FieldRef field, std::uint32_t n, std::vector<Code> rows);
    static LinearCode zero(FieldRef field, std::uint32_t n);
    static LinearCode full(FieldRef field, std::uint32_t n);

    const FieldRef& field() const { return field_; }
    std::uint32_t length() const { return n_; }
    std::uint32_t dim() const { return k_; }
    const std::vector<Code>& matrix() const { return mat_; }  // k*n row-major
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    std::span<const Code> row(std::uint32_t i) const { return {mat_.data() + (std::size_t)i * n_, n_}; }

    bool contains(std::span<const Code> word) const;
    bool is_subcode_of(const LinearCode& other) const;

    std::string to_string() const;

  private:
    LinearCode(FieldRef field, std::uint32_t n, std::vector<Code> rref, std::uint32_t k,
               std::vector<std::uint32_t> pivots);

    FieldRef field_;
    std::uint32_t n_ = 0, k_ = 0;
    std::vector<Code> mat_;
    std::vector<std::uint32_t> pivots_;
};

bool operator==(const LinearCode& a, const LinearCode& b);
bool operator!=(const LinearCode& a, const LinearCode& b);

// Twisted constacyclic shift
//   (v_0, ..., v_{n-1}) -> (lambda * theta(v_{n-1}), theta(v_0), ..., theta(v_{n-2})).
// A code closed under it is exactly a theta-lambda-cyclic code.
struct ShiftMap {
    FieldAutomorphism theta;
    FieldElement lambda;

    ShiftMap(FieldAutomorphism th, FieldElement la);

    std::vector<Code> apply(std::span<const Code> word) const;
};

LinearCode dual(const LinearCode& c);

// Exact minimum Hamming weight by walking all q^k - 1 nonzero messages in
// reflected Gray order, so each step touches one generator row scaled by a
// single symbol delta. The walk refuses to start when q^k exceeds the budget.
// Extra workers split the walk on the leading message symbol; the result does
// not depend on the split.
std::uint32_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultWalkBudget,
                           std::uint32_t workers = 1);

// Full weight distribution (A_0, ..., A_n), same walk and budget as min_distance.
std::vector<std::uint64_t> weight_enumerator(const LinearCode& c,
                                             std::uint64_t budget = kDefaultWalkBudget,
                                             std::uint32_t workers = 1);

// Closure of the span under the twisted shift. Checking generator rows is
// enough: the map is additive and scales by theta, so the image of the span
// is the span of the row images.
bool is_closed_under(const LinearCode& c, const ShiftMap& m);

// Image of the code under the twisted shift (same span machinery).
LinearCode image_under(const LinearCode& c, const ShiftMap& m);

// Quasi-twisted of index ell: closed under ell applications of the plain
// lambda-constacyclic shift.
bool is_quasi_twisted(const LinearCode& c, const FieldElement& lambda, std::uint32_t ell);

// Code generated by a monic right divisor g of x^n - lambda, deg g < n.
// Row i of the generator matrix is theta^i applied to the coefficients of g,
// shifted i places right; the span is canonicalized like any other code.
LinearCode code_from_skew_generator(const TwistContext& ctx, const SkewPoly& g);

// Recovers the unique monic minimal-degree polynomial whose coefficient
// vector (padded with zeros) lies in the code; for a code closed under the
// twisted shift this is the generator. Degrees are tried in ascending order,
// each one a small linear solve against the canonical matrix.
SkewPoly generator_skew_polynomial(const LinearCode& c, const TwistContext& ctx);

LinearCode sum_codes(const LinearCode& a, const LinearCode& b);
std::uint32_t intersection_dim(const LinearCode& a, const LinearCode& b);

}  // namespace skewcc

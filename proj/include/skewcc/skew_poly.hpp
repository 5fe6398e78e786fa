#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcc/field.hpp"

namespace skewcc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 24;

// Polynomial in the twisted ring F_q[x; theta]: coefficients on the left,
// multiplication driven by x * b = theta(b) * x, so that
//
//     (a x^n) * (b x^m) = a * theta^n(b) * x^(n+m).
//
// Addition is coefficientwise. The ring is left and right Euclidean, but only
// right division is provided here: f = q * g + r with deg r < deg g, which is
// unique for g != 0.
class SkewPoly {
  public:
    static SkewPoly zero(FieldAutomorphism theta);
    static SkewPoly constant(FieldAutomorphism theta, Code c);
    static SkewPoly monomial(FieldAutomorphism theta, Code c, std::uint32_t deg);
    static SkewPoly from_coeffs(FieldAutomorphism theta, std::vector<Code> coeffs);

    const FieldRef& field() const { return theta_.field; }
    const FieldAutomorphism& theta() const { return theta_; }
    const std::vector<Code>& coeffs() const { return coeffs_; }

    int degree() const { return (int)coeffs_.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Code lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    std::string to_string(bool pretty = false) const;

  private:
    SkewPoly(FieldAutomorphism theta, std::vector<Code> coeffs);

    FieldAutomorphism theta_;
    std::vector<Code> coeffs_;  // ascending, trailing zeros trimmed
};

// Binary operations require matching field and twist.
void ensure_same_context(const SkewPoly& a, const SkewPoly& b);

bool operator==(const SkewPoly& a, const SkewPoly& b);
bool operator!=(const SkewPoly& a, const SkewPoly& b);

SkewPoly skew_add(const SkewPoly& a, const SkewPoly& b);
SkewPoly skew_sub(const SkewPoly& a, const SkewPoly& b);
SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);
SkewPoly skew_scale(Code c, const SkewPoly& f);  // left multiplication by a constant

struct DivModResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

DivModResult right_divmod(const SkewPoly& f, const SkewPoly& g);
bool right_divides(const SkewPoly& g, const SkewPoly& f);  // remainder of f by g is zero

// Everything below works relative to a constacyclic context: length n, unit
// constant lambda and twist theta, i.e. the modulus x^n - lambda.
struct TwistContext {
    std::uint32_t n = 0;
    FieldElement lambda;
    FieldAutomorphism theta;

    TwistContext(std::uint32_t n_, FieldElement lambda_, FieldAutomorphism theta_);

    const FieldRef& field() const { return theta.field; }
    SkewPoly modulus() const;  // x^n - lambda
    Code theta_pow_lambda(std::int64_t k) const { return theta.apply_power(lambda.code, k); }
};

// All monic right divisors of x^n - lambda, found by exhaustive scan over the
// q^d candidates of each requested degree (the cap guards that loop). Sorted
// by degree, then lexicographically on the coefficient codes.
std::vector<SkewPoly> right_divisors(const TwistContext& ctx,
                                     std::optional<std::uint32_t> degree = std::nullopt,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// h with h * g = x^n - lambda.
SkewPoly cofactor(const TwistContext& ctx, const SkewPoly& g);

// hbar = lambda^{-1} * h * theta^{-k}(lambda) where h is the cofactor of g and
// k = deg h; it satisfies g * hbar = x^n - theta^{-k}(lambda).
SkewPoly hbar(const TwistContext& ctx, const SkewPoly& g);

// Twisted reversal of hbar: coefficient of x^i is theta^i(b_{k-i}).
SkewPoly hbar_star(const TwistContext& ctx, const SkewPoly& g);

// Twisted reversal of g itself (degree m = deg g): coefficient of x^i is
// theta^(i-m)(a_{m-i}). Together with hbar_star it satisfies
// 1 - lambda x^n = hbar_star(x) * gtilde(x).
SkewPoly gtilde(const TwistContext& ctx, const SkewPoly& g);

// Monic generator of the dual code, living in the context (n, lambda^{-1}, theta):
// theta^k(b_0^{-1}) * hbar_star with k the dual dimension.
SkewPoly dual_generator(const TwistContext& ctx, const SkewPoly& g);

enum class Containment {
    neither,
    dual_containing,   // the dual is contained in the code
    self_orthogonal,   // the code is contained in its dual
    both,
};

const char* to_string(Containment c);

// Decides both containments for the code generated by g via divisibility:
// requires lambda = lambda^{-1} for either to hold; then the dual is contained
// iff x^n - theta^{-k}(lambda) right-divides hbar_star * hbar, and the code is
// self-orthogonal iff x^n - lambda^{-1} right-divides g * gtilde.
Containment containment_check(const TwistContext& ctx, const SkewPoly& g);

}  // namespace skewcc

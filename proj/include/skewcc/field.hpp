#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewcc/errors.hpp"

namespace skewcc {

// Canonical integer code of a field element: sum of c_i * p^i over the
// polynomial-basis coefficients (c_0, ..., c_{r-1}), little-endian. Codes are
// what all file formats and the CLI speak, so they must be stable; they are
// fixed once p, r and the modulus are fixed.
using Code = std::uint32_t;

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

// Exact arithmetic in GF(p^r).
//
// The modulus is a monic irreducible polynomial of degree r over F_p,
// ascending coefficients, length r+1. When none is supplied the default is
// the monic irreducible whose non-leading coefficient code (sum c_i p^i) is
// smallest; that rule is deterministic, so element codes are reproducible
// across runs and machines. Default selection is supported for p^r <= 2^20;
// beyond that an explicit modulus is required.
//
// Small fields (q <= 256) precompute full operation tables; larger fields
// fall back to per-call polynomial arithmetic. Inverses always come from the
// extended Euclidean algorithm, never from exponentiation.
class FieldSpec {
  public:
    static FieldRef make(std::uint32_t p, std::uint32_t r);
    static FieldRef make(std::uint32_t p, std::uint32_t r, const std::vector<Code>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint64_t q() const { return q_; }
    const std::vector<Code>& modulus() const { return modulus_; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;  // throws division_by_zero on a = 0
    Code div(Code a, Code b) const;
    Code pow(Code a, std::uint64_t e) const;

    // Frobenius power a -> a^(p^e); e is reduced mod r.
    Code frob(Code a, std::uint32_t e) const;

    std::vector<Code> to_coeffs(Code a) const;
    Code from_coeffs(const std::vector<Code>& coeffs) const;

    // "p:2 r:2 mod:[1,1,1]"
    std::string describe() const;

    // Pretty rendering uses a^k names over a fixed primitive element a for
    // extension fields with q <= 16; otherwise the integer code is printed.
    std::string show(Code a, bool pretty = false) const;

    // Least-code multiplicative generator, 0 when not precomputed (q > 16 or r = 1).
    Code pretty_generator() const { return gen_; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

  private:
    FieldSpec(std::uint32_t p, std::uint32_t r, std::vector<Code> modulus);

    Code mul_slow(Code a, Code b) const;
    Code inv_slow(Code a) const;

    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    std::uint64_t q_ = 0;
    std::vector<Code> modulus_;

    bool tabled_ = false;
    std::vector<std::uint16_t> add_t_, mul_t_, neg_t_, inv_t_, frob_t_;
    Code gen_ = 0;
};

void ensure_same_field(const FieldSpec& a, const FieldSpec& b);
void ensure_same_field(const FieldRef& a, const FieldRef& b);

struct FieldElement {
    FieldRef field;
    Code code = 0;

    bool is_zero() const { return code == 0; }
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
bool operator==(const FieldElement& a, const FieldElement& b);
bool operator!=(const FieldElement& a, const FieldElement& b);

// psi = Frob^exponent where Frob(a) = a^p. The full automorphism group of
// GF(p^r) is {Frob^e : 0 <= e < r}, cyclic of order r.
struct FieldAutomorphism {
    FieldRef field;
    std::uint32_t exponent = 0;

    FieldAutomorphism() = default;
    FieldAutomorphism(FieldRef f, std::uint32_t e);

    Code apply(Code a) const { return field->frob(a, exponent); }
    FieldElement operator()(const FieldElement& a) const;

    // psi^k for any integer k (negative = inverse powers).
    Code apply_power(Code a, std::int64_t k) const;

    FieldAutomorphism compose(const FieldAutomorphism& inner) const;  // this after inner
    FieldAutomorphism inverse() const;
    std::uint32_t order() const;
    bool is_identity() const { return exponent == 0; }
};

bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b);
bool operator!=(const FieldAutomorphism& a, const FieldAutomorphism& b);

// --- commutative polynomials over GF(q), ascending coefficient codes ---
//
// These are ordinary (untwisted) polynomials, used for factorization work and
// for assembling generator polynomials out of factor products. Trailing zeros
// are always trimmed; the zero polynomial is the empty vector.

namespace cpoly {

int degree(const std::vector<Code>& f);
void trim(std::vector<Code>& f);
std::vector<Code> mul(const FieldRef& F, const std::vector<Code>& a, const std::vector<Code>& b);
// Division with remainder; g must be nonzero.
void divmod(const FieldRef& F, const std::vector<Code>& f, const std::vector<Code>& g,
            std::vector<Code>& q, std::vector<Code>& rem);
std::vector<Code> product(const FieldRef& F, const std::vector<std::vector<Code>>& factors);

}  // namespace cpoly

struct FactorTerm {
    std::vector<Code> poly;  // monic irreducible, ascending coefficients
    std::uint32_t multiplicity = 0;
};

struct Factorization {
    Code unit = 1;  // leading coefficient of the input
    std::vector<FactorTerm> factors;  // sorted by (degree, coefficient codes)
};

inline constexpr std::uint32_t kDefaultFactorDegreeBound = 64;

// Factor f into monic irreducibles by trial division with candidates
// enumerated by ascending degree: the first divisor of minimal degree is
// automatically irreducible, so no separate irreducibility sieve is needed.
Factorization factor_commutative(const FieldRef& F, std::vector<Code> f,
                                 std::uint32_t degree_bound = kDefaultFactorDegreeBound);

}  // namespace skewcc

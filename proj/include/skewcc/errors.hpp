#pragma once

#include <stdexcept>
#include <string>

namespace skewcc {

// Every failure the library can signal, one tag per condition so callers can
// branch on the kind without parsing messages.
enum class errc {
    not_prime,
    not_irreducible,
    unsupported_size,
    division_by_zero,
    field_mismatch,
    degree_bound,
    divisor_zero,
    context_mismatch,
    enumeration_cap,
    not_a_right_divisor,
    singular_constant_term,
    length_mismatch,
    zero_code,
    budget_exceeded,
    not_skew_constacyclic,
    ring_mismatch,
    not_quasi_cyclic_index_ell,
    scope_restriction,
    coprimality_violated,
    singular_matrix,
    dimension_mismatch,
    roots_not_distinct,
    divisibility_violated,
    not_scaled_orthogonal,
    parse_error,
    invalid_argument,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace skewcc

#pragma once

#include <cstdint>
#include <vector>

#include "skewcc/ring_code.hpp"

namespace skewcc {

// Plain matrix over F, row-major. Used as the mixing matrix of the
// matrix-product constructions.
struct MapMatrix {
    FieldRef field;
    std::uint32_t rows = 0, cols = 0;
    std::vector<Code> entries;

    Code at(std::uint32_t i, std::uint32_t j) const { return entries[(std::size_t)i * cols + j]; }
};

MapMatrix map_matrix(FieldRef field, std::uint32_t rows, std::uint32_t cols,
                     std::vector<Code> entries);
MapMatrix identity_matrix(FieldRef field, std::uint32_t t);

std::uint32_t matrix_rank(const MapMatrix& m);
bool is_invertible(const MapMatrix& m);

// Matrix product code [C_1, ..., C_u] . A for a u x v matrix A: the span of
// the words (sum_k a_{k1} c_k | ... | sum_k a_{kv} c_k) with c_k in C_k.
// Length n*v.
LinearCode matrix_product_code(const std::vector<LinearCode>& codes, const MapMatrix& a);

// phi unfolds a ring word into its component blocks; on a code this is the
// block-diagonal juxtaposition C_1 x ... x C_t of length tn, with the same
// total dimension and minimum weight min_j d(C_j).
LinearCode phi_map(const RingLinearCode& c);

// eta_M = phi followed by the invertible column mixer M (x) E_n; equals the
// matrix product code of the components by M.
LinearCode eta_map(const MapMatrix& m, const RingLinearCode& c);

// psi adds the components coordinatewise: the sum code C_1 + ... + C_t of
// unchanged length n.
LinearCode psi_map(const RingLinearCode& c);

// Triviality of the intersection of a cyclic and a negacyclic code. The
// guarantee (intersection is zero) needs odd characteristic, k1 + k2 < n, and
// the two closure properties; the verdict reports whether those held next to
// the computed rank answer instead of throwing, so callers can observe
// near-miss cases.
struct IntersectionVerdict {
    bool preconditions_met = false;
    bool trivial = false;
};

IntersectionVerdict cyclic_negacyclic_intersection_trivial(const LinearCode& c1,
                                                           const LinearCode& c2);

// M = diag(m_j) * Vandermonde(lambda_j) for distinct t-th roots of unity
// lambda_j and nonzero scalars m_j: row j is m_j * (1, lambda_j, lambda_j^2,
// ..., lambda_j^{t-1}). Needs t | q - 1 so that t distinct roots can exist.
MapMatrix vandermonde_map(const FieldRef& field, const std::vector<Code>& scalars,
                          const std::vector<Code>& roots);

// With M M^T a nonzero scalar multiple of the identity, eta_M carries duals
// to duals; this evaluates both sides and compares. Rejects M that are not
// scaled-orthogonal.
bool duality_transport_check(const MapMatrix& m, const RingLinearCode& c);

}  // namespace skewcc

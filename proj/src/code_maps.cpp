#include "skewcc/code_maps.hpp"

#include <algorithm>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

void check_matrix(const MapMatrix& m) {
    if (!m.field) fail(errc::invalid_argument, "matrix has no field");
    if (m.rows == 0 || m.cols == 0) fail(errc::invalid_argument, "matrix must be nonempty");
    if (m.entries.size() != (std::size_t)m.rows * m.cols)
        fail(errc::dimension_mismatch, "matrix entry count does not match its shape");
    for (Code c : m.entries) {
        if (c >= m.field->q()) fail(errc::field_mismatch, "matrix entry is not a field element");
    }
}

}  // namespace

MapMatrix map_matrix(FieldRef field, std::uint32_t rows, std::uint32_t cols,
                     std::vector<Code> entries) {
    MapMatrix m{std::move(field), rows, cols, std::move(entries)};
    check_matrix(m);
    return m;
}

MapMatrix identity_matrix(FieldRef field, std::uint32_t t) {
    std::vector<Code> e((std::size_t)t * t, 0);
    for (std::uint32_t i = 0; i < t; ++i) e[(std::size_t)i * t + i] = 1;
    return map_matrix(std::move(field), t, t, std::move(e));
}

std::uint32_t matrix_rank(const MapMatrix& m) {
    check_matrix(m);
    // Rank equals the dimension of the row span.
    return LinearCode::from_flat(m.field, m.cols, m.entries).dim();
}

bool is_invertible(const MapMatrix& m) {
    return m.rows == m.cols && matrix_rank(m) == m.rows;
}

LinearCode matrix_product_code(const std::vector<LinearCode>& codes, const MapMatrix& a) {
    check_matrix(a);
    if (codes.empty()) fail(errc::invalid_argument, "need at least one component code");
    if (codes.size() != a.rows)
        fail(errc::dimension_mismatch, "matrix needs one row per component code");
    const FieldRef& field = codes.front().field();
    const std::uint32_t n = codes.front().length();
    for (const auto& c : codes) {
        ensure_same_field(c.field(), field);
        if (c.length() != n) fail(errc::length_mismatch, "component codes must share a length");
    }
    ensure_same_field(field, a.field);

    const FieldSpec& f = *field;
    const std::uint32_t v = a.cols;
    std::vector<Code> rows;
    for (std::uint32_t k = 0; k < codes.size(); ++k) {
        for (std::uint32_t i = 0; i < codes[k].dim(); ++i) {
            auto src = codes[k].row(i);
            std::vector<Code> word((std::size_t)n * v, 0);
            for (std::uint32_t j = 0; j < v; ++j) {
                Code scale = a.at(k, j);
                if (scale == 0) continue;
                for (std::uint32_t pos = 0; pos < n; ++pos)
                    word[(std::size_t)j * n + pos] = f.mul(scale, src[pos]);
            }
            rows.insert(rows.end(), word.begin(), word.end());
        }
    }
    return LinearCode::from_flat(field, n * v, std::move(rows));
}

LinearCode phi_map(const RingLinearCode& c) {
    return matrix_product_code(c.components(), identity_matrix(c.ring()->field(), c.ring()->t()));
}

LinearCode eta_map(const MapMatrix& m, const RingLinearCode& c) {
    check_matrix(m);
    const std::uint32_t t = c.ring()->t();
    if (m.rows != t || m.cols != t)
        fail(errc::dimension_mismatch, "mixing matrix must be t x t");
    if (!is_invertible(m)) fail(errc::singular_matrix, "mixing matrix must be invertible");
    return matrix_product_code(c.components(), m);
}

LinearCode psi_map(const RingLinearCode& c) {
    const std::uint32_t t = c.ring()->t();
    std::vector<Code> ones(t, 1);
    return matrix_product_code(c.components(), map_matrix(c.ring()->field(), t, 1, std::move(ones)));
}

IntersectionVerdict cyclic_negacyclic_intersection_trivial(const LinearCode& c1,
                                                           const LinearCode& c2) {
    ensure_same_field(c1.field(), c2.field());
    if (c1.length() != c2.length())
        fail(errc::length_mismatch, "codes must share a length");
    const FieldRef& field = c1.field();
    const std::uint32_t n = c1.length();

    IntersectionVerdict v;
    bool odd_char = field->p() != 2;
    bool small_dims = c1.dim() + c2.dim() < n;
    FieldElement one{field, 1};
    FieldElement minus_one{field, field->neg(1)};
    FieldAutomorphism id(field, 0);
    bool c1_cyclic = is_closed_under(c1, ShiftMap(id, one));
    bool c2_negacyclic = is_closed_under(c2, ShiftMap(id, minus_one));
    v.preconditions_met = odd_char && small_dims && c1_cyclic && c2_negacyclic;
    v.trivial = intersection_dim(c1, c2) == 0;
    return v;
}

MapMatrix vandermonde_map(const FieldRef& field, const std::vector<Code>& scalars,
                          const std::vector<Code>& roots) {
    if (scalars.size() != roots.size() || scalars.empty())
        fail(errc::dimension_mismatch, "need matching nonempty scalar and root lists");
    const std::uint32_t t = (std::uint32_t)roots.size();
    if ((field->q() - 1) % t != 0)
        fail(errc::divisibility_violated,
             "need t | q - 1 for " + std::to_string(t) + " distinct roots of unity");
    for (Code m : scalars) {
        if (m >= field->q()) fail(errc::field_mismatch, "scalar is not a field element");
        if (m == 0) fail(errc::singular_matrix, "row scalars must be nonzero");
    }
    for (Code r : roots) {
        if (r >= field->q() || r == 0) fail(errc::field_mismatch, "root is not a field unit");
        if (field->pow(r, t) != 1)
            fail(errc::invalid_argument, "each root must satisfy x^t = 1");
    }
    for (std::uint32_t i = 0; i < t; ++i) {
        for (std::uint32_t j = i + 1; j < t; ++j) {
            if (roots[i] == roots[j]) fail(errc::roots_not_distinct, "roots must be pairwise distinct");
        }
    }
    std::vector<Code> entries((std::size_t)t * t);
    for (std::uint32_t j = 0; j < t; ++j) {
        for (std::uint32_t k = 0; k < t; ++k)
            entries[(std::size_t)j * t + k] = field->mul(scalars[j], field->pow(roots[j], k));
    }
    return map_matrix(field, t, t, std::move(entries));
}

bool duality_transport_check(const MapMatrix& m, const RingLinearCode& c) {
    check_matrix(m);
    const FieldRef& field = c.ring()->field();
    ensure_same_field(m.field, field);
    const std::uint32_t t = c.ring()->t();
    if (m.rows != t || m.cols != t)
        fail(errc::dimension_mismatch, "mixing matrix must be t x t");

    // M M^T must be k E_t with k nonzero.
    const FieldSpec& f = *field;
    Code k_diag = 0;
    for (std::uint32_t i = 0; i < t; ++i) {
        for (std::uint32_t j = 0; j < t; ++j) {
            Code dot = 0;
            for (std::uint32_t s = 0; s < t; ++s) dot = f.add(dot, f.mul(m.at(i, s), m.at(j, s)));
            if (i != j) {
                if (dot != 0)
                    fail(errc::not_scaled_orthogonal, "M M^T has a nonzero off-diagonal entry");
            } else if (i == 0) {
                k_diag = dot;
            } else if (dot != k_diag) {
                fail(errc::not_scaled_orthogonal, "M M^T diagonal is not constant");
            }
        }
    }
    if (k_diag == 0) fail(errc::not_scaled_orthogonal, "M M^T vanishes");

    return eta_map(m, ring_dual(c)) == dual(eta_map(m, c));
}

}  // namespace skewcc

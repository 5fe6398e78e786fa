#include "skewcc/block_code.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

// In-place RREF over the given field. Returns pivot columns; rows beyond the
// returned count are zero.
std::vector<std::uint32_t> rref(const FieldSpec& f, std::vector<Code>& m, std::uint32_t rows,
                                std::uint32_t cols) {
    std::vector<std::uint32_t> pivots;
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
        std::uint32_t sel = r;
        while (sel < rows && m[(std::size_t)sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r) {
            for (std::uint32_t j = 0; j < cols; ++j)
                std::swap(m[(std::size_t)sel * cols + j], m[(std::size_t)r * cols + j]);
        }
        Code inv = f.inv(m[(std::size_t)r * cols + c]);
        for (std::uint32_t j = c; j < cols; ++j)
            m[(std::size_t)r * cols + j] = f.mul(inv, m[(std::size_t)r * cols + j]);
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Code factor = m[(std::size_t)i * cols + c];
            if (factor == 0) continue;
            for (std::uint32_t j = c; j < cols; ++j) {
                Code sub = f.mul(factor, m[(std::size_t)r * cols + j]);
                m[(std::size_t)i * cols + j] = f.sub(m[(std::size_t)i * cols + j], sub);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Reduces word against the RREF matrix; returns the residual. Zero residual
// means membership in the row span.
std::vector<Code> reduce_against(const FieldSpec& f, const std::vector<Code>& mat,
                                 const std::vector<std::uint32_t>& pivots, std::uint32_t n,
                                 std::span<const Code> word) {
    std::vector<Code> w(word.begin(), word.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Code factor = w[pivots[i]];
        if (factor == 0) continue;
        for (std::uint32_t j = pivots[i]; j < n; ++j)
            w[j] = f.sub(w[j], f.mul(factor, mat[i * n + j]));
    }
    return w;
}

struct WalkResult {
    std::uint32_t min_weight;
    std::vector<std::uint64_t> counts;
};

// Loopless reflected q-ary Gray walk over messages (Knuth's Algorithm H),
// visiting all q^k messages with one coordinate change per step. The current
// codeword is kept incrementally: changing message digit j by delta adds
// delta * row_j. `fixed_top` pins the leading message digit so workers can
// split the space without overlap.
WalkResult walk_weights(const FieldSpec& f, const std::vector<Code>& mat, std::uint32_t k,
                        std::uint32_t n, std::uint32_t fixed_top, bool has_fixed_top) {
    const std::uint32_t q = (std::uint32_t)f.q();
    std::uint32_t m = has_fixed_top ? k - 1 : k;

    std::vector<Code> cur(n, 0);
    std::uint32_t wt = 0;
    WalkResult res{n + 1, std::vector<std::uint64_t>(n + 1, 0)};

    auto add_row_scaled = [&](std::uint32_t rowi, Code delta) {
        const Code* row = mat.data() + (std::size_t)rowi * n;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            if (cur[j] != 0) --wt;
            cur[j] = f.add(cur[j], f.mul(delta, row[j]));
            if (cur[j] != 0) ++wt;
        }
    };

    if (has_fixed_top && fixed_top != 0) add_row_scaled(m, (Code)fixed_top);

    auto record = [&]() {
        ++res.counts[wt];
        if (wt != 0 && wt < res.min_weight) res.min_weight = wt;
    };

    if (m == 0) {
        record();
        return res;
    }

    // a: message digits, o: direction (+1/-1), focus pointers per Algorithm H.
    std::vector<std::uint32_t> a(m, 0);
    std::vector<int> o(m, 1);
    std::vector<std::uint32_t> fptr(m + 1);
    for (std::uint32_t j = 0; j <= m; ++j) fptr[j] = j;

    record();
    for (;;) {
        std::uint32_t j = fptr[0];
        fptr[0] = 0;
        if (j == m) break;
        std::uint32_t old = a[j];
        std::uint32_t next = (std::uint32_t)((int)old + o[j]);
        a[j] = next;
        // Field-level delta: the new scalar minus the old one.
        Code delta = f.sub((Code)next, (Code)old);
        add_row_scaled(j, delta);
        if (next == 0 || next == q - 1) {
            o[j] = -o[j];
            fptr[j] = fptr[j + 1];
            fptr[j + 1] = j + 1;
        }
        record();
    }
    return res;
}

WalkResult run_walk(const LinearCode& c, std::uint64_t budget, std::uint32_t workers) {
    const FieldSpec& f = *c.field();
    const std::uint32_t k = c.dim();
    const std::uint32_t n = c.length();
    if (k == 0) fail(errc::zero_code, "weight walk needs a nonzero code");

    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        total *= f.q();
        if (total > budget)
            fail(errc::budget_exceeded, "codeword walk size q^k exceeds budget " + std::to_string(budget));
    }

    const std::uint32_t q = (std::uint32_t)f.q();
    if (workers <= 1 || k == 1) {
        return walk_weights(f, c.matrix(), k, n, 0, false);
    }

    // Split on the top message digit: q independent walks over k-1 digits.
    std::vector<WalkResult> parts(q);
    std::atomic<std::uint32_t> next{0};
    std::uint32_t nthreads = std::min<std::uint32_t>(workers, q);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::uint32_t tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&]() {
            for (;;) {
                std::uint32_t top = next.fetch_add(1);
                if (top >= q) return;
                parts[top] = walk_weights(f, c.matrix(), k, n, top, true);
            }
        });
    }
    for (auto& t : pool) t.join();

    WalkResult merged{n + 1, std::vector<std::uint64_t>(n + 1, 0)};
    for (const auto& p : parts) {
        merged.min_weight = std::min(merged.min_weight, p.min_weight);
        for (std::uint32_t w = 0; w <= n; ++w) merged.counts[w] += p.counts[w];
    }
    return merged;
}

}  // namespace

LinearCode::LinearCode(FieldRef field, std::uint32_t n, std::vector<Code> rref_mat, std::uint32_t k,
                       std::vector<std::uint32_t> pivots)
    : field_(std::move(field)), n_(n), k_(k), mat_(std::move(rref_mat)), pivots_(std::move(pivots)) {}

LinearCode LinearCode::from_rows(FieldRef field, std::uint32_t n,
                                 const std::vector<std::vector<Code>>& rows) {
    std::vector<Code> flat;
    flat.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (r.size() != n)
            fail(errc::length_mismatch, "generator row has length " + std::to_string(r.size()) +
                                            ", code length is " + std::to_string(n));
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_flat(std::move(field), n, std::move(flat));
}

LinearCode LinearCode::from_flat(FieldRef field, std::uint32_t n, std::vector<Code> rows) {
    if (n == 0) fail(errc::invalid_argument, "code length must be positive");
    if (rows.size() % n != 0)
        fail(errc::length_mismatch, "flat generator data is not a multiple of the length");
    for (Code c : rows) {
        if (c >= field->q())
            fail(errc::field_mismatch, "matrix entry " + std::to_string(c) + " is not a field element");
    }
    std::uint32_t nrows = (std::uint32_t)(rows.size() / n);
    auto pivots = rref(*field, rows, nrows, n);
    std::uint32_t k = (std::uint32_t)pivots.size();
    rows.resize((std::size_t)k * n);
    return LinearCode(std::move(field), n, std::move(rows), k, std::move(pivots));
}

LinearCode LinearCode::zero(FieldRef field, std::uint32_t n) {
    return from_flat(std::move(field), n, {});
}

LinearCode LinearCode::full(FieldRef field, std::uint32_t n) {
    std::vector<Code> eye((std::size_t)n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) eye[(std::size_t)i * n + i] = 1;
    return from_flat(std::move(field), n, std::move(eye));
}

bool LinearCode::contains(std::span<const Code> word) const {
    if (word.size() != n_)
        fail(errc::length_mismatch, "word length does not match code length");
    for (Code c : word) {
        if (c >= field_->q())
            fail(errc::field_mismatch, "word entry is not a field element");
    }
    auto residual = reduce_against(*field_, mat_, pivots_, n_, word);
    return std::all_of(residual.begin(), residual.end(), [](Code c) { return c == 0; });
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
    ensure_same_field(field_, other.field_);
    if (n_ != other.n_)
        fail(errc::length_mismatch, "codes have different lengths");
    if (k_ > other.k_) return false;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (!other.contains(row(i))) return false;
    }
    return true;
}

std::string LinearCode::to_string() const {
    std::ostringstream os;
    os << "[" << n_ << "," << k_ << "] over " << field_->describe() << "\n";
    for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << mat_[(std::size_t)i * n_ + j];
        }
        os << '\n';
    }
    return os.str();
}

bool operator==(const LinearCode& a, const LinearCode& b) {
    return *a.field() == *b.field() && a.length() == b.length() && a.matrix() == b.matrix();
}

bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

ShiftMap::ShiftMap(FieldAutomorphism th, FieldElement la) : theta(std::move(th)), lambda(la) {
    ensure_same_field(theta.field, lambda.field);
    if (lambda.code == 0) fail(errc::invalid_argument, "shift constant must be a unit");
}

std::vector<Code> ShiftMap::apply(std::span<const Code> word) const {
    const FieldSpec& f = *theta.field;
    std::size_t n = word.size();
    if (n == 0) fail(errc::length_mismatch, "cannot shift an empty word");
    std::vector<Code> out(n);
    out[0] = f.mul(lambda.code, theta.apply(word[n - 1]));
    for (std::size_t i = 1; i < n; ++i) out[i] = theta.apply(word[i - 1]);
    return out;
}

LinearCode dual(const LinearCode& c) {
    const FieldSpec& f = *c.field();
    const std::uint32_t n = c.length(), k = c.dim();
    // One dual generator per free column: set that coordinate to 1 and solve
    // the pivot coordinates so every inner product with a code row vanishes.
    std::vector<bool> is_pivot(n, false);
    for (auto p : c.pivots()) is_pivot[p] = true;
    std::vector<Code> rows;
    rows.reserve((std::size_t)(n - k) * n);
    const auto& mat = c.matrix();
    for (std::uint32_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Code> w(n, 0);
        w[col] = 1;
        for (std::uint32_t i = 0; i < k; ++i)
            w[c.pivots()[i]] = f.neg(mat[(std::size_t)i * n + col]);
        rows.insert(rows.end(), w.begin(), w.end());
    }
    return LinearCode::from_flat(c.field(), n, std::move(rows));
}

std::uint32_t min_distance(const LinearCode& c, std::uint64_t budget, std::uint32_t workers) {
    return run_walk(c, budget, workers).min_weight;
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode& c, std::uint64_t budget,
                                             std::uint32_t workers) {
    if (c.dim() == 0) {
        std::vector<std::uint64_t> counts(c.length() + 1, 0);
        counts[0] = 1;
        return counts;
    }
    return run_walk(c, budget, workers).counts;
}

bool is_closed_under(const LinearCode& c, const ShiftMap& m) {
    ensure_same_field(c.field(), m.theta.field);
    for (std::uint32_t i = 0; i < c.dim(); ++i) {
        auto image = m.apply(c.row(i));
        if (!c.contains(image)) return false;
    }
    return true;
}

LinearCode image_under(const LinearCode& c, const ShiftMap& m) {
    ensure_same_field(c.field(), m.theta.field);
    std::vector<Code> rows;
    rows.reserve((std::size_t)c.dim() * c.length());
    for (std::uint32_t i = 0; i < c.dim(); ++i) {
        auto image = m.apply(c.row(i));
        rows.insert(rows.end(), image.begin(), image.end());
    }
    return LinearCode::from_flat(c.field(), c.length(), std::move(rows));
}

bool is_quasi_twisted(const LinearCode& c, const FieldElement& lambda, std::uint32_t ell) {
    ensure_same_field(c.field(), lambda.field);
    if (ell == 0 || ell > c.length())
        fail(errc::invalid_argument, "quasi-twist index must be in [1, n]");
    ShiftMap shift(FieldAutomorphism(c.field(), 0), lambda);
    for (std::uint32_t i = 0; i < c.dim(); ++i) {
        std::vector<Code> w(c.row(i).begin(), c.row(i).end());
        for (std::uint32_t s = 0; s < ell; ++s) w = shift.apply(w);
        if (!c.contains(w)) return false;
    }
    return true;
}

LinearCode code_from_skew_generator(const TwistContext& ctx, const SkewPoly& g) {
    const FieldRef& field = ctx.field();
    if (g.is_zero()) fail(errc::divisor_zero, "generator polynomial is zero");
    ensure_same_field(field, g.field());
    if (g.theta() != ctx.theta)
        fail(errc::context_mismatch, "generator polynomial uses a different automorphism");
    if (!right_divides(g, ctx.modulus()))
        fail(errc::not_a_right_divisor, "generator does not right-divide the context modulus");
    const std::uint32_t n = ctx.n;
    const int d = g.degree();
    if (d == (int)n) return LinearCode::zero(field, n);
    const std::uint32_t k = n - (std::uint32_t)d;
    const std::uint32_t e = g.theta().exponent;
    std::vector<Code> rows((std::size_t)k * n, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (int j = 0; j <= d; ++j)
            rows[(std::size_t)i * n + i + (std::uint32_t)j] = field->frob(g.coeff((std::uint32_t)j), i * e);
    }
    return LinearCode::from_flat(field, n, std::move(rows));
}

SkewPoly generator_skew_polynomial(const LinearCode& c, const TwistContext& ctx) {
    const FieldRef& field = ctx.field();
    ensure_same_field(c.field(), field);
    if (c.length() != ctx.n)
        fail(errc::length_mismatch, "code length does not match the context length");
    if (c.dim() == 0) fail(errc::zero_code, "the zero code has no generator polynomial");
    if (c.dim() == c.length()) {
        return SkewPoly::constant(ctx.theta, 1);
    }
    if (!is_closed_under(c, ShiftMap(ctx.theta, ctx.lambda)))
        fail(errc::not_skew_constacyclic, "code is not closed under the twisted shift");
    const std::uint32_t n = c.length(), k = c.dim();
    const std::uint32_t d = n - k;
    // A shift-closed code of dimension k contains exactly one monic polynomial
    // of degree n - k (zero-padded to length n), and it generates the code.
    // Writing the word as u G with G the canonical matrix, the constraints
    // "(u G)_d = 1, (u G)_j = 0 for j > d" give k equations in the k message
    // symbols; solve them directly.
    const auto& mat = c.matrix();
    const FieldSpec& f = *field;
    std::uint32_t rows_n = k, cols_n = k + 1;
    std::vector<Code> sys((std::size_t)rows_n * cols_n, 0);
    for (std::uint32_t eq = 0; eq < rows_n; ++eq) {
        std::uint32_t j = d + eq;
        for (std::uint32_t i = 0; i < k; ++i)
            sys[(std::size_t)eq * cols_n + i] = mat[(std::size_t)i * n + j];
        sys[(std::size_t)eq * cols_n + k] = (eq == 0) ? 1 : 0;
    }
    auto pivots = rref(f, sys, rows_n, cols_n);
    if (pivots.size() != k || pivots.back() != k - 1)
        fail(errc::not_skew_constacyclic, "no monic generator at the expected degree");
    std::vector<Code> u(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) u[i] = sys[(std::size_t)i * cols_n + k];
    std::vector<Code> word(n, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (u[i] == 0) continue;
        for (std::uint32_t j = 0; j < n; ++j)
            word[j] = f.add(word[j], f.mul(u[i], mat[(std::size_t)i * n + j]));
    }
    std::vector<Code> coeffs(word.begin(), word.begin() + d + 1);
    return SkewPoly::from_coeffs(ctx.theta, std::move(coeffs));
}

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
    ensure_same_field(a.field(), b.field());
    if (a.length() != b.length())
        fail(errc::length_mismatch, "cannot sum codes of different lengths");
    std::vector<Code> rows;
    rows.reserve(((std::size_t)a.dim() + b.dim()) * a.length());
    rows.insert(rows.end(), a.matrix().begin(), a.matrix().end());
    rows.insert(rows.end(), b.matrix().begin(), b.matrix().end());
    return LinearCode::from_flat(a.field(), a.length(), std::move(rows));
}

std::uint32_t intersection_dim(const LinearCode& a, const LinearCode& b) {
    // dim(A ∩ B) = dim A + dim B - dim(A + B).
    return a.dim() + b.dim() - sum_codes(a, b).dim();
}

}  // namespace skewcc

#include "skewcc/product_ring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

constexpr std::uint32_t kMaxIdealListT = 20;

void check_element(const RingElement& a) {
    if (!a.ring) fail(errc::invalid_argument, "ring element has no ring");
    if (a.comps.size() != a.ring->t())
        fail(errc::ring_mismatch, "element has " + std::to_string(a.comps.size()) +
                                      " components, ring has t=" + std::to_string(a.ring->t()));
    for (Code c : a.comps) {
        if (c >= a.ring->field()->q())
            fail(errc::field_mismatch, "component is not a field element");
    }
}

}  // namespace

std::shared_ptr<const RingSpec> RingSpec::make(FieldRef field, std::uint32_t t) {
    if (!field) fail(errc::invalid_argument, "ring needs a field");
    if (t == 0) fail(errc::invalid_argument, "ring needs at least one factor");
    return std::shared_ptr<const RingSpec>(new RingSpec(std::move(field), t));
}

std::uint64_t RingSpec::unit_count() const {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < t_; ++i) count *= field_->q() - 1;
    return count;
}

RingRef make_ring(FieldRef field, std::uint32_t t) { return RingSpec::make(std::move(field), t); }

void ensure_same_ring(const RingRef& a, const RingRef& b) {
    if (!a || !b) fail(errc::invalid_argument, "missing ring");
    if (a->t() != b->t() || *a->field() != *b->field())
        fail(errc::ring_mismatch, "operands live in different product rings");
}

RingElement ring_zero(RingRef ring) {
    std::vector<Code> comps(ring->t(), 0);
    return {std::move(ring), std::move(comps)};
}

RingElement ring_one(RingRef ring) {
    std::vector<Code> comps(ring->t(), 1);
    return {std::move(ring), std::move(comps)};
}

RingElement ring_idempotent(RingRef ring, std::uint32_t j) {
    if (j >= ring->t()) fail(errc::invalid_argument, "idempotent index out of range");
    std::vector<Code> comps(ring->t(), 0);
    comps[j] = 1;
    return {std::move(ring), std::move(comps)};
}

RingElement ring_from(RingRef ring, std::vector<Code> comps) {
    RingElement a{std::move(ring), std::move(comps)};
    check_element(a);
    return a;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_element(a);
    check_element(b);
    ensure_same_ring(a.ring, b.ring);
    const FieldSpec& f = *a.ring->field();
    RingElement out{a.ring, a.comps};
    for (std::size_t i = 0; i < out.comps.size(); ++i) out.comps[i] = f.add(out.comps[i], b.comps[i]);
    return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    check_element(a);
    check_element(b);
    ensure_same_ring(a.ring, b.ring);
    const FieldSpec& f = *a.ring->field();
    RingElement out{a.ring, a.comps};
    for (std::size_t i = 0; i < out.comps.size(); ++i) out.comps[i] = f.sub(out.comps[i], b.comps[i]);
    return out;
}

RingElement ring_neg(const RingElement& a) {
    check_element(a);
    const FieldSpec& f = *a.ring->field();
    RingElement out{a.ring, a.comps};
    for (auto& c : out.comps) c = f.neg(c);
    return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_element(a);
    check_element(b);
    ensure_same_ring(a.ring, b.ring);
    const FieldSpec& f = *a.ring->field();
    RingElement out{a.ring, a.comps};
    for (std::size_t i = 0; i < out.comps.size(); ++i) out.comps[i] = f.mul(out.comps[i], b.comps[i]);
    return out;
}

RingElement ring_scale(Code c, const RingElement& a) {
    check_element(a);
    const FieldSpec& f = *a.ring->field();
    if (c >= f.q()) fail(errc::field_mismatch, "scalar is not a field element");
    RingElement out{a.ring, a.comps};
    for (auto& x : out.comps) x = f.mul(c, x);
    return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
    ensure_same_ring(a.ring, b.ring);
    return a.comps == b.comps;
}

bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

bool is_unit(const RingElement& a) {
    check_element(a);
    return std::all_of(a.comps.begin(), a.comps.end(), [](Code c) { return c != 0; });
}

RingElement ring_inv(const RingElement& a) {
    check_element(a);
    if (!is_unit(a)) fail(errc::division_by_zero, "ring element with a zero component has no inverse");
    const FieldSpec& f = *a.ring->field();
    RingElement out{a.ring, a.comps};
    for (auto& c : out.comps) c = f.inv(c);
    return out;
}

std::string to_string(const RingElement& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.comps.size(); ++i) {
        if (i) os << ',';
        os << a.comps[i];
    }
    os << ')';
    return os.str();
}

bool Ideal::contains(const RingElement& a) const {
    check_element(a);
    ensure_same_ring(ring, a.ring);
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        if (!((support >> j) & 1u) && a.comps[j] != 0) return false;
    }
    return true;
}

std::uint32_t Ideal::rank() const { return (std::uint32_t)std::popcount(support); }

bool Ideal::is_maximal() const { return rank() == ring->t() - 1; }

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "support:{";
    bool first = true;
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        if ((support >> j) & 1u) {
            if (!first) os << ',';
            os << (j + 1);
            first = false;
        }
    }
    os << '}';
    return os.str();
}

std::vector<Ideal> list_ideals(const RingRef& ring) {
    if (ring->t() > kMaxIdealListT)
        fail(errc::unsupported_size, "ideal listing is limited to t <= " + std::to_string(kMaxIdealListT));
    std::vector<Ideal> out;
    out.reserve(1u << ring->t());
    for (std::uint32_t mask = 0; mask < (1u << ring->t()); ++mask) out.push_back({ring, mask});
    return out;
}

RingAutomorphism RingAutomorphism::identity(RingRef ring) {
    std::vector<std::uint32_t> perm(ring->t());
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::uint32_t> exps(ring->t(), 0);
    return {std::move(ring), std::move(perm), std::move(exps)};
}

RingAutomorphism RingAutomorphism::make(RingRef ring, std::vector<std::uint32_t> perm,
                                        std::vector<std::uint32_t> exps) {
    const std::uint32_t t = ring->t();
    if (perm.size() != t || exps.size() != t)
        fail(errc::invalid_argument, "automorphism needs t permutation images and t exponents");
    std::vector<bool> seen(t, false);
    for (auto p : perm) {
        if (p >= t || seen[p]) fail(errc::invalid_argument, "permutation images must be a bijection");
        seen[p] = true;
    }
    const std::uint32_t r = ring->field()->r();
    for (auto& e : exps) e %= r;
    return {std::move(ring), std::move(perm), std::move(exps)};
}

RingElement RingAutomorphism::apply(const RingElement& a) const {
    check_element(a);
    ensure_same_ring(ring, a.ring);
    const FieldSpec& f = *ring->field();
    std::vector<Code> out(ring->t(), 0);
    for (std::uint32_t j = 0; j < ring->t(); ++j) out[perm[j]] = f.frob(a.comps[j], exps[j]);
    return {ring, std::move(out)};
}

bool RingAutomorphism::in_g1() const {
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        if (perm[j] != j) return false;
    }
    return true;
}

bool RingAutomorphism::in_g2() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

bool RingAutomorphism::is_identity() const { return in_g1() && in_g2(); }

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& other) const {
    ensure_same_ring(ring, other.ring);
    const std::uint32_t t = ring->t();
    const std::uint32_t r = ring->field()->r();
    std::vector<std::uint32_t> p(t), e(t);
    for (std::uint32_t j = 0; j < t; ++j) {
        p[j] = perm[other.perm[j]];
        e[j] = (other.exps[j] + exps[other.perm[j]]) % r;
    }
    return {ring, std::move(p), std::move(e)};
}

RingAutomorphism RingAutomorphism::inverse() const {
    const std::uint32_t t = ring->t();
    const std::uint32_t r = ring->field()->r();
    std::vector<std::uint32_t> pinv(t), einv(t);
    for (std::uint32_t j = 0; j < t; ++j) pinv[perm[j]] = j;
    for (std::uint32_t i = 0; i < t; ++i) einv[i] = (r - exps[pinv[i]] % r) % r;
    return {ring, std::move(pinv), std::move(einv)};
}

std::uint32_t RingAutomorphism::order() const {
    RingAutomorphism acc = *this;
    std::uint32_t ord = 1;
    while (!acc.is_identity()) {
        acc = compose(acc);
        ++ord;
    }
    return ord;
}

std::string RingAutomorphism::to_string() const {
    std::ostringstream os;
    os << "perm:[";
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        if (j) os << ',';
        os << (perm[j] + 1);
    }
    os << "] exps:[";
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        if (j) os << ',';
        os << exps[j];
    }
    os << ']';
    return os.str();
}

bool operator==(const RingAutomorphism& a, const RingAutomorphism& b) {
    ensure_same_ring(a.ring, b.ring);
    return a.perm == b.perm && a.exps == b.exps;
}

bool operator!=(const RingAutomorphism& a, const RingAutomorphism& b) { return !(a == b); }

AutFactors factor_aut(const RingAutomorphism& theta) {
    const std::uint32_t t = theta.ring->t();
    std::vector<std::uint32_t> pinv(t);
    for (std::uint32_t j = 0; j < t; ++j) pinv[theta.perm[j]] = j;
    // theta = g1 . g2 requires theta.exps[j] = g1.exps[perm[j]].
    std::vector<std::uint32_t> e1(t);
    for (std::uint32_t i = 0; i < t; ++i) e1[i] = theta.exps[pinv[i]];
    std::vector<std::uint32_t> id(t);
    std::iota(id.begin(), id.end(), 0u);
    RingAutomorphism g1{theta.ring, id, std::move(e1)};
    RingAutomorphism g2{theta.ring, theta.perm, std::vector<std::uint32_t>(t, 0)};
    return {std::move(g1), std::move(g2)};
}

std::vector<RingAutomorphism> enumerate_aut(const RingRef& ring, std::uint64_t cap) {
    const std::uint32_t t = ring->t();
    const std::uint32_t r = ring->field()->r();
    std::uint64_t total = 1;
    for (std::uint32_t i = 2; i <= t; ++i) {
        total *= i;
        if (total > cap) fail(errc::budget_exceeded, "automorphism group too large to enumerate");
    }
    for (std::uint32_t i = 0; i < t; ++i) {
        total *= r;
        if (total > cap) fail(errc::budget_exceeded, "automorphism group too large to enumerate");
    }

    std::vector<RingAutomorphism> out;
    out.reserve(total);
    std::vector<std::uint32_t> perm(t);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<std::uint32_t> exps(t, 0);
        bool more = true;
        while (more) {
            out.push_back(RingAutomorphism{ring, perm, exps});
            // Odometer increment on the exponents, last coordinate fastest.
            more = false;
            for (std::uint32_t pos = t; pos-- > 0;) {
                if (++exps[pos] < r) {
                    more = true;
                    break;
                }
                exps[pos] = 0;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace skewcc

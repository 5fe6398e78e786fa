#include "skewcc/ring_code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

void check_word(const RingRef& ring, const std::vector<RingElement>& word, std::uint32_t n) {
    if (word.size() != n)
        fail(errc::length_mismatch, "ring word length does not match code length");
    for (const auto& el : word) ensure_same_ring(ring, el.ring);
}

// Component j of a ring word, as a field vector of length n.
std::vector<Code> project(const std::vector<RingElement>& word, std::uint32_t j) {
    std::vector<Code> out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[i] = word[i].comps[j];
    return out;
}

bool is_full_cycle(const std::vector<std::uint32_t>& perm) {
    const std::uint32_t t = (std::uint32_t)perm.size();
    std::uint32_t cur = 0, count = 0;
    do {
        cur = perm[cur];
        ++count;
    } while (cur != 0 && count <= t);
    return count == t;
}

// Module generators: every canonical row of every component, embedded on its
// idempotent. Spanning these over R recovers the full code.
std::vector<std::vector<RingElement>> module_generators(const RingLinearCode& c) {
    std::vector<std::vector<RingElement>> gens;
    const RingRef& ring = c.ring();
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        const LinearCode& comp = c.component(j);
        for (std::uint32_t i = 0; i < comp.dim(); ++i) {
            std::vector<RingElement> v;
            v.reserve(c.length());
            for (std::uint32_t pos = 0; pos < c.length(); ++pos) {
                RingElement el = ring_zero(ring);
                el.comps[j] = comp.row(i)[pos];
                v.push_back(std::move(el));
            }
            gens.push_back(std::move(v));
        }
    }
    return gens;
}

}  // namespace

RingLinearCode RingLinearCode::from_components(RingRef ring, std::uint32_t n,
                                               std::vector<LinearCode> components) {
    if (!ring) fail(errc::invalid_argument, "missing ring");
    if (components.size() != ring->t())
        fail(errc::ring_mismatch, "need one component code per ring factor");
    for (const auto& comp : components) {
        ensure_same_field(comp.field(), ring->field());
        if (comp.length() != n)
            fail(errc::length_mismatch, "component code length does not match");
    }
    return RingLinearCode(std::move(ring), n, std::move(components));
}

RingLinearCode RingLinearCode::from_ring_genmat(RingRef ring, std::uint32_t n,
                                                const std::vector<std::vector<RingElement>>& rows) {
    if (!ring) fail(errc::invalid_argument, "missing ring");
    for (const auto& row : rows) check_word(ring, row, n);
    // R-spanning allows an independent field scalar in every component, so the
    // component codes are just the field spans of the projected rows.
    std::vector<LinearCode> components;
    components.reserve(ring->t());
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        std::vector<std::vector<Code>> proj_rows;
        proj_rows.reserve(rows.size());
        for (const auto& row : rows) proj_rows.push_back(project(row, j));
        components.push_back(LinearCode::from_rows(ring->field(), n, proj_rows));
    }
    return RingLinearCode(std::move(ring), n, std::move(components));
}

RingLinearCode RingLinearCode::zero(RingRef ring, std::uint32_t n) {
    std::vector<LinearCode> components;
    components.reserve(ring->t());
    for (std::uint32_t j = 0; j < ring->t(); ++j)
        components.push_back(LinearCode::zero(ring->field(), n));
    return RingLinearCode(std::move(ring), n, std::move(components));
}

std::uint32_t RingLinearCode::total_dim() const {
    std::uint32_t sum = 0;
    for (const auto& comp : components_) sum += comp.dim();
    return sum;
}

bool RingLinearCode::contains(const std::vector<RingElement>& word) const {
    check_word(ring_, word, n_);
    for (std::uint32_t j = 0; j < ring_->t(); ++j) {
        if (!components_[j].contains(project(word, j))) return false;
    }
    return true;
}

std::string RingLinearCode::to_string() const {
    std::ostringstream os;
    os << "length " << n_ << " over F_" << ring_->field()->q() << "^" << ring_->t() << ", dims [";
    for (std::uint32_t j = 0; j < ring_->t(); ++j) {
        if (j) os << ',';
        os << components_[j].dim();
    }
    os << "]\n";
    for (std::uint32_t j = 0; j < ring_->t(); ++j)
        os << "component " << (j + 1) << ": " << components_[j].to_string();
    return os.str();
}

bool operator==(const RingLinearCode& a, const RingLinearCode& b) {
    ensure_same_ring(a.ring(), b.ring());
    if (a.length() != b.length()) return false;
    return a.components() == b.components();
}

bool operator!=(const RingLinearCode& a, const RingLinearCode& b) { return !(a == b); }

RingLinearCode ring_dual(const RingLinearCode& c) {
    std::vector<LinearCode> duals;
    duals.reserve(c.components().size());
    for (const auto& comp : c.components()) duals.push_back(dual(comp));
    return RingLinearCode::from_components(c.ring(), c.length(), std::move(duals));
}

RingTwist::RingTwist(RingAutomorphism th, RingElement la)
    : theta(std::move(th)), lambda(std::move(la)) {
    ensure_same_ring(theta.ring, lambda.ring);
    if (!is_unit(lambda)) fail(errc::invalid_argument, "twist constant must be a unit");
}

std::vector<RingElement> apply_sigma(const RingTwist& tw, const std::vector<RingElement>& word) {
    if (word.empty()) fail(errc::length_mismatch, "cannot shift an empty word");
    for (const auto& el : word) ensure_same_ring(tw.theta.ring, el.ring);
    std::vector<RingElement> out;
    out.reserve(word.size());
    out.push_back(ring_mul(tw.lambda, tw.theta.apply(word.back())));
    for (std::size_t i = 0; i + 1 < word.size(); ++i) out.push_back(tw.theta.apply(word[i]));
    return out;
}

bool closed_under_sigma(const RingLinearCode& c, const RingTwist& tw) {
    ensure_same_ring(c.ring(), tw.theta.ring);
    for (const auto& gen : module_generators(c)) {
        if (!c.contains(apply_sigma(tw, gen))) return false;
    }
    return true;
}

bool is_ring_skew_constacyclic(const RingLinearCode& c, const RingTwist& tw) {
    ensure_same_ring(c.ring(), tw.theta.ring);
    const RingRef& ring = c.ring();
    const FieldRef& field = ring->field();
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        std::uint32_t target = tw.theta.perm[j];
        ShiftMap shift(FieldAutomorphism(field, tw.theta.exps[j]),
                       FieldElement{field, tw.lambda.comps[target]});
        if (image_under(c.component(j), shift) != c.component(target)) return false;
    }
    return true;
}

RingLinearCode build_case_two(const LinearCode& seed, const RingRef& ring, std::uint32_t n,
                              const RingAutomorphism& theta) {
    ensure_same_field(seed.field(), ring->field());
    ensure_same_ring(ring, theta.ring);
    if (seed.length() != n) fail(errc::length_mismatch, "seed length does not match");
    const std::uint32_t t = ring->t();
    if (!theta.in_g2())
        fail(errc::scope_restriction, "construction handles pure coordinate permutations only");
    if (!is_full_cycle(theta.perm))
        fail(errc::scope_restriction, "construction needs a full-cycle permutation");

    std::uint32_t ell = std::gcd(t, n);
    ShiftMap plain(FieldAutomorphism(ring->field(), 0), FieldElement{ring->field(), 1});
    LinearCode shifted = seed;
    for (std::uint32_t s = 0; s < ell; ++s) shifted = image_under(shifted, plain);
    if (shifted != seed)
        fail(errc::not_quasi_cyclic_index_ell,
             "seed is not invariant under " + std::to_string(ell) + " cyclic shifts");

    // Walk the cycle from coordinate 0, shifting once per step.
    std::vector<LinearCode> components(t, seed);
    std::uint32_t cur = theta.perm[0];
    LinearCode acc = seed;
    while (cur != 0) {
        acc = image_under(acc, plain);
        components[cur] = acc;
        cur = theta.perm[cur];
    }
    return RingLinearCode::from_components(ring, n, std::move(components));
}

std::string RingGenerator::to_string(bool pretty) const {
    std::ostringstream os;
    for (std::size_t j = 0; j < components.size(); ++j) {
        if (j) os << " + ";
        os << '(' << components[j].to_string(pretty) << ")e_" << (j + 1);
    }
    return os.str();
}

RingGenerator ring_generator_polynomial(const RingLinearCode& c, const RingTwist& tw) {
    ensure_same_ring(c.ring(), tw.theta.ring);
    if (!tw.theta.in_g1())
        fail(errc::scope_restriction,
             "generator extraction handles coordinate-fixing automorphisms only");
    if (c.total_dim() == 0) fail(errc::zero_code, "the zero ring code has no generator");
    const RingRef& ring = c.ring();
    const FieldRef& field = ring->field();
    RingGenerator gen;
    gen.components.reserve(ring->t());
    for (std::uint32_t j = 0; j < ring->t(); ++j) {
        FieldAutomorphism psi(field, tw.theta.exps[j]);
        FieldElement lam{field, tw.lambda.comps[j]};
        TwistContext ctx(c.length(), lam, psi);
        if (c.component(j).dim() == 0) {
            gen.components.push_back(ctx.modulus());
        } else {
            gen.components.push_back(generator_skew_polynomial(c.component(j), ctx));
        }
    }
    return gen;
}

std::uint64_t count_theta_cyclic_coprime(const RingRef& ring, std::uint32_t n,
                                         const RingAutomorphism& theta) {
    ensure_same_ring(ring, theta.ring);
    if (n == 0) fail(errc::invalid_argument, "need n >= 1");
    const std::uint32_t t = ring->t();
    if (!theta.in_g2() || !is_full_cycle(theta.perm))
        fail(errc::scope_restriction, "counting formula needs a full-cycle coordinate permutation");
    if (std::gcd(t, n) != 1)
        fail(errc::coprimality_violated,
             "counting formula needs gcd(t, n) = 1, got gcd = " + std::to_string(std::gcd(t, n)));
    const FieldRef& field = ring->field();
    std::vector<Code> xn_minus_1(n + 1, 0);
    xn_minus_1[0] = field->neg(1);
    xn_minus_1[n] = 1;
    auto fac = factor_commutative(field, xn_minus_1);
    std::uint64_t count = 1;
    for (const auto& term : fac.factors) count *= term.multiplicity + 1;
    return count;
}

std::uint32_t gray_weight(const std::vector<RingElement>& word) {
    std::uint32_t w = 0;
    for (const auto& el : word) {
        for (Code c : el.comps) w += (c != 0);
    }
    return w;
}

std::uint32_t ring_min_distance(const RingLinearCode& c, std::uint64_t budget,
                                std::uint32_t workers) {
    std::uint32_t best = 0;
    bool any = false;
    for (const auto& comp : c.components()) {
        if (comp.dim() == 0) continue;
        std::uint32_t d = min_distance(comp, budget, workers);
        if (!any || d < best) best = d;
        any = true;
    }
    if (!any) fail(errc::zero_code, "the zero code has no minimum distance");
    return best;
}

}  // namespace skewcc

#include "skewcc/skew_poly.hpp"

#include <algorithm>
#include <sstream>

namespace skewcc {

SkewPoly::SkewPoly(FieldAutomorphism theta, std::vector<Code> coeffs)
    : theta_(std::move(theta)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    for (Code c : coeffs_)
        if (c >= theta_.field->q()) fail(errc::field_mismatch, "coefficient code out of range");
}

SkewPoly SkewPoly::zero(FieldAutomorphism theta) { return SkewPoly(std::move(theta), {}); }

SkewPoly SkewPoly::constant(FieldAutomorphism theta, Code c) {
    return SkewPoly(std::move(theta), {c});
}

SkewPoly SkewPoly::monomial(FieldAutomorphism theta, Code c, std::uint32_t deg) {
    std::vector<Code> v(deg + 1, 0);
    v[deg] = c;
    return SkewPoly(std::move(theta), std::move(v));
}

SkewPoly SkewPoly::from_coeffs(FieldAutomorphism theta, std::vector<Code> coeffs) {
    return SkewPoly(std::move(theta), std::move(coeffs));
}

std::string SkewPoly::to_string(bool pretty) const {
    if (coeffs_.empty()) return "0";
    const auto& F = *theta_.field;
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Code c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << F.show(c, pretty);
        } else {
            if (c != 1) os << F.show(c, pretty) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void ensure_same_context(const SkewPoly& a, const SkewPoly& b) {
    ensure_same_field(a.field(), b.field());
    if (a.theta().exponent != b.theta().exponent)
        fail(errc::context_mismatch, "mismatched twist exponents");
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
    ensure_same_context(a, b);
    return a.coeffs() == b.coeffs();
}

bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

SkewPoly skew_add(const SkewPoly& a, const SkewPoly& b) {
    ensure_same_context(a, b);
    const auto& F = *a.field();
    std::vector<Code> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return SkewPoly::from_coeffs(a.theta(), std::move(out));
}

SkewPoly skew_sub(const SkewPoly& a, const SkewPoly& b) {
    ensure_same_context(a, b);
    const auto& F = *a.field();
    std::vector<Code> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    return SkewPoly::from_coeffs(a.theta(), std::move(out));
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
    ensure_same_context(a, b);
    if (a.is_zero() || b.is_zero()) return SkewPoly::zero(a.theta());
    const auto& F = *a.field();
    const auto& th = a.theta();
    std::vector<Code> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Code ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            Code bj = b.coeff(j);
            if (bj == 0) continue;
            Code term = F.mul(ai, F.frob(bj, (std::uint32_t)(i * th.exponent)));
            out[i + j] = F.add(out[i + j], term);
        }
    }
    return SkewPoly::from_coeffs(th, std::move(out));
}

SkewPoly skew_scale(Code c, const SkewPoly& f) {
    const auto& F = *f.field();
    std::vector<Code> out(f.coeffs());
    for (auto& x : out) x = F.mul(c, x);
    return SkewPoly::from_coeffs(f.theta(), std::move(out));
}

DivModResult right_divmod(const SkewPoly& f, const SkewPoly& g) {
    ensure_same_context(f, g);
    if (g.is_zero()) fail(errc::divisor_zero, "right division by the zero polynomial");
    const auto& F = *f.field();
    const auto& th = f.theta();
    std::vector<Code> rem(f.coeffs());
    int m = g.degree();
    std::vector<Code> quo(rem.size() > (std::size_t)m ? rem.size() - m : 1, 0);
    while ((int)rem.size() - 1 >= m && !rem.empty()) {
        int d = (int)rem.size() - 1 - m;
        // leading term: c * theta^d(lead g) must cancel the leading coefficient
        Code tl = F.frob(g.lead(), (std::uint32_t)(d * th.exponent));
        Code c = F.div(rem.back(), tl);
        quo[d] = c;
        for (int i = 0; i <= m; ++i) {
            Code t = F.mul(c, F.frob(g.coeff(i), (std::uint32_t)(d * th.exponent)));
            rem[d + i] = F.sub(rem[d + i], t);
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {SkewPoly::from_coeffs(th, std::move(quo)), SkewPoly::from_coeffs(th, std::move(rem))};
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) {
    return right_divmod(f, g).remainder.is_zero();
}

TwistContext::TwistContext(std::uint32_t n_, FieldElement lambda_, FieldAutomorphism theta_)
    : n(n_), lambda(std::move(lambda_)), theta(std::move(theta_)) {
    if (n == 0) fail(errc::invalid_argument, "length n must be positive");
    ensure_same_field(lambda.field, theta.field);
    if (lambda.code == 0) fail(errc::invalid_argument, "lambda must be a unit");
}

SkewPoly TwistContext::modulus() const {
    std::vector<Code> v(n + 1, 0);
    v[0] = theta.field->neg(lambda.code);
    v[n] = 1;
    return SkewPoly::from_coeffs(theta, std::move(v));
}

std::vector<SkewPoly> right_divisors(const TwistContext& ctx, std::optional<std::uint32_t> degree,
                                     std::uint64_t cap) {
    const auto& F = ctx.field();
    SkewPoly mod = ctx.modulus();
    std::uint32_t lo = degree ? *degree : 0;
    std::uint32_t hi = degree ? *degree : ctx.n;
    if (lo > ctx.n) fail(errc::invalid_argument, "requested degree exceeds n");

    std::vector<SkewPoly> out;
    for (std::uint32_t d = lo; d <= hi; ++d) {
        if (d == 0) {
            out.push_back(SkewPoly::constant(ctx.theta, 1));
            continue;
        }
        if (d == ctx.n) {
            out.push_back(mod);
            continue;
        }
        std::uint64_t count = 1;
        bool over = false;
        for (std::uint32_t i = 0; i < d; ++i) {
            if (count > cap / F->q()) {
                over = true;
                break;
            }
            count *= F->q();
        }
        if (over || count > cap)
            fail(errc::enumeration_cap, "q^" + std::to_string(d) + " exceeds the enumeration cap");
        std::vector<Code> cand(d + 1, 0);
        cand[d] = 1;
        std::vector<std::vector<Code>> found;
        for (std::uint64_t m = 0; m < count; ++m) {
            std::uint64_t v = m;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = (Code)(v % F->q());
                v /= F->q();
            }
            SkewPoly c = SkewPoly::from_coeffs(ctx.theta, cand);
            if (right_divides(c, mod)) found.push_back(c.coeffs());
        }
        std::sort(found.begin(), found.end());
        for (auto& f : found) out.push_back(SkewPoly::from_coeffs(ctx.theta, std::move(f)));
    }
    return out;
}

SkewPoly cofactor(const TwistContext& ctx, const SkewPoly& g) {
    ensure_same_field(ctx.field(), g.field());
    if (g.theta().exponent != ctx.theta.exponent)
        fail(errc::context_mismatch, "generator twist does not match the context");
    if (g.is_zero()) fail(errc::divisor_zero, "zero generator");
    if (!g.is_monic()) fail(errc::not_a_right_divisor, "generator must be monic");
    auto [h, rem] = right_divmod(ctx.modulus(), g);
    if (!rem.is_zero())
        fail(errc::not_a_right_divisor, g.to_string() + " does not right-divide x^" +
                                            std::to_string(ctx.n) + " - lambda");
    return h;
}

SkewPoly hbar(const TwistContext& ctx, const SkewPoly& g) {
    const auto& F = ctx.field();
    SkewPoly h = cofactor(ctx, g);
    int k = h.degree();
    Code li = F->inv(ctx.lambda.code);
    std::vector<Code> out(h.coeffs().size(), 0);
    for (int i = 0; i <= k; ++i) {
        Code tl = ctx.theta.apply_power(ctx.lambda.code, (std::int64_t)i - k);
        out[i] = F->mul(li, F->mul(h.coeff(i), tl));
    }
    return SkewPoly::from_coeffs(ctx.theta, std::move(out));
}

SkewPoly hbar_star(const TwistContext& ctx, const SkewPoly& g) {
    SkewPoly hb = hbar(ctx, g);
    int k = hb.degree();
    std::vector<Code> out(k + 1, 0);
    for (int i = 0; i <= k; ++i)
        out[i] = ctx.theta.apply_power(hb.coeff(k - i), i);
    return SkewPoly::from_coeffs(ctx.theta, std::move(out));
}

SkewPoly gtilde(const TwistContext& ctx, const SkewPoly& g) {
    ensure_same_field(ctx.field(), g.field());
    if (g.is_zero()) fail(errc::divisor_zero, "zero generator");
    int m = g.degree();
    std::vector<Code> out(m + 1, 0);
    for (int i = 0; i <= m; ++i)
        out[i] = ctx.theta.apply_power(g.coeff(m - i), (std::int64_t)i - m);
    return SkewPoly::from_coeffs(ctx.theta, std::move(out));
}

SkewPoly dual_generator(const TwistContext& ctx, const SkewPoly& g) {
    if (g.degree() == 0 || g.degree() == (int)ctx.n)
        fail(errc::zero_code, "dual generator requires a nontrivial code on both sides");
    SkewPoly hs = hbar_star(ctx, g);
    Code b0 = hbar(ctx, g).coeff(0);
    if (b0 == 0) fail(errc::singular_constant_term, "cofactor has zero constant term");
    int k = hs.degree();
    const auto& F = ctx.field();
    Code scale = F->frob(F->inv(b0), (std::uint32_t)((std::int64_t)k * ctx.theta.exponent %
                                                     ctx.field()->r()));
    return skew_scale(scale, hs);
}

const char* to_string(Containment c) {
    switch (c) {
        case Containment::neither: return "neither";
        case Containment::dual_containing: return "dual_containing";
        case Containment::self_orthogonal: return "self_orthogonal";
        case Containment::both: return "both";
    }
    return "?";
}

Containment containment_check(const TwistContext& ctx, const SkewPoly& g) {
    if (g.degree() == 0 || g.degree() == (int)ctx.n)
        fail(errc::zero_code, "containment check requires a nontrivial code on both sides");
    const auto& F = ctx.field();
    SkewPoly h = cofactor(ctx, g);  // validates g as a monic right divisor
    (void)h;
    Code li = F->inv(ctx.lambda.code);
    if (ctx.lambda.code != li) return Containment::neither;

    int k = (int)ctx.n - g.degree();
    bool dual_in_code = false, code_in_dual = false;

    {
        SkewPoly hs = hbar_star(ctx, g);
        SkewPoly hb = hbar(ctx, g);
        std::vector<Code> mv(ctx.n + 1, 0);
        mv[0] = F->neg(ctx.theta.apply_power(ctx.lambda.code, -(std::int64_t)k));
        mv[ctx.n] = 1;
        SkewPoly mod_k = SkewPoly::from_coeffs(ctx.theta, std::move(mv));
        dual_in_code = right_divides(mod_k, skew_mul(hs, hb));
    }

    {
        SkewPoly gt = gtilde(ctx, g);
        std::vector<Code> mv(ctx.n + 1, 0);
        mv[0] = F->neg(li);
        mv[ctx.n] = 1;
        SkewPoly mod_inv = SkewPoly::from_coeffs(ctx.theta, std::move(mv));
        code_in_dual = right_divides(mod_inv, skew_mul(g, gt));
    }

    if (dual_in_code && code_in_dual) return Containment::both;
    if (dual_in_code) return Containment::dual_containing;
    if (code_in_dual) return Containment::self_orthogonal;
    return Containment::neither;
}

}  // namespace skewcc

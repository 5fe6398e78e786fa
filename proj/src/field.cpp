#include "skewcc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace skewcc {

namespace {

constexpr std::uint64_t kMaxDefaultModulusSize = 1ull << 20;
constexpr std::uint64_t kMaxFieldSize = 1ull << 31;  // element codes must fit a Code
constexpr std::uint64_t kTableLimit = 256;

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers
    std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a % p;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    std::int64_t res = t0 % (std::int64_t)p;
    if (res < 0) res += p;
    return (std::uint32_t)res;
}

// F_p[x] helpers on ascending digit vectors (values in [0,p)).
using FpPoly = std::vector<std::uint32_t>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_degree(const FpPoly& f) { return (int)f.size() - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (std::uint32_t)(((std::uint64_t)a[i] * b[j] + out[i + j]) % p);
    }
    fp_trim(out);
    return out;
}

// f = q*g + rem with deg rem < deg g; g nonzero.
void fp_divmod(const FpPoly& f, const FpPoly& g, std::uint32_t p, FpPoly& q, FpPoly& rem) {
    rem = f;
    fp_trim(rem);
    q.assign(rem.size() > g.size() ? rem.size() - g.size() + 1 : 1, 0);
    std::uint32_t lead_inv = inv_mod_p(g.back(), p);
    while (rem.size() >= g.size() && !rem.empty()) {
        std::size_t shift = rem.size() - g.size();
        std::uint32_t c = (std::uint32_t)((std::uint64_t)rem.back() * lead_inv % p);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = (std::uint64_t)c * g[i] % p;
            rem[shift + i] = (std::uint32_t)((rem[shift + i] + p - sub) % p);
        }
        fp_trim(rem);
    }
    fp_trim(q);
}

// Monic f of degree >= 1 is irreducible iff it has no monic divisor of degree
// in [1, deg f / 2]. A divisor of minimal degree is itself irreducible, so
// plain trial division over all monic candidates decides the question.
bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
    int n = fp_degree(f);
    if (n < 1) return false;
    FpPoly q, rem;
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        FpPoly cand(d + 1, 0);
        cand[d] = 1;
        for (std::uint64_t m = 0; m < count; ++m) {
            std::uint64_t v = m;
            for (int i = 0; i < d; ++i) {
                cand[i] = (std::uint32_t)(v % p);
                v /= p;
            }
            fp_divmod(f, cand, p, q, rem);
            if (rem.empty()) return false;
        }
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
    // returns min(base^exp, limit+1) without overflow
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (v > limit / base) return limit + 1;
        v *= base;
    }
    return v;
}

std::mutex g_registry_mutex;
std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<Code>>, std::weak_ptr<const FieldSpec>>
    g_registry;

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t r, std::vector<Code> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < r_; ++i) q_ *= p_;

    tabled_ = q_ <= kTableLimit;
    if (tabled_) {
        std::uint32_t q = (std::uint32_t)q_;
        add_t_.resize((std::size_t)q * q);
        mul_t_.resize((std::size_t)q * q);
        neg_t_.resize(q);
        inv_t_.assign(q, 0);
        frob_t_.resize((std::size_t)r_ * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            // digitwise addition and negation
            for (std::uint32_t b = 0; b < q; ++b) {
                std::uint32_t av = a, bv = b, out = 0, mult = 1;
                for (std::uint32_t i = 0; i < r_; ++i) {
                    out += ((av + bv) % p_) % p_ * mult;
                    av /= p_;
                    bv /= p_;
                    mult *= p_;
                }
                add_t_[(std::size_t)a * q + b] = (std::uint16_t)out;
            }
            std::uint32_t av = a, out = 0, mult = 1;
            for (std::uint32_t i = 0; i < r_; ++i) {
                out += ((p_ - av % p_) % p_) * mult;
                av /= p_;
                mult *= p_;
            }
            neg_t_[a] = (std::uint16_t)out;
        }
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                mul_t_[(std::size_t)a * q + b] = (std::uint16_t)mul_slow(a, b);
        for (std::uint32_t a = 1; a < q; ++a) inv_t_[a] = (std::uint16_t)inv_slow(a);
        // frob_t_[e*q + a] = a^(p^e); column e=0 is the identity
        for (std::uint32_t a = 0; a < q; ++a) frob_t_[a] = (std::uint16_t)a;
        for (std::uint32_t e = 1; e < r_; ++e)
            for (std::uint32_t a = 0; a < q; ++a) {
                Code prev = frob_t_[(std::size_t)(e - 1) * q + a];
                Code v = 1;
                for (std::uint32_t i = 0; i < p_; ++i) v = mul_t_[(std::size_t)v * q + prev];
                frob_t_[(std::size_t)e * q + a] = (std::uint16_t)v;
            }
    }

    if (r_ >= 2 && q_ <= 16) {
        for (Code g = 2; g < q_; ++g) {
            std::uint64_t ord = 1;
            Code v = g;
            while (v != 1) {
                v = mul(v, g);
                ++ord;
            }
            if (ord == q_ - 1) {
                gen_ = g;
                break;
            }
        }
    }
}

FieldRef FieldSpec::make(std::uint32_t p, std::uint32_t r, const std::vector<Code>& modulus) {
    if (!is_prime_u32(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (r < 1) fail(errc::invalid_argument, "extension degree r must be >= 1");
    if (checked_pow(p, r, kMaxFieldSize) > kMaxFieldSize)
        fail(errc::unsupported_size, "p^r exceeds the representable element range");

    if (modulus.size() != (std::size_t)r + 1)
        fail(errc::not_irreducible, "modulus must have degree exactly r");
    FpPoly m(modulus.begin(), modulus.end());
    for (auto c : m)
        if (c >= p) fail(errc::not_irreducible, "modulus coefficient not reduced mod p");
    if (m.back() != 1) fail(errc::not_irreducible, "modulus must be monic");
    if (r >= 2 && !fp_irreducible(m, p))
        fail(errc::not_irreducible, "modulus is reducible over F_p");

    std::vector<Code> key_mod(modulus);
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto key = std::make_tuple(p, r, key_mod);
    auto it = g_registry.find(key);
    if (it != g_registry.end())
        if (auto sp = it->second.lock()) return sp;
    FieldRef sp(new FieldSpec(p, r, key_mod));
    g_registry[key] = sp;
    return sp;
}

FieldRef FieldSpec::make(std::uint32_t p, std::uint32_t r) {
    if (!is_prime_u32(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (r < 1) fail(errc::invalid_argument, "extension degree r must be >= 1");
    if (checked_pow(p, r, kMaxDefaultModulusSize) > kMaxDefaultModulusSize)
        fail(errc::unsupported_size,
             "no default modulus for p^r > 2^20; pass one explicitly");

    // Smallest non-leading-coefficient code wins; scan is cheap at this size.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < r; ++i) count *= p;
    FpPoly cand(r + 1, 0);
    cand[r] = 1;
    for (std::uint64_t m = 0; m < count; ++m) {
        std::uint64_t v = m;
        for (std::uint32_t i = 0; i < r; ++i) {
            cand[i] = (std::uint32_t)(v % p);
            v /= p;
        }
        if (r == 1 || fp_irreducible(cand, p))
            return make(p, r, std::vector<Code>(cand.begin(), cand.end()));
    }
    fail(errc::not_irreducible, "no irreducible of the requested degree found");
}

Code FieldSpec::add(Code a, Code b) const {
    if (tabled_) return add_t_[(std::size_t)a * q_ + b];
    Code out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += (Code)(((a % p_) + (b % p_)) % p_ * mult);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Code FieldSpec::neg(Code a) const {
    if (tabled_) return neg_t_[a];
    Code out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += (Code)((p_ - a % p_) % p_ * mult);
        a /= p_;
        mult *= p_;
    }
    return out;
}

Code FieldSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldSpec::mul_slow(Code a, Code b) const {
    FpPoly pa, pb;
    Code av = a, bv = b;
    for (std::uint32_t i = 0; i < r_; ++i) {
        pa.push_back(av % p_);
        av /= p_;
        pb.push_back(bv % p_);
        bv /= p_;
    }
    fp_trim(pa);
    fp_trim(pb);
    FpPoly prod = fp_mul(pa, pb, p_);
    if (prod.size() >= modulus_.size()) {
        FpPoly q, rem, m(modulus_.begin(), modulus_.end());
        fp_divmod(prod, m, p_, q, rem);
        prod = rem;
    }
    Code out = 0;
    std::uint64_t mult = 1;
    for (std::size_t i = 0; i < prod.size(); ++i) {
        out += (Code)(prod[i] * mult);
        mult *= p_;
    }
    return out;
}

Code FieldSpec::mul(Code a, Code b) const {
    if (tabled_) return mul_t_[(std::size_t)a * q_ + b];
    return mul_slow(a, b);
}

Code FieldSpec::inv_slow(Code a) const {
    // extended Euclid in F_p[x] against the modulus
    FpPoly r0(modulus_.begin(), modulus_.end());
    FpPoly r1;
    Code av = a;
    for (std::uint32_t i = 0; i < r_; ++i) {
        r1.push_back(av % p_);
        av /= p_;
    }
    fp_trim(r1);
    FpPoly t0, t1 = {1};
    FpPoly q, rem;
    while (!r1.empty()) {
        fp_divmod(r0, r1, p_, q, rem);
        FpPoly qt1 = fp_mul(q, t1, p_);
        FpPoly nt(std::max(t0.size(), qt1.size()), 0);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            std::uint32_t x = i < t0.size() ? t0[i] : 0;
            std::uint32_t y = i < qt1.size() ? qt1[i] : 0;
            nt[i] = (x + p_ - y) % p_;
        }
        fp_trim(nt);
        t0 = t1;
        t1 = nt;
        r0 = r1;
        r1 = rem;
    }
    // r0 is a nonzero constant since the modulus is irreducible and a != 0
    std::uint32_t scale = inv_mod_p(r0[0], p_);
    Code out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t c = i < t0.size() ? t0[i] : 0;
        out += (Code)((std::uint64_t)c * scale % p_ * mult);
        mult *= p_;
    }
    return out;
}

Code FieldSpec::inv(Code a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    if (tabled_) return inv_t_[a];
    return inv_slow(a);
}

Code FieldSpec::div(Code a, Code b) const {
    if (b == 0) fail(errc::division_by_zero, "division by zero");
    return mul(a, inv(b));
}

Code FieldSpec::pow(Code a, std::uint64_t e) const {
    Code out = 1;
    Code base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

Code FieldSpec::frob(Code a, std::uint32_t e) const {
    e %= r_;
    if (tabled_) return frob_t_[(std::size_t)e * q_ + a];
    Code out = a;
    for (std::uint32_t i = 0; i < e; ++i) out = pow(out, p_);
    return out;
}

std::vector<Code> FieldSpec::to_coeffs(Code a) const {
    std::vector<Code> out(r_);
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Code FieldSpec::from_coeffs(const std::vector<Code>& coeffs) const {
    if (coeffs.size() > r_)
        fail(errc::invalid_argument, "coefficient vector longer than the extension degree");
    Code out = 0;
    std::uint64_t mult = 1;
    for (std::size_t i = 0; i < r_; ++i) {
        Code c = i < coeffs.size() ? coeffs[i] % p_ : 0;
        out += (Code)(c * mult);
        mult *= p_;
    }
    return out;
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "p:" << p_ << " r:" << r_ << " mod:[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
    }
    os << "]";
    return os.str();
}

std::string FieldSpec::show(Code a, bool pretty) const {
    if (!pretty || gen_ == 0) return std::to_string(a);
    if (a == 0) return "0";
    if (a == 1) return "1";
    Code v = gen_;
    std::uint32_t k = 1;
    while (v != a) {
        v = mul(v, gen_);
        ++k;
    }
    return k == 1 ? "a" : "a^" + std::to_string(k);
}

void ensure_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (&a == &b) return;
    if (a != b) fail(errc::field_mismatch, a.describe() + " vs " + b.describe());
}

void ensure_same_field(const FieldRef& a, const FieldRef& b) {
    if (!a || !b) fail(errc::field_mismatch, "null field reference");
    ensure_same_field(*a, *b);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    ensure_same_field(a.field, b.field);
    return {a.field, a.field->add(a.code, b.code)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    ensure_same_field(a.field, b.field);
    return {a.field, a.field->sub(a.code, b.code)};
}

FieldElement operator-(const FieldElement& a) { return {a.field, a.field->neg(a.code)}; }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    ensure_same_field(a.field, b.field);
    return {a.field, a.field->mul(a.code, b.code)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    ensure_same_field(a.field, b.field);
    return {a.field, a.field->div(a.code, b.code)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    ensure_same_field(a.field, b.field);
    return a.code == b.code;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldAutomorphism::FieldAutomorphism(FieldRef f, std::uint32_t e) : field(std::move(f)) {
    if (!field) fail(errc::invalid_argument, "null field reference");
    exponent = e % field->r();
}

FieldElement FieldAutomorphism::operator()(const FieldElement& a) const {
    ensure_same_field(field, a.field);
    return {a.field, apply(a.code)};
}

Code FieldAutomorphism::apply_power(Code a, std::int64_t k) const {
    std::uint32_t r = field->r();
    std::int64_t e = ((std::int64_t)exponent * k) % r;
    if (e < 0) e += r;
    return field->frob(a, (std::uint32_t)e);
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& inner) const {
    ensure_same_field(field, inner.field);
    return FieldAutomorphism(field, (exponent + inner.exponent) % field->r());
}

FieldAutomorphism FieldAutomorphism::inverse() const {
    return FieldAutomorphism(field, (field->r() - exponent) % field->r());
}

std::uint32_t FieldAutomorphism::order() const {
    std::uint32_t r = field->r();
    if (exponent == 0) return 1;
    std::uint32_t g = exponent, b = r;
    while (b) {
        std::uint32_t t = g % b;
        g = b;
        b = t;
    }
    return r / g;
}

bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    ensure_same_field(a.field, b.field);
    return a.exponent == b.exponent;
}

bool operator!=(const FieldAutomorphism& a, const FieldAutomorphism& b) { return !(a == b); }

namespace cpoly {

int degree(const std::vector<Code>& f) { return (int)f.size() - 1; }

void trim(std::vector<Code>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<Code> mul(const FieldRef& F, const std::vector<Code>& a, const std::vector<Code>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Code> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F->add(out[i + j], F->mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

void divmod(const FieldRef& F, const std::vector<Code>& f, const std::vector<Code>& g,
            std::vector<Code>& q, std::vector<Code>& rem) {
    std::vector<Code> gg(g);
    trim(gg);
    if (gg.empty()) fail(errc::divisor_zero, "polynomial division by zero");
    rem = f;
    trim(rem);
    q.assign(rem.size() > gg.size() ? rem.size() - gg.size() + 1 : 1, 0);
    Code lead_inv = F->inv(gg.back());
    while (rem.size() >= gg.size() && !rem.empty()) {
        std::size_t shift = rem.size() - gg.size();
        Code c = F->mul(rem.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i < gg.size(); ++i)
            rem[shift + i] = F->sub(rem[shift + i], F->mul(c, gg[i]));
        trim(rem);
    }
    trim(q);
}

std::vector<Code> product(const FieldRef& F, const std::vector<std::vector<Code>>& factors) {
    std::vector<Code> out = {1};
    for (const auto& f : factors) out = mul(F, out, f);
    return out;
}

}  // namespace cpoly

Factorization factor_commutative(const FieldRef& F, std::vector<Code> f,
                                 std::uint32_t degree_bound) {
    cpoly::trim(f);
    if (f.empty()) fail(errc::invalid_argument, "cannot factor the zero polynomial");
    if ((std::uint32_t)cpoly::degree(f) > degree_bound)
        fail(errc::degree_bound, "degree " + std::to_string(cpoly::degree(f)) +
                                     " exceeds the configured bound " +
                                     std::to_string(degree_bound));
    for (Code c : f)
        if (c >= F->q()) fail(errc::field_mismatch, "coefficient code out of range");

    Factorization out;
    out.unit = f.back();
    if (out.unit != 1) {
        Code s = F->inv(out.unit);
        for (auto& c : f) c = F->mul(c, s);
    }

    std::vector<Code> rem = f, q, r;
    std::uint64_t qsize = F->q();
    for (std::uint32_t d = 1; !rem.empty() && cpoly::degree(rem) >= 1; ++d) {
        if (2 * (int)d > cpoly::degree(rem)) {
            out.factors.push_back({rem, 1});
            break;
        }
        std::uint64_t count = 1;
        bool overflow = false;
        for (std::uint32_t i = 0; i < d; ++i) {
            if (count > (1ull << 40) / qsize) {
                overflow = true;
                break;
            }
            count *= qsize;
        }
        if (overflow) fail(errc::enumeration_cap, "too many trial divisors at this degree");
        std::vector<Code> cand(d + 1, 0);
        cand[d] = 1;
        for (std::uint64_t m = 0; m < count; ++m) {
            std::uint64_t v = m;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = (Code)(v % qsize);
                v /= qsize;
            }
            std::uint32_t mult = 0;
            for (;;) {
                cpoly::divmod(F, rem, cand, q, r);
                if (!r.empty()) break;
                rem = q;
                ++mult;
                if (rem.size() < cand.size()) break;
            }
            if (mult) out.factors.push_back({cand, mult});
            if (cpoly::degree(rem) < (int)d) break;
        }
    }
    if (!rem.empty() && cpoly::degree(rem) == 0 && out.factors.empty()) {
        // constant input: unit only
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FactorTerm& a, const FactorTerm& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        return std::lexicographical_compare(a.poly.begin(), a.poly.end(), b.poly.begin(),
                                            b.poly.end());
    });
    return out;
}

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::unsupported_size: return "UnsupportedSize";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::degree_bound: return "DegreeBound";
        case errc::divisor_zero: return "DivisorZero";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::enumeration_cap: return "EnumerationCap";
        case errc::not_a_right_divisor: return "NotARightDivisor";
        case errc::singular_constant_term: return "SingularConstantTerm";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::zero_code: return "ZeroCode";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_skew_constacyclic: return "NotSkewConstacyclic";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_quasi_cyclic_index_ell: return "NotQuasiCyclicIndexEll";
        case errc::scope_restriction: return "ScopeRestriction";
        case errc::coprimality_violated: return "CoprimalityViolated";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::roots_not_distinct: return "RootsNotDistinct";
        case errc::divisibility_violated: return "DivisibilityViolated";
        case errc::not_scaled_orthogonal: return "NotScaledOrthogonal";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace skewcc

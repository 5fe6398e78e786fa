#include "skewcc/manifest.hpp"

#include <sstream>

#include "skewcc/code_maps.hpp"
#include "skewcc/errors.hpp"
#include "skewcc/ring_code.hpp"

namespace skewcc {

namespace {

using Rows = std::vector<std::vector<Code>>;
using Poly = std::vector<Code>;

// Multiplies out a commutative factor list into one generator polynomial and
// builds the constacyclic code it generates.
LinearCode constacyclic(const FieldRef& f, std::uint32_t n, Code lambda,
                        const std::vector<Poly>& factors) {
    FieldAutomorphism id(f, 0);
    Poly g = cpoly::product(f, factors);
    TwistContext ctx(n, FieldElement{f, lambda}, id);
    return code_from_skew_generator(ctx, SkewPoly::from_coeffs(id, g));
}

std::array<std::uint32_t, 3> params_of(const LinearCode& c, const ManifestOptions& opts) {
    return {c.length(), c.dim(), min_distance(c, opts.budget, opts.workers)};
}

std::string show_params(const std::array<std::uint32_t, 3>& p) {
    std::ostringstream os;
    os << '[' << p[0] << ',' << p[1] << ',' << p[2] << ']';
    return os.str();
}

struct FactorCase {
    const char* name;
    const char* construction;
    std::uint32_t n;
    Code lambda;  // modulus is x^n - lambda
    std::vector<std::pair<Poly, std::uint32_t>> expected;  // (ascending coeffs, multiplicity)
};

// Expected factor lists follow factor_commutative's order: degree first, then
// lexicographic on the coefficient codes.
const std::vector<FactorCase>& factor_cases() {
    static const std::vector<FactorCase> cases = {
        {"factor-f3-x8-1", "x^8 - 1 over F_3", 8, 1,
         {{{1, 1}, 1}, {{2, 1}, 1}, {{1, 0, 1}, 1}, {{2, 1, 1}, 1}, {{2, 2, 1}, 1}}},
        {"factor-f3-x8+1", "x^8 + 1 over F_3", 8, 2,
         {{{2, 0, 1, 0, 1}, 1}, {{2, 0, 2, 0, 1}, 1}}},
        {"factor-f3-x10-1", "x^10 - 1 over F_3", 10, 1,
         {{{1, 1}, 1}, {{2, 1}, 1}, {{1, 1, 1, 1, 1}, 1}, {{1, 2, 1, 2, 1}, 1}}},
        {"factor-f3-x10+1", "x^10 + 1 over F_3", 10, 2,
         {{{1, 0, 1}, 1}, {{1, 1, 0, 2, 1}, 1}, {{1, 2, 0, 1, 1}, 1}}},
        {"factor-f3-x11-1", "x^11 - 1 over F_3", 11, 1,
         {{{2, 1}, 1}, {{2, 0, 1, 2, 1, 1}, 1}, {{2, 2, 1, 2, 0, 1}, 1}}},
        {"factor-f3-x11+1", "x^11 + 1 over F_3", 11, 2,
         {{{1, 1}, 1}, {{1, 0, 2, 2, 2, 1}, 1}, {{1, 2, 2, 2, 0, 1}, 1}}},
        {"factor-f3-x12-1", "x^12 - 1 over F_3", 12, 1,
         {{{1, 1}, 3}, {{2, 1}, 3}, {{1, 0, 1}, 3}}},
        {"factor-f3-x12+1", "x^12 + 1 over F_3", 12, 2,
         {{{2, 1, 1}, 3}, {{2, 2, 1}, 3}}},
    };
    return cases;
}

CaseResult run_factor_case(const FieldRef& f3, const FactorCase& fc) {
    CaseResult res;
    res.name = fc.name;
    res.kind = "factorization";
    res.construction = fc.construction;
    Poly target(fc.n + 1, 0);
    target[0] = f3->neg(fc.lambda);
    target[fc.n] = 1;
    auto fac = factor_commutative(f3, target);
    bool ok = fac.unit == 1 && fac.factors.size() == fc.expected.size();
    if (ok) {
        for (std::size_t i = 0; i < fc.expected.size(); ++i) {
            ok = ok && fac.factors[i].poly == fc.expected[i].first &&
                 fac.factors[i].multiplicity == fc.expected[i].second;
        }
    }
    res.pass = ok;
    if (!ok) res.note = "factor list differs from the recorded one";
    return res;
}

// The five published generator matrices, row-major.
Rows expected_matrix_20_15_4() {
    return {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 0, 2},
        {0, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 2, 2, 1},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 1, 0, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 2, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 1, 1},
    };
}

Rows expected_matrix_22_16_4() {
    return {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2},
        {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 1},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 2, 0, 1, 1},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 2, 1, 2, 1},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 1, 1, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2, 1, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 2, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 2, 1, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 0, 1},
    };
}

Rows expected_matrix_8_6_2() {
    return {
        {1, 0, 0, 0, 0, 0, 2, 2},
        {0, 1, 0, 0, 0, 0, 2, 1},
        {0, 0, 1, 0, 0, 0, 0, 2},
        {0, 0, 0, 1, 0, 0, 2, 2},
        {0, 0, 0, 0, 1, 0, 2, 1},
        {0, 0, 0, 0, 0, 1, 1, 0},
    };
}

Rows expected_matrix_10_9_2() {
    Rows rows(9, std::vector<Code>(10, 0));
    const Code tail[9] = {1, 2, 2, 1, 1, 2, 2, 1, 1};
    for (std::size_t i = 0; i < 9; ++i) {
        rows[i][i] = 1;
        rows[i][9] = tail[i];
    }
    return rows;
}

Rows expected_matrix_12_8_3() {
    return {
        {1, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 1},
        {0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 2},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 2, 2},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 2},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1},
        {0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 2, 0},
    };
}

// Checks one two-component construction: component parameters, image
// parameters, and (when given) span equality with the published matrix.
CaseResult run_construction(const std::string& name, const std::string& kind,
                            const std::string& construction, const LinearCode& c1,
                            const std::array<std::uint32_t, 3>& exp1, const LinearCode& c2,
                            const std::array<std::uint32_t, 3>& exp2, const LinearCode& image,
                            const std::array<std::uint32_t, 3>& expected, const Rows* matrix,
                            const std::string& note, const ManifestOptions& opts) {
    CaseResult res;
    res.name = name;
    res.kind = kind;
    res.construction = construction;
    res.has_params = true;
    res.expected = expected;
    res.note = note;

    bool ok = true;
    auto p1 = params_of(c1, opts);
    auto p2 = params_of(c2, opts);
    if (p1 != exp1) {
        ok = false;
        res.note += (res.note.empty() ? "" : "; ") + std::string("component 1 is ") +
                    show_params(p1) + ", wanted " + show_params(exp1);
    }
    if (p2 != exp2) {
        ok = false;
        res.note += (res.note.empty() ? "" : "; ") + std::string("component 2 is ") +
                    show_params(p2) + ", wanted " + show_params(exp2);
    }
    res.computed = params_of(image, opts);
    ok = ok && res.computed == res.expected;
    if (matrix) {
        res.matrix_checked = true;
        LinearCode printed = LinearCode::from_rows(image.field(), image.length(), *matrix);
        res.matrix_match = printed == image;
        ok = ok && res.matrix_match;
    }
    res.pass = ok;
    return res;
}

std::vector<CaseResult> skew_identity_cases() {
    std::vector<CaseResult> out;
    FieldRef f4 = FieldSpec::make(2, 2);  // x^2 + x + 1; codes 2 and 3 are a and a^2
    FieldAutomorphism frob(f4, 1);
    const Code a = 2, a2 = 3;

    {
        CaseResult res;
        res.name = "skew-products-x3-1";
        res.kind = "identity";
        res.construction = "x^3 - 1 in F_4[x;frob]: both factor orders, divisor scans";
        TwistContext ctx(3, FieldElement{f4, 1}, frob);
        SkewPoly lin = SkewPoly::from_coeffs(frob, {1, 1});        // x + 1
        SkewPoly quad = SkewPoly::from_coeffs(frob, {1, 1, 1});    // x^2 + x + 1
        bool ok = skew_mul(quad, lin) == ctx.modulus() && skew_mul(lin, quad) == ctx.modulus();
        ok = ok && right_divisors(ctx, 1) == std::vector<SkewPoly>{lin};
        ok = ok && right_divisors(ctx, 2) == std::vector<SkewPoly>{quad};
        // Commutatively the same polynomial splits into linear factors.
        auto fac = factor_commutative(f4, {1, 0, 0, 1});
        ok = ok && fac.factors.size() == 3;
        res.pass = ok;
        out.push_back(std::move(res));
    }
    {
        CaseResult res;
        res.name = "skew-products-x3-a";
        res.kind = "identity";
        res.construction = "x^3 - a in F_4[x;frob]: two decompositions, commutatively irreducible";
        TwistContext ctx(3, FieldElement{f4, a}, frob);
        SkewPoly lin = SkewPoly::from_coeffs(frob, {a, 1});         // x + a
        SkewPoly quad_r = SkewPoly::from_coeffs(frob, {1, a2, 1});  // x^2 + a^2 x + 1
        SkewPoly quad_l = SkewPoly::from_coeffs(frob, {1, a, 1});   // x^2 + a x + 1
        bool ok = skew_mul(lin, quad_r) == ctx.modulus() && skew_mul(quad_l, lin) == ctx.modulus();
        ok = ok && right_divisors(ctx, 1) == std::vector<SkewPoly>{lin};
        ok = ok && right_divisors(ctx, 2) == std::vector<SkewPoly>{quad_r};
        auto fac = factor_commutative(f4, {f4->neg(a), 0, 0, 1});
        ok = ok && fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
        res.pass = ok;
        out.push_back(std::move(res));
    }
    {
        CaseResult res;
        res.name = "cyclic-not-frob-cyclic";
        res.kind = "witness";
        res.construction = "span of (a, a^2, 1) over F_4: cyclic, yet not frob-twisted cyclic";
        LinearCode c = LinearCode::from_rows(f4, 3, {{a, a2, 1}});
        FieldAutomorphism id(f4, 0);
        FieldElement one{f4, 1};
        bool ok = is_closed_under(c, ShiftMap(id, one));
        ok = ok && !is_closed_under(c, ShiftMap(frob, one));
        res.pass = ok;
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace

std::vector<CaseResult> run_manifest(const ManifestOptions& opts) {
    std::vector<CaseResult> results;
    FieldRef f2 = FieldSpec::make(2, 1);
    FieldRef f3 = FieldSpec::make(3, 1);

    for (const auto& fc : factor_cases()) results.push_back(run_factor_case(f3, fc));
    for (auto& c : skew_identity_cases()) results.push_back(std::move(c));

    // Block-diagonal copies of the [3,2,2] parity code over F_2.
    LinearCode base = constacyclic(f2, 3, 1, {{1, 1}});
    for (std::uint32_t t = 2; t <= 4; ++t) {
        CaseResult res;
        res.name = "phi-" + std::to_string(3 * t) + "-" + std::to_string(2 * t) + "-2";
        res.kind = "phi";
        res.construction = std::to_string(t) + " copies of the [3,2,2] cyclic code (x+1) over F_2";
        res.has_params = true;
        res.expected = {3 * t, 2 * t, 2};
        res.note = (t == 4) ? "not optimal" : "optimal";
        RingRef ring = make_ring(f2, t);
        LinearCode image = phi_map(
            RingLinearCode::from_components(ring, 3, std::vector<LinearCode>(t, base)));
        res.computed = params_of(image, opts);
        res.pass = res.computed == res.expected;
        results.push_back(std::move(res));
    }

    RingRef r3 = make_ring(f3, 2);
    MapMatrix plotkin = map_matrix(f3, 2, 2, {1, 1, 0, 1});

    {
        LinearCode c1 = constacyclic(f3, 10, 1, {{1, 1}});
        LinearCode c2 = constacyclic(f3, 10, 2, {{1, 2, 0, 1, 1}});
        LinearCode image =
            eta_map(plotkin, RingLinearCode::from_components(r3, 10, {c1, c2}));
        Rows m = expected_matrix_20_15_4();
        results.push_back(run_construction(
            "eta-20-15-4", "eta", "(u|u+v) from cyclic (x+1) and negacyclic x^4+x^3+2x+1, F_3",
            c1, {10, 9, 2}, c2, {10, 6, 4}, image, {20, 15, 4}, &m, "optimal", opts));
    }
    {
        LinearCode c1 = constacyclic(f3, 11, 1, {{2, 1}});
        LinearCode c2 = constacyclic(f3, 11, 2, {{1, 2, 2, 2, 0, 1}});
        LinearCode image =
            eta_map(plotkin, RingLinearCode::from_components(r3, 11, {c1, c2}));
        Rows m = expected_matrix_22_16_4();
        results.push_back(run_construction(
            "eta-22-16-4", "eta",
            "(u|u+v) from cyclic (x+2) and negacyclic x^5+2x^3+2x^2+2x+1, F_3", c1, {11, 10, 2},
            c2, {11, 6, 5}, image, {22, 16, 4}, &m, "optimal", opts));
    }
    {
        LinearCode c1 = constacyclic(f3, 8, 1, {{1, 1}, {2, 1}, {1, 0, 1}, {2, 2, 1}});
        LinearCode c2 = constacyclic(f3, 8, 2, {{2, 0, 2, 0, 1}});
        LinearCode image = psi_map(RingLinearCode::from_components(r3, 8, {c1, c2}));
        Rows m = expected_matrix_8_6_2();
        results.push_back(run_construction(
            "psi-8-6-2", "psi",
            "sum of cyclic (x+1)(x+2)(x^2+1)(x^2+2x+2) and negacyclic x^4+2x^2+2, F_3", c1,
            {8, 2, 6}, c2, {8, 4, 3}, image, {8, 6, 2}, &m, "optimal", opts));
    }
    {
        LinearCode c1 =
            constacyclic(f3, 10, 1, {{1, 1}, {1, 1, 1, 1, 1}, {1, 2, 1, 2, 1}});
        LinearCode c2 = constacyclic(f3, 10, 2, {{1, 0, 1}});
        LinearCode image = psi_map(RingLinearCode::from_components(r3, 10, {c1, c2}));
        Rows m = expected_matrix_10_9_2();
        results.push_back(run_construction(
            "psi-10-9-2", "psi",
            "sum of the [10,1,10] cyclic code and the negacyclic code of x^2+1, F_3", c1,
            {10, 1, 10}, c2, {10, 8, 2}, image, {10, 9, 2}, &m, "optimal", opts));
    }
    {
        LinearCode c1 =
            constacyclic(f3, 12, 1, {{1, 1}, {2, 1}, {1, 0, 1}, {1, 0, 1}, {1, 0, 1}});
        LinearCode c2 =
            constacyclic(f3, 12, 2, {{2, 1, 1}, {2, 2, 1}, {2, 2, 1}, {2, 2, 1}});
        LinearCode image = psi_map(RingLinearCode::from_components(r3, 12, {c1, c2}));
        Rows m = expected_matrix_12_8_3();
        results.push_back(run_construction(
            "psi-12-8-3", "psi",
            "sum of cyclic (x+1)(x+2)(x^2+1)^3 and negacyclic (x^2+x+2)(x^2+2x+2)^3, F_3", c1,
            {12, 4, 4}, c2, {12, 4, 6}, image, {12, 8, 3}, &m, "optimal", opts));
    }

    return results;
}

}  // namespace skewcc

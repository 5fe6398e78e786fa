#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewcc/errors.hpp"
#include "skewcc/io.hpp"
#include "skewcc/manifest.hpp"

using namespace skewcc;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string field;
    std::uint32_t workers = 1;
    std::uint64_t budget = kDefaultWalkBudget;
    std::string format = "text";
    bool pretty = false;
};

FieldRef need_field(const GlobalOpts& g) {
    if (g.field.empty()) fail(errc::invalid_argument, "this command needs --field p,r[,mod]");
    return parse_field_flag(g.field);
}

std::string poly_text(const SkewPoly& p, bool pretty) { return p.to_string(pretty); }

std::string coeff_list(const std::vector<Code>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

std::string params_text(const LinearCode& c, std::uint32_t d) {
    std::ostringstream os;
    os << '[' << c.length() << ',' << c.dim() << ',' << d << ']';
    return os.str();
}

int cmd_field(const GlobalOpts& g) {
    FieldRef f = need_field(g);
    if (g.format == "struct") {
        json j{{"p", f->p()}, {"r", f->r()}, {"mod", f->modulus()}, {"q", f->q()}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << f->describe() << "\n";
    if (g.pretty && f->r() >= 2 && f->q() <= 16) {
        std::cout << "generator: code " << f->pretty_generator() << " = "
                  << f->show(f->pretty_generator(), true) << "\n";
        for (Code c = 0; c < f->q(); ++c)
            std::cout << "  " << c << " = " << f->show(c, true) << "\n";
    }
    return 0;
}

int cmd_skew_factor(const GlobalOpts& g, const std::string& poly) {
    FieldRef f = need_field(g);
    FieldAutomorphism id(f, 0);
    auto coeffs = parse_code_list(*f, poly);
    auto fac = factor_commutative(f, coeffs);
    std::cout << "unit: " << f->show(fac.unit, g.pretty) << "\n";
    for (const auto& term : fac.factors) {
        SkewPoly p = SkewPoly::from_coeffs(id, term.poly);
        std::cout << "(" << poly_text(p, g.pretty) << ")";
        if (term.multiplicity > 1) std::cout << "^" << term.multiplicity;
        std::cout << "\n";
    }
    return 0;
}

int cmd_skew_divmod(const GlobalOpts& g, std::uint32_t theta_exp, const std::string& f_text,
                    const std::string& g_text) {
    FieldRef f = need_field(g);
    FieldAutomorphism theta(f, theta_exp);
    SkewPoly lhs = parse_poly(theta, f_text);
    SkewPoly rhs = parse_poly(theta, g_text);
    auto qr = right_divmod(lhs, rhs);
    std::cout << "quotient: " << poly_text(qr.quotient, g.pretty) << "\n";
    std::cout << "remainder: " << poly_text(qr.remainder, g.pretty) << "\n";
    return 0;
}

int cmd_skew_divisors(const GlobalOpts& g, std::uint32_t theta_exp, std::uint32_t n,
                      const std::string& lambda, std::optional<std::uint32_t> degree) {
    FieldRef f = need_field(g);
    FieldAutomorphism theta(f, theta_exp);
    TwistContext ctx(n, FieldElement{f, parse_scalar(*f, lambda)}, theta);
    json out = json::array();
    std::uint32_t lo = degree ? *degree : 0;
    std::uint32_t hi = degree ? *degree : n;
    for (std::uint32_t d = lo; d <= hi; ++d) {
        try {
            for (const auto& g_poly : right_divisors(ctx, d, g.budget)) {
                if (g.format == "struct") {
                    out.push_back({{"degree", d}, {"coeffs", g_poly.coeffs()}});
                } else {
                    std::cout << "deg " << d << ": " << poly_text(g_poly, g.pretty) << "\n";
                }
            }
        } catch (const error& e) {
            if (e.code() != errc::enumeration_cap) throw;
            if (g.format == "struct") {
                out.push_back({{"degree", d}, {"skipped", e.what()}});
            } else {
                std::cout << "deg " << d << ": SKIPPED (" << e.what() << ")\n";
            }
        }
    }
    if (g.format == "struct") std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_skew_dualgen(const GlobalOpts& g, std::uint32_t theta_exp, std::uint32_t n,
                     const std::string& lambda, const std::string& g_text) {
    FieldRef f = need_field(g);
    FieldAutomorphism theta(f, theta_exp);
    TwistContext ctx(n, FieldElement{f, parse_scalar(*f, lambda)}, theta);
    SkewPoly gen = parse_poly(theta, g_text);
    SkewPoly dual_gen = dual_generator(ctx, gen);
    std::cout << "dual generator: " << poly_text(dual_gen, g.pretty) << "\n";
    std::cout << "dual context: n=" << n << " lambda=" << f->show(f->inv(ctx.lambda.code), g.pretty)
              << "\n";
    return 0;
}

int cmd_skew_contain(const GlobalOpts& g, std::uint32_t theta_exp, std::uint32_t n,
                     const std::string& lambda, const std::string& g_text) {
    FieldRef f = need_field(g);
    FieldAutomorphism theta(f, theta_exp);
    TwistContext ctx(n, FieldElement{f, parse_scalar(*f, lambda)}, theta);
    SkewPoly gen = parse_poly(theta, g_text);
    std::cout << to_string(containment_check(ctx, gen)) << "\n";
    return 0;
}

int cmd_code_mindist(const GlobalOpts& g, const std::string& in) {
    LinearCode c = load_code(in);
    std::uint32_t d = min_distance(c, g.budget, g.workers);
    if (g.format == "struct") {
        json j{{"n", c.length()}, {"k", c.dim()}, {"d", d}};
        if (g.pretty) j["weights"] = weight_enumerator(c, g.budget, g.workers);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << params_text(c, d) << "\n";
    if (g.pretty) {
        auto w = weight_enumerator(c, g.budget, g.workers);
        for (std::uint32_t i = 0; i <= c.length(); ++i) {
            if (w[i]) std::cout << "A_" << i << " = " << w[i] << "\n";
        }
    }
    return 0;
}

int cmd_code_dual(const std::string& in, const std::string& out) {
    LinearCode d = dual(load_code(in));
    if (out.empty()) {
        std::cout << code_to_json(d);
    } else {
        save_code(out, d);
        std::cout << "wrote [" << d.length() << "," << d.dim() << "] code to " << out << "\n";
    }
    return 0;
}

int cmd_code_check(std::uint32_t theta_exp, const std::string& lambda, const std::string& in,
                   std::optional<std::uint32_t> ell) {
    LinearCode c = load_code(in);
    const FieldRef& f = c.field();
    FieldElement lam{f, parse_scalar(*f, lambda)};
    bool ok;
    if (ell) {
        ok = is_quasi_twisted(c, lam, *ell);
        std::cout << "quasi-twisted (index " << *ell << "): ";
    } else {
        ok = is_closed_under(c, ShiftMap(FieldAutomorphism(f, theta_exp), lam));
        std::cout << "closed: ";
    }
    std::cout << (ok ? "true" : "false") << "\n";
    return 0;
}

int cmd_ring_aut(const GlobalOpts& g, std::uint32_t t) {
    RingRef ring = make_ring(need_field(g), t);
    auto all = enumerate_aut(ring, g.budget == kDefaultWalkBudget ? kDefaultAutCap : g.budget);
    std::cout << all.size() << " automorphisms\n";
    for (const auto& a : all) std::cout << a.to_string() << "\n";
    return 0;
}

int cmd_ring_ideals(const GlobalOpts& g, std::uint32_t t) {
    RingRef ring = make_ring(need_field(g), t);
    auto ideals = list_ideals(ring);
    std::cout << ideals.size() << " ideals\n";
    for (const auto& ideal : ideals) {
        std::cout << ideal.to_string();
        if (ideal.is_maximal()) std::cout << " (maximal)";
        std::cout << "\n";
    }
    return 0;
}

int cmd_ringcode_check(const std::string& in, const std::string& theta_text,
                       const std::string& lambda_text) {
    RingLinearCode c = load_ring_code(in);
    RingAutomorphism theta = parse_ring_aut(c.ring(), theta_text);
    RingElement lambda =
        lambda_text.empty()
            ? ring_one(c.ring())
            : ring_from(c.ring(), parse_code_list(*c.ring()->field(), lambda_text));
    RingTwist tw(theta, lambda);
    bool characterized = is_ring_skew_constacyclic(c, tw);
    bool closed = closed_under_sigma(c, tw);
    std::cout << "constacyclic: " << (characterized ? "true" : "false") << "\n";
    std::cout << "direct closure: " << (closed ? "true" : "false") << "\n";
    return characterized == closed ? 0 : 2;
}

int cmd_ringcode_build(const GlobalOpts& g, std::uint32_t t, std::uint32_t n,
                       const std::string& seed_in, const std::string& theta_text,
                       const std::string& out) {
    FieldRef f = need_field(g);
    RingRef ring = make_ring(f, t);
    LinearCode seed = load_code(seed_in);
    RingAutomorphism theta =
        theta_text.empty()
            ? [&] {
                  std::vector<std::uint32_t> perm(t), exps(t, 0);
                  for (std::uint32_t j = 0; j < t; ++j) perm[j] = (j + 1) % t;
                  return RingAutomorphism::make(ring, perm, exps);
              }()
            : parse_ring_aut(ring, theta_text);
    RingLinearCode c = build_case_two(seed, ring, n, theta);
    if (out.empty()) {
        std::cout << ring_code_to_json(c);
    } else {
        save_ring_code(out, c);
        std::cout << "wrote ring code, dims [";
        for (std::uint32_t j = 0; j < t; ++j)
            std::cout << (j ? "," : "") << c.component(j).dim();
        std::cout << "] to " << out << "\n";
    }
    return 0;
}

int cmd_ringcode_count(const GlobalOpts& g, std::uint32_t t, std::uint32_t n) {
    FieldRef f = need_field(g);
    RingRef ring = make_ring(f, t);
    std::vector<std::uint32_t> perm(t), exps(t, 0);
    for (std::uint32_t j = 0; j < t; ++j) perm[j] = (j + 1) % t;
    auto theta = RingAutomorphism::make(ring, perm, exps);
    std::cout << count_theta_cyclic_coprime(ring, n, theta) << "\n";
    return 0;
}

int report_image(const GlobalOpts& g, const LinearCode& image, const std::string& out) {
    std::uint32_t d = image.dim() ? min_distance(image, g.budget, g.workers) : 0;
    std::cout << params_text(image, d) << "\n";
    if (!out.empty()) {
        save_code(out, image);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_maps_phi(const GlobalOpts& g, const std::string& in, const std::string& out) {
    return report_image(g, phi_map(load_ring_code(in)), out);
}

int cmd_maps_psi(const GlobalOpts& g, const std::string& in, const std::string& out) {
    return report_image(g, psi_map(load_ring_code(in)), out);
}

int cmd_maps_eta(const GlobalOpts& g, const std::string& m_text, const std::string& in,
                 const std::string& out) {
    RingLinearCode c = load_ring_code(in);
    MapMatrix m = parse_matrix(c.ring()->field(), m_text);
    return report_image(g, eta_map(m, c), out);
}

int cmd_maps_vandermonde(const GlobalOpts& g, const std::string& scalars, const std::string& roots,
                         const std::string& in, const std::string& out) {
    FieldRef f;
    RingLinearCode* loaded = nullptr;
    std::optional<RingLinearCode> c;
    if (!in.empty()) {
        c.emplace(load_ring_code(in));
        f = c->ring()->field();
        loaded = &*c;
    } else {
        f = need_field(g);
    }
    MapMatrix m = vandermonde_map(f, parse_code_list(*f, scalars), parse_code_list(*f, roots));
    for (std::uint32_t i = 0; i < m.rows; ++i) {
        for (std::uint32_t j = 0; j < m.cols; ++j) std::cout << (j ? " " : "") << m.at(i, j);
        std::cout << "\n";
    }
    if (loaded) return report_image(g, eta_map(m, *loaded), out);
    return 0;
}

int cmd_verify_paper(const GlobalOpts& g) {
    auto results = run_manifest({g.budget, g.workers});
    bool all_pass = true;
    if (g.format == "struct") {
        json arr = json::array();
        for (const auto& r : results) {
            json j{{"name", r.name},         {"kind", r.kind}, {"construction", r.construction},
                   {"note", r.note},         {"pass", r.pass}, {"matrix_checked", r.matrix_checked},
                   {"matrix_match", r.matrix_match}};
            if (r.has_params) {
                j["expected"] = r.expected;
                j["computed"] = r.computed;
            }
            arr.push_back(j);
            all_pass = all_pass && r.pass;
        }
        std::cout << arr.dump(2) << "\n";
        return all_pass ? 0 : 1;
    }
    std::size_t name_w = 4, cons_w = 12;
    for (const auto& r : results) {
        name_w = std::max(name_w, r.name.size());
        cons_w = std::max(cons_w, r.construction.size());
    }
    std::cout << std::left << std::setw((int)name_w + 2) << "case" << std::setw(12) << "expected"
              << std::setw(12) << "computed" << std::setw(8) << "matrix" << std::setw(8) << "status"
              << "note\n";
    for (const auto& r : results) {
        std::ostringstream exp, comp;
        if (r.has_params) {
            exp << '[' << r.expected[0] << ',' << r.expected[1] << ',' << r.expected[2] << ']';
            comp << '[' << r.computed[0] << ',' << r.computed[1] << ',' << r.computed[2] << ']';
        } else {
            exp << "-";
            comp << "-";
        }
        std::cout << std::left << std::setw((int)name_w + 2) << r.name << std::setw(12) << exp.str()
                  << std::setw(12) << comp.str() << std::setw(8)
                  << (r.matrix_checked ? (r.matrix_match ? "match" : "DIFFER") : "-")
                  << std::setw(8) << (r.pass ? "ok" : "FAIL") << r.note << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all cases pass" : "some cases FAILED") << "\n";
    return all_pass ? 0 : 1;
}

struct SearchRow {
    std::uint32_t k = 0;
    bool skipped = false;
    std::uint32_t d = 0;
    std::vector<Code> gen;
    std::string label;
};

void sort_rows(std::vector<SearchRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.k != b.k) return a.k > b.k;
        if (a.d != b.d) return a.d > b.d;
        return a.gen < b.gen;
    });
}

int cmd_search_field(const GlobalOpts& g, std::uint32_t theta_exp, std::uint32_t n,
                     const std::string& lambda) {
    FieldRef f = need_field(g);
    FieldAutomorphism theta(f, theta_exp);
    TwistContext ctx(n, FieldElement{f, parse_scalar(*f, lambda)}, theta);
    std::vector<SearchRow> rows;
    for (std::uint32_t deg = 0; deg < n; ++deg) {
        std::vector<SkewPoly> divs;
        try {
            divs = right_divisors(ctx, deg, g.budget);
        } catch (const error& e) {
            if (e.code() != errc::enumeration_cap) throw;
            SearchRow row;
            row.k = n - deg;
            row.skipped = true;
            row.label = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        for (const auto& g_poly : divs) {
            SearchRow row;
            row.k = n - deg;
            row.gen = g_poly.coeffs();
            row.label = poly_text(g_poly, g.pretty);
            try {
                row.d = min_distance(code_from_skew_generator(ctx, g_poly), g.budget, g.workers);
            } catch (const error& e) {
                if (e.code() != errc::budget_exceeded) throw;
                row.skipped = true;
                row.label = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    sort_rows(rows);
    if (g.format == "struct") {
        json arr = json::array();
        for (const auto& r : rows) {
            if (r.skipped) {
                arr.push_back({{"k", r.k}, {"skipped", r.label}});
            } else {
                arr.push_back({{"k", r.k}, {"d", r.d}, {"gen", r.gen}});
            }
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "k d generator\n";
    for (const auto& r : rows) {
        if (r.skipped) {
            std::cout << r.k << " SKIPPED (" << r.label << ")\n";
        } else {
            std::cout << r.k << " " << r.d << " " << coeff_list(r.gen);
            if (g.pretty) std::cout << "  " << r.label;
            std::cout << "\n";
        }
    }
    return 0;
}

// Ring search: walk each permutation cycle from a seed code drawn from the
// twisted-divisor universe, keep the chains that close up, and take every
// combination across cycles.
int cmd_search_ring(const GlobalOpts& g, std::uint32_t n, std::uint32_t t,
                    const std::string& theta_text, const std::string& lambda_text) {
    FieldRef f = need_field(g);
    RingRef ring = make_ring(f, t);
    RingAutomorphism theta = parse_ring_aut(ring, theta_text);
    RingElement lambda = lambda_text.empty() ? ring_one(ring)
                                             : ring_from(ring, parse_code_list(*f, lambda_text));
    RingTwist tw(theta, lambda);

    // Universe of candidate components, labeled by their construction.
    struct Candidate {
        LinearCode code;
        std::string label;
    };
    std::vector<Candidate> universe;
    auto push_unique = [&](LinearCode code, std::string label) {
        for (const auto& c : universe) {
            if (c.code == code) return;
        }
        universe.push_back({std::move(code), std::move(label)});
    };
    for (std::uint32_t e = 0; e < f->r(); ++e) {
        FieldAutomorphism psi(f, e);
        for (Code mu = 1; mu < f->q(); ++mu) {
            TwistContext ctx(n, FieldElement{f, mu}, psi);
            for (const auto& g_poly : right_divisors(ctx, std::nullopt, g.budget)) {
                std::ostringstream label;
                label << "g=" << coeff_list(g_poly.coeffs()) << " psi=" << e << " mu=" << mu;
                push_unique(code_from_skew_generator(ctx, g_poly), label.str());
            }
        }
    }

    // Cycle decomposition of the coordinate permutation.
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<bool> seen(t, false);
    for (std::uint32_t start = 0; start < t; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> cyc;
        std::uint32_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = theta.perm[cur];
        }
        cycles.push_back(std::move(cyc));
    }

    // Per-cycle consistent seeds.
    struct CycleOption {
        std::vector<LinearCode> comps;  // aligned with the cycle order
        std::string label;
    };
    std::vector<std::vector<CycleOption>> options(cycles.size());
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& cyc = cycles[ci];
        for (const auto& cand : universe) {
            std::vector<LinearCode> comps{cand.code};
            for (std::size_t s = 0; s + 1 < cyc.size(); ++s) {
                std::uint32_t j = cyc[s];
                ShiftMap step(FieldAutomorphism(f, theta.exps[j]),
                              FieldElement{f, lambda.comps[theta.perm[j]]});
                comps.push_back(image_under(comps.back(), step));
            }
            std::uint32_t last = cyc.back();
            ShiftMap wrap(FieldAutomorphism(f, theta.exps[last]),
                          FieldElement{f, lambda.comps[theta.perm[last]]});
            if (image_under(comps.back(), wrap) != cand.code) continue;
            options[ci].push_back({std::move(comps), cand.label});
        }
    }

    std::uint64_t combos = 1;
    for (const auto& opt : options) combos *= opt.empty() ? 0 : opt.size();
    if (combos > 100000)
        fail(errc::budget_exceeded, "search space has " + std::to_string(combos) + " combinations");

    std::vector<SearchRow> rows;
    std::vector<std::size_t> pick(cycles.size(), 0);
    bool done = combos == 0;
    while (!done) {
        std::vector<LinearCode> comps(t, LinearCode::zero(f, n));
        std::ostringstream label;
        for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
            const auto& opt = options[ci][pick[ci]];
            for (std::size_t s = 0; s < cycles[ci].size(); ++s)
                comps[cycles[ci][s]] = opt.comps[s];
            if (ci) label << " | ";
            label << "cycle@" << (cycles[ci][0] + 1) << " " << opt.label;
        }
        RingLinearCode code = RingLinearCode::from_components(ring, n, std::move(comps));
        SearchRow row;
        row.k = code.total_dim();
        row.label = label.str();
        if (row.k > 0) {
            try {
                row.d = ring_min_distance(code, g.budget, g.workers);
            } catch (const error& e) {
                if (e.code() != errc::budget_exceeded) throw;
                row.skipped = true;
                row.label = e.what();
            }
            rows.push_back(std::move(row));
        }
        for (std::size_t ci = cycles.size();;) {
            if (ci == 0) {
                done = true;
                break;
            }
            --ci;
            if (++pick[ci] < options[ci].size()) break;
            pick[ci] = 0;
        }
    }
    // Sort by dimension, then distance, then the construction label.
    std::sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.k != b.k) return a.k > b.k;
        if (a.d != b.d) return a.d > b.d;
        return a.label < b.label;
    });
    std::cout << "k d construction\n";
    for (const auto& r : rows) {
        if (r.skipped) {
            std::cout << r.k << " SKIPPED (" << r.label << ")\n";
        } else {
            std::cout << r.k << " " << r.d << " " << r.label << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for twisted constacyclic codes over fields and product rings"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--field", g.field, "field as p,r[,c0,c1,...,cr] or \"p:.. r:.. mod:[..]\"");
    app.add_option("--workers", g.workers, "worker threads for distance walks");
    app.add_option("--budget", g.budget, "codeword/enumeration budget");
    app.add_option("--format", g.format, "text|struct")
        ->check(CLI::IsMember({"text", "struct"}));
    app.add_flag("--pretty", g.pretty, "symbolic field elements where available");

    std::uint32_t theta_exp = 0, n = 1, t = 1, ell_val = 0;
    std::string lambda = "1", poly, f_text, g_text, in, out, m_text, theta_text, lambda_text,
                scalars, roots, seed_in;
    std::optional<std::uint32_t> degree;
    bool ring_mode = false;

    auto* field_cmd = app.add_subcommand("field", "describe a finite field");
    field_cmd->fallthrough();

    auto* skew = app.add_subcommand("skew", "skew polynomial operations");
    skew->fallthrough();
    skew->require_subcommand(1);
    auto* sk_factor = skew->add_subcommand("factor", "factor a commutative polynomial");
    sk_factor->fallthrough();
    sk_factor->add_option("--poly", poly, "ascending coefficients")->required();
    auto* sk_divmod = skew->add_subcommand("divmod", "right-divide f by g");
    sk_divmod->fallthrough();
    sk_divmod->add_option("--theta", theta_exp, "Frobenius exponent");
    sk_divmod->add_option("--f", f_text, "dividend coefficients")->required();
    sk_divmod->add_option("--g", g_text, "divisor coefficients")->required();
    auto* sk_divisors = skew->add_subcommand("divisors", "monic right divisors of x^n - lambda");
    sk_divisors->fallthrough();
    sk_divisors->add_option("--theta", theta_exp, "Frobenius exponent");
    sk_divisors->add_option("--n", n, "length")->required();
    sk_divisors->add_option("--lambda", lambda, "twist constant");
    sk_divisors->add_option("--degree", degree, "restrict to one degree");
    auto* sk_dualgen = skew->add_subcommand("dualgen", "generator of the dual code");
    sk_dualgen->fallthrough();
    sk_dualgen->add_option("--theta", theta_exp, "Frobenius exponent");
    sk_dualgen->add_option("--n", n, "length")->required();
    sk_dualgen->add_option("--lambda", lambda, "twist constant");
    sk_dualgen->add_option("--g", g_text, "generator coefficients")->required();
    auto* sk_contain = skew->add_subcommand("contain", "dual containment relation");
    sk_contain->fallthrough();
    sk_contain->add_option("--theta", theta_exp, "Frobenius exponent");
    sk_contain->add_option("--n", n, "length")->required();
    sk_contain->add_option("--lambda", lambda, "twist constant");
    sk_contain->add_option("--g", g_text, "generator coefficients")->required();

    auto* code_cmd = app.add_subcommand("code", "linear code operations");
    code_cmd->fallthrough();
    code_cmd->require_subcommand(1);
    auto* code_mindist = code_cmd->add_subcommand("mindist", "exact minimum distance");
    code_mindist->fallthrough();
    code_mindist->add_option("--in", in, "code file")->required();
    auto* code_dual = code_cmd->add_subcommand("dual", "Euclidean dual");
    code_dual->fallthrough();
    code_dual->add_option("--in", in, "code file")->required();
    code_dual->add_option("--out", out, "output file");
    auto* code_check = code_cmd->add_subcommand("check", "closure under the twisted shift");
    code_check->fallthrough();
    code_check->add_option("--in", in, "code file")->required();
    code_check->add_option("--theta", theta_exp, "Frobenius exponent");
    code_check->add_option("--lambda", lambda, "twist constant");
    auto* ell_opt = code_check->add_option("--ell", ell_val, "quasi-twist index");

    auto* ring_cmd = app.add_subcommand("ring", "product ring structure");
    ring_cmd->fallthrough();
    ring_cmd->require_subcommand(1);
    auto* ring_aut = ring_cmd->add_subcommand("aut", "enumerate the automorphism group");
    ring_aut->fallthrough();
    ring_aut->add_option("--t", t, "number of factors")->required();
    auto* ring_ideals = ring_cmd->add_subcommand("ideals", "list the ideals");
    ring_ideals->fallthrough();
    ring_ideals->add_option("--t", t, "number of factors")->required();

    auto* ringcode_cmd = app.add_subcommand("ringcode", "codes over the product ring");
    ringcode_cmd->fallthrough();
    ringcode_cmd->require_subcommand(1);
    auto* rc_check = ringcode_cmd->add_subcommand("check", "twisted closure of a ring code");
    rc_check->fallthrough();
    rc_check->add_option("--in", in, "ring code file")->required();
    rc_check->add_option("--theta", theta_text, "ring automorphism");
    rc_check->add_option("--lambda", lambda_text, "unit twist constant (default: all ones)");
    auto* rc_build = ringcode_cmd->add_subcommand("build", "cycle construction from a seed code");
    rc_build->fallthrough();
    rc_build->add_option("--t", t, "number of factors")->required();
    rc_build->add_option("--n", n, "length")->required();
    rc_build->add_option("--seed-in", seed_in, "seed code file")->required();
    rc_build->add_option("--theta", theta_text, "ring automorphism (default: shift cycle)");
    rc_build->add_option("--out", out, "output file");
    auto* rc_count = ringcode_cmd->add_subcommand("count", "count cycle-invariant codes");
    rc_count->fallthrough();
    rc_count->add_option("--t", t, "number of factors")->required();
    rc_count->add_option("--n", n, "length")->required();

    auto* maps_cmd = app.add_subcommand("maps", "homomorphisms into field codes");
    maps_cmd->fallthrough();
    maps_cmd->require_subcommand(1);
    auto* maps_phi = maps_cmd->add_subcommand("phi", "block-diagonal unfolding");
    maps_phi->fallthrough();
    maps_phi->add_option("--in", in, "ring code file")->required();
    maps_phi->add_option("--out", out, "output file");
    auto* maps_eta = maps_cmd->add_subcommand("eta", "invertible matrix mixing");
    maps_eta->fallthrough();
    maps_eta->add_option("--M", m_text, "t x t matrix, [[..],[..]]")->required();
    maps_eta->add_option("--in", in, "ring code file")->required();
    maps_eta->add_option("--out", out, "output file");
    auto* maps_psi = maps_cmd->add_subcommand("psi", "component sum");
    maps_psi->fallthrough();
    maps_psi->add_option("--in", in, "ring code file")->required();
    maps_psi->add_option("--out", out, "output file");
    auto* maps_vdm = maps_cmd->add_subcommand("vandermonde", "scaled Vandermonde mixer");
    maps_vdm->fallthrough();
    maps_vdm->add_option("--scalars", scalars, "row scalars")->required();
    maps_vdm->add_option("--roots", roots, "distinct roots of x^t = 1")->required();
    maps_vdm->add_option("--in", in, "optional ring code to map");
    maps_vdm->add_option("--out", out, "output file");

    auto* verify_cmd = app.add_subcommand("verify-paper", "re-run the reference constructions");
    verify_cmd->fallthrough();

    auto* search_cmd = app.add_subcommand("search", "table of codes from right divisors");
    search_cmd->fallthrough();
    search_cmd->add_option("--theta", theta_exp, "Frobenius exponent");
    search_cmd->add_option("--n", n, "length")->required();
    search_cmd->add_option("--lambda", lambda, "twist constant");
    search_cmd->add_flag("--ring", ring_mode, "search ring codes instead");
    search_cmd->add_option("--t", t, "ring factors (with --ring)");
    search_cmd->add_option("--ring-theta", theta_text, "ring automorphism (with --ring)");
    search_cmd->add_option("--ring-lambda", lambda_text,
                           "ring twist constant (with --ring; default: all ones)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*field_cmd) return cmd_field(g);
        if (*sk_factor) return cmd_skew_factor(g, poly);
        if (*sk_divmod) return cmd_skew_divmod(g, theta_exp, f_text, g_text);
        if (*sk_divisors) return cmd_skew_divisors(g, theta_exp, n, lambda, degree);
        if (*sk_dualgen) return cmd_skew_dualgen(g, theta_exp, n, lambda, g_text);
        if (*sk_contain) return cmd_skew_contain(g, theta_exp, n, lambda, g_text);
        if (*code_mindist) return cmd_code_mindist(g, in);
        if (*code_dual) return cmd_code_dual(in, out);
        if (*code_check)
            return cmd_code_check(theta_exp, lambda, in,
                                  ell_opt->count() ? std::optional<std::uint32_t>(ell_val)
                                                   : std::nullopt);
        if (*ring_aut) return cmd_ring_aut(g, t);
        if (*ring_ideals) return cmd_ring_ideals(g, t);
        if (*rc_check) return cmd_ringcode_check(in, theta_text, lambda_text);
        if (*rc_build) return cmd_ringcode_build(g, t, n, seed_in, theta_text, out);
        if (*rc_count) return cmd_ringcode_count(g, t, n);
        if (*maps_phi) return cmd_maps_phi(g, in, out);
        if (*maps_eta) return cmd_maps_eta(g, m_text, in, out);
        if (*maps_psi) return cmd_maps_psi(g, in, out);
        if (*maps_vdm) return cmd_maps_vandermonde(g, scalars, roots, in, out);
        if (*verify_cmd) return cmd_verify_paper(g);
        if (*search_cmd) {
            if (ring_mode) return cmd_search_ring(g, n, t, theta_text, lambda_text);
            return cmd_search_field(g, theta_exp, n, lambda);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

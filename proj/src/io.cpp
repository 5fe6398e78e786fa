#include "skewcc/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
    fail(errc::parse_error, what + " at position " + std::to_string(pos));
}

// Splits "[a,b,c]" or "a,b,c" into trimmed tokens; empty input means empty list.
std::vector<std::string> split_list(const std::string& text) {
    std::string body = text;
    std::size_t begin = body.find_first_not_of(" \t");
    std::size_t end = body.find_last_not_of(" \t");
    if (begin == std::string::npos) return {};
    body = body.substr(begin, end - begin + 1);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') parse_fail("unterminated list", body.size());
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> tokens;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) parse_fail("empty list entry", tokens.size());
        tokens.push_back(item.substr(b, e - b + 1));
    }
    return tokens;
}

long long to_int(const std::string& tok, std::size_t pos) {
    errno = 0;
    char* endp = nullptr;
    long long v = std::strtoll(tok.c_str(), &endp, 10);
    if (errno != 0 || endp == tok.c_str() || *endp != '\0')
        parse_fail("expected an integer, got \"" + tok + "\"", pos);
    return v;
}

// Signed entry -> field code: negatives wrap through the additive inverse,
// values >= q are rejected rather than reduced.
Code entry_to_code(const FieldSpec& f, long long v, std::size_t pos) {
    if (v < 0) {
        long long mag = -v;
        if (mag >= (long long)f.q()) parse_fail("entry out of field range", pos);
        return f.neg((Code)mag);
    }
    if (v >= (long long)f.q()) parse_fail("entry out of field range", pos);
    return (Code)v;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        fail(errc::parse_error,
             "bad JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

FieldRef field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("r") || !j.contains("mod"))
        fail(errc::parse_error, "field block needs p, r, mod");
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    std::uint32_t r = j.at("r").get<std::uint32_t>();
    std::vector<std::uint32_t> mod = j.at("mod").get<std::vector<std::uint32_t>>();
    return FieldSpec::make(p, r, mod);
}

json field_to_json(const FieldSpec& f) {
    return json{{"p", f.p()}, {"r", f.r()}, {"mod", f.modulus()}};
}

std::vector<std::vector<Code>> rows_from_json(const json& j, const char* key) {
    if (!j.contains(key)) fail(errc::parse_error, std::string("missing \"") + key + "\"");
    const json& rows = j.at(key);
    if (!rows.is_array()) fail(errc::parse_error, std::string("\"") + key + "\" must be an array");
    std::vector<std::vector<Code>> out;
    for (const json& row : rows) {
        if (!row.is_array()) fail(errc::parse_error, "generator rows must be arrays");
        out.push_back(row.get<std::vector<Code>>());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::invalid_argument, "cannot write " + path);
    out << content;
}

}  // namespace

FieldRef parse_field_text(const std::string& text) {
    std::uint32_t p = 0, r = 0;
    std::vector<std::uint32_t> mod;
    bool have_p = false, have_r = false, have_mod = false;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok.rfind("p:", 0) == 0) {
            p = (std::uint32_t)to_int(tok.substr(2), 0);
            have_p = true;
        } else if (tok.rfind("r:", 0) == 0) {
            r = (std::uint32_t)to_int(tok.substr(2), 0);
            have_r = true;
        } else if (tok.rfind("mod:", 0) == 0) {
            auto parts = split_list(tok.substr(4));
            for (std::size_t i = 0; i < parts.size(); ++i)
                mod.push_back((std::uint32_t)to_int(parts[i], i));
            have_mod = true;
        } else {
            parse_fail("unknown field token \"" + tok + "\"", 0);
        }
    }
    if (!have_p || !have_r) fail(errc::parse_error, "field text needs p: and r:");
    return have_mod ? FieldSpec::make(p, r, mod) : FieldSpec::make(p, r);
}

FieldRef parse_field_flag(const std::string& flag) {
    if (flag.find(':') != std::string::npos) return parse_field_text(flag);
    auto parts = split_list(flag);
    if (parts.size() < 2) fail(errc::parse_error, "--field needs at least p,r");
    std::uint32_t p = (std::uint32_t)to_int(parts[0], 0);
    std::uint32_t r = (std::uint32_t)to_int(parts[1], 1);
    if (parts.size() == 2) return FieldSpec::make(p, r);
    std::vector<std::uint32_t> mod;
    for (std::size_t i = 2; i < parts.size(); ++i)
        mod.push_back((std::uint32_t)to_int(parts[i], i));
    return FieldSpec::make(p, r, mod);
}

std::vector<Code> parse_code_list(const FieldSpec& f, const std::string& text) {
    auto parts = split_list(text);
    std::vector<Code> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        out.push_back(entry_to_code(f, to_int(parts[i], i), i));
    return out;
}

Code parse_scalar(const FieldSpec& f, const std::string& text) {
    auto list = parse_code_list(f, text);
    if (list.size() != 1) fail(errc::parse_error, "expected a single field element");
    return list[0];
}

SkewPoly parse_poly(const FieldAutomorphism& theta, const std::string& text) {
    auto coeffs = parse_code_list(*theta.field, text);
    return SkewPoly::from_coeffs(theta, std::move(coeffs));
}

RingAutomorphism parse_ring_aut(RingRef ring, const std::string& text) {
    std::vector<std::uint32_t> perm, exps;
    bool have_perm = false, have_exps = false;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok.rfind("perm:", 0) == 0) {
            auto parts = split_list(tok.substr(5));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                long long v = to_int(parts[i], i);
                if (v < 1) parse_fail("permutation images are 1-based", i);
                perm.push_back((std::uint32_t)(v - 1));
            }
            have_perm = true;
        } else if (tok.rfind("exps:", 0) == 0) {
            auto parts = split_list(tok.substr(5));
            for (std::size_t i = 0; i < parts.size(); ++i)
                exps.push_back((std::uint32_t)to_int(parts[i], i));
            have_exps = true;
        } else {
            parse_fail("unknown automorphism token \"" + tok + "\"", 0);
        }
    }
    if (!have_perm) {
        perm.resize(ring->t());
        for (std::uint32_t i = 0; i < ring->t(); ++i) perm[i] = i;
    }
    if (!have_exps) exps.assign(ring->t(), 0);
    return RingAutomorphism::make(std::move(ring), std::move(perm), std::move(exps));
}

MapMatrix parse_matrix(FieldRef field, const std::string& text) {
    // Rows are bracketed lists inside one outer bracket pair.
    std::size_t begin = text.find('[');
    std::size_t end = text.rfind(']');
    if (begin == std::string::npos || end == std::string::npos || end <= begin)
        fail(errc::parse_error, "matrix needs the form [[..],[..]]");
    std::string body = text.substr(begin + 1, end - begin - 1);
    std::vector<std::vector<Code>> rows;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t rb = body.find('[', pos);
        if (rb == std::string::npos) break;
        std::size_t re = body.find(']', rb);
        if (re == std::string::npos) parse_fail("unterminated matrix row", rb);
        rows.push_back(parse_code_list(*field, body.substr(rb, re - rb + 1)));
        pos = re + 1;
    }
    if (rows.empty()) fail(errc::parse_error, "matrix has no rows");
    std::size_t cols = rows.front().size();
    std::vector<Code> entries;
    for (const auto& row : rows) {
        if (row.size() != cols) fail(errc::parse_error, "matrix rows have unequal lengths");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return map_matrix(std::move(field), (std::uint32_t)rows.size(), (std::uint32_t)cols,
                      std::move(entries));
}

std::string code_to_json(const LinearCode& c) {
    json j;
    j["field"] = field_to_json(*c.field());
    j["n"] = c.length();
    json rows = json::array();
    for (std::uint32_t i = 0; i < c.dim(); ++i)
        rows.push_back(std::vector<Code>(c.row(i).begin(), c.row(i).end()));
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

LinearCode code_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) fail(errc::parse_error, "code file must be a JSON object");
    if (!j.contains("field")) fail(errc::parse_error, "missing \"field\"");
    FieldRef field = field_from_json(j.at("field"));
    if (!j.contains("n")) fail(errc::parse_error, "missing \"n\"");
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    return LinearCode::from_rows(field, n, rows_from_json(j, "rows"));
}

void save_code(const std::string& path, const LinearCode& c) { write_file(path, code_to_json(c)); }

LinearCode load_code(const std::string& path) { return code_from_json(read_file(path)); }

std::string ring_code_to_json(const RingLinearCode& c) {
    json j;
    j["field"] = field_to_json(*c.ring()->field());
    j["t"] = c.ring()->t();
    j["n"] = c.length();
    json comps = json::array();
    for (const auto& comp : c.components()) {
        json rows = json::array();
        for (std::uint32_t i = 0; i < comp.dim(); ++i)
            rows.push_back(std::vector<Code>(comp.row(i).begin(), comp.row(i).end()));
        comps.push_back(rows);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
}

RingLinearCode ring_code_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) fail(errc::parse_error, "ring code file must be a JSON object");
    if (!j.contains("field")) fail(errc::parse_error, "missing \"field\"");
    FieldRef field = field_from_json(j.at("field"));
    if (!j.contains("t") || !j.contains("n")) fail(errc::parse_error, "missing \"t\" or \"n\"");
    std::uint32_t t = j.at("t").get<std::uint32_t>();
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    if (!j.contains("components") || !j.at("components").is_array() ||
        j.at("components").size() != t)
        fail(errc::parse_error, "need exactly t component blocks");
    RingRef ring = make_ring(field, t);
    std::vector<LinearCode> comps;
    comps.reserve(t);
    for (const json& block : j.at("components")) {
        if (!block.is_array()) fail(errc::parse_error, "component block must be an array of rows");
        std::vector<std::vector<Code>> rows;
        for (const json& row : block) rows.push_back(row.get<std::vector<Code>>());
        comps.push_back(LinearCode::from_rows(field, n, rows));
    }
    return RingLinearCode::from_components(std::move(ring), n, std::move(comps));
}

void save_ring_code(const std::string& path, const RingLinearCode& c) {
    write_file(path, ring_code_to_json(c));
}

RingLinearCode load_ring_code(const std::string& path) {
    return ring_code_from_json(read_file(path));
}

}  // namespace skewcc

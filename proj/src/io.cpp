#include "pxk/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pxk/errors.hpp"

namespace pxk::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string(what) + ": " + e.what());
    }
}

Label label_from_json(const json& j) {
    if (j.is_number_integer()) return Label(j.get<std::int64_t>());
    if (j.is_string()) return Label::parse(j.get<std::string>());
    throw ValidationError("labels must be integers or strings");
}

json label_to_json(const Label& l) {
    if (l.is_int()) return json(l.as_int());
    return json(l.as_string());
}

Simplex simplex_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("a facet must be an array of labels");
    std::vector<Label> verts;
    for (const auto& v : j) verts.push_back(label_from_json(v));
    return Simplex::of(std::move(verts));
}

bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{' || ch == '[';
    }
    return false;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
    std::vector<Simplex> facets;
    if (looks_like_json(text)) {
        json j = parse_json(text, "complex file");
        if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
            throw ValidationError("complex JSON must be {\"facets\": [[...], ...]}");
        for (const auto& f : j["facets"]) facets.push_back(simplex_from_json(f));
    } else {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::vector<Label> verts;
            std::string tok;
            bool in_tok = false;
            auto flush = [&] {
                if (in_tok) verts.push_back(Label::parse(tok));
                tok.clear();
                in_tok = false;
            };
            for (std::size_t i = 0; i < line.size(); ++i) {
                char ch = line[i];
                if (ch == '#') break;
                if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
                    flush();
                } else if (ch == '"') {
                    // Quoted label: read to the closing quote, '\' escapes.
                    flush();
                    in_tok = true;
                    for (++i; i < line.size() && line[i] != '"'; ++i) {
                        if (line[i] == '\\' && i + 1 < line.size()) ++i;
                        tok += line[i];
                    }
                    if (i >= line.size())
                        throw ValidationError("unterminated quoted label");
                    flush();
                } else {
                    in_tok = true;
                    tok += ch;
                }
            }
            flush();
            if (!verts.empty()) facets.push_back(Simplex::of(std::move(verts)));
        }
    }
    return SimplicialComplex::build(std::move(facets));
}

SimplicialComplex read_complex(const std::string& file) {
    return parse_complex(read_file(file));
}

SimplePolytope parse_polytope(const std::string& text) {
    json j = parse_json(text, "polytope file");
    if (!j.is_object() || !j.contains("dim") || !j.contains("facets") ||
        !j.contains("vertices"))
        throw ValidationError(
            "polytope JSON must have \"dim\", \"facets\" and \"vertices\"");
    if (!j["dim"].is_number_integer())
        throw ValidationError("polytope \"dim\" must be an integer");
    int dim = j["dim"].get<int>();

    if (!j["facets"].is_array())
        throw ValidationError("polytope \"facets\" must be an array");
    std::vector<Label> facets;
    for (const auto& f : j["facets"]) facets.push_back(label_from_json(f));

    if (!j["vertices"].is_object())
        throw ValidationError("polytope \"vertices\" must be an object");
    std::map<Label, std::vector<Label>> verts;
    for (const auto& [key, val] : j["vertices"].items()) {
        if (!val.is_array())
            throw ValidationError("vertex incidence must be an array of facets");
        std::vector<Label> inc;
        for (const auto& f : val) inc.push_back(label_from_json(f));
        verts[Label::parse(key)] = std::move(inc);
    }
    return SimplePolytope::build(dim, std::move(facets), std::move(verts));
}

SimplePolytope read_polytope(const std::string& file) {
    return parse_polytope(read_file(file));
}

FacetPath parse_path(const std::string& text, const SimplicialComplex& c) {
    json j = parse_json(text, "path file");
    if (!j.is_array() || j.empty())
        throw ValidationError("a path file is a non-empty array of facets");
    std::vector<Simplex> facets;
    for (const auto& f : j) facets.push_back(simplex_from_json(f));
    return FacetPath::of_simplices(c, facets);
}

FacetPath read_path(const std::string& file, const SimplicialComplex& c) {
    return parse_path(read_file(file), c);
}

std::vector<FacetPath> parse_loops(const std::string& text,
                                   const SimplicialComplex& c) {
    json j = parse_json(text, "loops file");
    if (!j.is_array())
        throw ValidationError("a loops file is an array of facet paths");
    std::vector<FacetPath> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.empty())
            throw ValidationError("each loop is a non-empty array of facets");
        std::vector<Simplex> facets;
        for (const auto& f : p) facets.push_back(simplex_from_json(f));
        out.push_back(FacetPath::of_simplices(c, facets));
    }
    return out;
}

std::vector<FacetPath> read_loops(const std::string& file,
                                  const SimplicialComplex& c) {
    return parse_loops(read_file(file), c);
}

namespace {

std::string line_token(const Label& l) {
    std::string s = l.str();
    bool needs_quotes = s.empty();
    for (char ch : s)
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '#' || ch == '"' ||
            ch == '{' || ch == '}' || ch == '[' || ch == ']' || ch == '\\')
            needs_quotes = true;
    if (!needs_quotes) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string write_complex_lines(const SimplicialComplex& c) {
    std::string out;
    for (const auto& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += line_token(f[i]);
        }
        out += '\n';
    }
    return out;
}

std::string write_complex_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (const auto& f : c.facets()) {
        json fj = json::array();
        for (const auto& v : f.vertices()) fj.push_back(label_to_json(v));
        facets.push_back(std::move(fj));
    }
    json j;
    j["facets"] = std::move(facets);
    return j.dump(2) + "\n";
}

std::string write_polytope_json(const SimplePolytope& p) {
    json j;
    j["dim"] = p.dim();
    json facets = json::array();
    for (const auto& f : p.facet_labels()) facets.push_back(label_to_json(f));
    j["facets"] = std::move(facets);
    json verts;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        json inc = json::array();
        for (int f : p.facets_of(static_cast<int>(v)))
            inc.push_back(label_to_json(p.facet_label(f)));
        verts[p.vertex_label(static_cast<int>(v)).str()] = std::move(inc);
    }
    j["vertices"] = std::move(verts);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + file);
    out << content;
    if (!out) throw ValidationError("write failed: " + file);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace pxk::io

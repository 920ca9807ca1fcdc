#include "qhs/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qhs {

namespace {

std::string trimmed(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& tok, const char* what)
{
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: " + tok);
    }
}

}  // namespace

PolytopeData parse_polytope_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polytope file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("polytope file: not an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "m" && key != "vertices")
            throw std::invalid_argument("polytope file: unknown key " + key);
    }
    if (!j.contains("name") || !j["name"].is_string())
        throw std::invalid_argument("polytope file: missing string key name");
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw std::invalid_argument("polytope file: missing integer key m");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polytope file: missing array key vertices");

    PolytopeData data;
    data.name = j["name"].get<std::string>();
    data.m = j["m"].get<int>();
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 3 || !v[0].is_number_integer() ||
            !v[1].is_number_integer() || !v[2].is_number_integer())
            throw std::invalid_argument("polytope file: vertices must be triples of ids");
        data.vertices.push_back({v[0].get<int>(), v[1].get<int>(), v[2].get<int>()});
    }
    return data;
}

std::string polytope_json(const PolytopeData& data)
{
    nlohmann::json j;
    j["name"] = data.name;
    j["m"] = data.m;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : data.vertices) j["vertices"].push_back({v[0], v[1], v[2]});
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Polytope resolve_polytope(const std::string& spec, const std::string& base_dir)
{
    if (spec == "cube") return build_cube();
    if (spec == "dodecahedron") return build_dodecahedron();
    if (spec == "simplex3") return build_simplex3();
    if (spec.rfind("lobell:", 0) == 0)
        return build_lobell(parse_int(spec.substr(7), "polytope spec"));
    if (spec.rfind("file:", 0) == 0) {
        std::filesystem::path path(spec.substr(5));
        if (path.is_relative() && !base_dir.empty())
            path = std::filesystem::path(base_dir) / path;
        return Polytope::build(parse_polytope_json(read_text_file(path.string())));
    }
    throw std::invalid_argument("unknown polytope spec: " + spec);
}

ColouringFile read_colouring_file(const std::string& path)
{
    std::string text = read_text_file(path);
    size_t eol = text.find('\n');
    if (eol == std::string::npos)
        throw std::invalid_argument("colouring file: missing matrix after the header line");
    std::string header = trimmed(text.substr(0, eol));
    if (header.empty()) throw std::invalid_argument("colouring file: empty header line");

    std::string dir = std::filesystem::path(path).parent_path().string();
    Polytope p = resolve_polytope(header, dir);
    gf2::BitMatrix rows = gf2::parse_matrix(text.substr(eol + 1));
    if (rows.cols != p.facet_count())
        throw std::invalid_argument("colouring file: matrix width does not match the facet count");
    return {std::move(p), colouring_from_matrix(rows)};
}

std::vector<std::pair<int, gf2::BitVec>> parse_seed(const std::string& text, int k)
{
    std::vector<std::pair<int, gf2::BitVec>> seed;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string facet_tok, bits_tok, extra;
        if (!(row >> facet_tok)) continue;
        if (!(row >> bits_tok) || row >> extra)
            throw std::invalid_argument("seed: expected \"<facet> <colour bits>\" per line");
        int facet = parse_int(facet_tok, "seed");
        if (facet < 1) throw std::invalid_argument("seed: facet ids are 1-based");
        gf2::BitVec v = gf2::parse_bits(bits_tok);
        if (v.len != k) throw std::invalid_argument("seed: colour length does not match the rank");
        seed.emplace_back(facet - 1, v);
    }
    return seed;
}

std::vector<std::pair<int, gf2::BitVec>> read_seed_file(const std::string& path, int k)
{
    return parse_seed(read_text_file(path), k);
}

FacetMap parse_cycles(const std::string& text, int m)
{
    FacetMap a = identity_map(m);
    std::vector<bool> used(m, false);
    size_t pos = 0;
    auto skip_blanks = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_blanks();
    if (pos == text.size()) throw std::invalid_argument("cycles: empty permutation text");
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycles: expected (");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            while (pos < text.size() &&
                   (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
                ++pos;
            if (pos == text.size()) throw std::invalid_argument("cycles: unclosed (");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos) throw std::invalid_argument("cycles: expected a facet id");
            int f = parse_int(text.substr(start, pos - start), "cycles");
            if (f < 1 || f > m) throw std::invalid_argument("cycles: facet id out of range");
            if (used[f - 1]) throw std::invalid_argument("cycles: facet repeated");
            used[f - 1] = true;
            cycle.push_back(f - 1);
        }
        for (size_t i = 0; i < cycle.size(); ++i)
            a.image[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_blanks();
    }
    return a;
}

namespace {

FacetMap face_axis(const Polytope& p, int f)
{
    FacetMap best;
    int best_order = 1;
    for (const auto& a : automorphisms(p)) {
        if (a(f) != f) continue;
        SymmetryClass cls = classify(p, a);
        if (cls.kind != SymmetryKind::face_rotation) continue;
        if (cls.order > best_order || (cls.order == best_order && a.image < best.image)) {
            best = a;
            best_order = cls.order;
        }
    }
    if (best_order == 1)
        throw std::invalid_argument("symmetry spec: no rotation about that face");
    return best;
}

FacetMap edge_axis(const Polytope& p, int f, int g)
{
    int e = p.edge_index(f, g);
    if (e < 0) throw std::invalid_argument("symmetry spec: the facets do not share an edge");
    for (const auto& a : automorphisms(p)) {
        if (a(f) != g || a(g) != f) continue;
        SymmetryClass cls = classify(p, a);
        if (cls.kind != SymmetryKind::edge_rotation &&
            cls.kind != SymmetryKind::face_edge_rotation)
            continue;
        auto inv = invariant_cells(p, a);
        if (std::find(inv.edges.begin(), inv.edges.end(), e) != inv.edges.end()) return a;
    }
    throw std::invalid_argument("symmetry spec: no rotation about that edge");
}

FacetMap vertex_axis(const Polytope& p, int f, int g, int h)
{
    std::array<int, 3> triple = {f, g, h};
    std::sort(triple.begin(), triple.end());
    if (p.vertex_index(triple) < 0)
        throw std::invalid_argument("symmetry spec: the facets do not meet in a vertex");
    for (const auto& a : automorphisms(p))
        if (a(f) == g && a(g) == h && a(h) == f) return a;
    throw std::invalid_argument("symmetry spec: no rotation about that vertex");
}

}  // namespace

FacetMap parse_symmetry_spec(const Polytope& p, const std::string& text)
{
    std::string spec = trimmed(text);
    auto ids_after = [&](size_t prefix, size_t want) {
        std::vector<int> ids;
        std::string rest = spec.substr(prefix);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream in(rest);
        std::string tok;
        while (in >> tok) ids.push_back(parse_int(tok, "symmetry spec"));
        if (ids.size() != want)
            throw std::invalid_argument("symmetry spec: wrong number of facet ids");
        for (int id : ids)
            if (id < 1 || id > p.facet_count())
                throw std::invalid_argument("symmetry spec: facet id out of range");
        return ids;
    };

    if (spec.rfind("face:", 0) == 0) return face_axis(p, ids_after(5, 1)[0] - 1);
    if (spec.rfind("edge:", 0) == 0) {
        auto ids = ids_after(5, 2);
        return edge_axis(p, ids[0] - 1, ids[1] - 1);
    }
    if (spec.rfind("vertex:", 0) == 0) {
        auto ids = ids_after(7, 3);
        return vertex_axis(p, ids[0] - 1, ids[1] - 1, ids[2] - 1);
    }
    return parse_cycles(spec, p.facet_count());
}

}  // namespace qhs

#include "qhs/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhs/admissible.hpp"
#include "qhs/colouring.hpp"
#include "qhs/gf2.hpp"
#include "qhs/homology.hpp"
#include "qhs/io.hpp"
#include "qhs/polytope.hpp"
#include "qhs/search.hpp"
#include "qhs/symmetry.hpp"

namespace qhs {

namespace {

using nlohmann::json;

int resolve_threads(int flag)
{
    if (const char* env = std::getenv("QHS_LAB_THREADS")) {
        std::string text = env;
        try {
            size_t used = 0;
            int n = std::stoi(text, &used);
            if (used != text.size() || n < 1) throw std::invalid_argument("");
            return n;
        } catch (const std::exception&) {
            throw std::invalid_argument("QHS_LAB_THREADS: not a positive number: " + text);
        }
    }
    if (flag > 0) return flag;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string betti_text(const std::array<int, 4>& b)
{
    std::ostringstream s;
    s << b[0] << ' ' << b[1] << ' ' << b[2] << ' ' << b[3];
    return s.str();
}

// "0010/0100/..." for single-line contexts; the matrix text format keeps one
// row per line elsewhere.
std::string matrix_one_line(const std::string& key)
{
    std::string out;
    for (char ch : key) out.push_back(ch == '\n' ? '/' : ch);
    if (!out.empty() && out.back() == '/') out.pop_back();
    return out;
}

std::string cell_text(const char* what, const std::vector<int>& facets)
{
    std::ostringstream s;
    s << what << " {";
    for (size_t i = 0; i < facets.size(); ++i) s << (i ? "," : "") << facets[i] + 1;
    s << "}";
    return s.str();
}

// Poles of a rotation axis: the two cells the axis runs through; for a
// rotoreflection those of its square.  Everything else has no poles.
std::string poles_text(const Polytope& p, const FacetMap& a, SymmetryKind kind)
{
    bool rotation = kind == SymmetryKind::face_rotation || kind == SymmetryKind::edge_rotation ||
                    kind == SymmetryKind::vertex_rotation ||
                    kind == SymmetryKind::face_edge_rotation ||
                    kind == SymmetryKind::face_vertex_rotation;
    bool rotoreflection = kind == SymmetryKind::edge_rotoreflection ||
                          kind == SymmetryKind::vertex_rotoreflection ||
                          kind == SymmetryKind::face_rotoreflection;
    if (!rotation && !rotoreflection) return "-";

    InvariantCells cells = invariant_cells(p, rotoreflection ? compose(a, a) : a);
    std::vector<std::string> parts;
    for (int f : cells.facets) parts.push_back(cell_text("face", {f}));
    for (int e : cells.edges) {
        auto [f, g] = p.edges()[e];
        parts.push_back(cell_text("edge", {f, g}));
    }
    for (int v : cells.vertices) {
        auto t = p.vertices()[v];
        parts.push_back(cell_text("vertex", {t[0], t[1], t[2]}));
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? " | " : "") + parts[i];
    return out;
}

struct LoadedColouring {
    Polytope polytope;
    Colouring colouring;
};

// --polytope overrides the header spec; the matrix width must still match.
LoadedColouring load_colouring(const std::string& path, const std::string& polytope_spec)
{
    ColouringFile file = read_colouring_file(path);
    if (polytope_spec.empty()) return {std::move(file.polytope), std::move(file.colouring)};
    Polytope p = resolve_polytope(polytope_spec);
    if (p.facet_count() != file.colouring.facet_count())
        throw std::invalid_argument("colouring file does not fit the requested polytope");
    return {std::move(p), std::move(file.colouring)};
}

json class_json(const ClassEntry& e)
{
    json j;
    j["matrix"] = matrix_one_line(e.key);
    j["group"] = e.sym.identified_name;
    j["group_order"] = e.sym.group_order;
    j["betti"] = e.betti;
    return j;
}

void print_classes_text(std::ostream& out, const ClassList& classes)
{
    for (size_t i = 0; i < classes.size(); ++i) {
        const ClassEntry& e = classes[i];
        out << "class " << i + 1 << " group=" << e.sym.identified_name
            << " order=" << e.sym.group_order << " betti=" << betti_text(e.betti) << "\n"
            << e.key;
    }
}

void print_classes_csv(std::ostream& out, const ClassList& classes)
{
    out << "matrix,group,group_order,b0,b1,b2,b3\n";
    for (const ClassEntry& e : classes)
        out << matrix_one_line(e.key) << ',' << e.sym.identified_name << ','
            << e.sym.group_order << ',' << e.betti[0] << ',' << e.betti[1] << ',' << e.betti[2]
            << ',' << e.betti[3] << "\n";
}

int run_check(std::ostream& out, const std::string& colouring_path,
              const std::string& polytope_spec, bool want_qhs, bool as_json)
{
    LoadedColouring in = load_colouring(colouring_path, polytope_spec);
    bool proper = is_proper(in.polytope, in.colouring);

    json j;
    j["schema"] = 1;
    j["polytope"] = in.polytope.name();
    j["proper"] = proper;
    if (!proper) {
        if (as_json)
            out << j.dump(2) << "\n";
        else
            out << "polytope: " << in.polytope.name() << "\n"
                << "proper: no\n";
        return 1;
    }

    bool orientable = is_orientable(in.polytope, in.colouring);
    std::array<int, 4> betti = betti_manifold(in.polytope, in.colouring);
    bool qhs = is_qhs(in.polytope, in.colouring);
    j["orientable"] = orientable;
    j["betti"] = betti;
    j["qhs"] = qhs;
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << "polytope: " << in.polytope.name() << "\n"
            << "proper: yes\n"
            << "orientable: " << yes_no(orientable) << "\n"
            << "betti: " << betti_text(betti) << "\n"
            << "qhs: " << yes_no(qhs) << "\n";
    return want_qhs && !qhs ? 1 : 0;
}

int run_betti(std::ostream& out, const std::string& colouring_path,
              const std::string& polytope_spec, const std::string& omega_bits, bool as_json)
{
    if (!omega_bits.empty()) {
        Polytope p = polytope_spec.empty()
                         ? load_colouring(colouring_path, "").polytope
                         : resolve_polytope(polytope_spec);
        gf2::BitVec omega = gf2::parse_bits(omega_bits);
        if (omega.len != p.facet_count())
            throw std::invalid_argument("omega length does not match the facet count");
        BettiTriple b = betti_complex(subcomplex(p, omega));
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["omega"] = omega_bits;
            j["empty"] = b.empty;
            j["reduced_betti"] = {b.b0, b.b1, b.b2};
            out << j.dump(2) << "\n";
        } else {
            out << "omega: " << omega_bits << "\n"
                << "empty: " << yes_no(b.empty) << "\n"
                << "reduced betti: " << b.b0 << ' ' << b.b1 << ' ' << b.b2 << "\n";
        }
        return 0;
    }

    LoadedColouring in = load_colouring(colouring_path, polytope_spec);
    if (!is_proper(in.polytope, in.colouring))
        throw std::invalid_argument("betti: the colouring is not proper");
    std::array<int, 4> betti = betti_manifold(in.polytope, in.colouring);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["polytope"] = in.polytope.name();
        j["betti"] = betti;
        out << j.dump(2) << "\n";
    } else {
        out << "betti: " << betti_text(betti) << "\n";
    }
    return 0;
}

int run_symmetries(std::ostream& out, const std::string& polytope_spec,
                   const std::string& colouring_path, bool as_json)
{
    if (colouring_path.empty()) {
        Polytope p = resolve_polytope(polytope_spec);
        auto aut = automorphisms(p);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["polytope"] = p.name();
            j["order"] = aut.size();
            j["automorphisms"] = json::array();
            for (const auto& a : aut) {
                SymmetryClass cls = classify(p, a);
                json e;
                e["cycles"] = cycle_notation(a);
                e["orientation"] = cls.epsilon;
                e["kind"] = kind_name(cls.kind);
                e["order"] = cls.order;
                e["poles"] = poles_text(p, a, cls.kind);
                j["automorphisms"].push_back(e);
            }
            out << j.dump(2) << "\n";
        } else {
            out << "polytope: " << p.name() << "\n"
                << "automorphisms: " << aut.size() << "\n";
            for (const auto& a : aut) {
                SymmetryClass cls = classify(p, a);
                out << cycle_notation(a) << "\t" << (cls.epsilon > 0 ? "+1" : "-1") << "\t"
                    << kind_name(cls.kind) << "\torder " << cls.order << "\tpoles: "
                    << poles_text(p, a, cls.kind) << "\n";
            }
        }
        return aut.empty() ? 1 : 0;
    }

    LoadedColouring in = load_colouring(colouring_path, polytope_spec);
    SymGroupReport report = admissible_group(in.polytope, in.colouring);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["polytope"] = in.polytope.name();
        j["group"] = report.identified_name;
        j["group_order"] = report.group_order;
        j["coloured_isometry_order"] = report.coloured_isometry_order;
        j["elements"] = json::array();
        for (const auto& el : report.elements) {
            json e;
            e["cycles"] = cycle_notation(el.phi);
            e["orientation"] = el.cls.epsilon;
            e["kind"] = kind_name(el.cls.kind);
            e["order"] = el.cls.order;
            e["poles"] = poles_text(in.polytope, el.phi, el.cls.kind);
            e["good"] = el.good;
            e["psi"] = gf2::format_matrix(gf2::to_row_matrix(el.psi));
            j["elements"].push_back(e);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "polytope: " << in.polytope.name() << "\n"
            << "group: " << report.identified_name << " (order " << report.group_order
            << ")\n"
            << "coloured isometry group order: " << report.coloured_isometry_order << "\n";
        for (const auto& el : report.elements)
            out << cycle_notation(el.phi) << "\t" << (el.cls.epsilon > 0 ? "+1" : "-1") << "\t"
                << kind_name(el.cls.kind) << "\torder " << el.cls.order << "\tpoles: "
                << poles_text(in.polytope, el.phi, el.cls.kind) << "\tgood: "
                << yes_no(el.good) << "\n";
    }
    return 0;
}

int run_enumerate(std::ostream& out, const std::string& polytope_spec, int rank, bool qhs,
                  bool classify_sym, const std::string& format, int threads)
{
    Polytope p = resolve_polytope(polytope_spec);
    EnumerationTask task;
    task.polytope = &p;
    task.k = rank;
    task.qhs = qhs;
    task.threads = threads;
    ClassList classes = enumerate_colourings(task);

    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["polytope"] = p.name();
        j["rank"] = rank;
        j["qhs"] = qhs;
        j["classes"] = json::array();
        for (const ClassEntry& e : classes) j["classes"].push_back(class_json(e));
        if (classify_sym) j["histogram"] = classify_by_symmetry(classes);
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_classes_csv(out, classes);
    } else {
        print_classes_text(out, classes);
        if (classify_sym)
            for (const auto& [name, count] : classify_by_symmetry(classes))
                out << "sym " << name << ": " << count << "\n";
        out << "classes: " << classes.size() << "\n";
    }
    return classes.empty() ? 1 : 0;
}

int run_construct(std::ostream& out, const std::string& polytope_spec,
                  const std::string& symmetry_spec, int rank, const std::string& seed_path,
                  bool qhs, const std::string& format)
{
    Polytope p = resolve_polytope(polytope_spec);
    FacetMap phi = parse_symmetry_spec(p, symmetry_spec);
    std::vector<std::pair<int, gf2::BitVec>> seed;
    if (!seed_path.empty()) seed = read_seed_file(seed_path, rank);
    ConstructReport report = construct_with_symmetry(p, phi, rank, seed, qhs);

    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["polytope"] = p.name();
        j["symmetry"] = cycle_notation(phi);
        j["rank"] = rank;
        j["qhs"] = qhs;
        j["raw_candidates"] = report.raw_candidates;
        j["classes"] = json::array();
        for (const ClassEntry& e : report.classes) j["classes"].push_back(class_json(e));
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_classes_csv(out, report.classes);
    } else {
        out << "symmetry: " << cycle_notation(phi) << "\n"
            << "raw candidates: " << report.raw_candidates << "\n";
        print_classes_text(out, report.classes);
        out << "classes: " << report.classes.size() << "\n";
    }
    return report.classes.empty() ? 1 : 0;
}

int run_audit(std::ostream& out, const std::string& colouring_path,
              const std::string& polytope_spec, int rank, bool soft, bool as_json, int threads)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> findings;
    int audited = -1;

    if (!colouring_path.empty()) {
        LoadedColouring in = load_colouring(colouring_path, polytope_spec);
        try {
            AuditReport report = obstruction_audit(in.polytope, in.colouring);
            if (!report.ok()) findings.emplace_back("colouring", report.violations);
        } catch (const std::invalid_argument& e) {
            if (!soft) throw;
            findings.emplace_back("colouring", std::vector<std::string>{e.what()});
        }
    } else {
        Polytope p = resolve_polytope(polytope_spec);
        EnumerationTask task;
        task.polytope = &p;
        task.k = rank;
        task.qhs = true;
        task.threads = threads;
        ClassList classes = enumerate_colourings(task);
        for (size_t i = 0; i < classes.size(); ++i) {
            AuditReport report = obstruction_audit(p, classes[i].rep);
            if (!report.ok())
                findings.emplace_back("class " + std::to_string(i + 1), report.violations);
        }
        audited = static_cast<int>(classes.size());
        if (!as_json) out << "audited classes: " << audited << "\n";
    }

    int defects = 0;
    for (const auto& [_, list] : findings) defects += static_cast<int>(list.size());
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["defects"] = defects;
        if (audited >= 0) j["audited_classes"] = audited;
        j["violations"] = json::array();
        for (const auto& [where, list] : findings)
            for (const auto& message : list) {
                json v;
                v["where"] = where;
                v["message"] = message;
                j["violations"].push_back(v);
            }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [where, list] : findings)
            for (const auto& message : list)
                out << (soft ? "warning" : "violation") << " (" << where << "): " << message
                    << "\n";
        out << "defects: " << defects << "\n";
    }
    return defects == 0 || soft ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"rational homology 3-sphere colourings of right-angled 3-polytopes", "qhs"};
    app.require_subcommand(1);

    std::string colouring_path, polytope_spec, omega_bits, symmetry_spec, seed_path;
    std::string format = "text";
    int rank = 0;
    int threads = 0;
    bool want_qhs = false, as_json = false, classify_sym = false, soft = false;

    CLI::App* check = app.add_subcommand("check", "properness, orientability, Betti, QHS");
    check->add_option("--colouring", colouring_path, "colouring file")->required();
    check->add_option("--polytope", polytope_spec, "overrides the file header");
    check->add_flag("--qhs", want_qhs, "exit 1 unless the colouring is a QHS");
    check->add_flag("--json", as_json, "machine readable output");

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of the manifold or of K_omega");
    betti->add_option("--colouring", colouring_path, "colouring file");
    betti->add_option("--polytope", polytope_spec, "polytope spec");
    betti->add_option("--omega", omega_bits, "facet support vector, one bit per facet");
    betti->add_flag("--json", as_json, "machine readable output");

    CLI::App* symmetries = app.add_subcommand("symmetries", "automorphisms or admissible group");
    symmetries->add_option("--polytope", polytope_spec, "polytope spec");
    symmetries->add_option("--colouring", colouring_path, "restrict to admissible symmetries");
    symmetries->add_flag("--json", as_json, "machine readable output");

    CLI::App* enumerate = app.add_subcommand("enumerate", "census of colouring classes");
    enumerate->add_option("--polytope", polytope_spec, "polytope spec")->required();
    enumerate->add_option("--rank", rank, "colour rank k")->required();
    enumerate->add_flag("--qhs", want_qhs, "keep rational homology spheres only");
    enumerate->add_flag("--classify-sym", classify_sym, "histogram of symmetry groups");
    enumerate->add_option("--out", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    enumerate->add_option("--threads", threads, "worker count (QHS_LAB_THREADS overrides)");

    CLI::App* construct = app.add_subcommand("construct", "colourings carrying a symmetry");
    construct->add_option("--polytope", polytope_spec, "polytope spec")->required();
    construct->add_option("--symmetry", symmetry_spec,
                          "cycles like \"(1 2 3)\" or face:<f>, edge:<f,g>, vertex:<f,g,h>")
        ->required();
    construct->add_option("--rank", rank, "colour rank k")->required();
    construct->add_option("--seed", seed_path, "seed file, \"<facet> <bits>\" per line");
    construct->add_flag("--qhs", want_qhs, "keep rational homology spheres only");
    construct->add_option("--out", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* audit = app.add_subcommand("audit", "obstruction audit of QHS classes");
    audit->add_option("--colouring", colouring_path, "audit one colouring");
    audit->add_option("--polytope", polytope_spec, "polytope spec for a census audit");
    audit->add_option("--rank", rank, "colour rank k for a census audit");
    audit->add_flag("--audit-soft", soft, "report violations as warnings, exit 0");
    audit->add_flag("--json", as_json, "machine readable output");
    audit->add_option("--threads", threads, "worker count (QHS_LAB_THREADS overrides)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return run_check(out, colouring_path, polytope_spec, want_qhs, as_json);
        if (*betti) {
            if (colouring_path.empty() && polytope_spec.empty())
                throw std::invalid_argument("betti needs --colouring or --polytope");
            if (omega_bits.empty() && colouring_path.empty())
                throw std::invalid_argument("betti without --omega needs --colouring");
            return run_betti(out, colouring_path, polytope_spec, omega_bits, as_json);
        }
        if (*symmetries) {
            if (colouring_path.empty() && polytope_spec.empty())
                throw std::invalid_argument("symmetries needs --colouring or --polytope");
            return run_symmetries(out, polytope_spec, colouring_path, as_json);
        }
        if (*enumerate)
            return run_enumerate(out, polytope_spec, rank, want_qhs, classify_sym, format,
                                 resolve_threads(threads));
        if (*construct)
            return run_construct(out, polytope_spec, symmetry_spec, rank, seed_path, want_qhs,
                                 format);
        if (*audit) {
            if (colouring_path.empty() && (polytope_spec.empty() || rank == 0))
                throw std::invalid_argument(
                    "audit needs --colouring, or --polytope with --rank");
            return run_audit(out, colouring_path, polytope_spec, rank, soft, as_json,
                             resolve_threads(threads));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace qhs

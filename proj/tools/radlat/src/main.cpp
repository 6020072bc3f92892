// radlat: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "radlat/caps.hpp"
#include "radlat/cli/suites.hpp"
#include "radlat/cstar.hpp"
#include "radlat/io.hpp"
#include "radlat/radmap.hpp"
#include "radlat/smallideal.hpp"

using namespace radlat;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, counterexample = 1, input_error = 2 };

struct Output {
    std::string format = "text";
    std::string path;

    void write(const std::string& s) const {
        if (path.empty()) {
            std::cout << s;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InputError("cannot write '" + path + "'");
        f << s;
    }
    bool json_mode() const { return format == "json"; }
};

int report_exit(const VerdictReport& r) { return r.passed() ? ok : counterexample; }

std::string emit(const Output& out, const VerdictReport& r) { return out.json_mode() ? cli::report_jsonl(r) : r.text(); }

json elems_json(const std::vector<Elem>& xs) { return json(xs); }

LatticePtr load_lattice(const std::string& path) { return parse_lattice(read_file(path), path); }

bool is_input_kind(const std::string& kind) {
    for (auto k : {"InputError", "ParseError", "NotAPoset", "NotALattice", "NotStrongerThanOrder", "SizeLimitExceeded",
                   "NotComparable", "NotEquivariant"})
        if (kind == k) return true;
    return false;
}

int cmd_lattice_check(const Output& out, const std::string& path) {
    LatticePtr L = load_lattice(path);
    auto d = is_distributive(*L);
    std::size_t autos = 0;
    bool autos_known = L->size() <= int(caps().automorphism_size);
    if (autos_known) autos = automorphisms(*L).size();
    std::string violation = lattice_law_violation(*L);
    if (out.json_mode()) {
        json j;
        j["schema"] = cli::report_schema_version;
        j["type"] = "lattice";
        j["name"] = L->name();
        j["size"] = L->size();
        j["covers"] = L->covers().size();
        j["distributive"] = d.distributive;
        if (d.witness) j["distributivity_witness"] = std::vector<Elem>(d.witness->begin(), d.witness->end());
        j["atoms"] = elems_json(L->atoms());
        j["coatoms"] = elems_json(L->coatoms());
        if (autos_known) j["automorphisms"] = autos;
        j["laws"] = violation.empty() ? "ok" : violation;
        out.write(j.dump() + "\n");
    } else {
        std::ostringstream os;
        os << "lattice " << L->name() << ": " << L->size() << " elements, " << L->covers().size() << " covers\n";
        os << "  distributive: " << (d.distributive ? "yes" : "no");
        if (d.witness) os << " (witness " << elems_text({(*d.witness)[0], (*d.witness)[1], (*d.witness)[2]}) << ")";
        os << "\n  atoms: " << elems_text(L->atoms()) << "\n  coatoms: " << elems_text(L->coatoms()) << "\n";
        if (autos_known) os << "  automorphisms: " << autos << "\n";
        os << "  lattice laws: " << (violation.empty() ? "ok" : violation) << "\n";
        out.write(os.str());
    }
    return violation.empty() ? ok : counterexample;
}

int cmd_relation_analyze(const Output& out, const std::string& lat, const std::string& rel) {
    LatticePtr L = load_lattice(lat);
    RelationFile rf = parse_relation(read_file(rel), L, rel);
    const Relation& R = rf.relation;
    VerdictReport rep("relation-analyze");
    rep.merge(check_theorem_inf(R));
    rep.merge(check_radical_structure(R));
    if (L->size() <= int(caps().automorphism_size)) rep.merge(check_automorphism_invariance(R));
    rep.merge(check_duality(R));
    auto h = is_h_relation(R), dh = is_dual_h_relation(R);
    rep.note("relation.join_shift", h.ok ? "yes" : "no, triple " + elems_text(h.witness));
    rep.note("relation.meet_shift", dh.ok ? "yes" : "no, triple " + elems_text(dh.witness));
    rep.note("relation.transitive", is_transitive(R) ? "yes" : "no");
    rep.note("relation.radicals", elems_text(find_radicals(rel_tri_right(R))));
    rep.note("relation.dual_radicals", elems_text(find_dual_radicals(rel_tri_left(R))));
    out.write(emit(out, rep));
    return report_exit(rep);
}

int cmd_algebra_radical(const Output& out, const std::string& algebra, const std::string& prop, const std::string& dir) {
    ModelAlgebra A = parse_algebra(algebra);
    Property P = parse_property(prop);
    bool right = dir == "right";
    try {
        IdealRef r = right ? radical_tri(A, P) : dual_radical_tri(A, P);
        if (out.json_mode()) {
            json j;
            j["schema"] = cli::report_schema_version;
            j["type"] = "radical";
            j["algebra"] = A.text();
            j["property"] = P.str();
            j["direction"] = dir;
            j["ideal"] = r.text();
            j["blocks"] = mask_indices(r.mask);
            out.write(j.dump() + "\n");
        } else {
            out.write(r.text() + "\n");
        }
        return ok;
    } catch (const NoUniqueRadical& e) {
        out.write(std::string(e.what()) + "\n");
        return counterexample;
    }
}

int cmd_property_stability(const Output& out, const std::string& prop, int max_blocks, int max_size) {
    Property P = parse_property(prop);
    Universe U = enumerate_algebras(max_blocks, max_size);
    auto lo = is_lower_stable(P, U), up = is_upper_stable(P, U), ex = is_extension_stable(P, U);
    VerdictReport rep = check_t41(P, U);
    rep.set_suite("property-stability");
    rep.note("stability.lower", lo.ok ? "yes" : "no, " + lo.text());
    rep.note("stability.upper", up.ok ? "yes" : "no, " + up.text());
    rep.note("stability.extension", ex.ok ? "yes" : "no, " + ex.text());
    rep.note("stability.universe", std::to_string(U.size()) + " algebras");
    out.write(emit(out, rep));
    return report_exit(rep);
}

std::map<Elem, std::string> small_highlights(const SmallAnalysis& s) {
    std::map<Elem, std::string> hl;
    for (Elem x : s.small_set) hl[x] = "lightblue";
    hl[s.r_sm_tri] = "orange";
    return hl;
}

int cmd_small_analyze(const Output& out, const std::string& path, const std::string& dot_path) {
    LatticePtr L = load_lattice(path);
    SmallAnalysis s = analyze_small(L);
    VerdictReport rep("small-analyze");
    rep.merge(check_sm_structure(L));
    rep.merge(check_c4(L));
    rep.merge(check_t61(L));
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw InputError("cannot write '" + dot_path + "'");
        f << to_dot(*L, small_highlights(s));
    }
    if (out.json_mode()) {
        json j;
        j["schema"] = cli::report_schema_version;
        j["type"] = "small-analysis";
        j["lattice"] = L->name();
        j["small"] = elems_json(s.small_set);
        j["s_a"] = s.s_a;
        j["r_sm"] = s.r_sm_tri;
        j["rad_k"] = s.rad_k;
        std::vector<std::vector<Elem>> pairs;
        for (auto [a, b] : s.rel_sm.pairs()) pairs.push_back({a, b});
        j["rel_sm"] = pairs;
        out.write(j.dump() + "\n" + cli::report_jsonl(rep));
    } else {
        std::ostringstream os;
        os << "small elements: " << elems_text(s.small_set) << "\n";
        os << "s_a = " << L->label(s.s_a) << ", r_sm = " << L->label(s.r_sm_tri) << ", rad_k = " << L->label(s.rad_k)
           << "\n";
        os << "rel_sm strict pairs: " << relation_text(s.rel_sm) << "\n";
        out.write(os.str() + rep.text());
    }
    return report_exit(rep);
}

int cmd_verify(const Output& out, const std::string& suite, const cli::RunConfig& cfg) {
    std::vector<std::string> names = suite == "all" ? cli::suite_names() : std::vector<std::string>{suite};
    std::string text;
    bool pass = true;
    for (const auto& n : names) {
        VerdictReport r = cli::run_suite(n, cfg);
        pass = pass && r.passed();
        text += emit(out, r);
    }
    out.write(text);
    return pass ? ok : counterexample;
}

int cmd_export_dot(const Output& out, const std::string& lat, const std::vector<int>& highlight,
                   const std::string& rel) {
    LatticePtr L = load_lattice(lat);
    std::map<Elem, std::string> hl;
    for (int x : highlight) {
        if (x < 0 || x >= L->size()) throw InputError("highlight element " + std::to_string(x) + " out of range");
        hl[x] = "yellow";
    }
    if (!rel.empty()) {
        Relation R = parse_relation(read_file(rel), L, rel).relation;
        for (Elem r : find_radicals(rel_tri_right(R))) hl[r] = "orange";
        for (Elem p : find_dual_radicals(rel_tri_left(R))) hl[p] = hl.count(p) ? "red" : "lightblue";
    }
    out.write(to_dot(*L, hl));
    return ok;
}

int cmd_radmap_check(const Output& out, const std::string& spec, int max_blocks, int max_size) {
    RadicalMap R = parse_radical_map(spec);
    Universe U = enumerate_algebras(max_blocks, max_size);
    VerdictReport rep = check_axioms(R, U);
    rep.set_suite("radical-map");
    if (rep.passed()) rep.merge(check_correspondence(R, U));
    out.write(emit(out, rep));
    return report_exit(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radlat: relations, radicals and small ideals on finite lattices"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", out.path, "Write output to a file");

    std::function<int()> action;
    std::string lat, rel, algebra, prop, dir = "right", suite, dot_path, spec;
    int max_blocks = 4, max_size = 3;
    std::vector<int> highlight;
    cli::RunConfig cfg;

    auto* lattice = app.add_subcommand("lattice", "Lattice files");
    lattice->require_subcommand(1);
    auto* lcheck = lattice->add_subcommand("check", "Parse and summarise a .lat file");
    lcheck->add_option("lattice", lat)->required();
    lcheck->callback([&] { action = [&] { return cmd_lattice_check(out, lat); }; });

    auto* relation = app.add_subcommand("relation", "Relations on lattices");
    relation->require_subcommand(1);
    auto* ranalyze = relation->add_subcommand("analyze", "Run the relation checks on a .rel file");
    ranalyze->add_option("lattice", lat)->required();
    ranalyze->add_option("relation", rel)->required();
    ranalyze->callback([&] { action = [&] { return cmd_relation_analyze(out, lat, rel); }; });

    auto* alg = app.add_subcommand("algebra", "Model algebras");
    alg->require_subcommand(1);
    auto* aradical = alg->add_subcommand("radical", "Radical of a property on an algebra");
    aradical->add_option("--algebra", algebra, "Block sizes, e.g. 1,2")->required();
    aradical->add_option("--property", prop, "Property expression")->required();
    aradical->add_option("--direction", dir)->check(CLI::IsMember({"right", "left"}));
    aradical->callback([&] { action = [&] { return cmd_algebra_radical(out, algebra, prop, dir); }; });

    auto* property = app.add_subcommand("property", "Property expressions");
    property->require_subcommand(1);
    auto* pstab = property->add_subcommand("stability", "Stability of a property over a universe");
    pstab->add_option("--property", prop)->required();
    pstab->add_option("--max-blocks", max_blocks)->check(CLI::Range(0, 12));
    pstab->add_option("--max-block-size", max_size)->check(CLI::Range(1, 64));
    pstab->callback([&] { action = [&] { return cmd_property_stability(out, prop, max_blocks, max_size); }; });

    auto* small = app.add_subcommand("small", "Small elements");
    small->require_subcommand(1);
    auto* sanalyze = small->add_subcommand("analyze", "Small elements, S_A, rad_K and the small radical");
    sanalyze->add_option("lattice", lat)->required();
    sanalyze->add_option("--dot", dot_path, "Also write a DOT file with small elements highlighted");
    sanalyze->callback([&] { action = [&] { return cmd_small_analyze(out, lat, dot_path); }; });

    auto* radmap = app.add_subcommand("radmap", "Radical maps on model algebras");
    radmap->require_subcommand(1);
    auto* mcheck = radmap->add_subcommand("check", "Axioms and correspondence for a radical map");
    mcheck->add_option("map", spec, "prop:<expr>:right|left, table:<file>, zero, identity")->required();
    mcheck->add_option("--max-blocks", max_blocks)->check(CLI::Range(0, 12));
    mcheck->add_option("--max-block-size", max_size)->check(CLI::Range(1, 64));
    mcheck->callback([&] { action = [&] { return cmd_radmap_check(out, spec, max_blocks, max_size); }; });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--fuzz-count", cfg.fuzz_count)->check(CLI::Range(1, 100000));
    verify->add_option("--max-blocks", cfg.max_blocks)->check(CLI::Range(0, 12));
    verify->add_option("--max-block-size", cfg.max_block_size)->check(CLI::Range(1, 64));
    verify->add_option("--lattice-cap", cfg.lattice_size_cap)->check(CLI::Range(1, 4096));
    verify->callback([&] { action = [&] { return cmd_verify(out, suite, cfg); }; });

    auto* exp = app.add_subcommand("export", "Export");
    exp->require_subcommand(1);
    auto* edot = exp->add_subcommand("dot", "Hasse diagram as Graphviz DOT");
    edot->add_option("lattice", lat)->required();
    edot->add_option("--highlight", highlight, "Elements to fill")->delimiter(',');
    edot->add_option("--relation", rel, "Highlight the radicals of this relation");
    edot->callback([&] { action = [&] { return cmd_export_dot(out, lat, highlight, rel); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : input_error;
    }
    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_kind(e.kind()) ? input_error : counterexample;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}

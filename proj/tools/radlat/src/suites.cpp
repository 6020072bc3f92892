#include "radlat/cli/suites.hpp"

#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "radlat/caps.hpp"
#include "radlat/cstar.hpp"
#include "radlat/radmap.hpp"
#include "radlat/smallideal.hpp"

namespace radlat::cli {

namespace {

Universe universe(const RunConfig& cfg) { return enumerate_algebras(cfg.max_blocks, cfg.max_block_size); }

std::vector<Property> parsed(const std::vector<std::string>& xs) {
    std::vector<Property> out;
    for (const auto& x : xs) out.push_back(parse_property(x));
    return out;
}

// Properties beyond the main eight, chosen to exercise the failing sides of
// the biconditionals.
const std::vector<std::string>& extra_properties() {
    static const std::vector<std::string> v = {"!(blocks<=1) & blocks<=2", "!simple", "blocks<=2", "!comm",
                                               "blockdim<=1 | dim<=4"};
    return v;
}

std::vector<Property> all_model_properties() {
    auto v = parsed(model_properties());
    for (auto& p : parsed(extra_properties())) v.push_back(p);
    return v;
}

void same(VerdictReport& rep, const std::string& id, const Property& a, const Property& b, const Universe& U) {
    auto d = first_disagreement(a, b, U);
    rep.check(id, !d, [&] { return a.str() + " vs " + b.str() + " at " + d->text(); });
}

bool automorphisms_affordable(const Lattice& L) { return L.size() <= int(caps().automorphism_size); }

VerdictReport suite_inf(const RunConfig& cfg) {
    VerdictReport rep("inf");
    for (const auto& f : fuzz_instances(cfg)) {
        rep.merge(check_theorem_inf(f.h), f.tag + " join-closed");
        rep.merge(check_theorem_inf(f.dual_h), f.tag + " meet-closed");
    }
    return rep;
}

VerdictReport suite_t35(const RunConfig& cfg) {
    VerdictReport rep("t35");
    for (const auto& f : fuzz_instances(cfg)) {
        rep.merge(check_radical_structure(f.h), f.tag + " join-closed");
        rep.merge(check_radical_structure(f.dual_h), f.tag + " meet-closed");
        if (automorphisms_affordable(*f.lattice)) {
            rep.merge(check_automorphism_invariance(f.h), f.tag + " join-closed");
            rep.merge(check_automorphism_invariance(f.dual_h), f.tag + " meet-closed");
        }
    }
    return rep;
}

VerdictReport suite_duality(const RunConfig& cfg) {
    VerdictReport rep("duality");
    for (const auto& f : fuzz_instances(cfg)) {
        rep.merge(check_duality(f.seeds), f.tag + " seeds");
        rep.merge(check_duality(f.h), f.tag + " join-closed");
        rep.merge(check_duality(f.dual_h), f.tag + " meet-closed");
    }
    return rep;
}

VerdictReport suite_t41(const RunConfig& cfg) {
    VerdictReport rep("t41");
    Universe U = universe(cfg);
    for (const auto& P : all_model_properties()) rep.merge(check_t41(P, U), P.str());
    return rep;
}

VerdictReport suite_structure(const RunConfig& cfg) {
    VerdictReport rep("t30-t37");
    Universe U = universe(cfg);
    for (const auto& P : all_model_properties()) rep.merge(check_structure_theorems(P, U), P.str());
    // one within comm within G(one): the closure radicals agree.
    Property one = parse_property("one"), comm = parse_property("comm");
    same(rep, "structure.one_comm_same_closure", G(one), G(comm), U);
    for (const auto& A : U) {
        Mask a = radical_tri(A, one).mask, b = radical_tri(A, comm).mask;
        rep.check("structure.one_comm_same_radical", a == b, [&] { return "A=" + A.text(); });
    }
    return rep;
}

VerdictReport suite_closure(const RunConfig& cfg) {
    VerdictReport rep("closure-laws");
    Universe U = universe(cfg);
    auto props = all_model_properties();
    for (const auto& P : props) rep.merge(check_closure_laws(P, U, props), P.str());
    Property comm = parse_property("comm"), one = parse_property("one");
    same(rep, "closure.example.G_comm_is_comm", G(comm), comm, U);
    same(rep, "closure.example.dG_one_is_comm", dG(one), comm, U);
    same(rep, "closure.example.G_one_is_comm", G(one), comm, U);
    for (const auto& P : props) same(rep, "closure.gpi_eq_r", GPi(P), Rp(P), U);
    return rep;
}

VerdictReport suite_t36_t34(const RunConfig& cfg) {
    VerdictReport rep("t36-t34");
    Universe U = universe(cfg);
    for (const auto& P : all_model_properties()) {
        same(rep, "operators.R_idempotent", Rp(Rp(P)), Rp(P), U);
        same(rep, "operators.GPi_idempotent", GPi(GPi(P)), GPi(P), U);
        rep.merge(check_model_invariants(P, U), P.str());
    }
    return rep;
}

VerdictReport suite_compatible(const RunConfig& cfg) {
    VerdictReport rep("compatible-maps");
    Universe U = universe(cfg);
    std::vector<BlockMap> maps;
    for (int n = 1; n <= cfg.max_block_size; ++n) maps.push_back(block_size_at_most(n));
    maps.push_back(make_block_map("all", [](const Blocks&, int) { return true; }));
    maps.push_back(make_block_map("even", [](const Blocks& b, int i) { return b[i] % 2 == 0; }));
    for (const auto& F : maps) {
        rep.merge(check_compatible(F, U), F.name());
        rep.merge(check_ideal_map(F, U), F.name());
        rep.merge(check_t310(F, U), F.name());
    }
    for (int n = 1; n <= cfg.max_block_size; ++n)
        same(rep, "compatible.size_map_class", block_size_at_most(n).r_f(),
             parse_property("blockdim<=" + std::to_string(n)), U);
    same(rep, "compatible.size_one_is_comm", block_size_at_most(1).r_f(), parse_property("comm"), U);
    same(rep, "compatible.all_is_all", maps[std::size_t(cfg.max_block_size)].r_f(), parse_property("all"), U);
    // A map that treats equal blocks differently is rejected.
    BlockMap first = make_block_map("first", [](const Blocks&, int i) { return i == 0; });
    bool rejected = false;
    try {
        first.require_equivariant(U);
    } catch (const NotEquivariant&) {
        rejected = true;
    }
    rep.check("compatible.asymmetric_rejected", rejected);
    return rep;
}

VerdictReport suite_axioms(const RunConfig& cfg) {
    VerdictReport rep("axioms");
    Universe U = universe(cfg);
    for (const auto& P : parsed(model_properties())) rep.merge(check_property_radicals(P, U), P.str());
    VerdictReport crafted = check_axioms(one_block_map(), U);
    const Clause* c = crafted.find("axioms.quotient_monotone");
    rep.check("axioms.crafted_map_fails_quotient_monotone",
              c && !c->pass() && c->witness.rfind("A=[1,2] I={block#0}: p(R(A))=[2] R(A/I)=[]", 0) == 0,
              [&] { return c ? c->witness : "clause missing"; });
    rep.note("axioms.crafted_map", crafted.first_failure());
    for (const auto& R : {RadicalMap::zero(), RadicalMap::identity()}) {
        VerdictReport r = check_axioms(R, U);
        rep.check("axioms.trivial_maps_pass", r.passed(), [&] { return R.name() + " " + r.first_failure(); });
    }
    return rep;
}

VerdictReport suite_correspondence(const RunConfig& cfg) {
    VerdictReport rep("correspondence");
    Universe U = universe(cfg);
    std::vector<RadicalMap> maps = {RadicalMap::zero(), RadicalMap::identity()};
    for (const auto& P : parsed(model_properties())) {
        if (is_upper_stable(P, U).ok) maps.push_back(RadicalMap::from_property(P, true));
        if (is_lower_stable(P, U).ok) maps.push_back(RadicalMap::from_property(P, false));
    }
    for (const auto& R : maps) {
        try {
            rep.merge(check_correspondence(R, U), R.name());
        } catch (const AxiomsNotSatisfied& e) {
            rep.check("correspondence.axioms_hold", false, [&] { return std::string(e.what()); });
        }
    }
    Property comm = parse_property("comm");
    Property no_one = Property::custom("no-1-block", [](const Blocks& b) {
        for (int x : b)
            if (x == 1) return false;
        return true;
    });
    RadicalMap rc = RadicalMap::from_property(comm, true);
    same(rep, "correspondence.example.rad_comm", rad_of(rc, U), comm, U);
    same(rep, "correspondence.example.sem_comm", sem_of(rc, U), no_one, U);
    same(rep, "correspondence.example.rad_zero", rad_of(RadicalMap::zero(), U), parse_property("zero"), U);
    same(rep, "correspondence.example.sem_zero", sem_of(RadicalMap::zero(), U), parse_property("all"), U);
    same(rep, "correspondence.example.rad_identity", rad_of(RadicalMap::identity(), U), parse_property("all"), U);
    same(rep, "correspondence.example.sem_identity", sem_of(RadicalMap::identity(), U), parse_property("zero"), U);
    bool threw = false;
    try {
        check_correspondence(one_block_map(), U);
    } catch (const AxiomsNotSatisfied&) {
        threw = true;
    }
    rep.check("correspondence.rejects_non_radical", threw);
    return rep;
}

VerdictReport suite_relation_function(const RunConfig& cfg) {
    VerdictReport rep("relation-function");
    Universe U = universe(cfg);
    for (const auto& P : parsed(model_properties())) rep.merge(check_relation_function(algebra_family(P, U)), P.str());
    RelationFamily id = identity_family(U);
    VerdictReport ir = check_relation_function(id);
    rep.merge(ir, "identity", "identity.");
    auto it = ir.notes().find("family.class");
    rep.check("identity.class_is_zero", it != ir.notes().end() && it->second == "[]",
              [&] { return it == ir.notes().end() ? std::string("no class") : it->second; });
    return rep;
}

std::vector<LatticePtr> small_lattices(const RunConfig& cfg) {
    std::vector<LatticePtr> out;
    for (int n = 1; n <= 8; ++n) out.push_back(chain(n));
    for (int k = 0; k <= 5; ++k) out.push_back(boolean_lattice(k));
    out.push_back(m3());
    out.push_back(n5());
    for (auto& L : fuzz_distributive(cfg, std::max(100, cfg.fuzz_count / 2))) out.push_back(L);
    return out;
}

VerdictReport suite_small(const RunConfig& cfg) {
    VerdictReport rep("small");
    int fuzzed = 0;
    for (const auto& L : small_lattices(cfg)) {
        rep.merge(check_sm_structure(L), L->name());
        rep.merge(check_t61(L), L->name());
        if (L->name()[0] == 'D') ++fuzzed;
    }
    rep.note("small.fuzzed_distributive", std::to_string(fuzzed) + " lattices");
    LatticePtr C3 = chain(3);
    rep.check("small.chain3_radical_is_middle", r_sm_tri(C3) == 1 && s_a(*C3) == 1 && rad_k(*C3) == 1);
    rep.merge(check_ccr_corollary(universe(cfg)));
    return rep;
}

VerdictReport suite_c4(const RunConfig& cfg) {
    VerdictReport rep("c4");
    for (const auto& L : small_lattices(cfg)) rep.merge(check_c4(L), L->name());
    return rep;
}

VerdictReport suite_r3(const RunConfig&) { return check_r3_demo(); }

using SuiteFn = std::function<VerdictReport(const RunConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"inf", suite_inf},
        {"t35", suite_t35},
        {"duality", suite_duality},
        {"t41", suite_t41},
        {"t30-t37", suite_structure},
        {"closure-laws", suite_closure},
        {"t36-t34", suite_t36_t34},
        {"compatible-maps", suite_compatible},
        {"axioms", suite_axioms},
        {"correspondence", suite_correspondence},
        {"relation-function", suite_relation_function},
        {"small", suite_small},
        {"c4", suite_c4},
        {"r3-demo", suite_r3},
    };
    return r;
}

} // namespace

const std::vector<std::string>& model_properties() {
    static const std::vector<std::string> v = {"comm",        "one",    "simple",  "dim<=4",
                                               "blockdim<=2", "G(one)", "dG(one)", "R(simple)"};
    return v;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

VerdictReport run_suite(const std::string& name, const RunConfig& cfg) {
    for (const auto& [n, f] : registry())
        if (n == name) {
            VerdictReport rep = f(cfg);
            rep.set_suite(name);
            return rep;
        }
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw InputError("unknown suite '" + name + "'; known:" + known + " all");
}

std::string report_jsonl(const VerdictReport& rep) {
    using json = nlohmann::ordered_json;
    std::string out;
    for (const auto& c : rep.clauses()) {
        json j;
        j["schema"] = report_schema_version;
        j["type"] = "clause";
        j["suite"] = rep.suite();
        j["clause"] = c.id;
        j["status"] = c.failed ? "fail" : c.checked ? "pass" : "not-applicable";
        j["checked"] = c.checked;
        j["failed"] = c.failed;
        j["skipped"] = c.skipped;
        j["witness"] = c.witness;
        out += j.dump() + "\n";
    }
    for (const auto& [id, text] : rep.notes()) {
        json j;
        j["schema"] = report_schema_version;
        j["type"] = "note";
        j["suite"] = rep.suite();
        j["note"] = id;
        j["text"] = text;
        out += j.dump() + "\n";
    }
    json s;
    s["schema"] = report_schema_version;
    s["type"] = "summary";
    s["suite"] = rep.suite();
    s["clauses"] = rep.clauses().size();
    s["failures"] = rep.failures();
    s["status"] = rep.passed() ? "pass" : "fail";
    out += s.dump() + "\n";
    return out;
}

} // namespace radlat::cli

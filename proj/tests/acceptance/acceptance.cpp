// One line per acceptance criterion; exit status 1 when any line fails.
// Usage: radlat_acceptance <path-to-radlat-binary>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "radlat/cli/fuzz.hpp"
#include "radlat/cli/suites.hpp"
#include "radlat/cstar.hpp"
#include "radlat/smallideal.hpp"

using namespace radlat;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kInstances = 200;
constexpr int kLatticeCap = 32;
constexpr int kSmallCap = 64;
constexpr int kMinDistributive = 100;

struct Outcome {
    bool ok = true;
    std::string detail;
};

cli::RunConfig config() {
    cli::RunConfig cfg;
    cfg.seed = kSeed;
    cfg.fuzz_count = kInstances;
    cfg.lattice_size_cap = kLatticeCap;
    cfg.small_lattice_cap = kSmallCap;
    cfg.max_blocks = 4;
    cfg.max_block_size = 3;
    return cfg;
}

// Runs the suites and requires each to pass with at least one evaluated clause.
Outcome suites(const std::vector<std::string>& names, std::vector<std::string> required_prefixes = {}) {
    Outcome o;
    std::size_t clauses = 0, checks = 0;
    for (const auto& n : names) {
        VerdictReport r = cli::run_suite(n, config());
        for (const auto& c : r.clauses()) {
            ++clauses;
            checks += c.checked;
        }
        if (!r.passed()) {
            o.ok = false;
            o.detail += n + ": " + r.first_failure() + "; ";
        }
        for (auto it = required_prefixes.begin(); it != required_prefixes.end();) {
            bool seen = false;
            for (const auto& c : r.clauses())
                if (c.id.rfind(*it, 0) == 0 && c.checked > 0) seen = true;
            it = seen ? required_prefixes.erase(it) : it + 1;
        }
    }
    for (const auto& p : required_prefixes) {
        o.ok = false;
        o.detail += "no evaluated clause " + p + "*; ";
    }
    if (o.ok) o.detail = std::to_string(clauses) + " clauses, " + std::to_string(checks) + " checks";
    return o;
}

Outcome instance_shape() {
    auto inst = cli::fuzz_instances(config());
    if (int(inst.size()) < kInstances) return {false, "only " + std::to_string(inst.size()) + " instances"};
    for (const auto& f : inst) {
        if (f.lattice->size() > kLatticeCap) return {false, f.tag + " exceeds the size cap"};
        if (!is_h_relation(f.h).ok || !is_dual_h_relation(f.dual_h).ok) return {false, f.tag + " closure not shift-closed"};
    }
    return {};
}

Outcome criterion1() {
    if (auto s = instance_shape(); !s.ok) return s;
    return suites({"inf"}, {"inf.join.half_eq_closure", "inf.join.closure_is_order", "inf.join.complement_stable",
                            "inf.p11.", "inf.join.radicals_coincide", "inf.meet.half_eq_closure"});
}

Outcome criterion2() {
    return suites({"t35"}, {"t35.join.radical_is_bound", "t35.join.radical_extremal", "t35.join.series_to_radical",
                            "t35.join.neighbour_split", "t35.meet.radical_is_bound", "t35.meet.radical_extremal",
                            "t35.meet.series_to_radical", "t35.meet.neighbour_split"});
}

Outcome criterion3() { return suites({"duality"}, {"duality.h_vs_dual_h", "duality.radicals", "duality.inf_report"}); }

Outcome criterion4() {
    Universe U = enumerate_algebras(4, 3);
    if (U.size() != 35) return {false, "universe has " + std::to_string(U.size()) + " algebras"};
    for (const auto& A : U)
        if (ideal_lattice(A)->size() > 16) return {false, A.text() + " has a large ideal lattice"};
    return suites({"t41", "t30-t37", "t36-t34"}, {"t41.upper_iff_h", "t41.lower_iff_dual_h", "structure.", "series.join.",
                                                  "series.meet.", "model."});
}

Outcome criterion5() {
    return suites({"closure-laws"}, {"closure.G.extensive", "closure.G.idempotent", "closure.dG.idempotent",
                                     "closure.R.idempotent", "closure.GPi.idempotent", "closure.example.G_comm_is_comm",
                                     "closure.example.dG_one_is_comm", "closure.gpi_eq_r"});
}

Outcome criterion6() {
    return suites({"axioms", "correspondence"},
                  {"axioms.crafted_map_fails_quotient_monotone", "correspondence.example.rad_comm"});
}

Outcome criterion7() {
    auto dist = cli::fuzz_distributive(config(), std::max(kMinDistributive, kInstances / 2));
    for (const auto& L : dist)
        if (L->size() > kSmallCap || !is_distributive(*L).distributive) return {false, L->name() + " out of range"};
    return suites({"small", "c4"}, {"sm.transitive", "sm.h_relation", "sm.r_order", "c4.kasch_eq_small_join",
                                    "c4.small_join_eq_radical", "small.chain3_radical_is_middle",
                                    "ccr.only_zero_small"});
}

Outcome criterion8() {
    Outcome o = suites({"r3-demo"}, {"r3.ideal_transport_fails", "r3.other_transport_holds", "r3.comm_family_passes",
                                     "r3.comm_class_recovered"});
    if (cli::report_jsonl(check_r3_demo()) != cli::report_jsonl(check_r3_demo())) return {false, "reports differ"};
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion9(const std::string& exe) {
    if (exe.empty()) return {false, "no radlat binary given"};
    std::string out[2];
    for (int i = 0; i < 2; ++i) {
        std::string path = "acceptance_verify_" + std::to_string(i) + ".jsonl";
        std::string cmd = "\"" + exe + "\" --format json -o " + path + " verify all --seed " + std::to_string(kSeed);
        int rc = std::system(cmd.c_str());
        if (rc != 0) return {false, "verify all exited with status " + std::to_string(rc)};
        out[i] = slurp(path);
        std::remove(path.c_str());
    }
    if (out[0].empty()) return {false, "empty report"};
    if (out[0] != out[1]) return {false, "reports differ"};
    return {true, std::to_string(out[0].size()) + " identical bytes"};
}

} // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "half relation, closure and radical identities on 200 fuzzed lattices", 60, criterion1},
        {2, "radical bounds, series and neighbours on the same instances", 60, criterion2},
        {3, "verdicts agree with the dual lattice", 30, criterion3},
        {4, "model structure identities over 35 algebras", 120, criterion4},
        {5, "closure operator laws and examples", 60, criterion5},
        {6, "radical map axioms and correspondence", 60, criterion6},
        {7, "small ideals on chains, Boolean and fuzzed distributive lattices", 60, criterion7},
        {8, "small-ideal family breaks ideal transport", 5, criterion8},
        {9, "verify all is byte-reproducible", 120, [&] { return criterion9(exe); }},
    };
    bool all_ok = true;
    for (const auto& c : all) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        bool ok = o.ok && s < c.limit_s;
        all_ok &= ok;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2fs / %.0fs", s, c.limit_s);
        std::cout << "criterion " << c.id << " " << (ok ? "PASS" : "FAIL") << " [" << buf << "] " << c.title << ": "
                  << o.detail << std::endl;
    }
    return all_ok ? 0 : 1;
}

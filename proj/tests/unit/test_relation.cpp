#include <doctest.h>

#include "../oracles.hpp"
#include "radlat/cli/fuzz.hpp"
#include "radlat/errors.hpp"
#include "radlat/io.hpp"
#include "radlat/relation.hpp"

using namespace radlat;

namespace {

const std::vector<cli::FuzzInstance>& instances() {
    static const auto v = [] {
        cli::RunConfig cfg;
        cfg.seed = 3;
        cfg.fuzz_count = 80;
        return cli::fuzz_instances(cfg);
    }();
    return v;
}

Relation rel(const LatticePtr& L, std::vector<std::pair<Elem, Elem>> pairs) { return validate_relation(L, pairs); }

bool same(const Relation& R, const oracle::Matrix& m) { return oracle::matrix(R) == m; }

} // namespace

TEST_CASE("validate_relation") {
    auto C = chain(3);
    CHECK(rel(C, {}) == Relation::identity(C));
    CHECK(rel(C, {{0, 1}, {1, 2}})(0, 1));
    CHECK_THROWS_AS(rel(C, {{2, 0}}), NotStrongerThanOrder);
    CHECK_THROWS_AS(validate_relation(C, {{0, 1}}, false), InputError);
}

TEST_CASE("join-shift and meet-shift laws on small examples") {
    auto C = chain(3);
    CHECK(is_h_relation(rel(C, {{0, 1}, {1, 2}})).ok);
    CHECK(is_h_relation(Relation::identity(boolean_lattice(3))).ok);
    auto B = boolean_lattice(2);
    auto v = is_h_relation(rel(B, {{0, 1}}));
    CHECK_FALSE(v.ok);
    CHECK(v.witness == std::vector<Elem>{0, 1, 2});

    CHECK(is_dual_h_relation(Relation::identity(C)).ok);
    auto d = is_dual_h_relation(rel(C, {{0, 2}}));
    CHECK_FALSE(d.ok);
    CHECK(d.witness == std::vector<Elem>{0, 2, 1});
    CHECK(is_dual_h_relation(Relation::full_order(B)).ok);
}

TEST_CASE("shift laws agree with the definitional oracle on fuzzed relations") {
    for (const auto& f : instances()) {
        CHECK(is_h_relation(f.seeds).ok == oracle::h_relation(f.seeds));
        CHECK(is_dual_h_relation(f.seeds).ok == oracle::dual_h_relation(f.seeds));
        CHECK(oracle::h_relation(f.h));
        CHECK(oracle::dual_h_relation(f.dual_h));
        CHECK(h_closure(f.h) == f.h);
        CHECK(dual_h_closure(f.dual_h) == f.dual_h);
        // The closure only adds pairs.
        for (Elem a = 0; a < f.seeds.size(); ++a)
            for (Elem b = 0; b < f.seeds.size(); ++b)
                if (f.seeds(a, b)) CHECK((f.h(a, b) && f.dual_h(a, b)));
    }
}

TEST_CASE("h_closure examples") {
    auto C = chain(3);
    CHECK(h_closure(rel(C, {{0, 2}})) == rel(C, {{0, 2}, {1, 2}}));
    CHECK(h_closure(Relation::identity(C)) == Relation::identity(C));
}

TEST_CASE("complement relations") {
    auto C = chain(3);
    auto R = rel(C, {{0, 1}});
    auto cl = comp_left(R);
    CHECK_FALSE(cl(0, 1));
    CHECK(cl(1, 2));
    CHECK(comp_left(Relation::identity(C)) == Relation::full_order(C));
    CHECK(comp_left(Relation::full_order(C)) == Relation::identity(C));
    for (const auto& f : instances()) {
        CHECK(same(comp_left(f.seeds), oracle::comp_left(f.seeds)));
        CHECK(same(comp_right(f.seeds), oracle::comp_right(f.seeds)));
    }
}

TEST_CASE("half relations agree with the interval oracle") {
    auto C = chain(3);
    CHECK(rel_up(rel(C, {{0, 1}, {1, 2}}))(0, 2));
    CHECK_FALSE(rel_up(Relation::identity(C))(0, 1));
    for (const auto& f : instances()) {
        CHECK(same(rel_up(f.seeds), oracle::up(f.seeds)));
        CHECK(same(rel_lo(f.seeds), oracle::lo(f.seeds)));
        CHECK(rel_up(f.h) == rel_tri_right(f.h));
        CHECK(rel_lo(f.dual_h) == rel_tri_left(f.dual_h));
    }
}

TEST_CASE("series closure agrees with Floyd-Warshall and chain search") {
    auto C = chain(3);
    auto R = rel(C, {{0, 1}, {1, 2}});
    CHECK(rel_tri_right(R)(0, 2));
    CHECK(series_witness(R, 0, 2, Direction::ascending).chain == std::vector<Elem>{0, 1, 2});
    CHECK_THROWS_AS(series_witness(Relation::identity(C), 0, 2, Direction::ascending), NoWitness);
    for (const auto& f : instances()) {
        const Relation& S = f.seeds;
        Relation tri = rel_tri_right(S);
        CHECK(same(tri, oracle::closure(S)));
        CHECK(rel_tri_left(S) == tri);
        CHECK(rel_tri_right(tri) == tri);
        for (Elem a = 0; a < S.size(); ++a)
            for (Elem b = 0; b < S.size(); ++b) {
                CHECK(tri(a, b) == oracle::chain_exists(S, a, b));
                if (tri(a, b) && a != b) {
                    CHECK(witness_valid(S, series_witness(S, a, b, Direction::ascending), a, b));
                    CHECK(witness_valid(S, series_witness(S, a, b, Direction::descending), a, b));
                }
            }
    }
}

TEST_CASE("radicals") {
    auto C = chain(3);
    CHECK(find_radicals(rel(C, {{0, 1}})) == std::vector<Elem>{1});
    CHECK(find_radicals(Relation::identity(C)) == std::vector<Elem>{0});
    CHECK(find_radicals(Relation::full_order(C)) == std::vector<Elem>{2});
    CHECK(radical_r_order(Relation::full_order(C)) == 2);
    CHECK_THROWS_AS(radical_r_order(rel(C, {{0, 1}, {1, 2}})), NotAnROrder);
    auto B = boolean_lattice(2);
    Relation tri = rel_tri_right(h_closure(rel(B, {{0, 1}})));
    CHECK(find_radicals(tri) == std::vector<Elem>{radical_r_order(tri)});
    for (const auto& f : instances()) {
        CHECK(find_radicals(f.seeds) == oracle::radicals(f.seeds));
        CHECK(find_dual_radicals(f.seeds) == oracle::dual_radicals(f.seeds));
        Relation t = rel_tri_right(f.h);
        auto rs = find_radicals(t);
        REQUIRE(rs.size() == 1);
        std::vector<Elem> below;
        for (Elem x = 0; x < t.size(); ++x)
            if (t(t.lattice().bottom(), x)) below.push_back(x);
        CHECK(rs[0] == t.lattice().join_all(below));
        CHECK(radical_r_order(t) == rs[0]);
    }
}

TEST_CASE("restriction to an interval") {
    auto C4 = chain(4);
    CHECK(restrict_to_interval(Relation::full_order(C4), 1, 2) == Relation::full_order(chain(2)));
    auto C = chain(3);
    CHECK(restrict_to_interval(rel(C, {{0, 2}}), 0, 1).strict_pair_count() == 0);
    for (const auto& f : instances()) {
        const Lattice& L = f.h.lattice();
        CHECK(restrict_to_interval(f.h, L.bottom(), L.top()) == f.h);
    }
    CHECK_THROWS_AS(restrict_to_interval(Relation::identity(boolean_lattice(2)), 1, 2), NotComparable);
}

TEST_CASE("identity reports pass on closures and catch a corrupted half relation") {
    for (const auto& f : instances()) {
        CHECK_MESSAGE(check_theorem_inf(f.h).passed(), f.tag, check_theorem_inf(f.h).first_failure());
        CHECK_MESSAGE(check_theorem_inf(f.dual_h).passed(), f.tag);
        CHECK(check_radical_structure(f.h).passed());
        CHECK(check_radical_structure(f.dual_h).passed());
        CHECK(check_duality(f.seeds).passed());
    }
    CHECK(check_theorem_inf(Relation::identity(chain(4))).passed());

    // Negative control: corrupt one entry of the half relation.
    auto B = boolean_lattice(2);
    Relation R = h_closure(rel(B, {{0, 1}}));
    auto m = rel_up(R).matrix();
    m[0 * 4 + 3] ^= 1;
    Relation bad = Relation::from_matrix(B, m);
    auto rep = check_theorem_inf(R, &bad);
    CHECK_FALSE(rep.passed());
    const Clause* c = rep.find("inf.join.half_eq_closure");
    REQUIRE(c);
    CHECK_FALSE(c->pass());
}

TEST_CASE("automorphisms fix the closure radical") {
    auto B = boolean_lattice(2);
    auto R = h_closure(rel(B, {{0, 1}, {0, 2}}));
    auto rep = check_automorphism_invariance(R);
    CHECK(rep.passed());
    const Clause* c = rep.find("aut.join.fixes_radical");
    REQUIRE(c);
    CHECK(c->checked == 2);
    // Breaking the symmetry leaves only the identity.
    auto asym = check_automorphism_invariance(h_closure(rel(B, {{0, 1}})));
    CHECK(asym.passed());
    CHECK(asym.find("aut.join.fixes_radical")->checked == 1);
    for (const auto& f : instances()) CHECK(check_automorphism_invariance(f.h).passed());
}

TEST_CASE("dualisation") {
    for (const auto& f : instances()) {
        Relation d = dualize(f.seeds);
        CHECK(is_h_relation(f.seeds).ok == is_dual_h_relation(d).ok);
        CHECK(dualize_onto(d, f.seeds.lattice_ptr()) == f.seeds);
    }
}

TEST_CASE("relation text format") {
    auto C = chain(3);
    auto R = rel(C, {{0, 2}});
    auto back = parse_relation(write_relation(R, "r"), C);
    CHECK(back.relation == R);
    CHECK(back.name == "r");
    CHECK_THROWS_AS(parse_relation("relation r over C3\npair 2 0\n", C, "bad.rel"), NotStrongerThanOrder);
    CHECK_THROWS_AS(parse_relation("relation r over other\n", C), InputError);
}

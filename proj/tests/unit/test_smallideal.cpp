#include <doctest.h>

#include "../oracles.hpp"
#include "radlat/cli/fuzz.hpp"
#include "radlat/smallideal.hpp"

using namespace radlat;

namespace {

// x v k = top forces k = top, with joins taken inside [lo,hi].
bool small_in(const Lattice& L, Elem lo, Elem hi, Elem x) {
    if (lo == hi) return true;
    for (Elem k = 0; k < L.size(); ++k)
        if (L.leq(lo, k) && L.leq(k, hi) && k != hi && oracle::join(L, x, k) == hi) return false;
    return true;
}

Elem oracle_rad_k(const Lattice& L) {
    Elem m = L.top();
    for (Elem c = 0; c < L.size(); ++c) {
        if (c == L.top()) continue;
        bool coatom = true;
        for (Elem y = 0; y < L.size(); ++y)
            if (y != c && y != L.top() && L.leq(c, y)) coatom = false;
        if (coatom) m = oracle::meet(L, m, c);
    }
    return m;
}

std::vector<LatticePtr> lattices() {
    std::vector<LatticePtr> v = {chain(1), chain(2), chain(3), chain(8), boolean_lattice(1), boolean_lattice(4), m3(), n5()};
    cli::RunConfig cfg;
    cfg.seed = 5;
    for (const auto& L : cli::fuzz_distributive(cfg, 30)) v.push_back(L);
    cli::Rng rng(9);
    for (int i = 0; i < 30; ++i) v.push_back(cli::random_lattice(rng, 32));
    return v;
}

} // namespace

TEST_CASE("small elements on standard lattices") {
    auto C3 = chain(3);
    CHECK(is_small(*C3, 1));
    CHECK_FALSE(is_small(*C3, 2));
    CHECK(is_small(*chain(1), 0));
    for (int k = 1; k <= 5; ++k) CHECK(small_elements(*boolean_lattice(k)) == std::vector<Elem>{0});
    CHECK(s_a(*chain(4)) == 2);
    CHECK(s_a(*boolean_lattice(3)) == 0);
    CHECK(s_a(*chain(1)) == 0);
    CHECK(rel_sm(C3).pairs() == std::vector<std::pair<Elem, Elem>>{{0, 1}});
    CHECK(rel_sm(boolean_lattice(2)) == Relation::identity(boolean_lattice(2)));
    CHECK(rel_sm(chain(1)) == Relation::identity(chain(1)));
    CHECK(r_sm_tri(C3) == 1);
    for (int n = 2; n <= 8; ++n) CHECK(r_sm_tri(chain(n)) == n - 2);
    CHECK(r_sm_tri(boolean_lattice(3)) == 0);
    CHECK(rad_k(*C3) == 1);
    CHECK(rad_k(*boolean_lattice(3)) == 0);
    CHECK(rad_k(*chain(1)) == 0);
}

TEST_CASE("small elements and the small relation agree with the oracle") {
    for (const auto& L : lattices()) {
        auto R = rel_sm(L);
        for (Elem x = 0; x < L->size(); ++x) CHECK(is_small(*L, x) == small_in(*L, L->bottom(), L->top(), x));
        for (Elem I = 0; I < L->size(); ++I)
            for (Elem J = 0; J < L->size(); ++J)
                CHECK(R(I, J) == (L->leq(I, J) && small_in(*L, I, L->top(), J)));
        CHECK(rad_k(*L) == oracle_rad_k(*L));
        CHECK(oracle::h_relation(R));
    }
}

TEST_CASE("structure reports pass on every sampled lattice") {
    for (int n = 1; n <= 8; ++n) CHECK(check_sm_structure(chain(n)).passed());
    for (int k = 0; k <= 5; ++k) CHECK(check_sm_structure(boolean_lattice(k)).passed());
    for (const auto& L : lattices()) {
        CHECK_MESSAGE(check_sm_structure(L).passed(), L->name(), " ", check_sm_structure(L).first_failure());
        CHECK_MESSAGE(check_c4(L).passed(), L->name(), " ", check_c4(L).first_failure());
        CHECK_MESSAGE(check_t61(L).passed(), L->name());
    }
}

TEST_CASE("quotient by the small join") {
    auto rep = check_t61(chain(3));
    CHECK(rep.passed());
    CHECK(rep.find("t61.quotient_no_small")->checked == 0);
    CHECK(rep.notes().count("t61.hypothesis[C3]") == 1);
    auto b = check_t61(boolean_lattice(3));
    CHECK(b.find("t61.quotient_no_small")->checked == 1);
}

TEST_CASE("model algebras have only the zero small ideal") {
    CHECK(check_ccr_corollary(enumerate_algebras(4, 3)).passed());
}

TEST_CASE("the small family on a three-element chain") {
    auto rep = check_r3_demo();
    CHECK_MESSAGE(rep.passed(), rep.first_failure());
    auto f = small_family(Lattice::build(3, {{0, 1}, {1, 2}}, PairMode::covers, {"0", "a", "1"}, "C3"));
    auto fr = check_relation_function(f);
    const Clause* c = fr.find("family.ideal");
    REQUIRE(c);
    CHECK_FALSE(c->pass());
    CHECK(c->witness.find("ideal [0,a] of [0,1]: pair (0,a)") != std::string::npos);
    CHECK(fr.find("family.isomorphism")->pass());
    CHECK(fr.find("family.quotient")->pass());
}

TEST_CASE("analysis bundle") {
    auto a = analyze_small(chain(3));
    CHECK(a.small_set == std::vector<Elem>{0, 1});
    CHECK(a.s_a == 1);
    CHECK(a.r_sm_tri == 1);
    CHECK(a.rad_k == 1);
}

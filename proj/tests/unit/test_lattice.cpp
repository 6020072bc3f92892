#include <doctest.h>

#include "../oracles.hpp"
#include "radlat/caps.hpp"
#include "radlat/cli/fuzz.hpp"
#include "radlat/errors.hpp"
#include "radlat/io.hpp"
#include "radlat/lattice.hpp"

using namespace radlat;

namespace {

std::vector<LatticePtr> sample_lattices() {
    std::vector<LatticePtr> v = {chain(1), chain(2), chain(5), boolean_lattice(0), boolean_lattice(3), m3(), n5()};
    cli::Rng rng(11);
    for (int i = 0; i < 40; ++i) v.push_back(cli::random_lattice(rng, 32));
    return v;
}

} // namespace

TEST_CASE("join and meet tables agree with the least upper bound oracle") {
    for (const auto& L : sample_lattices())
        for (Elem a = 0; a < L->size(); ++a)
            for (Elem b = 0; b < L->size(); ++b) {
                CHECK(L->join(a, b) == oracle::join(*L, a, b));
                CHECK(L->meet(a, b) == oracle::meet(*L, a, b));
            }
}

TEST_CASE("covers generate exactly the order") {
    for (const auto& L : sample_lattices()) {
        auto again = Lattice::build(L->size(), L->covers(), PairMode::covers);
        CHECK(again->same_order(*L));
        for (auto [a, b] : L->covers()) {
            CHECK(L->lt(a, b));
            for (Elem x = 0; x < L->size(); ++x) CHECK_FALSE((L->lt(a, x) && L->lt(x, b)));
        }
    }
}

TEST_CASE("standard lattices") {
    CHECK(boolean_lattice(3)->size() == 8);
    CHECK(boolean_lattice(3)->leq(1, 3));
    CHECK_FALSE(boolean_lattice(3)->leq(1, 2));
    CHECK(chain(4)->size() == 4);
    CHECK(chain(4)->rank(3) == 3);
    CHECK(boolean_lattice(3)->rank(7) == 3);
    CHECK(boolean_lattice(0)->size() == 1);
    CHECK(m3()->atoms() == std::vector<Elem>{1, 2, 3});
    CHECK(n5()->coatoms() == std::vector<Elem>{2, 3});
    CHECK(chain(1)->atoms().empty());
    CHECK(chain(1)->coatoms().empty());
    CHECK(lattice_law_violation(*n5()).empty());
}

TEST_CASE("distributivity with witness") {
    for (const auto& L : sample_lattices()) {
        auto d = is_distributive(*L);
        CHECK(d.distributive == oracle::distributive(*L));
        if (d.witness) {
            auto [a, b, c] = *d.witness;
            CHECK(L->meet(L->join(a, b), c) != L->join(L->meet(a, c), L->meet(b, c)));
        }
    }
    CHECK_FALSE(is_distributive(*m3()).distributive);
    CHECK_FALSE(is_distributive(*n5()).distributive);
    CHECK(is_distributive(*boolean_lattice(4)).distributive);
}

TEST_CASE("automorphisms agree with the all-permutations oracle") {
    for (const auto& L : sample_lattices()) {
        if (L->size() > 8) continue;
        auto got = automorphisms(*L);
        auto want = oracle::automorphisms(*L);
        CHECK(got == want);
    }
    CHECK(automorphisms(*boolean_lattice(3)).size() == 6);
    CHECK(automorphisms(*m3()).size() == 6);
    CHECK(automorphisms(*chain(6)).size() == 1);
    CHECK(automorphisms(*boolean_lattice(4)).size() == 24);
}

TEST_CASE("dual lattice reverses the order and is an involution") {
    for (const auto& L : sample_lattices()) {
        auto D = dual_lattice(*L);
        for (Elem a = 0; a < L->size(); ++a)
            for (Elem b = 0; b < L->size(); ++b) CHECK(D->leq(a, b) == L->leq(b, a));
        CHECK(dual_lattice(*D)->same_order(*L));
    }
}

TEST_CASE("intervals and sublattices") {
    auto B = boolean_lattice(3);
    CHECK(B->interval(1, 7) == std::vector<Elem>{1, 3, 5, 7});
    CHECK_THROWS_AS(B->interval(1, 2), NotComparable);
    std::vector<Elem> from;
    auto S = B->sublattice(1, 7, &from);
    CHECK(from == std::vector<Elem>{1, 3, 5, 7});
    CHECK(S->same_order(*boolean_lattice(2)));
}

TEST_CASE("build rejects malformed input") {
    CHECK_THROWS_AS(Lattice::build(2, {{0, 1}, {1, 0}}, PairMode::leq), NotAPoset);
    CHECK_THROWS_AS(Lattice::build(3, {{0, 1}, {0, 2}}, PairMode::covers), NotALattice);
    CHECK_THROWS_AS(Lattice::build(2, {{0, 5}}, PairMode::covers), InputError);
    CHECK_THROWS_AS(boolean_lattice(20), SizeLimitExceeded);
    // Four elements with two incomparable middles both below two tops.
    CHECK_THROWS_AS(Lattice::build(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, PairMode::covers),
                    NotALattice);
}

TEST_CASE("lattice text format round-trips and reports line numbers") {
    for (const auto& L : sample_lattices()) {
        auto again = parse_lattice(write_lattice(*L));
        CHECK(again->same_order(*L));
        CHECK(again->labels() == L->labels());
    }
    auto L = parse_lattice("lattice c3 3\n# comment\n\ncover 0 1\ncover 1 2\nlabel 1 a\n");
    CHECK(L->name() == "c3");
    CHECK(L->label(1) == "a");
    try {
        parse_lattice("lattice x 2\ncover 0 1\nbogus 1 2\n", "f.lat");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("f.lat:3:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_lattice("lattice x 2\nleq 1 0\nleq 0 1\n"), NotAPoset);
}

TEST_CASE("DOT export") {
    std::string dot = to_dot(*chain(3), {{1, "orange"}});
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("fillcolor") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
}

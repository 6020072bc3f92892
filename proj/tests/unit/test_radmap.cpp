#include <doctest.h>

#include "radlat/radmap.hpp"

using namespace radlat;

namespace {

const Universe& U() {
    static const Universe u = enumerate_algebras(4, 3);
    return u;
}

Property no_one_blocks() {
    return Property::custom("no-1-block", [](const Blocks& b) {
        for (int x : b)
            if (x == 1) return false;
        return true;
    });
}

} // namespace

TEST_CASE("property radicals satisfy the axioms") {
    for (const char* s : {"comm", "one", "simple", "dim<=4", "blockdim<=2"}) {
        Property P = parse_property(s);
        auto right = check_axioms(RadicalMap::from_property(P, true), U());
        CHECK_MESSAGE(right.passed(), s, " ", right.first_failure());
        auto left = check_axioms(RadicalMap::from_property(P, false), U());
        CHECK_MESSAGE(left.passed(), s, " ", left.first_failure());
        CHECK_MESSAGE(check_property_radicals(P, U()).passed(), s);
    }
    CHECK(check_axioms(RadicalMap::zero(), U()).passed());
    CHECK(check_axioms(RadicalMap::identity(), U()).passed());
}

TEST_CASE("the one-block map breaks quotient monotonicity") {
    auto rep = check_axioms(one_block_map(), U());
    CHECK_FALSE(rep.passed());
    const Clause* c = rep.find("axioms.quotient_monotone");
    REQUIRE(c);
    CHECK_FALSE(c->pass());
    CHECK(c->witness.find("A=[1,2] I={block#0}") != std::string::npos);
    CHECK(c->witness.find("p(R(A))=[2] R(A/I)=[]") != std::string::npos);
    CHECK_THROWS_AS(check_correspondence(one_block_map(), U()), AxiomsNotSatisfied);
}

TEST_CASE("Rad and Sem classes") {
    Universe cu = close_universe(U());
    auto comm_r = RadicalMap::from_property(parse_property("comm"), true);
    CHECK(first_disagreement(rad_of(comm_r, U()), parse_property("comm"), cu) == std::nullopt);
    CHECK(first_disagreement(sem_of(comm_r, U()), no_one_blocks(), cu) == std::nullopt);
    CHECK(first_disagreement(rad_of(RadicalMap::zero(), U()), parse_property("zero"), cu) == std::nullopt);
    CHECK(first_disagreement(sem_of(RadicalMap::zero(), U()), parse_property("all"), cu) == std::nullopt);
    CHECK(first_disagreement(rad_of(RadicalMap::identity(), U()), parse_property("all"), cu) == std::nullopt);
    CHECK(first_disagreement(sem_of(RadicalMap::identity(), U()), parse_property("zero"), cu) == std::nullopt);
    for (const char* s : {"comm", "one", "dim<=4"}) {
        Property P = parse_property(s);
        auto r = RadicalMap::from_property(P, true);
        CHECK(first_disagreement(rad_of(r, U()), G(P), cu) == std::nullopt);
        CHECK(first_disagreement(sem_of(r, U()), NG(P), cu) == std::nullopt);
        auto l = RadicalMap::from_property(P, false);
        CHECK(first_disagreement(rad_of(l, U()), dNG(P), cu) == std::nullopt);
        CHECK(first_disagreement(sem_of(l, U()), dG(P), cu) == std::nullopt);
    }
}

TEST_CASE("correspondence") {
    for (auto m : {RadicalMap::from_property(parse_property("comm"), true), RadicalMap::zero(),
                   RadicalMap::identity(), RadicalMap::from_property(parse_property("one"), false)}) {
        auto rep = check_correspondence(m, U());
        CHECK_MESSAGE(rep.passed(), m.name(), " ", rep.first_failure());
    }
}

TEST_CASE("table maps") {
    auto t = parse_radical_table("# comment\n1,2 -> 1\n\n1,1,2 -> 1,1\n1 -> 1\n1,1 -> 1,1\n", "t.txt");
    CHECK(t.size() == 4);
    CHECK(t.at({1, 2}) == Blocks{1});
    auto m = RadicalMap::from_table("t", t);
    CHECK(m(parse_algebra("2,1")) == 0b10);
    CHECK(m(parse_algebra("3")) == 0);
    try {
        parse_radical_table("1,2 -> 1\n1,2 => 1\n", "t.txt");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("t.txt:2") != std::string::npos);
    }
    CHECK_THROWS_AS(RadicalMap::from_table("bad", {{{1, 2}, {3}}}), InputError);
    CHECK_THROWS_AS(RadicalMap::from_table("asym", {{{1, 1}, {1}}}), NotEquivariant);
}

TEST_CASE("radical map specs") {
    CHECK(parse_radical_map("zero").name() == "zero");
    CHECK(parse_radical_map("identity")(parse_algebra("1,2")) == 0b11);
    CHECK(parse_radical_map("prop:comm:right")(parse_algebra("1,2")) == 0b01);
    CHECK(parse_radical_map("prop:one:left")(parse_algebra("1,2")) == 0b10);
    CHECK_THROWS_AS(parse_radical_map("prop:comm:up"), InputError);
    CHECK_THROWS_AS(parse_radical_map("nonsense"), InputError);
}

TEST_CASE("relation families") {
    auto fc = algebra_family(parse_property("comm"), U());
    auto rep = check_relation_function(fc);
    CHECK_MESSAGE(rep.passed(), rep.first_failure());
    auto fi = identity_family(U());
    CHECK(check_relation_function(fi).passed());
    // The recovered class of the identity family is the zero algebra alone.
    for (std::size_t m = 0; m < fi.algebras.size(); ++m) {
        const Relation& R = fi.relations[m];
        CHECK(R(R.lattice().bottom(), R.lattice().top()) == fi.algebras[m].is_zero());
    }
    for (const char* s : {"one", "dim<=4", "simple"})
        CHECK_MESSAGE(check_relation_function(algebra_family(parse_property(s), U())).passed(), s);
}

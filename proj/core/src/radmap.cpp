#include "radlat/radmap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "radlat/io.hpp"

namespace radlat {

namespace {

bool submask(Mask a, Mask b) { return (a & ~b) == 0; }

Blocks sorted(Blocks b) {
    std::sort(b.begin(), b.end());
    return b;
}

// order[j] = index in `b` of the j-th block of the canonical ordering.
std::vector<int> canonical_order(const Blocks& b) {
    std::vector<int> order(b.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return b[x] < b[y]; });
    return order;
}

Mask permute_mask(Mask m, const std::vector<int>& to) {
    Mask out = 0;
    for (int i = 0; i < int(to.size()); ++i)
        if (m >> i & 1) out |= Mask(1) << to[i];
    return out;
}

template <class F>
void for_masks(Mask full, F f) {
    for (Mask m = 0;; ++m) {
        f(m);
        if (m == full) break;
    }
}

// Size-preserving bijections of A's blocks onto themselves.
template <class F>
void for_block_symmetries(const Blocks& b, F f) {
    std::vector<int> p(b.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < int(b.size()) && ok; ++i) ok = b[p[i]] == b[i];
        if (ok) f(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

// ------------------------------------------------------------ maps

RadicalMap RadicalMap::from_property(const Property& P, bool right) {
    std::string name = "prop:" + P.str() + (right ? ":right" : ":left");
    return RadicalMap(std::move(name), [P, right](const Blocks& b) {
        ModelAlgebra A(b);
        return right ? radical_tri(A, P).mask : dual_radical_tri(A, P).mask;
    });
}

RadicalMap RadicalMap::from_table(std::string name, const std::map<Blocks, Blocks>& table) {
    std::map<Blocks, std::set<int>> sizes;
    for (const auto& [from, to] : table) {
        Blocks a = sorted(from), s = sorted(to);
        if (!std::includes(a.begin(), a.end(), s.begin(), s.end()))
            throw InputError("table entry " + ModelAlgebra(a).text() + " -> " + ModelAlgebra(s).text() +
                             " is not a sub-multiset");
        for (int v : s) {
            auto in_a = std::count(a.begin(), a.end(), v), in_s = std::count(s.begin(), s.end(), v);
            if (in_a != in_s)
                throw NotEquivariant("table entry " + ModelAlgebra(a).text() + " -> " + ModelAlgebra(s).text() +
                                     " selects some but not all blocks of size " + std::to_string(v));
        }
        sizes[a] = std::set<int>(s.begin(), s.end());
    }
    return RadicalMap(std::move(name), [sizes](const Blocks& b) {
        auto it = sizes.find(sorted(b));
        Mask m = 0;
        if (it == sizes.end()) return m;
        for (int i = 0; i < int(b.size()); ++i)
            if (it->second.count(b[i])) m |= Mask(1) << i;
        return m;
    });
}

RadicalMap RadicalMap::zero() {
    return RadicalMap("zero", [](const Blocks&) { return Mask(0); });
}

RadicalMap RadicalMap::identity() {
    return RadicalMap("identity", [](const Blocks& b) { return ModelAlgebra(b).full(); });
}

RadicalMap one_block_map() {
    return RadicalMap("has-1-block", [](const Blocks& b) {
        bool one = std::find(b.begin(), b.end(), 1) != b.end();
        return one ? ModelAlgebra(b).full() : Mask(0);
    });
}

std::map<Blocks, Blocks> parse_radical_table(const std::string& text, const std::string& source) {
    std::map<Blocks, Blocks> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto arrow = line.find("->");
        auto where = source + ":" + std::to_string(no) + ": ";
        if (arrow == std::string::npos) throw ParseError(where + "expected `multiset -> sub-multiset`");
        try {
            Blocks a = parse_algebra(trim(line.substr(0, arrow))).canonical().blocks();
            Blocks s = parse_algebra(trim(line.substr(arrow + 2))).canonical().blocks();
            if (!out.emplace(a, s).second) throw ParseError(where + "duplicate entry for " + ModelAlgebra(a).text());
        } catch (const InputError& e) {
            throw ParseError(where + e.what());
        }
    }
    return out;
}

RadicalMap parse_radical_map(const std::string& spec) {
    if (spec == "zero") return RadicalMap::zero();
    if (spec == "identity") return RadicalMap::identity();
    if (spec == "has-1-block") return one_block_map();
    if (spec.rfind("prop:", 0) == 0) {
        auto last = spec.rfind(':');
        std::string dir = spec.substr(last + 1);
        if (last <= 4 || (dir != "right" && dir != "left"))
            throw InputError("radical map '" + spec + "': expected prop:<expr>:right or prop:<expr>:left");
        return RadicalMap::from_property(parse_property(spec.substr(5, last - 5)), dir == "right");
    }
    if (spec.rfind("table:", 0) == 0) {
        std::string path = spec.substr(6);
        return RadicalMap::from_table("table:" + path, parse_radical_table(read_file(path), path));
    }
    throw InputError("radical map '" + spec + "': expected prop:<expr>:<dir>, table:<file>, zero or identity");
}

// ------------------------------------------------------------ axioms

Property rad_of(const RadicalMap& R, const Universe& U) {
    std::set<Blocks> members;
    for (const auto& A : U)
        if (R(A) == A.full()) members.insert(A.canonical().blocks());
    return Property::member_of("Rad[" + R.name() + "]", members);
}

Property sem_of(const RadicalMap& R, const Universe& U) {
    std::set<Blocks> members;
    for (const auto& A : U)
        if (R(A) == 0) members.insert(A.canonical().blocks());
    return Property::member_of("Sem[" + R.name() + "]", members);
}

VerdictReport check_axioms(const RadicalMap& R, const Universe& U0) {
    VerdictReport rep("axioms");
    Universe U = close_universe(U0);
    if (U.size() != U0.size())
        rep.note("axioms.universe", "closed under ideals and quotients: " + std::to_string(U0.size()) + " -> " +
                                        std::to_string(U.size()) + " algebras");
    for (const auto& A : U) {
        const std::string at = "A=" + A.text();
        const Mask full = A.full();
        const Mask r = R(A);
        auto show = [](const ModelAlgebra& B, Mask m) { return B.part(m).text(); };
        if (!rep.check("axioms.valid_ideal", submask(r, full), [&] { return at; })) continue;
        // Every isomorphism onto a reordering of A.
        std::vector<int> p(A.count());
        std::iota(p.begin(), p.end(), 0);
        do {
            Blocks b(A.count());
            for (int i = 0; i < A.count(); ++i) b[p[i]] = A.blocks()[i];
            ModelAlgebra B(b);
            Mask img = permute_mask(r, p), rb = R(B);
            rep.check("axioms.equivariance", img == rb, [&] {
                return at + " B=" + B.text() + ": image of R(A) " + IdealRef{B, img}.text() + ", R(B) " +
                       IdealRef{B, rb}.text();
            });
        } while (std::next_permutation(p.begin(), p.end()));
        for_masks(full, [&](Mask I) {
            ModelAlgebra Q = A.quotient(I);
            Mask img = compress(r & ~I, full & ~I), rq = R(Q);
            rep.check("axioms.quotient_monotone", submask(img, rq), [&] {
                return at + " I=" + IdealRef{A, I}.text() + ": p(R(A))=" + show(Q, img) + " R(A/I)=" + show(Q, rq);
            });
            Mask ri = expand(R(A.part(I)), I);
            rep.check("axioms.ideal_monotone", submask(ri, r), [&] {
                return at + " I=" + IdealRef{A, I}.text() + ": R(I)=" + show(A, ri) + " R(A)=" + show(A, r);
            });
        });
        ModelAlgebra Q = A.quotient(r);
        Mask rq = R(Q);
        rep.check("axioms.quotient_annihilated", rq == 0, [&] { return at + ": R(A/R(A))=" + show(Q, rq); });
        ModelAlgebra S = A.part(r);
        Mask rs = R(S);
        rep.check("axioms.idempotent", rs == S.full(), [&] { return at + ": R(R(A))=" + show(S, rs); });
    }
    auto ok = [&](const char* id) { const Clause* c = rep.find(id); return !c || c->pass(); };
    bool eq = ok("axioms.equivariance") && ok("axioms.valid_ideal");
    if (eq && ok("axioms.quotient_monotone")) {
        auto v = is_upper_stable(rad_of(R, U), U);
        rep.check("axioms.rad_upper_stable", v.ok, [&] { return v.text(); });
    } else {
        rep.skip("axioms.rad_upper_stable");
    }
    if (eq && ok("axioms.ideal_monotone")) {
        auto v = is_lower_stable(sem_of(R, U), U);
        rep.check("axioms.sem_lower_stable", v.ok, [&] { return v.text(); });
    } else {
        rep.skip("axioms.sem_lower_stable");
    }
    return rep;
}

VerdictReport check_correspondence(const RadicalMap& R, const Universe& U0) {
    Universe U = close_universe(U0);
    VerdictReport ax = check_axioms(R, U);
    if (!ax.passed()) throw AxiomsNotSatisfied(R.name() + ": " + ax.first_failure());
    VerdictReport rep("correspondence");
    Property P1 = rad_of(R, U), P2 = sem_of(R, U);
    auto d1 = first_disagreement(G(P1), P1, U);
    rep.check("correspondence.rad_generated", !d1, [&] { return "at " + d1->text(); });
    auto d2 = first_disagreement(dG(P2), P2, U);
    rep.check("correspondence.sem_generated", !d2, [&] { return "at " + d2->text(); });
    for (const auto& A : U) {
        const std::string at = "A=" + A.text();
        Mask r = R(A);
        try {
            Mask r1 = radical_tri(A, P1).mask;
            rep.check("correspondence.radical_from_rad", r1 == r,
                      [&] { return at + " R(A)=" + IdealRef{A, r}.text() + " from Rad " + IdealRef{A, r1}.text(); });
        } catch (const NoUniqueRadical& e) {
            rep.check("correspondence.radical_from_rad", false, [&] { return at + " " + e.what(); });
        }
        try {
            Mask r2 = dual_radical_tri(A, P2).mask;
            rep.check("correspondence.radical_from_sem", r2 == r,
                      [&] { return at + " R(A)=" + IdealRef{A, r}.text() + " from Sem " + IdealRef{A, r2}.text(); });
        } catch (const NoUniqueRadical& e) {
            rep.check("correspondence.radical_from_sem", false, [&] { return at + " " + e.what(); });
        }
    }
    // Property -> map -> property and back.
    auto back1 = first_disagreement(rad_of(RadicalMap::from_property(P1, true), U), P1, U);
    rep.check("correspondence.rad_round_trip", !back1, [&] { return "at " + back1->text(); });
    auto back2 = first_disagreement(sem_of(RadicalMap::from_property(P2, false), U), P2, U);
    rep.check("correspondence.sem_round_trip", !back2, [&] { return "at " + back2->text(); });
    return rep;
}

VerdictReport check_property_radicals(const Property& P, const Universe& U0) {
    VerdictReport rep("radical-maps");
    Universe U = close_universe(U0);
    auto same = [&](const std::string& id, const Property& X, const Property& Y) {
        auto d = first_disagreement(X, Y, U);
        rep.check(id, !d, [&] { return X.str() + " vs " + Y.str() + " at " + d->text(); });
    };
    if (is_upper_stable(P, U).ok) {
        RadicalMap R = RadicalMap::from_property(P, true);
        rep.merge(check_axioms(R, U), P.str(), "right.");
        Property rad = rad_of(R, U);
        same("right.rad_is_G", rad, G(P));
        same("right.sem_is_NG", sem_of(R, U), NG(P));
        same("right.rad_is_fixed", G(rad), rad);
    } else {
        for (auto id : {"right.rad_is_G", "right.sem_is_NG", "right.rad_is_fixed"}) rep.skip(id);
        rep.note("right.hypothesis[" + P.str() + "]", "not upper stable");
    }
    if (is_lower_stable(P, U).ok) {
        RadicalMap R = RadicalMap::from_property(P, false);
        rep.merge(check_axioms(R, U), P.str(), "left.");
        same("left.rad_is_dNG", rad_of(R, U), dNG(P));
        Property sem = sem_of(R, U);
        same("left.sem_is_dG", sem, dG(P));
        same("left.sem_is_fixed", dG(sem), sem);
    } else {
        for (auto id : {"left.rad_is_dNG", "left.sem_is_dG", "left.sem_is_fixed"}) rep.skip(id);
        rep.note("left.hypothesis[" + P.str() + "]", "not lower stable");
    }
    return rep;
}

// -------------------------------------------------------- relation families

namespace {

RelationFamily model_family(std::string name, const Universe& U0,
                            const std::function<Relation(const ModelAlgebra&)>& rule) {
    RelationFamily f;
    f.name = std::move(name);
    Universe U = close_universe(U0);
    std::map<Blocks, int> index;
    for (const auto& A0 : U) {
        ModelAlgebra A = A0.canonical();
        if (index.count(A.blocks())) continue;
        index[A.blocks()] = int(f.algebras.size());
        f.algebras.push_back(A);
        f.member_names.push_back(A.text());
        f.relations.push_back(rule(A));
    }
    auto member = [index](const ModelAlgebra& B) { return index.at(B.canonical().blocks()); };
    // Embeds member `c` (canonical form of B) along B's ordering into A.
    auto embed = [&](const ModelAlgebra& B, Mask within, Mask offset) {
        std::vector<int> order = canonical_order(B.blocks());
        std::vector<Elem> map;
        for_masks(B.full(), [&](Mask m) { map.push_back(Elem(expand(permute_mask(m, order), within) | offset)); });
        return map;
    };
    for (int a = 0; a < int(f.algebras.size()); ++a) {
        const ModelAlgebra& A = f.algebras[a];
        for_masks(A.full(), [&](Mask K) {
            ModelAlgebra B = A.part(K);
            f.ideals.push_back({member(B), a, embed(B, K, 0)});
            ModelAlgebra Q = A.quotient(K);
            f.quotients.push_back({member(Q), a, embed(Q, A.full() & ~K, K)});
        });
        for_block_symmetries(A.blocks(), [&](const std::vector<int>& p) {
            std::vector<Elem> map;
            for_masks(A.full(), [&](Mask m) { map.push_back(Elem(permute_mask(m, p))); });
            f.isos.push_back({a, a, std::move(map)});
        });
    }
    std::vector<ModelAlgebra> algs = f.algebras;
    f.subquotient = [algs, member](int m, Elem I, Elem J) { return member(algs[m].subquotient(Mask(J), Mask(I))); };
    f.label = [algs](int m, Elem x) { return IdealRef{algs[m], Mask(x)}.text(); };
    return f;
}

} // namespace

RelationFamily algebra_family(const Property& P, const Universe& U) {
    return model_family("f[" + P.str() + "]", U, [P](const ModelAlgebra& A) { return relation_of_property(A, P); });
}

RelationFamily identity_family(const Universe& U) {
    return model_family("identity", U, [](const ModelAlgebra& A) { return Relation::identity(ideal_lattice(A)); });
}

RelationFamily lattice_family(std::string name, LatticePtr L, const std::function<Relation(LatticePtr)>& rule) {
    RelationFamily f;
    f.name = std::move(name);
    const int n = L->size();
    std::map<std::pair<Elem, Elem>, int> id;
    std::vector<std::vector<Elem>> from;
    std::vector<LatticePtr> subs;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (!L->leq(a, b)) continue;
            std::vector<Elem> fr;
            LatticePtr S = L->sublattice(a, b, &fr);
            id[{a, b}] = int(subs.size());
            f.member_names.push_back("[" + L->label(a) + "," + L->label(b) + "]");
            f.relations.push_back(rule(S));
            subs.push_back(S);
            from.push_back(std::move(fr));
        }
    auto position = [&](int m, Elem x) {
        return Elem(std::find(from[m].begin(), from[m].end(), x) - from[m].begin());
    };
    for (const auto& [ab, m] : id) {
        auto [a, b] = ab;
        for (Elem x : from[m]) {
            int k = id.at({a, x});
            std::vector<Elem> map;
            for (Elem y : from[k]) map.push_back(position(m, y));
            f.ideals.push_back({k, m, std::move(map)});
            int q = id.at({x, b});
            map.clear();
            for (Elem y : from[q]) map.push_back(position(m, y));
            f.quotients.push_back({q, m, std::move(map)});
        }
        for (const auto& perm : automorphisms(*subs[m]))
            f.isos.push_back({m, m, perm});
        for (int j = m + 1; j < int(subs.size()); ++j)
            if (subs[j]->same_order(*subs[m])) {
                std::vector<Elem> map(subs[m]->size());
                std::iota(map.begin(), map.end(), 0);
                f.isos.push_back({m, j, std::move(map)});
            }
    }
    f.subquotient = [id, from](int m, Elem I, Elem J) { return id.at({from[m][I], from[m][J]}); };
    f.label = [L, from](int m, Elem x) { return L->label(from[m][x]); };
    return f;
}

VerdictReport check_relation_function(const RelationFamily& f) {
    VerdictReport rep("relation-function");
    auto transport = [&](const std::string& id, const std::vector<FamilyLink>& links, const char* what) {
        for (const auto& l : links) {
            const Relation& X = f.relations[l.from];
            const Relation& Y = f.relations[l.to];
            for (Elem a = 0; a < X.size(); ++a)
                for (Elem b = 0; b < X.size(); ++b) {
                    if (!X.lattice().leq(a, b)) continue;
                    bool x = X(a, b), y = Y(l.map[a], l.map[b]);
                    rep.check(id, x == y, [&] {
                        return std::string(what) + " " + f.member_names[l.from] + " of " + f.member_names[l.to] +
                               ": pair (" + f.elem_text(l.to, l.map[a]) + "," + f.elem_text(l.to, l.map[b]) +
                               ") inside " + (x ? "1" : "0") + ", ambient " + (y ? "1" : "0");
                    });
                }
        }
    };
    transport("family.isomorphism", f.isos, "copy");
    transport("family.ideal", f.ideals, "ideal");
    transport("family.quotient", f.quotients, "quotient");
    if (!rep.passed()) {
        rep.skip("family.recovered_from_class");
        rep.skip("family.topological_iff_generated");
        rep.note("family.recovery", "not attempted: transport conditions fail");
        return rep;
    }

    std::vector<bool> in_class(f.relations.size());
    std::string names;
    for (std::size_t m = 0; m < f.relations.size(); ++m) {
        const Relation& R = f.relations[m];
        in_class[m] = R(R.lattice().bottom(), R.lattice().top());
        if (in_class[m]) names += (names.empty() ? "" : " ") + f.member_names[m];
    }
    rep.note("family.class", names);
    for (std::size_t m = 0; m < f.relations.size(); ++m) {
        const Relation& R = f.relations[m];
        for (Elem a = 0; a < R.size(); ++a)
            for (Elem b = 0; b < R.size(); ++b) {
                if (!R.lattice().leq(a, b)) continue;
                int q = f.subquotient(int(m), a, b);
                rep.check("family.recovered_from_class", R(a, b) == in_class[q], [&] {
                    return f.member_names[m] + " pair (" + f.elem_text(int(m), a) + "," + f.elem_text(int(m), b) + ")";
                });
            }
    }

    if (f.algebras.empty()) {
        rep.skip("family.topological_iff_generated");
        return rep;
    }
    std::map<Blocks, Blocks> table;
    std::set<Blocks> members;
    for (std::size_t m = 0; m < f.algebras.size(); ++m) {
        auto radicals = find_radicals(f.relations[m]);
        if (radicals.size() != 1) {
            rep.skip("family.topological_iff_generated");
            rep.note("family.radicals", f.member_names[m] + " has " + std::to_string(radicals.size()) + " radicals");
            return rep;
        }
        const ModelAlgebra& A = f.algebras[m];
        table[A.blocks()] = A.part(Mask(radicals[0])).blocks();
        if (in_class[m]) members.insert(A.blocks());
    }
    bool topological = true;
    try {
        topological = check_axioms(RadicalMap::from_table(f.name + "-radical", table), f.algebras).passed();
    } catch (const NotEquivariant&) {
        topological = false;
    }
    Property Pf = Property::member_of("P_f[" + f.name + "]", members);
    bool generated = is_upper_stable(Pf, f.algebras).ok && !first_disagreement(G(Pf), Pf, f.algebras);
    rep.check("family.topological_iff_generated", topological == generated, [&] {
        return std::string("radical map topological=") + (topological ? "1" : "0") + ", class upper stable and fixed=" +
               (generated ? "1" : "0");
    });
    return rep;
}

} // namespace radlat

#include <algorithm>
#include <map>

#include "radlat/cstar.hpp"

namespace radlat {

namespace {

std::string ideal_text(const ModelAlgebra& A, Mask m) { return IdealRef{A, m}.text(); }

bool included(const Property& P, const Property& Q, const Universe& U) {
    for (const auto& A : U)
        if (P(A) && !Q(A)) return false;
    return true;
}

bool submask(Mask a, Mask b) { return (a & ~b) == 0; }

std::string diff_text(const Relation& X, const Relation& Y) {
    for (int a = 0; a < X.size(); ++a)
        for (int b = 0; b < X.size(); ++b)
            if (X(a, b) != Y(a, b))
                return "I=" + std::to_string(a) + " J=" + std::to_string(b) + ": " + (X(a, b) ? "1" : "0") +
                       " vs " + (Y(a, b) ? "1" : "0");
    return "equal";
}

template <class F>
void for_masks(Mask full, F f) {
    for (Mask m = 0;; ++m) {
        f(m);
        if (m == full) break;
    }
}

} // namespace

VerdictReport check_t41(const Property& P, const Universe& U) {
    VerdictReport rep("t41");
    auto up = is_upper_stable(P, U);
    auto lo = is_lower_stable(P, U);
    bool all_h = true, all_dh = true;
    std::string non_h, non_dh;
    for (const auto& A : U) {
        Relation R = relation_of_property(A, P);
        auto h = is_h_relation(R);
        auto dh = is_dual_h_relation(R);
        if (!h.ok && all_h) all_h = false, non_h = "A=" + A.text() + " triple " + elems_text(h.witness);
        if (!dh.ok && all_dh) all_dh = false, non_dh = "A=" + A.text() + " triple " + elems_text(dh.witness);
    }
    auto yes_no = [](bool ok, const std::string& why) { return ok ? std::string("yes") : "no, " + why; };
    rep.check("t41.upper_iff_h", up.ok == all_h, [&] {
        return "upper stable: " + yes_no(up.ok, up.text()) + "; join-shift everywhere: " + yes_no(all_h, non_h);
    });
    rep.check("t41.lower_iff_dual_h", lo.ok == all_dh, [&] {
        return "lower stable: " + yes_no(lo.ok, lo.text()) + "; meet-shift everywhere: " + yes_no(all_dh, non_dh);
    });
    rep.note("t41.upper_stable[" + P.str() + "]", yes_no(up.ok, up.text()));
    rep.note("t41.join_shift[" + P.str() + "]", yes_no(all_h, non_h));
    rep.note("t41.lower_stable[" + P.str() + "]", yes_no(lo.ok, lo.text()));
    rep.note("t41.meet_shift[" + P.str() + "]", yes_no(all_dh, non_dh));
    return rep;
}

VerdictReport check_closure_laws(const Property& P, const Universe& U, const std::vector<Property>& others) {
    VerdictReport rep("closure-laws");
    bool up = is_upper_stable(P, U).ok, lo = is_lower_stable(P, U).ok;
    struct Op {
        const char* name;
        Property (*apply)(const Property&);
        bool needs_upper;
    };
    const Op ops[] = {{"G", &G, true}, {"dG", &dG, false}, {"R", &Rp, true}, {"GPi", &GPi, true}};
    for (const auto& op : ops) {
        std::string base = std::string("closure.") + op.name + ".";
        if (!(op.needs_upper ? up : lo)) {
            for (auto s : {"extensive", "idempotent", "monotone", "sandwich"}) rep.skip(base + s);
            rep.note(base + "hypothesis[" + P.str() + "]", op.needs_upper ? "not upper stable" : "not lower stable");
            continue;
        }
        Property f = op.apply(P), ff = op.apply(f);
        for (const auto& A : U)
            rep.check(base + "extensive", !P(A) || f(A), [&] { return P.str() + " at " + A.text(); });
        auto d = first_disagreement(f, ff, U);
        rep.check(base + "idempotent", !d, [&] { return f.str() + " vs " + ff.str() + " at " + d->text(); });
        for (const auto& Q : others) {
            Property fq = op.apply(Q);
            if (included(P, Q, U))
                rep.check(base + "monotone", included(f, fq, U), [&] { return P.str() + " within " + Q.str(); });
            if (included(Q, P, U))
                rep.check(base + "monotone", included(fq, f, U), [&] { return Q.str() + " within " + P.str(); });
            bool q_hyp = op.needs_upper ? is_upper_stable(Q, U).ok : is_lower_stable(Q, U).ok;
            if (q_hyp && included(P, Q, U) && included(Q, f, U)) {
                auto dq = first_disagreement(f, fq, U);
                rep.check(base + "sandwich", !dq, [&] { return P.str() + " / " + Q.str() + " at " + dq->text(); });
            }
        }
    }
    return rep;
}

VerdictReport check_structure_theorems(const Property& P, const Universe& U) {
    VerdictReport rep("t30-t37");
    const bool up = is_upper_stable(P, U).ok, lo = is_lower_stable(P, U).ok;
    const bool ext = is_extension_stable(P, U).ok;
    const Property GP = G(P), NGP = NG(P), dGP = dG(P), dNGP = dNG(P);

    bool all_transitive = true, all_fixed = true, all_r_order = true, unions_ok = true, coind = true;
    std::string non_transitive;
    for (const auto& A : U) {
        const std::string at = "A=" + A.text();
        const Mask full = A.full();
        Relation R = relation_of_property(A, P);
        Relation tri = rel_tri_right(R);
        if (!is_transitive(R) && all_transitive) all_transitive = false, non_transitive = at;
        if (R != tri) all_fixed = false;
        if (!is_r_order(R)) all_r_order = false;
        {
            Mask u = 0;
            for_masks(full, [&](Mask I) {
                if (P(A.part(I))) u |= I;
            });
            if (!P(A.part(u))) unions_ok = false;
            Mask cap = full;
            for_masks(full, [&](Mask I) {
                if (P(A.quotient(I))) cap &= I;
            });
            if (!P(A.quotient(cap))) coind = false;
        }

        if (up) {
            auto eq = [&](const std::string& id, const Relation& X, const Relation& Y) {
                rep.check(id, X == Y, [&] { return at + " " + diff_text(X, Y); });
            };
            eq("structure.G.relation_is_closure", relation_of_property(A, GP), tri);
            eq("structure.NG.relation_is_left_complement", relation_of_property(A, NGP), comp_left(R));
            Mask r = 0;
            bool have = false;
            try {
                r = radical_tri(A, P).mask;
                Mask r2 = radical_tri(A, GP).mask;
                Mask r3 = dual_radical_tri(A, NGP).mask;
                Mask r4 = Mask(radical_r_order(relation_of_property(A, GP)));
                have = true;
                rep.check("structure.G.radicals_coincide", r == r2 && r2 == r3 && r3 == r4, [&] {
                    return at + " " + ideal_text(A, r) + " " + ideal_text(A, r2) + " " + ideal_text(A, r3) + " " +
                           ideal_text(A, r4);
                });
            } catch (const Error& e) {
                rep.check("structure.G.radicals_coincide", false, [&] { return at + " " + e.what(); });
            }
            if (have) {
                rep.check("structure.G.radical_splits", GP(A.part(r)) && NGP(A.quotient(r)),
                          [&] { return at + " r=" + ideal_text(A, r); });
                for_masks(full, [&](Mask I) {
                    Mask rI = expand(radical_tri(A.part(I), P).mask, I);
                    rep.check("structure.radical_of_ideal_within", submask(rI, r), [&] {
                        return at + " I=" + ideal_text(A, I) + " r(I)=" + ideal_text(A, rI) + " r=" + ideal_text(A, r);
                    });
                });
                // Series characterisation of the closure radical.
                Relation left_tri = comp_left(tri);
                auto wit = [&](const std::string& s) { return at + " r=" + ideal_text(A, r) + " " + s; };
                rep.check("series.join.bound", Mask(tri.lattice().join_all(tri.right_set(0))) == r, [&] { return wit(""); });
                bool extremal = left_tri(int(r), int(full));
                std::string why;
                for_masks(full, [&](Mask J) {
                    if (tri(0, int(J)) && !submask(J, r)) extremal = false, why = "successor " + ideal_text(A, J);
                    if (left_tri(int(J), int(full)) && !submask(r, J)) extremal = false, why = "predecessor " + ideal_text(A, J);
                });
                rep.check("series.join.extremal", extremal, [&] { return wit(why); });
                for_masks(full, [&](Mask I) {
                    if (!submask(I, r)) return;
                    bool ok = tri(int(I), int(r));
                    if (ok) ok = witness_valid(R, series_witness(R, int(I), int(r), Direction::ascending), int(I), int(r));
                    rep.check("series.join.chain_from_below", ok, [&] { return wit("I=" + ideal_text(A, I)); });
                });
                for_masks(full, [&](Mask I) {
                    if (submask(r, I) || I == full) return;
                    rep.check("series.join.successor_outside", has_successor(R, int(I)),
                              [&] { return wit("I=" + ideal_text(A, I)); });
                });
                rep.check("series.join.no_successor", !has_successor(R, int(r)), [&] { return wit(""); });
                for_masks(full, [&](Mask I) {
                    if (!tri(0, int(I))) return;
                    rep.check("series.join.reachable_within", submask(I, r), [&] { return wit("I=" + ideal_text(A, I)); });
                });
            }
        } else {
            for (auto id : {"structure.G.relation_is_closure", "structure.NG.relation_is_left_complement",
                            "structure.G.radicals_coincide", "structure.G.radical_splits",
                            "structure.radical_of_ideal_within", "series.join.bound", "series.join.extremal",
                            "series.join.chain_from_below", "series.join.successor_outside",
                            "series.join.no_successor", "series.join.reachable_within"})
                rep.skip(id);
        }

        if (lo) {
            Relation triL = rel_tri_left(R);
            auto eq = [&](const std::string& id, const Relation& X, const Relation& Y) {
                rep.check(id, X == Y, [&] { return at + " " + diff_text(X, Y); });
            };
            eq("structure.dG.relation_is_closure", relation_of_property(A, dGP), triL);
            eq("structure.dNG.relation_is_right_complement", relation_of_property(A, dNGP), comp_right(R));
            Mask p = 0;
            bool have = false;
            try {
                p = dual_radical_tri(A, P).mask;
                Mask p2 = dual_radical_tri(A, dGP).mask;
                Mask p3 = radical_tri(A, dNGP).mask;
                Mask p4 = Mask(dual_radical_r_order(relation_of_property(A, dGP)));
                have = true;
                rep.check("structure.dG.radicals_coincide", p == p2 && p2 == p3 && p3 == p4, [&] {
                    return at + " " + ideal_text(A, p) + " " + ideal_text(A, p2) + " " + ideal_text(A, p3) + " " +
                           ideal_text(A, p4);
                });
            } catch (const Error& e) {
                rep.check("structure.dG.radicals_coincide", false, [&] { return at + " " + e.what(); });
            }
            if (have) {
                rep.check("structure.dG.radical_splits", dNGP(A.part(p)) && dGP(A.quotient(p)),
                          [&] { return at + " p=" + ideal_text(A, p); });
                for_masks(full, [&](Mask I) {
                    if (dual_radical_tri(A.quotient(I), P).mask != 0) return;
                    Mask pI = expand(dual_radical_tri(A.part(I), P).mask, I);
                    rep.check("structure.dual_radical_from_ideal", triL(int(I), int(full)) && pI == p, [&] {
                        return at + " I=" + ideal_text(A, I) + " p(I)=" + ideal_text(A, pI) + " p=" + ideal_text(A, p);
                    });
                });
                Relation right_tri = comp_right(triL);
                auto wit = [&](const std::string& s) { return at + " p=" + ideal_text(A, p) + " " + s; };
                rep.check("series.meet.bound", Mask(triL.lattice().meet_all(triL.left_set(int(full)))) == p,
                          [&] { return wit(""); });
                bool extremal = right_tri(0, int(p));
                std::string why;
                for_masks(full, [&](Mask J) {
                    if (triL(int(J), int(full)) && !submask(p, J)) extremal = false, why = "predecessor " + ideal_text(A, J);
                    if (right_tri(0, int(J)) && !submask(J, p)) extremal = false, why = "successor " + ideal_text(A, J);
                });
                rep.check("series.meet.extremal", extremal, [&] { return wit(why); });
                for_masks(full, [&](Mask I) {
                    if (!submask(p, I)) return;
                    bool ok = triL(int(p), int(I));
                    if (ok) ok = witness_valid(R, series_witness(R, int(p), int(I), Direction::descending), int(p), int(I));
                    rep.check("series.meet.chain_from_above", ok, [&] { return wit("I=" + ideal_text(A, I)); });
                });
                for_masks(full, [&](Mask I) {
                    if (I == 0 || submask(I, p)) return;
                    rep.check("series.meet.predecessor_outside", has_predecessor(R, int(I)),
                              [&] { return wit("I=" + ideal_text(A, I)); });
                });
                rep.check("series.meet.no_predecessor", !has_predecessor(R, int(p)), [&] { return wit(""); });
                for_masks(full, [&](Mask I) {
                    if (!triL(int(I), int(full))) return;
                    rep.check("series.meet.reachable_within", submask(p, I), [&] { return wit("I=" + ideal_text(A, I)); });
                });
            }
        } else {
            for (auto id : {"structure.dG.relation_is_closure", "structure.dNG.relation_is_right_complement",
                            "structure.dG.radicals_coincide", "structure.dG.radical_splits",
                            "structure.dual_radical_from_ideal", "series.meet.bound", "series.meet.extremal",
                            "series.meet.chain_from_above", "series.meet.predecessor_outside",
                            "series.meet.no_predecessor", "series.meet.reachable_within"})
                rep.skip(id);
        }
    }

    rep.check("structure.transitive_iff_extension", all_transitive == ext, [&] {
        return std::string("extension stable=") + (ext ? "1" : "0") + " transitive everywhere=" +
               (all_transitive ? "1" : "0 (" + non_transitive + ")");
    });
    rep.note("structure.extension_stable[" + P.str() + "]",
             ext ? "yes" : "no, " + is_extension_stable(P, U).text());
    if (!all_transitive) rep.note("structure.non_transitive[" + P.str() + "]", non_transitive);

    auto stable = [&](const std::string& id, const StabilityVerdict& v, const Property& Q) {
        rep.check(id, v.ok, [&] { return Q.str() + " " + v.text(); });
    };
    stable("structure.generated.G_upper", is_upper_stable(GP, U), GP);
    stable("structure.generated.NG_lower", is_lower_stable(NGP, U), NGP);
    stable("structure.generated.dG_lower", is_lower_stable(dGP, U), dGP);
    stable("structure.generated.dNG_upper", is_upper_stable(dNGP, U), dNGP);
    if (up) {
        stable("structure.extension.G", is_extension_stable(GP, U), GP);
        stable("structure.extension.NG", is_extension_stable(NGP, U), NGP);
        bool fixed_point = !first_disagreement(GP, P, U);
        bool v = ext && unions_ok;
        rep.check("structure.G_fixed_equivalences", fixed_point == all_fixed && all_fixed == all_r_order && all_r_order == v,
                  [&] {
                      return std::string("G(P)=P:") + (fixed_point ? "1" : "0") + " closed:" + (all_fixed ? "1" : "0") +
                             " order:" + (all_r_order ? "1" : "0") + " ext+unions:" + (v ? "1" : "0");
                  });
    } else {
        for (auto id : {"structure.extension.G", "structure.extension.NG", "structure.G_fixed_equivalences"}) rep.skip(id);
    }
    if (lo) {
        stable("structure.extension.dG", is_extension_stable(dGP, U), dGP);
        stable("structure.extension.dNG", is_extension_stable(dNGP, U), dNGP);
        bool fixed_point = !first_disagreement(dGP, P, U);
        bool cond = lo && ext && coind;
        rep.check("structure.dG_fixed_iff_intersections", fixed_point == cond, [&] {
            return std::string("dG(P)=P:") + (fixed_point ? "1" : "0") + " lower+ext+intersections:" + (cond ? "1" : "0");
        });
    } else {
        for (auto id : {"structure.extension.dG", "structure.extension.dNG", "structure.dG_fixed_iff_intersections"})
            rep.skip(id);
    }
    if (up && lo) {
        rep.check("structure.G_keeps_lower_upper", is_lower_stable(GP, U).ok && is_upper_stable(GP, U).ok,
                  [&] { return GP.str(); });
    } else {
        rep.skip("structure.G_keeps_lower_upper");
    }
    return rep;
}

VerdictReport check_model_invariants(const Property& P, const Universe& U) {
    VerdictReport rep("model");
    const bool up = is_upper_stable(P, U).ok, lo = is_lower_stable(P, U).ok;
    auto d = first_disagreement(GPi(P), Rp(P), U);
    rep.check("model.gpi_eq_r", !d, [&] { return P.str() + " at " + d->text(); });
    for (const auto& A : U) {
        const std::string at = "A=" + A.text();
        const Mask full = A.full();
        auto L = ideal_lattice(A);
        rep.check("model.ideal_lattice_distributive", is_distributive(*L).distributive, [&] { return at; });
        for_masks(full, [&](Mask I) {
            for_masks(full, [&](Mask J) {
                ModelAlgebra lhs = A.part((J | I) & ~I).canonical();
                ModelAlgebra rhs = A.part(J & ~(I & J)).canonical();
                rep.check("model.sum_quotient_iso", lhs == rhs, [&] { return at; });
            });
        });
        if (up) {
            IdealRef r = radical_tri(A, P);
            rep.check("model.G_iff_radical_full", G(P)(A) == (r.mask == full), [&] { return at + " r=" + r.text(); });
            rep.check("model.NG_iff_radical_zero", NG(P)(A) == (r.mask == 0), [&] { return at + " r=" + r.text(); });
        } else {
            rep.skip("model.G_iff_radical_full");
            rep.skip("model.NG_iff_radical_zero");
        }
        if (lo) {
            IdealRef p = dual_radical_tri(A, P);
            rep.check("model.dG_iff_dual_radical_zero", dG(P)(A) == (p.mask == 0), [&] { return at + " p=" + p.text(); });
            rep.check("model.dNG_iff_dual_radical_full", dNG(P)(A) == (p.mask == full), [&] { return at + " p=" + p.text(); });
        } else {
            rep.skip("model.dG_iff_dual_radical_zero");
            rep.skip("model.dNG_iff_dual_radical_full");
        }
        // Permutations of equal-size blocks are algebra automorphisms.
        Relation R = relation_of_property(A, P);
        rep.merge(check_automorphism_invariance(R), at);
        if (up || lo) {
            Mask r = up ? radical_tri(A, P).mask : 0, p = lo ? dual_radical_tri(A, P).mask : 0;
            std::vector<int> perm(A.count());
            for (int i = 0; i < A.count(); ++i) perm[i] = i;
            do {
                bool sizes = true;
                for (int i = 0; i < A.count(); ++i)
                    if (A.blocks()[perm[i]] != A.blocks()[i]) sizes = false;
                if (!sizes) continue;
                auto image = [&](Mask m) {
                    Mask out = 0;
                    for (int i = 0; i < A.count(); ++i)
                        if (m >> i & 1) out |= Mask(1) << perm[i];
                    return out;
                };
                if (up) rep.check("model.block_permutation_fixes_radical", image(r) == r, [&] { return at; });
                if (lo) rep.check("model.block_permutation_fixes_dual_radical", image(p) == p, [&] { return at; });
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return rep;
}

// ----------------------------------------------------- compatible maps

Mask BlockMap::select(const Blocks& blocks) const {
    Mask m = 0;
    for (int i = 0; i < int(blocks.size()); ++i)
        if (pred_(blocks, i)) m |= Mask(1) << i;
    return m;
}

Property BlockMap::r_f() const {
    BlockMap self = *this;
    return Property::custom("r_F[" + name_ + "]", [self](const Blocks& b) {
        return self.select(b) == Mask((std::uint64_t(1) << b.size()) - 1);
    });
}

namespace {

std::map<int, int> selected_counts(const Blocks& b, Mask m) {
    std::map<int, int> c;
    for (int i = 0; i < int(b.size()); ++i)
        if (m >> i & 1) ++c[b[i]];
    return c;
}

} // namespace

void BlockMap::require_equivariant(const Universe& U) const {
    for (const auto& A0 : U) {
        Blocks base = A0.canonical().blocks();
        auto want = selected_counts(base, select(base));
        Blocks b = base;
        do {
            if (selected_counts(b, select(b)) != want)
                throw NotEquivariant("map '" + name_ + "' treats the ordering " + ModelAlgebra(b).text() + " of " +
                                     ModelAlgebra(base).text() + " differently");
        } while (std::next_permutation(b.begin(), b.end()));
    }
}

BlockMap make_block_map(std::string name, BlockPredicate pred) { return BlockMap(std::move(name), std::move(pred)); }

BlockMap block_size_at_most(int n) {
    return make_block_map("dim<=" + std::to_string(n), [n](const Blocks& b, int i) { return b[i] <= n; });
}

VerdictReport check_compatible(const BlockMap& F, const Universe& U) {
    VerdictReport rep("compatible");
    F.require_equivariant(U);
    rep.check("compatible.isomorphism", true);
    for (const auto& A : U) {
        Mask fa = F.select(A.blocks());
        for_masks(A.full(), [&](Mask I) {
            Mask fi = expand(F.select(A.part(I).blocks()), I);
            rep.check("compatible.ideal_embedding", submask(fi, fa), [&] {
                return "A=" + A.text() + " I=" + ideal_text(A, I) + " F(I)=" + ideal_text(A, fi) + " F(A)=" + ideal_text(A, fa);
            });
        });
    }
    return rep;
}

VerdictReport check_ideal_map(const BlockMap& F, const Universe& U) {
    VerdictReport rep("ideal-map");
    F.require_equivariant(U);
    for (const auto& A : U) {
        Mask fa = F.select(A.blocks());
        for (int i = 0; i < A.count(); ++i) {
            bool on_image = F.select({A.blocks()[i]}) == 1;
            rep.check("ideal_map.quotient_composition", !on_image || (fa >> i & 1),
                      [&] { return "A=" + A.text() + " block#" + std::to_string(i); });
        }
    }
    return rep;
}

VerdictReport check_t310(const BlockMap& F, const Universe& U) {
    VerdictReport rep("t310");
    F.require_equivariant(U);
    Property P = F.r_f();
    Property gpi = GPi(P), gr = G(Rp(P)), r = Rp(P);
    auto d1 = first_disagreement(gpi, gr, U);
    rep.check("t310.gpi_eq_g_r", !d1, [&] { return "at " + d1->text(); });
    auto d2 = first_disagreement(gr, r, U);
    rep.check("t310.g_r_eq_r", !d2, [&] { return "at " + d2->text(); });
    bool ideal_map = check_ideal_map(F, U).passed();
    rep.note("t310.ideal_map[" + F.name() + "]", ideal_map ? "yes" : "no");
    if (ideal_map) {
        rep.check("t310.r_within_rf", included(r, P, U), [&] { return F.name(); });
        bool equal = !first_disagreement(r, P, U);
        bool upper = is_upper_stable(P, U).ok;
        rep.check("t310.equality_iff_upper_stable", equal == upper, [&] {
            return std::string("R(r_F)=r_F:") + (equal ? "1" : "0") + " upper stable:" + (upper ? "1" : "0");
        });
    } else {
        rep.skip("t310.r_within_rf");
        rep.skip("t310.equality_iff_upper_stable");
    }
    return rep;
}

} // namespace radlat

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radlat/lattice.hpp"
#include "radlat/verdict.hpp"

namespace radlat {

// Outcome of a structural test. On failure `witness` holds the offending
// elements in the order documented by the test.
struct Verdict {
    bool ok = true;
    std::vector<Elem> witness;
    explicit operator bool() const { return ok; }
};

// Reflexive relation contained in the lattice order, as a dense matrix.
// Immutable; classification results are cached on first request.
class Relation {
public:
    explicit Relation(LatticePtr L); // identity relation
    // Throws NotStrongerThanOrder, or InputError when the matrix is not reflexive.
    static Relation from_matrix(LatticePtr L, std::vector<std::uint8_t> m);
    static Relation full_order(LatticePtr L);
    static Relation identity(LatticePtr L) { return Relation(std::move(L)); }

    const Lattice& lattice() const { return *L_; }
    const LatticePtr& lattice_ptr() const { return L_; }
    int size() const { return n_; }
    bool operator()(Elem a, Elem b) const { return m_[std::size_t(a) * n_ + b] != 0; }
    const std::vector<std::uint8_t>& matrix() const { return m_; }
    bool operator==(const Relation& o) const { return n_ == o.n_ && m_ == o.m_; }
    bool operator!=(const Relation& o) const { return !(*this == o); }

    // Non-reflexive pairs in row-major order.
    std::vector<std::pair<Elem, Elem>> pairs() const;
    std::size_t strict_pair_count() const;
    // [a,<<] and [<<,b].
    std::vector<Elem> right_set(Elem a) const;
    std::vector<Elem> left_set(Elem b) const;

    bool is_transitive() const;
    const Verdict& h_verdict() const;
    const Verdict& dual_h_verdict() const;

private:
    Relation(LatticePtr L, std::vector<std::uint8_t> m);
    struct Cache;
    LatticePtr L_;
    int n_ = 0;
    std::vector<std::uint8_t> m_;
    std::shared_ptr<Cache> cache_;
};

// Builds a relation from pairs; reflexive pairs are added when requested.
Relation validate_relation(LatticePtr L, const std::vector<std::pair<Elem, Elem>>& pairs,
                           bool auto_reflexive = true);

// Join-shift law; witness (a,b,c) with a<<b, a<=c and not c << b v c.
// The equivalent form a v x << b v x is evaluated independently and the two
// verdicts must agree (InternalEquivalenceMismatch otherwise).
Verdict is_h_relation(const Relation& R);
// Meet-shift law; witness (a,b,c) with a<<b, c<=b and not a ^ c << c.
Verdict is_dual_h_relation(const Relation& R);
bool is_transitive(const Relation& R);
bool is_r_order(const Relation& R);
bool is_dual_r_order(const Relation& R);

Relation h_closure(const Relation& R);
Relation dual_h_closure(const Relation& R);

Relation comp_left(const Relation& R);  // a <-<< b
Relation comp_right(const Relation& R); // a -><< b
Relation rel_up(const Relation& R);
Relation rel_lo(const Relation& R);
Relation rel_tri_right(const Relation& R);
Relation rel_tri_left(const Relation& R);

enum class Direction { ascending, descending };
struct SeriesWitness {
    std::vector<Elem> chain;
    Direction direction = Direction::ascending;
};
// Shortest << chain: ascending from a to b, or descending from b to a
// (consecutive x_{k+1} << x_k). Ties go to the smallest next index.
// Throws NoWitness when no chain exists.
SeriesWitness series_witness(const Relation& R, Elem a, Elem b, Direction d);
bool witness_valid(const Relation& R, const SeriesWitness& w, Elem a, Elem b);

// Elements having a <<-successor / <<-predecessor.
bool has_successor(const Relation& R, Elem x);
bool has_predecessor(const Relation& R, Elem x);

std::vector<Elem> find_radicals(const Relation& R);
std::vector<Elem> find_dual_radicals(const Relation& R);
// v[0,<<] for an R-order; throws NotAnROrder.
Elem radical_r_order(const Relation& R);
// ^[<<,1] for a dual R-order; throws NotAnROrder.
Elem dual_radical_r_order(const Relation& R);

// Relation on the sublattice [a,b] (reindexed as Lattice::sublattice).
Relation restrict_to_interval(const Relation& R, Elem a, Elem b);
// Transposed relation on dual_lattice(L).
Relation dualize(const Relation& R);
// Transposed relation on an already-built dual lattice D.
Relation dualize_onto(const Relation& R, LatticePtr D);
// Image of R under the relabelling x -> perm[x] of its lattice.
Relation transport(const Relation& R, LatticePtr target, const std::vector<Elem>& perm);

// ---- theorem checkers; these never throw on mathematical failure ----

// Up/closure coincidence, R-order of the closure, complement identities,
// radical coincidence; both the join and meet blocks run when applicable.
// `up_override` substitutes the computed up-relation (negative controls).
VerdictReport check_theorem_inf(const Relation& R, const Relation* up_override = nullptr);
// Radical characterisations for the closure relations.
VerdictReport check_radical_structure(const Relation& R);
// Relation-preserving lattice automorphisms fix the closure radicals.
VerdictReport check_automorphism_invariance(const Relation& R);
// Every verdict above equals its counterpart for the transposed relation on
// the dual lattice.
VerdictReport check_duality(const Relation& R);

std::string elems_text(const std::vector<Elem>& xs);
std::string relation_text(const Relation& R);

} // namespace radlat

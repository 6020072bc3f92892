#pragma once

#include <vector>

#include "radlat/cstar.hpp"
#include "radlat/lattice.hpp"
#include "radlat/radmap.hpp"
#include "radlat/relation.hpp"
#include "radlat/verdict.hpp"

namespace radlat {

// x is small when x v k != 1 for every k != 1. On the singleton lattice the
// single element counts as small.
bool is_small(const Lattice& L, Elem x);
std::vector<Elem> small_elements(const Lattice& L);
// Join of all small elements.
Elem s_a(const Lattice& L);
// I <<_sm J iff I <= J and J is small in [I,1].
Relation rel_sm(const LatticePtr& L);
// Radical of the closure of <<_sm.
Elem r_sm_tri(const LatticePtr& L);
// Meet of the coatoms; the top for the singleton lattice.
Elem rad_k(const Lattice& L);

// <<_sm is a transitive join-shift relation and an R-order; transfer
// clauses for small elements along intervals; the <<_sm radical lies above
// every small element and leaves no nonzero small element above it.
VerdictReport check_sm_structure(const LatticePtr& L);
// rad_k = s_a = r_sm_tri, and that element is small.
VerdictReport check_c4(const LatticePtr& L);
// When S_A has a complement: [S_A,1] has no nonzero small elements and every
// element below S_A is small. Skipped otherwise.
VerdictReport check_t61(const LatticePtr& L);
// Every algebra of U has only the zero small ideal.
VerdictReport check_ccr_corollary(const Universe& U);
// <<_sm over the intervals of chain(3) breaks ideal transport at (0,a),
// the algebra family of comm passes, and no class of intervals generates
// <<_sm on chain(3).
VerdictReport check_r3_demo();

struct SmallAnalysis {
    LatticePtr lattice;
    std::vector<Elem> small_set;
    Elem s_a = 0;
    Relation rel_sm;
    Elem r_sm_tri = 0;
    Elem rad_k = 0;
};
SmallAnalysis analyze_small(const LatticePtr& L);

RelationFamily small_family(const LatticePtr& L);

} // namespace radlat

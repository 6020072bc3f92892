#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "radlat/errors.hpp"
#include "radlat/lattice.hpp"
#include "radlat/relation.hpp"
#include "radlat/verdict.hpp"

namespace radlat {

using Blocks = std::vector<int>;
// Ideal of a model algebra: bit i set when block i belongs to it. The ideal
// lattice is boolean_lattice(#blocks) with element index = mask.
using Mask = std::uint32_t;

// Finite direct sum of full matrix blocks, blocks[i] = matrix size.
class ModelAlgebra {
public:
    ModelAlgebra() = default;
    explicit ModelAlgebra(Blocks blocks);

    const Blocks& blocks() const { return blocks_; }
    int count() const { return int(blocks_.size()); }
    bool is_zero() const { return blocks_.empty(); }
    Mask full() const { return count() == 0 ? 0 : Mask((std::uint64_t(1) << count()) - 1); }
    long dimension() const;

    ModelAlgebra canonical() const;
    // Blocks selected by m, in increasing index order.
    ModelAlgebra part(Mask m) const;
    // J/I for I within J: the blocks of J outside I.
    ModelAlgebra subquotient(Mask J, Mask I) const;
    ModelAlgebra quotient(Mask I) const { return subquotient(full(), I); }

    std::string text() const; // "[1,2]"
    bool operator==(const ModelAlgebra& o) const { return blocks_ == o.blocks_; }
    bool operator<(const ModelAlgebra& o) const;

private:
    Blocks blocks_;
};

// "1,1,2"; empty string is the zero algebra. Throws InputError.
ModelAlgebra parse_algebra(const std::string& text);
LatticePtr ideal_lattice(const ModelAlgebra& A);
// Block indices of A/I (or of an ideal) listed in A's numbering.
std::vector<int> mask_indices(Mask m);
// Re-expresses a mask over A as a mask over part(within).
Mask compress(Mask m, Mask within);
// Inverse of compress.
Mask expand(Mask m, Mask within);

struct IdealRef {
    ModelAlgebra algebra;
    Mask mask = 0;
    std::string text() const; // "{block#0,block#2}"
    ModelAlgebra as_algebra() const { return algebra.part(mask); }
};

// ------------------------------------------------------------ properties

enum class PropKind {
    zero, all, comm, simple, one, dim_le, blockdim_le, blocks_le,
    G, dG, NG, dNG, R, GPi, And, Or, Not, Custom
};

struct PropNode;
using CustomPredicate = std::function<bool(const Blocks& canonical_blocks)>;

// Immutable expression over model algebras. Every expression holds on the
// zero algebra; `!P` is the complement with the zero algebra re-adjoined.
class Property {
public:
    Property();                                 // all
    static Property atom(PropKind k, long bound = 0);
    static Property unary(PropKind op, Property p);
    static Property binary(PropKind op, Property a, Property b);
    // Predicate on canonical block lists; not parseable, printed as `name`.
    static Property custom(std::string name, CustomPredicate pred);
    // Extensional property: members of `members` (canonical) plus the zero algebra.
    static Property member_of(std::string name, const std::set<Blocks>& members);

    PropKind kind() const;
    long bound() const;
    const std::vector<Property>& children() const;
    std::string str() const;
    const std::string& key() const;

    bool operator()(const ModelAlgebra& A) const;
    bool same_ast(const Property& o) const;

private:
    explicit Property(std::shared_ptr<const PropNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const PropNode> node_;
    friend struct PropNode;
};

Property operator&(const Property& a, const Property& b);
Property operator|(const Property& a, const Property& b);
Property operator!(const Property& a);
Property G(const Property& p);
Property dG(const Property& p);
Property NG(const Property& p);
Property dNG(const Property& p);
Property Rp(const Property& p);
Property GPi(const Property& p);

struct PropertyParseError : ParseError {
    PropertyParseError(std::size_t pos, std::vector<std::string> exp, const std::string& msg)
        : ParseError(msg), position(pos), expected(std::move(exp)) {}
    std::size_t position;
    std::vector<std::string> expected;
};

// expr := atom | OP '(' expr ')' | expr '&' expr | expr '|' expr | '!' expr | '(' expr ')'
// with ! binding tighter than &, and & tighter than |.
Property parse_property(const std::string& text);
bool eval_property(const Property& P, const ModelAlgebra& A);
void clear_property_cache();
std::size_t property_cache_size();

// ---------------------------------------------------- relations, radicals

// I <<_P J iff I within J and J/I satisfies P.
Relation relation_of_property(const ModelAlgebra& A, const Property& P);
// Radical of the closure of <<_P; throws NoUniqueRadical.
IdealRef radical_tri(const ModelAlgebra& A, const Property& P);
IdealRef dual_radical_tri(const ModelAlgebra& A, const Property& P);

using Universe = std::vector<ModelAlgebra>;
// Canonical algebras with at most max_blocks blocks of size at most
// max_block_size, ordered by block count then lexicographically.
Universe enumerate_algebras(int max_blocks, int max_block_size);
// Adds every ideal of every member (sub-multisets); result sorted as above.
Universe close_universe(const Universe& U);
bool universe_less(const ModelAlgebra& a, const ModelAlgebra& b);

struct StabilityVerdict {
    bool ok = true;
    std::optional<std::pair<ModelAlgebra, Mask>> witness; // (A, I)
    explicit operator bool() const { return ok; }
    std::string text() const;
};
StabilityVerdict is_lower_stable(const Property& P, const Universe& U);
StabilityVerdict is_upper_stable(const Property& P, const Universe& U);
StabilityVerdict is_extension_stable(const Property& P, const Universe& U);

// Properties agree on every member of U; returns the first disagreement.
std::optional<ModelAlgebra> first_disagreement(const Property& P, const Property& Q, const Universe& U);

// ---------------------------------------------------------------- checks

// Upper stability iff every <<_P is a join-shift relation; lower stability
// iff every <<_P is a meet-shift relation.
VerdictReport check_t41(const Property& P, const Universe& U);
// Extensivity, idempotence, monotonicity and the sandwich law of G, dG, R,
// GPi at P; `others` supplies the comparison properties for monotonicity.
VerdictReport check_closure_laws(const Property& P, const Universe& U, const std::vector<Property>& others = {});
// Relation identities, radical identities, transitivity vs extension
// stability, radical transfer along ideals and quotients, stability of the
// generated properties, fixed-point characterisations, series clauses.
VerdictReport check_structure_theorems(const Property& P, const Universe& U);
// Membership in G(P)/NG(P)/dG(P)/dNG(P) read off the radicals, GPi = R,
// block-permutation invariance of the radicals.
VerdictReport check_model_invariants(const Property& P, const Universe& U);

// ----------------------------------------------------- compatible maps

// Selects a subset of blocks of each algebra (irreducible representations).
using BlockPredicate = std::function<bool(const Blocks& blocks, int index)>;
class BlockMap {
public:
    BlockMap(std::string name, BlockPredicate pred) : name_(std::move(name)), pred_(std::move(pred)) {}
    const std::string& name() const { return name_; }
    Mask select(const Blocks& blocks) const;
    bool r_f_member(const ModelAlgebra& A) const { return select(A.blocks()) == A.full(); }
    // The class r_F as a property.
    Property r_f() const;
    // Throws NotEquivariant when some reordering of a member of U is treated
    // differently from the original.
    void require_equivariant(const Universe& U) const;

private:
    std::string name_;
    BlockPredicate pred_;
};

BlockMap make_block_map(std::string name, BlockPredicate pred);
BlockMap block_size_at_most(int n);

VerdictReport check_compatible(const BlockMap& F, const Universe& U);
VerdictReport check_ideal_map(const BlockMap& F, const Universe& U);
VerdictReport check_t310(const BlockMap& F, const Universe& U);

} // namespace radlat

#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "radlat/cstar.hpp"

namespace radlat {

// Ideal-valued map on model algebras. Evaluated on an arbitrary block
// ordering; the result is a mask in that ordering.
class RadicalMap {
public:
    using Rule = std::function<Mask(const Blocks& blocks)>;

    RadicalMap(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

    // A -> radical of the closure of <<_P (right) or dual radical (left).
    static RadicalMap from_property(const Property& P, bool right);
    // Canonical multiset -> sub-multiset. Missing algebras map to the zero
    // ideal. Throws InputError for a non-sub-multiset, NotEquivariant when
    // some size is neither fully selected nor fully skipped.
    static RadicalMap from_table(std::string name, const std::map<Blocks, Blocks>& table);
    static RadicalMap zero();
    static RadicalMap identity();

    const std::string& name() const { return name_; }
    Mask operator()(const ModelAlgebra& A) const { return rule_(A.blocks()); }

private:
    std::string name_;
    Rule rule_;
};

// A if A has a block of size 1, else 0. Violates quotient monotonicity.
RadicalMap one_block_map();

// Table file: one `multiset -> sub-multiset` per line, e.g. `1,2 -> 1`.
// `#` comments and blank lines ignored. Throws ParseError with line context.
std::map<Blocks, Blocks> parse_radical_table(const std::string& text, const std::string& source = "<table>");
// "prop:<expr>:right", "prop:<expr>:left", "table:<file>", "zero", "identity".
RadicalMap parse_radical_map(const std::string& spec);

// U is closed under ideals and quotients first.
VerdictReport check_axioms(const RadicalMap& R, const Universe& U);
// Extensional classes over U (plus the zero algebra).
Property rad_of(const RadicalMap& R, const Universe& U);
Property sem_of(const RadicalMap& R, const Universe& U);
// Throws AxiomsNotSatisfied when check_axioms fails.
VerdictReport check_correspondence(const RadicalMap& R, const Universe& U);
// Radical maps of P: axioms and Rad/Sem against the generated properties,
// for whichever of upper/lower stability P has over U.
VerdictReport check_property_radicals(const Property& P, const Universe& U);

// -------------------------------------------------------- relation families

struct FamilyLink {
    int from = 0; // member index of the ideal, quotient or isomorphic copy
    int to = 0;   // member index of the ambient object
    // Element map from the lattice of `from` into the lattice of `to`.
    std::vector<Elem> map;
};

// Relations on the ideal lattices of a collection of objects, with the
// ideal, quotient and isomorphism maps connecting them.
struct RelationFamily {
    std::string name;
    std::vector<std::string> member_names;
    std::vector<Relation> relations;
    std::vector<FamilyLink> ideals;     // from = [0,K] inside to
    std::vector<FamilyLink> quotients;  // from = [I,1] inside to
    std::vector<FamilyLink> isos;
    // Member representing the interval [I,J] of member m.
    std::function<int(int m, Elem I, Elem J)> subquotient;
    // Present when the members are model algebras (canonical).
    std::vector<ModelAlgebra> algebras;
    // Labels for witnesses; defaults to indices.
    std::function<std::string(int m, Elem x)> label;

    std::string elem_text(int m, Elem x) const { return label ? label(m, x) : std::to_string(x); }
};

// Family A -> <<_P over the ideal/quotient closure of U.
RelationFamily algebra_family(const Property& P, const Universe& U);
// Family A -> identity relation.
RelationFamily identity_family(const Universe& U);
// Members are all intervals of L, relation given by `rule` on each.
RelationFamily lattice_family(std::string name, LatticePtr L, const std::function<Relation(LatticePtr)>& rule);

// Transport along isomorphisms, ideals and quotients; recovery from the
// class {A : 0 << 1}; for model families, radical map vs generated class.
VerdictReport check_relation_function(const RelationFamily& f);

} // namespace radlat

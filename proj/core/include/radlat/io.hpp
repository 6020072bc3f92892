#pragma once

#include <map>
#include <string>

#include "radlat/lattice.hpp"
#include "radlat/relation.hpp"

namespace radlat {

// .lat text:  lattice <name> <n> / cover i j / leq i j / label i <text>
// Errors are InputError (with "source:line:" prefix), NotAPoset or NotALattice.
LatticePtr parse_lattice(const std::string& text, const std::string& source = "<input>");
std::string write_lattice(const Lattice& L);

struct RelationFile {
    std::string name;
    std::string lattice_name;
    Relation relation;
};
// .rel text:  relation <name> over <lattice-name> / pair i j / auto-reflexive on|off
RelationFile parse_relation(const std::string& text, LatticePtr L, const std::string& source = "<input>");
std::string write_relation(const Relation& R, const std::string& name);

// Graphviz digraph of the Hasse diagram, bottom at the bottom. Highlighted
// nodes are filled with the given colour.
std::string to_dot(const Lattice& L, const std::map<Elem, std::string>& highlight = {});

std::string read_file(const std::string& path);

} // namespace radlat

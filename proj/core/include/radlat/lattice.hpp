#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace radlat {

using Elem = int;

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

enum class PairMode { covers, leq };

// Finite lattice on the elements 0..n-1. Immutable once built.
class Lattice {
public:
    static LatticePtr build(int n, const std::vector<std::pair<Elem, Elem>>& pairs,
                            PairMode mode, std::vector<std::string> labels = {},
                            std::string name = "L");

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }

    bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
    bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
    Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
    Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Elem a) const;

    // Hasse diagram edges (a covered by b).
    const std::vector<std::pair<Elem, Elem>>& covers() const { return covers_; }
    const std::vector<Elem>& upper_covers(Elem a) const { return up_[a]; }
    const std::vector<Elem>& lower_covers(Elem a) const { return down_[a]; }
    // Length of the longest chain from bottom.
    int rank(Elem a) const { return rank_[a]; }

    std::vector<Elem> atoms() const;
    std::vector<Elem> coatoms() const;
    // Members of [a,b] in increasing index order; throws NotComparable.
    std::vector<Elem> interval(Elem a, Elem b) const;
    Elem join_all(const std::vector<Elem>& xs) const;
    Elem meet_all(const std::vector<Elem>& xs) const;

    // Sublattice [a,b], reindexed in increasing index order. `from` receives
    // the original index of every new element.
    LatticePtr sublattice(Elem a, Elem b, std::vector<Elem>* from = nullptr) const;

    // Relabelled copy: element x becomes perm[x].
    LatticePtr permuted(const std::vector<Elem>& perm) const;

    bool same_order(const Lattice& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
    Lattice() = default;
    std::size_t idx(Elem a, Elem b) const { return std::size_t(a) * n_ + b; }
    void finish();

    int n_ = 0;
    std::string name_;
    std::vector<std::uint8_t> leq_;
    std::vector<Elem> join_, meet_;
    Elem bottom_ = 0, top_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::pair<Elem, Elem>> covers_;
    std::vector<std::vector<Elem>> up_, down_;
    std::vector<int> rank_;
};

// Powerset of k atoms; element index is the subset bitmask.
LatticePtr boolean_lattice(int k);
LatticePtr chain(int m);
// Five-element lattice with three pairwise incomparable atoms 1,2,3.
LatticePtr m3();
// Five-element non-modular lattice 0 < 1 < 2 < 4, 0 < 3 < 4.
LatticePtr n5();
LatticePtr dual_lattice(const Lattice& L);

// Witness (a,b,c) has (a v b) ^ c != (a ^ c) v (b ^ c).
struct DistributivityResult {
    bool distributive = true;
    std::optional<std::array<Elem, 3>> witness;
};
DistributivityResult is_distributive(const Lattice& L);

using Permutation = std::vector<Elem>;
// All order automorphisms, sorted lexicographically (identity first).
std::vector<Permutation> automorphisms(const Lattice& L);

// Sanity assertions on the lattice laws; returns a description of the first
// violation or an empty string.
std::string lattice_law_violation(const Lattice& L);

} // namespace radlat

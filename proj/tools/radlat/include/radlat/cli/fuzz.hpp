#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "radlat/lattice.hpp"
#include "radlat/relation.hpp"

namespace radlat::cli {

struct RunConfig {
    int max_blocks = 4;
    int max_block_size = 3;
    int lattice_size_cap = 32;     // fuzzed lattices for the relation suites
    int small_lattice_cap = 64;    // fuzzed distributive lattices for the small suites
    std::uint64_t seed = 1;
    int fuzz_count = 200;
};

struct FuzzInstance {
    std::string tag;
    LatticePtr lattice;
    Relation seeds;   // reflexive closure of the random seed pairs
    Relation h;       // join-shift closure of the seeds
    Relation dual_h;  // meet-shift closure of the seeds
};

// Draws are taken as raw 64-bit outputs reduced modulo the range, so the
// stream depends only on the seed and not on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int below(int n) { return n <= 1 ? 0 : int(g_() % std::uint64_t(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin(int percent) { return below(100) < percent; }

private:
    std::mt19937_64 g_;
};

// Random sub-lattices of Boolean lattices, chains, grids, gluings (top of one
// identified with the bottom of the next) and small non-distributive pieces.
LatticePtr random_lattice(Rng& rng, int cap);
// Sub-lattice of a Boolean lattice generated by random subsets.
LatticePtr random_distributive(Rng& rng, int max_atoms, int cap);

std::vector<FuzzInstance> fuzz_instances(const RunConfig& cfg);
std::vector<LatticePtr> fuzz_distributive(const RunConfig& cfg, int count);

} // namespace radlat::cli

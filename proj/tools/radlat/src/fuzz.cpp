#include "radlat/cli/fuzz.hpp"

#include <algorithm>
#include <set>

namespace radlat::cli {

namespace {

LatticePtr from_masks(const std::set<unsigned>& masks, const std::string& name) {
    std::vector<unsigned> v(masks.begin(), masks.end());
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int i = 0; i < int(v.size()); ++i)
        for (int j = 0; j < int(v.size()); ++j)
            if (i != j && (v[i] & ~v[j]) == 0) pairs.push_back({i, j});
    return Lattice::build(int(v.size()), pairs, PairMode::leq, {}, name);
}

// Ordinal sum with the top of a identified with the bottom of b.
LatticePtr glue(const Lattice& a, const Lattice& b) {
    const int na = a.size();
    std::vector<Elem> mb(b.size());
    int next = na;
    for (Elem e = 0; e < b.size(); ++e) mb[e] = e == b.bottom() ? a.top() : next++;
    std::vector<std::pair<Elem, Elem>> covers = a.covers();
    for (auto [x, y] : b.covers()) covers.push_back({mb[x], mb[y]});
    return Lattice::build(next, covers, PairMode::covers, {}, a.name() + "+" + b.name());
}

// Product order on a x b, element i*b + j.
LatticePtr grid(int a, int b) {
    std::vector<std::pair<Elem, Elem>> covers;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            if (i + 1 < a) covers.push_back({i * b + j, (i + 1) * b + j});
            if (j + 1 < b) covers.push_back({i * b + j, i * b + j + 1});
        }
    return Lattice::build(a * b, covers, PairMode::covers, {}, "C" + std::to_string(a) + "xC" + std::to_string(b));
}

LatticePtr small_piece(Rng& rng) {
    switch (rng.below(5)) {
    case 0: return m3();
    case 1: return n5();
    case 2: return chain(rng.between(1, 4));
    case 3: return boolean_lattice(rng.between(1, 2));
    default: return random_distributive(rng, 3, 8);
    }
}

} // namespace

LatticePtr random_distributive(Rng& rng, int max_atoms, int cap) {
    for (;;) {
        int k = rng.between(1, max_atoms);
        unsigned full = (1u << k) - 1;
        std::set<unsigned> masks = {0u, full};
        int gens = rng.between(1, k + 2);
        for (int i = 0; i < gens; ++i) masks.insert(unsigned(rng.below(int(full) + 1)));
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<unsigned> cur(masks.begin(), masks.end());
            for (unsigned x : cur)
                for (unsigned y : cur) {
                    grew |= masks.insert(x | y).second;
                    grew |= masks.insert(x & y).second;
                }
        }
        if (int(masks.size()) <= cap) return from_masks(masks, "D" + std::to_string(k) + "_" + std::to_string(masks.size()));
    }
}

LatticePtr random_lattice(Rng& rng, int cap) {
    for (;;) {
        LatticePtr L;
        switch (rng.below(7)) {
        case 0:
        case 1: L = random_distributive(rng, 5, cap); break;
        case 2: L = chain(rng.between(1, 8)); break;
        case 3: L = boolean_lattice(rng.between(1, 5)); break;
        case 6: L = grid(rng.between(2, 6), rng.between(2, 6)); break;
        case 4: L = glue(*small_piece(rng), *small_piece(rng)); break;
        default: {
            LatticePtr a = small_piece(rng);
            L = glue(*glue(*a, *small_piece(rng)), *small_piece(rng));
            if (rng.coin(50)) L = dual_lattice(*L);
        }
        }
        if (L->size() <= cap) return L;
    }
}

std::vector<FuzzInstance> fuzz_instances(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<FuzzInstance> out;
    for (int i = 0; i < cfg.fuzz_count; ++i) {
        LatticePtr L = random_lattice(rng, cfg.lattice_size_cap);
        const int n = L->size();
        std::vector<std::pair<Elem, Elem>> strict;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (L->lt(a, b)) strict.push_back({a, b});
        // Fewer seeds on retry so that the closures stay away from the full order.
        int budget = std::max(1, n / 2);
        Relation seeds(L), h(L), dh(L);
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::vector<std::pair<Elem, Elem>> pick;
            int s = strict.empty() ? 0 : rng.between(1, budget);
            for (int j = 0; j < s; ++j) pick.push_back(strict[std::size_t(rng.below(int(strict.size())))]);
            seeds = validate_relation(L, pick);
            h = h_closure(seeds);
            dh = dual_h_closure(seeds);
            if (n <= 2 || h.strict_pair_count() < strict.size()) break;
            budget = std::max(1, budget / 2);
        }
        out.push_back({"#" + std::to_string(i) + " " + L->name(), L, seeds, h, dh});
    }
    return out;
}

std::vector<LatticePtr> fuzz_distributive(const RunConfig& cfg, int count) {
    Rng rng(cfg.seed ^ 0x5a5a5a5aULL);
    std::vector<LatticePtr> out;
    for (int i = 0; i < count; ++i) out.push_back(random_distributive(rng, 6, cfg.small_lattice_cap));
    return out;
}

} // namespace radlat::cli

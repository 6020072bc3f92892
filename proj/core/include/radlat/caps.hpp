#pragma once

#include <cstddef>

namespace radlat {

struct Caps {
    std::size_t lattice_size = 4096;
    std::size_t model_blocks = 12;
    std::size_t automorphism_size = 512;
};

// Process-wide caps. Initialised from RADLAT_CAPS on first use, e.g.
// RADLAT_CAPS="lattice=8192,blocks=13,automorphisms=1024".
Caps& caps();

} // namespace radlat

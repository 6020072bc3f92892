#include "radlat/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace radlat {

namespace {

Caps load_caps() {
    Caps c;
    const char* env = std::getenv("RADLAT_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoul(item.substr(eq + 1));
        } catch (...) {
            continue;
        }
        if (value == 0) continue;
        if (key == "lattice") c.lattice_size = value;
        else if (key == "blocks") c.model_blocks = value;
        else if (key == "automorphisms") c.automorphism_size = value;
    }
    if (c.model_blocks > 24) c.model_blocks = 24;
    return c;
}

} // namespace

Caps& caps() {
    static Caps c = load_caps();
    return c;
}

} // namespace radlat

#ifndef FOFANA_CATALOG_HPP
#define FOFANA_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fofana/grid.hpp"

namespace fofana {

// Named closed-form test function. smooth = admissible for PDE-residual
// suites; compact_decay = falls below 1e-8 outside |x| <= side/4 (checked
// when realized); mean_zero = spectrum negligible near 0 (needed where
// half-order time derivatives are truncated).
struct CatalogEntry {
    std::string name;
    bool smooth = true;
    bool compact_decay = true;
    bool mean_zero = false;
    PointFunction f;
};

// Deterministic catalog for the given grid; the seed only feeds the
// random_field entry.
std::vector<CatalogEntry> default_catalog(const GridSpec& spec, std::uint64_t seed);

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

// Sample the entry on the grid; enforces the decay invariant for entries
// that claim it.
GridFunction realize(const CatalogEntry& entry, const GridSpec& spec);

}  // namespace fofana

#endif

#pragma once

#include "json.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgkit {

// One line of a catalog file:  name <TAB> polynomial [<TAB> expected-JSON]
// Blank lines and lines starting with '#' are skipped.
struct CatalogEntry {
    std::string name;
    std::string polynomial;
    std::optional<nlohmann::json> expected; // keys: mu, c_hat, group_order, state_dim
    std::size_t line = 0;
};

std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Entry names are "<family>-<label>"; a filter selects names with that prefix.
bool matches_filter(const CatalogEntry& entry, std::string_view filter);

} // namespace lgkit

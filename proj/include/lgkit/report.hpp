#pragma once

#include "lgkit/catalog.hpp"
#include "lgkit/error.hpp"
#include "lgkit/mirror.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace lgkit {

using Json = nlohmann::ordered_json;

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitNotInvertible = 2;
inline constexpr int kExitBound = 3;
inline constexpr int kExitConsistency = 4;
inline constexpr int kExitCatalogMismatch = 5;

int exit_code(ErrorKind kind);
Json error_document(const Error& e);

struct AnalyzeOptions {
    bool pairing = false;
    bool sectors = true;
    std::uint64_t max_group_order = kDefaultElementBound;
};

// Full report for one polynomial. Rationals are strings in canonical "p/q" form.
Json analyze(const Polynomial& p, const AnalyzeOptions& options = {});

Json transpose_document(const Polynomial& p);
Json good_basis_document(const Polynomial& p);
Json state_space_document(const Polynomial& p, std::uint64_t max_group_order);

struct CatalogRun {
    Json document;
    std::size_t failed = 0;
};

// Entries are analyzed on up to `jobs` threads; the document lists them in
// catalog order.
CatalogRun run_catalog(const std::vector<CatalogEntry>& entries, unsigned jobs,
                       std::uint64_t max_group_order = kDefaultElementBound);

// Plain-text rendering for --pretty.
std::string pretty(const Json& doc);

} // namespace lgkit

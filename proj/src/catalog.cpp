#include "lgkit/catalog.hpp"

#include "lgkit/error.hpp"

#include <fstream>

namespace lgkit {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

} // namespace

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
    std::vector<CatalogEntry> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
            throw Error(ErrorKind::Parse, "catalog line " + std::to_string(number) +
                                              ": expected name<TAB>polynomial[<TAB>json]");
        }
        CatalogEntry e{fields[0], fields[1], std::nullopt, number};
        if (fields.size() == 3 && !fields[2].empty()) {
            try {
                e.expected = nlohmann::json::parse(fields[2]);
            } catch (const nlohmann::json::exception& ex) {
                throw Error(ErrorKind::Parse,
                            "catalog line " + std::to_string(number) + ": bad expectation JSON: " + ex.what());
            }
            if (!e.expected->is_object()) {
                throw Error(ErrorKind::Parse, "catalog line " + std::to_string(number) +
                                                  ": expectation must be a JSON object");
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open catalog " + path);
    return parse_catalog(in);
}

bool matches_filter(const CatalogEntry& entry, std::string_view filter) {
    return filter.empty() || std::string_view(entry.name).substr(0, filter.size()) == filter;
}

} // namespace lgkit

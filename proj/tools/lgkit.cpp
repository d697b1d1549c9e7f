// lgkit: command-line front end for invertible polynomial singularities.

#include "lgkit/catalog.hpp"
#include "lgkit/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

std::uint64_t default_bound() {
    if (const char* env = std::getenv("LGKIT_MAX_GROUP_ORDER")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed LGKIT_MAX_GROUP_ORDER=" << env << '\n';
        }
    }
    return lgkit::kDefaultElementBound;
}

void emit(const lgkit::Json& doc, bool as_text) {
    if (as_text) {
        std::cout << lgkit::pretty(doc);
    } else {
        std::cout << doc.dump(2) << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invertible polynomial singularities: classification, symmetry, mirror checks"};
    app.require_subcommand(1);

    std::string poly_text;
    bool pretty = false;
    bool pairing = false;
    std::uint64_t max_order = default_bound();

    auto* analyze = app.add_subcommand("analyze", "full report for one polynomial");
    analyze->add_option("polynomial", poly_text, "e.g. \"x1^3 + x2^3 + x3^3\"")->required();
    analyze->add_flag("--pairing", pairing, "include the residue pairing on the Jacobian basis");
    analyze->add_flag("--pretty", pretty, "human-readable output");
    analyze->add_option("--max-group-order", max_order, "group enumeration bound");

    std::string filter;
    std::string catalog_path = LGKIT_DEFAULT_CATALOG;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* catalog = app.add_subcommand("catalog", "check every catalog entry against its expectations");
    catalog->add_option("--filter", filter, "only entries whose name starts with this prefix");
    catalog->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    catalog->add_option("--catalog", catalog_path, "catalog file (name<TAB>polynomial<TAB>json)");
    catalog->add_flag("--pretty", pretty, "human-readable output");
    catalog->add_option("--max-group-order", max_order, "group enumeration bound");

    auto* transpose = app.add_subcommand("transpose", "Berglund-Hubsch transpose");
    transpose->add_option("polynomial", poly_text)->required();
    transpose->add_flag("--pretty", pretty);

    auto* good_basis = app.add_subcommand("good-basis", "standard good basis of the Jacobian algebra");
    good_basis->add_option("polynomial", poly_text)->required();
    good_basis->add_flag("--pretty", pretty);

    auto* state_space = app.add_subcommand("state-space", "sector decomposition of the state space");
    state_space->add_option("polynomial", poly_text)->required();
    state_space->add_flag("--pretty", pretty);
    state_space->add_option("--max-group-order", max_order, "group enumeration bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog->parsed()) {
            std::vector<lgkit::CatalogEntry> selected;
            for (auto& e : lgkit::load_catalog(catalog_path))
                if (lgkit::matches_filter(e, filter)) selected.push_back(std::move(e));
            auto run = lgkit::run_catalog(selected, jobs, max_order);
            emit(run.document, pretty);
            if (run.failed != 0) {
                std::cerr << run.failed << " catalog entries failed\n";
                return lgkit::kExitCatalogMismatch;
            }
            return lgkit::kExitOk;
        }

        const auto p = lgkit::parse_polynomial(poly_text);
        if (analyze->parsed()) {
            lgkit::AnalyzeOptions opts;
            opts.pairing = pairing;
            opts.max_group_order = max_order;
            emit(lgkit::analyze(p, opts), pretty);
        } else if (transpose->parsed()) {
            emit(lgkit::transpose_document(p), pretty);
        } else if (good_basis->parsed()) {
            emit(lgkit::good_basis_document(p), pretty);
        } else if (state_space->parsed()) {
            emit(lgkit::state_space_document(p, max_order), pretty);
        }
    } catch (const lgkit::Error& e) {
        std::cerr << lgkit::error_document(e).dump() << '\n';
        return lgkit::exit_code(e.kind());
    }
    return lgkit::kExitOk;
}

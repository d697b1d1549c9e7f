#include "lgkit/report.hpp"

#include "lgkit/jacobian.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace lgkit {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::NotInvertible: return kExitNotInvertible;
    case ErrorKind::BoundExceeded: return kExitBound;
    case ErrorKind::Consistency:
    case ErrorKind::InvalidArgument: return kExitConsistency;
    }
    return kExitConsistency;
}

Json error_document(const Error& e) {
    Json err;
    err["kind"] = to_string(e.kind());
    err["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
    err["exit_code"] = exit_code(e.kind());
    Json doc;
    doc["error"] = std::move(err);
    return doc;
}

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(to_string(z));
}

Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

Json one_based(const std::vector<std::size_t>& vars) {
    Json out = Json::array();
    for (auto v : vars) out.push_back(v + 1);
    return out;
}

Json blocks_json(const InvertibleStructure& s) {
    Json blocks = Json::array();
    for (const auto& b : s.blocks) {
        Json jb;
        jb["kind"] = to_string(b.kind);
        jb["variables"] = one_based(b.variables);
        jb["exponents"] = b.exponents;
        if (b.kind == BlockKind::Chain) jb["orientation"] = to_string(b.orientation);
        blocks.push_back(std::move(jb));
    }
    return blocks;
}

Json mirror_json(const MirrorReport& m) {
    Json j;
    j["state_dim"] = m.state_dim;
    j["mirror_milnor"] = integer_json(m.mirror_milnor);
    j["good_basis_size"] = m.good_basis_size;
    j["equal"] = m.equal;
    j["weight_half_chain"] = m.weight_half_chain;
    return j;
}

Json state_space_json(const StateSpace& ss, bool sectors) {
    Json j;
    j["total_dimension"] = ss.total_dimension;
    j["sector_count"] = ss.sectors.size();
    if (sectors) {
        Json list = Json::array();
        for (const auto& s : ss.sectors) {
            Json js;
            js["element"] = rationals_json(s.element.phases);
            js["fixed"] = one_based(s.fixed);
            js["restricted_polynomial"] = s.restricted ? Json(format_polynomial(*s.restricted)) : Json(nullptr);
            js["dimension"] = s.dimension;
            list.push_back(std::move(js));
        }
        j["sectors"] = std::move(list);
    }
    return j;
}

Json monomials_json(const std::vector<Monomial>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(format_monomial(m.exponents));
    return out;
}

} // namespace

Json analyze(const Polynomial& p, const AnalyzeOptions& options) {
    const auto s = check_invertible(p);
    const auto ws = weight_system(s.matrix);
    const auto group = max_symmetry_group(s.matrix);
    const auto j_elem = exponential_grading_element(s.matrix, ws.weights);
    const auto good = standard_good_basis(s);
    const auto space = fjrw_state_space(s, options.max_group_order);
    const auto mirror = mirror_check(s, space);

    Json doc;
    doc["polynomial"] = format_polynomial(p);
    doc["num_vars"] = p.num_vars();

    Json cls;
    cls["invertible"] = true;
    cls["blocks"] = blocks_json(s);
    if (auto label = ade_label(s); !label.empty()) cls["ade_label"] = label;
    doc["classification"] = std::move(cls);

    Json matrix = Json::array();
    for (std::size_t i = 0; i < s.matrix.rows(); ++i) matrix.push_back(s.matrix.row(i));
    doc["exponent_matrix"] = std::move(matrix);

    doc["weights"] = rationals_json(ws.weights);
    Json warnings = Json::array();
    for (auto v : ws.half_weight_variables) {
        warnings.push_back("weight of x" + std::to_string(v + 1) + " is 1/2 (admissible boundary)");
    }
    doc["weight_warnings"] = std::move(warnings);
    doc["central_charge"] = to_string(ws.central_charge);
    doc["milnor_number"] = integer_json(ws.milnor_number);

    Json g;
    g["order"] = integer_json(group.order);
    Json factors = Json::array();
    for (const auto& d : group.invariant_factors) factors.push_back(integer_json(d));
    g["invariant_factors"] = std::move(factors);
    Json gens = Json::array();
    for (const auto& gen : group.generators) gens.push_back(rationals_json(gen.phases));
    g["generators"] = std::move(gens);
    g["exponential_grading_element"] = rationals_json(j_elem.phases);
    doc["group"] = std::move(g);

    doc["transpose"] = format_polynomial(transpose(s));
    doc["good_basis"] = monomials_json(good);
    doc["state_space"] = state_space_json(space, options.sectors);

    if (options.pairing) {
        const auto basis = jacobian_basis(p, ws.weights);
        const auto pairing = residue_pairing(p, ws.weights, basis);
        Json jp;
        Json names = Json::array();
        Json degrees = Json::array();
        for (const auto& e : basis.elements) {
            names.push_back(format_monomial(e.exponents));
            degrees.push_back(to_string(e.degree));
        }
        jp["basis"] = std::move(names);
        jp["degrees"] = std::move(degrees);
        Json rows = Json::array();
        for (std::size_t i = 0; i < pairing.matrix.rows(); ++i) rows.push_back(rationals_json(pairing.matrix.row(i)));
        jp["matrix"] = std::move(rows);
        doc["residue_pairing"] = std::move(jp);
    }

    doc["mirror"] = mirror_json(mirror);
    return doc;
}

Json transpose_document(const Polynomial& p) {
    const auto s = check_invertible(p);
    const auto t = check_invertible(transpose(s));
    Json doc;
    doc["polynomial"] = format_polynomial(p);
    doc["transpose"] = format_polynomial(t.polynomial);
    doc["blocks"] = blocks_json(t);
    return doc;
}

Json good_basis_document(const Polynomial& p) {
    const auto s = check_invertible(p);
    const auto q = weights(s.matrix).q;
    const auto good = standard_good_basis(s);
    Json doc;
    doc["polynomial"] = format_polynomial(p);
    doc["size"] = good.size();
    Json list = Json::array();
    for (const auto& m : good) {
        Json jm;
        jm["monomial"] = format_monomial(m.exponents);
        jm["degree"] = to_string(weighted_degree(m.exponents, q));
        list.push_back(std::move(jm));
    }
    doc["basis"] = std::move(list);
    return doc;
}

Json state_space_document(const Polynomial& p, std::uint64_t max_group_order) {
    const auto s = check_invertible(p);
    Json doc;
    doc["polynomial"] = format_polynomial(p);
    doc["state_space"] = state_space_json(fjrw_state_space(s, max_group_order), true);
    return doc;
}

namespace {

Json run_entry(const CatalogEntry& entry, std::uint64_t max_group_order) {
    Json out;
    out["name"] = entry.name;
    out["polynomial"] = entry.polynomial;
    Json computed;
    try {
        const auto p = parse_polynomial(entry.polynomial);
        AnalyzeOptions opts;
        opts.sectors = false;
        opts.max_group_order = max_group_order;
        const auto doc = analyze(p, opts);
        computed["mu"] = doc["milnor_number"];
        computed["c_hat"] = doc["central_charge"];
        computed["group_order"] = doc["group"]["order"];
        computed["state_dim"] = doc["state_space"]["total_dimension"];
        computed["mirror_milnor"] = doc["mirror"]["mirror_milnor"];
        computed["mirror_equal"] = doc["mirror"]["equal"];
    } catch (const Error& e) {
        out["status"] = "fail";
        out["error"] = error_document(e)["error"];
        return out;
    }

    Json mismatches = Json::array();
    if (!computed["mirror_equal"].get<bool>()) mismatches.push_back("mirror_equal");
    if (entry.expected) {
        for (const auto& [key, value] : entry.expected->items()) {
            if (!computed.contains(key)) {
                mismatches.push_back(key + ": unknown expectation key");
            } else if (Json(value) != computed[key]) {
                mismatches.push_back(key + ": expected " + value.dump() + ", got " + computed[key].dump());
            }
        }
    }
    out["status"] = mismatches.empty() ? "pass" : "fail";
    out["computed"] = std::move(computed);
    if (!mismatches.empty()) out["mismatches"] = std::move(mismatches);
    return out;
}

} // namespace

CatalogRun run_catalog(const std::vector<CatalogEntry>& entries, unsigned jobs, std::uint64_t max_group_order) {
    std::vector<Json> results(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            results[i] = run_entry(entries[i], max_group_order);
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    CatalogRun run;
    Json list = Json::array();
    Json failing = Json::array();
    for (auto& r : results) {
        if (r["status"] != "pass") {
            ++run.failed;
            failing.push_back(r["name"]);
        }
        list.push_back(std::move(r));
    }
    run.document["entries"] = std::move(list);
    Json summary;
    summary["total"] = entries.size();
    summary["passed"] = entries.size() - run.failed;
    summary["failed"] = run.failed;
    summary["failing"] = std::move(failing);
    run.document["summary"] = std::move(summary);
    return run;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += scalar_text(v[i]);
        }
        return s + ")";
    }
    if (v.is_object()) return v.dump();
    return v.dump();
}

bool is_flat(const Json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_object() && !x.is_array(); });
}

void render(std::ostringstream& os, const Json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (is_flat(value)) {
                os << pad << key << ": " << scalar_text(value) << '\n';
            } else {
                os << pad << key << ":\n";
                render(os, value, indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (is_flat(item)) {
                os << pad << "- " << scalar_text(item) << '\n';
            } else {
                os << pad << "-\n";
                render(os, item, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(v) << '\n';
    }
}

} // namespace

std::string pretty(const Json& doc) {
    std::ostringstream os;
    if (doc.contains("entries") && doc.contains("summary")) {
        for (const auto& e : doc["entries"]) {
            os << (e["status"] == "pass" ? "PASS  " : "FAIL  ") << e["name"].get<std::string>();
            if (e.contains("computed")) {
                const auto& c = e["computed"];
                os << "  mu=" << scalar_text(c["mu"]) << " c_hat=" << scalar_text(c["c_hat"])
                   << " |G|=" << scalar_text(c["group_order"]) << " state_dim=" << scalar_text(c["state_dim"]);
            }
            if (e.contains("mismatches")) os << "  " << scalar_text(e["mismatches"]);
            if (e.contains("error")) os << "  " << e["error"]["message"].get<std::string>();
            os << '\n';
        }
        const auto& s = doc["summary"];
        os << s["passed"].get<std::size_t>() << "/" << s["total"].get<std::size_t>() << " entries passed\n";
        return os.str();
    }
    render(os, doc, 0);
    return os.str();
}

} // namespace lgkit

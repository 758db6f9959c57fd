#include "pgroup/catalog_io.hpp"

#include <cctype>

#include <json.hpp>

#include "pgroup/errors.hpp"
#include "pgroup/modp.hpp"

namespace pgroup {

using nlohmann::json;

namespace {

json ranges_to_json(const CatalogRanges& r) {
    return json{{"n_max", r.n_max}, {"m_max", r.m_max}, {"k_max", r.k_max},
                {"r_max", r.r_max}, {"types", r.types}, {"max_order_log", r.max_order_log}};
}

json entry_to_json(const CatalogEntry& e) {
    const auto& pres = e.presentation;
    json gens = json::array();
    json power = json::array();
    json comm = json::array();
    for (std::size_t i = 0; i < pres.size(); ++i) {
        const auto& g = pres.generator(i);
        gens.push_back({{"name", g.name}, {"exponent", g.exponent}, {"central", g.central}});
        power.push_back(pres.power_relation(i));
        for (std::size_t j = 0; j < pres.size(); ++j)
            if (pres.commutator_entry(i, j) != 0) comm.push_back({i, j, pres.commutator_entry(i, j)});
    }
    const auto& q = e.params;
    return json{
        {"type", e.type_name()},
        {"params", {{"p", q.p}, {"n", q.n}, {"m", q.m}, {"k", q.k}, {"r", q.r}}},
        {"generators", gens},
        {"power", power},
        {"commutators", comm},
        {"derived", pres.derived_vector()},
        {"expected",
         {{"order_log", e.expected.order_log},
          {"exponent_log", e.expected.exponent_log},
          {"tag", to_string(e.expected.tag)},
          {"center", e.expected.center}}},
        {"marks", e.marks},
    };
}

// Byte offsets of the objects in the top-level "entries" array. Only called on
// text the JSON parser already accepted, so the scan can stay simple.
std::vector<std::size_t> entry_offsets(std::string_view t) {
    std::vector<std::size_t> out;
    int depth = 0;
    bool in_entries = false;
    std::string last_key;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const char ch = t[i];
        if (ch == '"') {
            const std::size_t start = i + 1;
            for (++i; i < t.size() && t[i] != '"'; ++i)
                if (t[i] == '\\') ++i;
            std::size_t k = i + 1;
            while (k < t.size() && std::isspace(static_cast<unsigned char>(t[k]))) ++k;
            if (depth == 1 && k < t.size() && t[k] == ':') last_key = std::string(t.substr(start, i - start));
        } else if (ch == '{' || ch == '[') {
            if (depth == 1 && ch == '[') in_entries = last_key == "entries";
            if (depth == 2 && ch == '{' && in_entries) out.push_back(i);
            ++depth;
        } else if (ch == '}' || ch == ']') {
            --depth;
            if (depth == 1) in_entries = false;
        }
    }
    return out;
}

Exponents exponent_vector(const json& j, std::size_t len, const std::string& what) {
    auto v = j.get<Exponents>();
    if (v.size() != len) throw std::invalid_argument(what + " has length " + std::to_string(v.size()));
    return v;
}

CatalogEntry entry_from_json(const json& j, int prime) {
    CatalogEntry e;
    const std::string type = j.at("type").get<std::string>();
    if (type.rfind("T1_", 0) != 0) throw std::invalid_argument("unknown type " + type);
    e.type_id = std::stoi(type.substr(3));
    if (e.type_id < 1 || e.type_id > kTypeCount) throw std::invalid_argument("unknown type " + type);
    const auto& q = j.at("params");
    e.params = {q.at("p").get<int>(), q.at("n").get<int>(), q.at("m").get<int>(), q.at("k").get<int>(),
                q.at("r").get<int>()};
    if (e.params.p != prime) throw std::invalid_argument("entry prime differs from header prime");

    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("exponent").get<int>(), g.at("central").get<bool>()});
    const std::size_t n = gens.size();
    PcPresentation pres(prime, std::move(gens));
    const auto& power = j.at("power");
    if (power.size() != n) throw std::invalid_argument("power has " + std::to_string(power.size()) + " rows");
    for (std::size_t i = 0; i < n; ++i) pres.set_power(i, exponent_vector(power[i], n, "power row"));
    for (const auto& t : j.at("commutators")) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("commutator entry is not an [i, j, value] triple");
        const auto a = t[0].get<std::size_t>(), b = t[1].get<std::size_t>();
        if (a >= n || b >= n) throw std::invalid_argument("commutator index out of range");
        pres.set_commutator_entry(a, b, t[2].get<std::int64_t>());
    }
    pres.set_derived(exponent_vector(j.at("derived"), n, "derived"));
    e.presentation = std::move(pres);

    const auto& x = j.at("expected");
    e.expected.order_log = x.at("order_log").get<int>();
    e.expected.exponent_log = x.at("exponent_log").get<int>();
    const std::string tag = x.at("tag").get<std::string>();
    if (tag.size() != 2 || tag[0] != 'A' || tag[1] < '1' || tag[1] > '4') throw std::invalid_argument("bad tag " + tag);
    e.expected.tag = static_cast<CenterTag>(tag[1] - '0');
    e.expected.center = x.at("center").get<std::vector<int>>();
    for (const auto& [name, v] : j.at("marks").items()) e.marks[name] = exponent_vector(v, n, "mark " + name);
    return e;
}

}  // namespace

std::string serialize(const CatalogFile& file) {
    json entries = json::array();
    for (const auto& e : file.entries) entries.push_back(entry_to_json(e));
    const json doc{{"format_version", file.format_version},
                   {"prime", file.ranges.p},
                   {"ranges", ranges_to_json(file.ranges)},
                   {"entries", entries}};
    return doc.dump(1) + "\n";
}

CatalogFile parse_catalog(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    CatalogFile file;
    try {
        if (!doc.is_object()) throw std::invalid_argument("top level is not an object");
        file.format_version = doc.at("format_version").get<int>();
        if (file.format_version != kCatalogFormatVersion)
            throw std::invalid_argument("unsupported format_version " + std::to_string(file.format_version));
        file.ranges.p = doc.at("prime").get<int>();
        if (file.ranges.p < 3 || !is_prime(file.ranges.p)) throw std::invalid_argument("prime must be an odd prime");
        const auto& r = doc.at("ranges");
        file.ranges.n_max = r.at("n_max").get<int>();
        file.ranges.m_max = r.at("m_max").get<int>();
        file.ranges.k_max = r.at("k_max").get<int>();
        file.ranges.r_max = r.at("r_max").get<int>();
        file.ranges.types = r.at("types").get<std::vector<int>>();
        file.ranges.max_order_log = r.at("max_order_log").get<int>();
        if (!doc.at("entries").is_array()) throw std::invalid_argument("entries is not a list");
    } catch (const std::exception& e) {
        throw ParseError(std::string("header: ") + e.what(), 0);
    }
    const auto& entries = doc.at("entries");
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        try {
            file.entries.push_back(entry_from_json(entries[i], file.ranges.p));
        } catch (const std::exception& e) {
            if (offsets.empty()) offsets = entry_offsets(text);
            throw ParseError("entries[" + std::to_string(i) + "]: " + e.what(), i < offsets.size() ? offsets[i] : 0);
        }
    }
    return file;
}

CatalogFile make_catalog_file(const CatalogRanges& ranges) {
    CatalogFile f;
    f.ranges = ranges;
    f.entries = build_catalog(ranges);
    return f;
}

}  // namespace pgroup

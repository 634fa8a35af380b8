#include "mtop/matroid_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mtop {

namespace {

using nlohmann::json;

Mask set_from_json(const json& arr, int n, bool one_indexed) {
    Mask m = 0;
    if (!arr.is_array()) throw parse_error("expected an array of integers");
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw parse_error("expected an integer element");
        int e = v.get<int>() - (one_indexed ? 1 : 0);
        if (e < 0 || e >= n) throw parse_error("element out of range: " + v.dump());
        m |= bit(e);
    }
    return m;
}

}  // namespace

Matroid parse_matroid_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n")) throw parse_error("missing field: n");
    int n = doc["n"].get<int>();
    if (n < 0 || n > kMaxGroundSet) throw parse_error("n out of range");
    bool one_indexed = doc.value("one_indexed", false);
    int given = doc.contains("bases") + doc.contains("circuits") + doc.contains("graph");
    if (given != 1) throw parse_error("exactly one of bases/circuits/graph must be present");

    try {
        if (doc.contains("bases")) {
            std::vector<Mask> bases;
            for (const auto& b : doc["bases"]) bases.push_back(set_from_json(b, n, one_indexed));
            return Matroid::from_bases(n, std::move(bases));
        }
        if (doc.contains("circuits")) {
            if (!doc.contains("rank")) throw parse_error("circuits input requires rank");
            int d = doc["rank"].get<int>();
            if (d < 0 || d > n) throw parse_error("rank out of range");
            std::vector<Mask> circuits;
            for (const auto& c : doc["circuits"]) circuits.push_back(set_from_json(c, n, one_indexed));
            // independent iff it contains no circuit; bases are the d-subsets
            std::vector<Mask> bases;
            for_each_subset_of_size(n, d, [&](Mask s) {
                for (Mask c : circuits)
                    if (subset_of(c, s)) return;
                bases.push_back(s);
            });
            if (bases.empty()) throw parse_error("no basis avoids the circuits");
            return Matroid::from_bases(n, std::move(bases));
        }
        const auto& g = doc["graph"];
        if (!g.contains("vertices") || !g.contains("edges")) throw parse_error("graph needs vertices and edges");
        GraphInput in;
        in.vertices = g["vertices"].get<int>();
        for (const auto& e : g["edges"]) {
            if (!e.is_array() || e.size() != 2) throw parse_error("edge must be a pair");
            int off = one_indexed ? 1 : 0;
            in.edges.emplace_back(e[0].get<int>() - off, e[1].get<int>() - off);
        }
        Matroid m = graphic(in);
        if (m.n() != n) throw parse_error("n does not match the number of edges");
        return m;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad matroid file: ") + e.what());
    } catch (const basis_axiom_error& e) {
        throw parse_error(std::string("input is not a matroid: ") + e.what());
    }
}

Matroid load_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matroid_json(ss.str());
}

std::string emit_matroid_json(const Matroid& m, bool one_indexed) {
    json doc;
    doc["n"] = m.n();
    doc["rank"] = m.rank();
    if (one_indexed) doc["one_indexed"] = true;
    json bases = json::array();
    for (Mask b : m.bases()) {
        json row = json::array();
        for (int e : elements_of(b)) row.push_back(e + (one_indexed ? 1 : 0));
        bases.push_back(row);
    }
    doc["bases"] = bases;
    return doc.dump(2);
}

}  // namespace mtop

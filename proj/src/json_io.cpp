#include "koebe/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

}  // namespace

json graph_to_json(const PlanarGraph& g) {
    json j;
    j["n"] = g.num_vertices();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_rotation()) j["rotation"] = *g.rotation_system();
    return j;
}

PlanarGraph graph_from_json(const json& j) {
    const int n = field<int>(j, "n");
    if (n < 0) throw InputError("negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
        if (e.size() != 2) throw InputError("edge must have two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    std::optional<std::vector<std::vector<Vertex>>> rotation;
    if (j.contains("rotation") && !j["rotation"].is_null())
        rotation = field<std::vector<std::vector<Vertex>>>(j, "rotation");
    return PlanarGraph::from_edges(n, edges, std::move(rotation));
}

json ordering_to_json(const VertexOrdering& ord) { return ord.order(); }

VertexOrdering ordering_from_json(const json& j, int n) {
    std::vector<Vertex> ids;
    try {
        ids = j.get<std::vector<Vertex>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("ordering must be an array of ids: ") + e.what());
    }
    if (static_cast<int>(ids.size()) != n)
        throw InputError("ordering has " + std::to_string(ids.size()) + " ids, graph has " + std::to_string(n));
    return VertexOrdering::from_ids(std::move(ids));
}

json model_to_json(const CoinModel& m) {
    json discs = json::array();
    for (int v = 0; v < m.size(); ++v)
        discs.push_back({{"id", v}, {"x", m[v].center.x}, {"y", m[v].center.y}, {"r", m[v].radius}});
    return {{"discs", std::move(discs)}};
}

CoinModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("discs") || !j["discs"].is_array()) throw InputError("missing \"discs\" array");
    std::map<int, Disc> byid;
    for (const auto& d : j["discs"]) {
        const int id = field<int>(d, "id");
        Disc disc{{field<double>(d, "x"), field<double>(d, "y")}, field<double>(d, "r")};
        if (!(disc.radius > 0)) throw InputError("disc " + std::to_string(id) + " has non-positive radius");
        if (!byid.emplace(id, disc).second) throw InputError("duplicate disc id " + std::to_string(id));
    }
    CoinModel m;
    int expect = 0;
    for (auto& [id, disc] : byid) {
        if (id != expect++) throw InputError("disc ids must be 0..n-1");
        m.discs.push_back(disc);
    }
    return m;
}

json witness_to_json(const WitnessFamily& f) {
    json j{{"kind", to_string(f.kind)}, {"paths", f.paths}};
    if (f.kind != WitnessFamily::Kind::trimmed) {
        j["w"] = f.w;
        j["s"] = f.s;
    }
    return j;
}

WitnessFamily witness_from_json(const json& j) {
    WitnessFamily f;
    const auto kind = field<std::string>(j, "kind");
    if (kind == "P") f.kind = WitnessFamily::Kind::P;
    else if (kind == "Q") f.kind = WitnessFamily::Kind::Q;
    else if (kind == "trimmed") f.kind = WitnessFamily::Kind::trimmed;
    else throw InputError("unknown witness kind \"" + kind + "\"");
    f.paths = field<std::vector<std::vector<Vertex>>>(j, "paths");
    if (j.contains("w")) f.w = field<std::string>(j, "w");
    if (j.contains("s")) f.s = field<std::string>(j, "s");
    return f;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace koebe

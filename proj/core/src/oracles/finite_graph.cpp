#include <lacegate/oracles/finite_graph.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lacegate::oracle
{

using nlohmann::json;

void finite_graph::validate() const
{
    const std::size_t n = vertex_count();
    if (n == 0) {
        throw std::invalid_argument("graph without vertices");
    }
    if (source >= n || target >= n) {
        throw std::invalid_argument("source or target is not a vertex");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &b : bonds) {
        if (b.u >= n || b.v >= n) {
            throw std::invalid_argument("bond endpoint is not a vertex");
        }
        if (b.u == b.v) {
            throw std::invalid_argument("self-loop bond");
        }
        if (!seen.insert(std::minmax(b.u, b.v)).second) {
            throw std::invalid_argument("repeated bond");
        }
        if (b.probability < 0 || b.probability > 1) {
            throw std::invalid_argument("bond probability outside [0, 1]");
        }
    }
}

namespace
{

std::size_t resolve(const json &vertices, const json &ref)
{
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (vertices[j] == ref) {
            return j;
        }
    }
    if (ref.is_number_unsigned() && ref.get<std::size_t>() < vertices.size()) {
        return ref.get<std::size_t>();
    }
    throw std::invalid_argument("unknown vertex " + ref.dump());
}

big_rational read_probability(const json &p)
{
    if (p.is_string()) {
        return parse_rational(p.get<std::string>());
    }
    if (p.is_number_integer()) {
        return big_rational(p.get<long>());
    }
    throw std::invalid_argument("bond probability must be a string such as \"1/2\"");
}

std::vector<lattice_site> read_coordinates(const json &vertices)
{
    std::vector<lattice_site> coords;
    std::size_t d = 0;
    for (const auto &v : vertices) {
        if (!v.is_array() || v.empty() || (d != 0 && v.size() != d)) {
            return {};
        }
        d = v.size();
        lattice_site x;
        for (const auto &c : v) {
            if (!c.is_number_integer()) {
                return {};
            }
            x.coords.push_back(c.get<int>());
        }
        coords.push_back(std::move(x));
    }
    return coords;
}

} // namespace

finite_graph parse_graph_json(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("vertices") || !root["vertices"].is_array()
        || !root.contains("bonds") || !root["bonds"].is_array()) {
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"bonds\" arrays");
    }
    const json &vertices = root["vertices"];
    finite_graph g;
    std::set<std::string> distinct;
    for (const auto &v : vertices) {
        g.labels.push_back(v.dump());
        if (!distinct.insert(g.labels.back()).second) {
            throw std::invalid_argument("repeated vertex " + g.labels.back());
        }
    }
    g.coordinates = read_coordinates(vertices);
    for (const auto &b : root["bonds"]) {
        if (!b.is_array() || b.size() != 3) {
            throw std::invalid_argument("each bond must be [u, v, probability]");
        }
        g.bonds.push_back({resolve(vertices, b[0]), resolve(vertices, b[1]), read_probability(b[2])});
    }
    if (vertices.empty()) {
        throw std::invalid_argument("graph without vertices");
    }
    g.source = root.contains("source") ? resolve(vertices, root["source"]) : 0;
    g.target = root.contains("target") ? resolve(vertices, root["target"]) : vertices.size() - 1;
    g.validate();
    return g;
}

finite_graph load_graph_json(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open graph file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_json(buffer.str());
}

std::string graph_to_json(const finite_graph &g)
{
    json root;
    root["vertices"] = json::array();
    for (const auto &label : g.labels) {
        root["vertices"].push_back(json::parse(label));
    }
    root["bonds"] = json::array();
    const json &vertices = root["vertices"];
    for (const auto &b : g.bonds) {
        root["bonds"].push_back({vertices[b.u], vertices[b.v], b.probability.get_str()});
    }
    root["source"] = vertices[g.source];
    root["target"] = vertices[g.target];
    return root.dump();
}

} // namespace lacegate::oracle

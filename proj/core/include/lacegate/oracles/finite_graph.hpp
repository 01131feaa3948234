#ifndef LACEGATE_ORACLES_FINITE_GRAPH_HPP
#define LACEGATE_ORACLES_FINITE_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <lacegate/number.hpp>
#include <lacegate/oracles/lattice.hpp>

namespace lacegate::oracle
{

struct bond {
    std::size_t u = 0;
    std::size_t v = 0;
    big_rational probability;
};

// Simple graph with an independent occupation probability per bond.
struct finite_graph {
    // JSON text of each vertex as given in the input
    std::vector<std::string> labels;
    // set when every vertex is a lattice point of one common dimension
    std::vector<lattice_site> coordinates;
    std::vector<bond> bonds;
    std::size_t source = 0;
    std::size_t target = 0;

    std::size_t vertex_count() const
    {
        return labels.size();
    }
    bool has_coordinates() const
    {
        return !coordinates.empty();
    }

    // Throws std::invalid_argument for loops, repeated bonds, bad indices or
    // probabilities outside [0, 1].
    void validate() const;
};

// {"vertices": [...], "bonds": [[u, v, "num/den"], ...], "source": s, "target": t}
// Bond endpoints and source/target refer to vertices by value, or by index
// when no vertex equals them. source and target default to the first and the
// last vertex.
finite_graph parse_graph_json(std::string_view text);
finite_graph load_graph_json(const std::string &path);
std::string graph_to_json(const finite_graph &g);

} // namespace lacegate::oracle

#endif

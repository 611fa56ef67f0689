#pragma once

#include <map>
#include <string>
#include <vector>

#include "koebe/graph.hpp"
#include "koebe/reach.hpp"

namespace koebe {

enum class Side { NW = 0, NE = 1, SE = 2, SW = 3 };

/// One 2^k x 2^k grid H_w. Cell (r, c) has id base + r * m + c with the N
/// corner at (0, 0): NW is column 0, NE row 0, SE column m-1, SW row m-1,
/// each listed north to south.
struct TreeGrid {
    std::string word;
    Vertex base = 0;
    std::vector<Vertex> sides[4];

    const std::vector<Vertex>& side(Side s) const { return sides[static_cast<int>(s)]; }
};

struct AdmLowerInstance {
    int k = 0;
    int m = 0;  ///< 2^k
    std::vector<TreeGrid> grids;         ///< words of length < k
    std::map<std::string, int> grid_of;      ///< word -> index into grids
    std::map<std::string, Vertex> apex;      ///< words of length k -> v_u
    PlanarGraph graph;

    const TreeGrid& grid(const std::string& w) const { return grids[static_cast<std::size_t>(grid_of.at(w))]; }
    /// Word of the grid containing v; false for apexes.
    bool grid_word(Vertex v, std::string& word) const;
    bool is_apex(Vertex v) const { return v >= static_cast<Vertex>(grids.size()) * m * m; }
    /// Admissibility radius k 2^(k+2).
    int radius() const { return k << (k + 2); }
};

/// Grids H_w for words w over {W, E} shorter than k, matching edges between
/// SW_w and NE_{wW} (SE_w and NW_{wE}), and apexes v_u for words of length k.
/// InputError unless k >= 2.
AdmLowerInstance gen_adm_lower(int k);

struct WitnessFamily {
    enum class Kind { P, Q, trimmed };
    Kind kind = Kind::Q;
    std::string w;  ///< prefix word
    std::string s;  ///< P: the appended symbol; Q/trimmed: the apex word u
    std::vector<std::vector<Vertex>> paths;
};

std::string to_string(WitnessFamily::Kind k);

/// Families P_{ws} for every w in K and s in {W, E}, keyed by ws.
std::map<std::string, WitnessFamily> build_p_families(const AdmLowerInstance& inst);
/// Q_u = Q_{epsilon, u} for every apex word u, keyed by u. Throws
/// VerificationError if the routing produces an invalid family.
std::map<std::string, WitnessFamily> build_witness_families(const AdmLowerInstance& inst);

struct WitnessReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks edges, disjointness (apart from the shared start for Q and
/// trimmed families), straightness (one segment of length <= 2^(k+1) - 2 per
/// grid), total length <= d_cap and the endpoint contracts.
WitnessReport validate_witness(const WitnessFamily& family, const AdmLowerInstance& inst, int d_cap);

/// Picks the apex that is largest in ord and cuts every path of its family at
/// the first vertex smaller than the apex.
AdmissibilityCertificate trim_witness(const std::map<std::string, WitnessFamily>& families,
                                      const AdmLowerInstance& inst, const VertexOrdering& ord);

}  // namespace koebe

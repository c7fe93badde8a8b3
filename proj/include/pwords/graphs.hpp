#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwords/words.hpp"

// Flip graphs: the valid words of length n-1 as vertices, with an edge
// wherever two words differ in exactly one position. Adjacency is built by
// flipping each position to each alternative letter and probing the sorted
// vertex list, never by all-pairs comparison.

namespace pwords {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>; // u < v

struct PartitionGraph {
    int d = 1;
    int n = 1;
    bool include_zero = true;
    std::vector<Word> vertices;                 // canonical order
    std::vector<Edge> edges;                    // sorted
    std::vector<std::vector<VertexId>> adjacency; // sorted neighbor lists

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }

    /// Canonical index of a word, or nullopt if it is not a vertex.
    std::optional<VertexId> index_of(const Word &w) const;
    int degree_of(const Word &w) const; // -1 if not a vertex
};

/// The valid words at Hamming distance exactly 1 from `w`, sorted.
std::vector<Word> neighbors(const Word &w, int d);

PartitionGraph build_graph(int d, int n, bool include_zero = true,
                           std::chrono::milliseconds budget = std::chrono::milliseconds::zero());

/// Same construction over an already-enumerated word set.
PartitionGraph build_graph(const WordSet &ws, bool include_zero = true,
                           std::chrono::milliseconds budget = std::chrono::milliseconds::zero());

struct StructureReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    bool connected = false;
    bool bipartite = false;
    bool biconnected = false; // connected, >= 3 vertices, no articulation point
    std::vector<std::string> articulation_points; // words, canonical order
    int diameter = 0;                             // -1 when disconnected
    int min_degree = 0;
    int max_degree = 0;
    double global_clustering = 0.0; // transitivity: 3 * triangles / wedges
};

/// Exact structural survey; diameter runs one search per vertex, split
/// across `threads`.
StructureReport structure_report(const PartitionGraph &g, int threads = 1);

std::vector<int> degrees(const PartitionGraph &g);
std::map<int, std::size_t> degree_histogram(const PartitionGraph &g);

enum class Hamiltonicity { yes, no, unknown };

struct HamiltonicityResult {
    Hamiltonicity status = Hamiltonicity::unknown;
    std::vector<VertexId> cycle; // verified, when status == yes
    std::string witness;         // reason, when status == no
};

/// Decides Hamiltonicity: the balance of the two color classes is checked
/// first on bipartite graphs, then backtracking runs most-constrained-first
/// with seeded restart orderings until done or the budget expires. A "no"
/// is returned only from a completed exhaustive attempt.
HamiltonicityResult is_hamiltonian(const PartitionGraph &g,
                                   std::chrono::milliseconds budget = std::chrono::seconds(10),
                                   std::uint64_t seed = 0);

/// Graph-distance power: same vertices, edge iff distance in g is in [1, k].
PartitionGraph power(const PartitionGraph &g, int k);

/// Comparison variant joining vertices at Hamming distance in [1, k]; not
/// the same thing as power() on these graphs.
PartitionGraph hamming_power(const PartitionGraph &g, int k);

/// color(word) = symbol sum mod (d+1); proper, since one flip changes the
/// sum by a nonzero amount of magnitude <= d.
std::vector<int> proper_coloring(const PartitionGraph &g);

/// Two-coloring class sizes {even, odd} by parity of the symbol sum; the
/// bipartition of the d = 1 graphs.
std::pair<std::size_t, std::size_t> bipartition_sizes(const PartitionGraph &g);

void write_dot(std::ostream &os, const PartitionGraph &g);
void write_edge_csv(std::ostream &os, const PartitionGraph &g);

std::string structure_report_json(const StructureReport &r);

} // namespace pwords

#include "pwords/graycode.hpp"

#include <algorithm>
#include <ostream>

namespace pwords {

namespace {

// Cube-of-a-tree walk. With children ci..ck of u still to place, emit u's
// remaining branch block as [u-side rest, then subtree of ci reversed]; the
// forward order starts at u and ends at ci (a tree neighbor of u), and any
// junction spans at most three tree edges.
void cube_walk(const std::vector<std::vector<VertexId>> &children, VertexId u, std::size_t ci,
               bool reversed, std::vector<VertexId> &out) {
    if (ci >= children[u].size()) {
        out.push_back(u);
        return;
    }
    VertexId c = children[u][ci];
    if (!reversed) {
        cube_walk(children, u, ci + 1, false, out);
        cube_walk(children, c, 0, true, out);
    } else {
        cube_walk(children, c, 0, false, out);
        cube_walk(children, u, ci + 1, true, out);
    }
}

std::vector<std::vector<VertexId>> bfs_tree_children(const PartitionGraph &g) {
    const auto v_count = static_cast<VertexId>(g.vertex_count());
    std::vector<std::vector<VertexId>> children(v_count);
    std::vector<char> seen(v_count, 0);
    std::vector<VertexId> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        for (VertexId u : g.adjacency[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                children[v].push_back(u); // adjacency is sorted, so children are too
                queue.push_back(u);
            }
        }
    }
    if (queue.size() != v_count)
        throw ContractError("flip graph is unexpectedly disconnected");
    return children;
}

// Rotate so the cycle starts at vertex 0 and runs toward its smaller
// neighbor; makes search output independent of where the cycle closed.
std::vector<VertexId> canonical_rotation(std::vector<VertexId> cycle) {
    auto it = std::find(cycle.begin(), cycle.end(), VertexId{0});
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

} // namespace

GrayCode gray2(int n, std::chrono::milliseconds budget, std::uint64_t seed) {
    if (n < 4)
        throw ContractError("2-Gray codes start at n = 4, where the reduced graph is 2-connected");
    PartitionGraph g = build_graph(1, n, /*include_zero=*/false);
    PartitionGraph sq = power(g, 2);
    HamiltonicityResult res = is_hamiltonian(sq, budget, seed);
    if (res.status == Hamiltonicity::unknown)
        throw BudgetExceededError("2-Gray search budget exhausted for n = " + std::to_string(n),
                                  0);
    if (res.status != Hamiltonicity::yes)
        throw ContractError("square of the reduced flip graph has no Hamiltonian cycle"); // unreachable

    GrayCode code;
    code.d = 1;
    code.n = n;
    code.k = 2;
    code.cyclic = true;
    for (VertexId v : canonical_rotation(std::move(res.cycle)))
        code.sequence.push_back(g.vertices[v]);
    return code;
}

GrayCode gray3(int d, int n) {
    if (n < 2)
        throw ContractError("3-Gray codes are defined for n >= 2");
    PartitionGraph g = build_graph(d, n);
    auto children = bfs_tree_children(g);
    std::vector<VertexId> order;
    order.reserve(g.vertex_count());
    cube_walk(children, 0, 0, false, order);

    GrayCode code;
    code.d = d;
    code.n = n;
    code.k = 3;
    code.cyclic = true;
    for (VertexId v : order)
        code.sequence.push_back(g.vertices[v]);
    return code;
}

bool verify(const GrayCode &code, const PartitionGraph &g) {
    if (code.d != g.d || code.n != g.n)
        throw ContractError("gray code and graph disagree on (d, n)");
    if (code.k == 2 && g.include_zero && g.n > 1)
        throw ContractError("2-Gray codes live on the graph without the all-zeros word");
    if (code.k == 3 && !g.include_zero)
        throw ContractError("3-Gray codes cover the full vertex set");

    std::vector<Word> sorted = code.sequence;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.vertices)
        return false; // not a permutation of the vertex set

    const auto v_count = static_cast<VertexId>(g.vertex_count());
    if (v_count < 2)
        return true;

    // bounded breadth-first distance, visit stamps reused across pairs
    std::vector<VertexId> stamp(v_count, v_count);
    std::vector<VertexId> queue;
    std::vector<int> dist(v_count, 0);
    auto within = [&](VertexId from, VertexId to, int k, VertexId round) {
        if (from == to)
            return true;
        queue.assign(1, from);
        stamp[from] = round;
        dist[from] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            if (dist[v] == k)
                break;
            for (VertexId u : g.adjacency[v]) {
                if (stamp[u] == round)
                    continue;
                if (u == to)
                    return true;
                stamp[u] = round;
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
        return false;
    };

    const std::size_t pairs = code.sequence.size() - (code.cyclic ? 0 : 1);
    for (std::size_t i = 0; i < pairs; ++i) {
        const Word &a = code.sequence[i];
        const Word &b = code.sequence[(i + 1) % code.sequence.size()];
        auto ia = g.index_of(a);
        auto ib = g.index_of(b);
        if (!ia || !ib)
            return false;
        if (!within(*ia, *ib, code.k, static_cast<VertexId>(i)))
            return false;
    }
    return true;
}

void write_graycode(std::ostream &os, const GrayCode &code) {
    os << code.d << ' ' << code.n << ' ' << code.k << ' ' << (code.cyclic ? 1 : 0) << '\n';
    for (const Word &w : code.sequence)
        os << to_string(w) << '\n';
}

} // namespace pwords

#include "pwords/graphs.hpp"

#include <algorithm>
#include <future>
#include <ostream>

#include "json.hpp"

namespace pwords {

namespace {

using Clock = std::chrono::steady_clock;

bool bfs_reaches_all(const std::vector<std::vector<VertexId>> &adj) {
    const std::size_t v_count = adj.size();
    if (v_count == 0)
        return true;
    std::vector<char> seen(v_count, 0);
    std::vector<VertexId> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId u : adj[queue[head]]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == v_count;
}

// 2-coloring over all components; nullopt when an odd cycle shows up.
std::optional<std::vector<char>> two_color(const std::vector<std::vector<VertexId>> &adj) {
    const std::size_t v_count = adj.size();
    std::vector<char> color(v_count, -1);
    std::vector<VertexId> queue;
    for (VertexId root = 0; root < v_count; ++root) {
        if (color[root] != -1)
            continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            for (VertexId u : adj[v]) {
                if (color[u] == -1) {
                    color[u] = static_cast<char>(1 - color[v]);
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<char> articulation_flags(const std::vector<std::vector<VertexId>> &adj) {
    const std::size_t v_count = adj.size();
    std::vector<char> arti(v_count, 0);
    std::vector<int> disc(v_count, -1), low(v_count, 0);
    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    int timer = 0;
    for (VertexId root = 0; root < v_count; ++root) {
        if (disc[root] != -1)
            continue;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame &f = stack.back();
            if (f.next < adj[f.v].size()) {
                VertexId u = adj[f.v][f.next++];
                if (disc[u] == -1) {
                    if (f.v == root)
                        ++root_children;
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, f.v, 0});
                } else if (u != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                VertexId done = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back().v;
                    low[p] = std::min(low[p], low[done]);
                    if (p != root && low[done] >= disc[p])
                        arti[p] = 1;
                }
            }
        }
        if (root_children > 1)
            arti[root] = 1;
    }
    return arti;
}

// Eccentricity scan over a source range; dist buffer reused per source.
int max_eccentricity(const std::vector<std::vector<VertexId>> &adj, VertexId lo, VertexId hi) {
    std::vector<int> dist(adj.size());
    std::vector<VertexId> queue;
    queue.reserve(adj.size());
    int best = 0;
    for (VertexId s = lo; s < hi; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        int ecc = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            for (VertexId u : adj[v]) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    ecc = std::max(ecc, dist[u]);
                    queue.push_back(u);
                }
            }
        }
        best = std::max(best, ecc);
    }
    return best;
}

struct HamiltonianSearch {
    const std::vector<std::vector<VertexId>> &adj; // canonical, sorted
    const std::vector<std::vector<VertexId>> &order; // per-attempt neighbor order
    VertexId start = 0;
    bool warnsdorff = true; // most-constrained-next on top of `order`
    std::uint64_t node_cap = 0;
    Clock::time_point deadline;

    std::vector<char> on_path;
    std::vector<int> remaining; // unvisited-neighbor counts, kept in sync
    std::vector<VertexId> path;
    bool timed_out = false;
    bool cap_hit = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> bfs_stamp;
    std::vector<VertexId> bfs_queue;
    std::uint64_t round = 0;

    HamiltonianSearch(const std::vector<std::vector<VertexId>> &adjacency,
                      const std::vector<std::vector<VertexId>> &neighbor_order, VertexId s,
                      bool use_warnsdorff, std::uint64_t cap, Clock::time_point dl)
        : adj(adjacency), order(neighbor_order), start(s), warnsdorff(use_warnsdorff),
          node_cap(cap), deadline(dl), on_path(adjacency.size(), 0),
          bfs_stamp(adjacency.size(), 0) {
        remaining.reserve(adj.size());
        for (const auto &list : adj)
            remaining.push_back(static_cast<int>(list.size()));
        visit(start);
    }

    void visit(VertexId u) {
        on_path[u] = 1;
        path.push_back(u);
        for (VertexId w : adj[u])
            --remaining[w];
    }

    void unvisit(VertexId u) {
        on_path[u] = 0;
        path.pop_back();
        for (VertexId w : adj[u])
            ++remaining[w];
    }

    bool adjacent(VertexId a, VertexId b) const {
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    }

    // Sound prunes: every unvisited vertex still needs two live connections
    // (one may come from the current endpoint, and the eventual last vertex
    // may lean on the start), and the unvisited region must hang together.
    bool feasible(VertexId v) {
        int must_be_last = 0;
        for (VertexId w = 0; w < adj.size(); ++w) {
            if (on_path[w])
                continue;
            const int avail = remaining[w] + (adjacent(w, v) ? 1 : 0);
            if (avail == 0)
                return false;
            if (avail == 1) {
                if (!adjacent(w, start) || ++must_be_last > 1)
                    return false;
            }
        }
        bfs_queue.clear();
        ++round;
        VertexId seen = 0;
        for (VertexId w : adj[v]) {
            if (!on_path[w]) {
                bfs_stamp[w] = round;
                bfs_queue.push_back(w);
                ++seen;
            }
        }
        for (std::size_t head = 0; head < bfs_queue.size(); ++head) {
            for (VertexId w : adj[bfs_queue[head]]) {
                if (!on_path[w] && bfs_stamp[w] != round) {
                    bfs_stamp[w] = round;
                    bfs_queue.push_back(w);
                    ++seen;
                }
            }
        }
        return seen == adj.size() - path.size();
    }

    bool extend(VertexId v) {
        ++nodes;
        if ((nodes & 0xfff) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        if (node_cap != 0 && nodes > node_cap) {
            cap_hit = true;
            return false;
        }
        if (path.size() == adj.size())
            return adjacent(v, start);
        if (!feasible(v))
            return false;
        std::vector<VertexId> candidates;
        for (VertexId u : order[v])
            if (!on_path[u])
                candidates.push_back(u);
        if (warnsdorff)
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](VertexId a, VertexId b) { return remaining[a] < remaining[b]; });
        for (VertexId u : candidates) {
            visit(u);
            if (extend(u))
                return true;
            if (timed_out || cap_hit)
                return false;
            unvisit(u);
        }
        return false;
    }
};

} // namespace

std::optional<VertexId> PartitionGraph::index_of(const Word &w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w)
        return std::nullopt;
    return static_cast<VertexId>(it - vertices.begin());
}

int PartitionGraph::degree_of(const Word &w) const {
    auto idx = index_of(w);
    if (!idx)
        return -1;
    return static_cast<int>(adjacency[*idx].size());
}

std::vector<Word> neighbors(const Word &w, int d) {
    if (!validate(w, d))
        throw InvalidWordError("not a valid partition word: \"" + to_string(w) + "\"");
    std::vector<Word> out;
    Word tmp = w;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const Symbol orig = tmp[pos];
        for (int c = 0; c <= d; ++c) {
            if (c == orig)
                continue;
            tmp[pos] = static_cast<Symbol>(c);
            if (validate(tmp, d))
                out.push_back(tmp);
        }
        tmp[pos] = orig;
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartitionGraph build_graph(int d, int n, bool include_zero, std::chrono::milliseconds budget) {
    return build_graph(enumerate_words(d, n, budget), include_zero, budget);
}

PartitionGraph build_graph(const WordSet &ws, bool include_zero, std::chrono::milliseconds budget) {
    const bool timed = budget > std::chrono::milliseconds::zero();
    const auto deadline = Clock::now() + budget;

    PartitionGraph g;
    g.d = ws.d;
    g.n = ws.n;
    g.include_zero = include_zero;
    g.vertices = ws.words;
    if (!include_zero) {
        const Word zero = zero_word(ws.n);
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), zero);
        if (it != g.vertices.end() && *it == zero)
            g.vertices.erase(it);
    }

    const int d = ws.d;
    const auto v_count = static_cast<VertexId>(g.vertices.size());
    Word tmp;
    for (VertexId u = 0; u < v_count; ++u) {
        const Word &w = g.vertices[u];
        tmp = w;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const Symbol orig = tmp[pos];
            for (int c = 0; c <= d; ++c) {
                if (c == orig)
                    continue;
                tmp[pos] = static_cast<Symbol>(c);
                auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), tmp);
                if (it != g.vertices.end() && *it == tmp) {
                    auto v = static_cast<VertexId>(it - g.vertices.begin());
                    if (v > u)
                        g.edges.emplace_back(u, v);
                }
            }
            tmp[pos] = orig;
        }
        if (timed && (u & 0xff) == 0xff && Clock::now() > deadline)
            throw BudgetExceededError("graph construction budget exhausted", u);
    }
    std::sort(g.edges.begin(), g.edges.end());

    g.adjacency.resize(v_count);
    for (const auto &[u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto &list : g.adjacency)
        std::sort(list.begin(), list.end());
    return g;
}

StructureReport structure_report(const PartitionGraph &g, int threads) {
    StructureReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    const auto v_count = static_cast<VertexId>(g.vertex_count());

    r.connected = bfs_reaches_all(g.adjacency);
    r.bipartite = two_color(g.adjacency).has_value();

    auto arti = articulation_flags(g.adjacency);
    for (VertexId v = 0; v < v_count; ++v)
        if (arti[v])
            r.articulation_points.push_back(to_string(g.vertices[v]));
    r.biconnected = r.connected && v_count >= 3 && r.articulation_points.empty();

    if (v_count == 0) {
        r.diameter = 0;
    } else if (!r.connected) {
        r.diameter = -1;
    } else if (threads <= 1 || v_count < 256) {
        r.diameter = max_eccentricity(g.adjacency, 0, v_count);
    } else {
        const auto t = static_cast<VertexId>(threads);
        std::vector<std::future<int>> futures;
        for (VertexId c = 0; c < t; ++c) {
            VertexId lo = v_count * c / t;
            VertexId hi = v_count * (c + 1) / t;
            futures.push_back(std::async(std::launch::async, max_eccentricity,
                                         std::cref(g.adjacency), lo, hi));
        }
        int best = 0;
        for (auto &f : futures)
            best = std::max(best, f.get());
        r.diameter = best;
    }

    if (v_count > 0) {
        auto degs = degrees(g);
        auto [mn, mx] = std::minmax_element(degs.begin(), degs.end());
        r.min_degree = *mn;
        r.max_degree = *mx;

        long long wedges = 0;
        for (int deg : degs)
            wedges += static_cast<long long>(deg) * (deg - 1) / 2;
        long long closed = 0; // = 3 * triangle count
        for (const auto &[u, v] : g.edges) {
            const auto &a = g.adjacency[u];
            const auto &b = g.adjacency[v];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j])
                    ++i;
                else if (a[i] > b[j])
                    ++j;
                else {
                    ++closed;
                    ++i;
                    ++j;
                }
            }
        }
        r.global_clustering = wedges == 0 ? 0.0
                                          : static_cast<double>(closed) /
                                                static_cast<double>(wedges);
    }
    return r;
}

std::vector<int> degrees(const PartitionGraph &g) {
    std::vector<int> out;
    out.reserve(g.vertex_count());
    for (const auto &list : g.adjacency)
        out.push_back(static_cast<int>(list.size()));
    return out;
}

std::map<int, std::size_t> degree_histogram(const PartitionGraph &g) {
    std::map<int, std::size_t> hist;
    for (const auto &list : g.adjacency)
        ++hist[static_cast<int>(list.size())];
    return hist;
}

HamiltonicityResult is_hamiltonian(const PartitionGraph &g, std::chrono::milliseconds budget,
                                   std::uint64_t seed) {
    const auto v_count = static_cast<VertexId>(g.vertex_count());
    if (v_count < 3)
        throw ContractError("hamiltonicity is decided for graphs with >= 3 vertices");

    HamiltonicityResult res;
    if (!bfs_reaches_all(g.adjacency)) {
        res.status = Hamiltonicity::no;
        res.witness = "graph is disconnected";
        return res;
    }
    for (VertexId v = 0; v < v_count; ++v) {
        if (g.adjacency[v].size() < 2) {
            res.status = Hamiltonicity::no;
            res.witness = "vertex of degree < 2: " + to_string(g.vertices[v]);
            return res;
        }
    }
    if (auto color = two_color(g.adjacency)) {
        std::size_t even = 0;
        for (char c : *color)
            if (c == 0)
                ++even;
        const std::size_t odd = v_count - even;
        if (even != odd) {
            res.status = Hamiltonicity::no;
            res.witness = "bipartition imbalance: " + std::to_string(even) + " vs " +
                          std::to_string(odd);
            return res;
        }
    }

    VertexId start = 0;
    for (VertexId v = 1; v < v_count; ++v)
        if (g.adjacency[v].size() < g.adjacency[start].size())
            start = v;

    // Backtracking with restarts: the first attempt walks the canonical
    // order most-constrained-first; later attempts reshuffle the neighbor
    // order from the seed. A completed (uncapped) attempt is exhaustive, so
    // its "no" is final. Node caps keep any one ordering from eating the
    // whole budget.
    const auto deadline = Clock::now() + budget;
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
    auto next_rand = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::vector<std::vector<VertexId>> order = g.adjacency;
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > 0) {
            for (auto &list : order) // Fisher-Yates, platform-independent
                for (std::size_t i = list.size(); i > 1; --i)
                    std::swap(list[i - 1], list[next_rand() % i]);
        }
        const bool warnsdorff = attempt % 2 == 0;
        const std::uint64_t cap = 200'000;
        HamiltonianSearch search(g.adjacency, order, start, warnsdorff, cap, deadline);
        if (search.extend(start)) {
            for (std::size_t i = 0; i < search.path.size(); ++i) {
                VertexId a = search.path[i];
                VertexId b = search.path[(i + 1) % search.path.size()];
                if (!search.adjacent(a, b))
                    throw ContractError("search produced a non-cycle");
            }
            res.status = Hamiltonicity::yes;
            res.cycle = std::move(search.path);
            return res;
        }
        if (search.timed_out || Clock::now() > deadline) {
            res.status = Hamiltonicity::unknown;
            return res;
        }
        if (!search.cap_hit) {
            res.status = Hamiltonicity::no;
            res.witness = "exhausted backtracking";
            return res;
        }
    }
}

PartitionGraph power(const PartitionGraph &g, int k) {
    if (k < 1)
        throw ContractError("power exponent must be >= 1");
    PartitionGraph out;
    out.d = g.d;
    out.n = g.n;
    out.include_zero = g.include_zero;
    out.vertices = g.vertices;
    const auto v_count = static_cast<VertexId>(g.vertex_count());

    std::vector<int> dist(v_count);
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < v_count; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            if (dist[v] == k)
                break;
            for (VertexId u : g.adjacency[v]) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        for (VertexId v : queue)
            if (v > s && dist[v] >= 1)
                out.edges.emplace_back(s, v);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.adjacency.resize(v_count);
    for (const auto &[u, v] : out.edges) {
        out.adjacency[u].push_back(v);
        out.adjacency[v].push_back(u);
    }
    for (auto &list : out.adjacency)
        std::sort(list.begin(), list.end());
    return out;
}

PartitionGraph hamming_power(const PartitionGraph &g, int k) {
    if (k < 1)
        throw ContractError("power exponent must be >= 1");
    if (g.vertex_count() > 3000)
        throw ContractError("hamming_power is guarded to 3000 vertices");
    PartitionGraph out;
    out.d = g.d;
    out.n = g.n;
    out.include_zero = g.include_zero;
    out.vertices = g.vertices;
    const auto v_count = static_cast<VertexId>(g.vertex_count());
    for (VertexId u = 0; u < v_count; ++u) {
        for (VertexId v = u + 1; v < v_count; ++v) {
            int diff = 0;
            const Word &a = g.vertices[u];
            const Word &b = g.vertices[v];
            for (std::size_t i = 0; i < a.size() && diff <= k; ++i)
                if (a[i] != b[i])
                    ++diff;
            if (diff >= 1 && diff <= k)
                out.edges.emplace_back(u, v);
        }
    }
    out.adjacency.resize(v_count);
    for (const auto &[u, v] : out.edges) {
        out.adjacency[u].push_back(v);
        out.adjacency[v].push_back(u);
    }
    for (auto &list : out.adjacency)
        std::sort(list.begin(), list.end());
    return out;
}

std::vector<int> proper_coloring(const PartitionGraph &g) {
    std::vector<int> colors;
    colors.reserve(g.vertex_count());
    for (const Word &w : g.vertices) {
        int sum = 0;
        for (Symbol s : w)
            sum += s;
        colors.push_back(sum % (g.d + 1));
    }
    return colors;
}

std::pair<std::size_t, std::size_t> bipartition_sizes(const PartitionGraph &g) {
    std::size_t even = 0, odd = 0;
    for (const Word &w : g.vertices) {
        int sum = 0;
        for (Symbol s : w)
            sum += s;
        (sum % 2 == 0 ? even : odd) += 1;
    }
    return {even, odd};
}

void write_dot(std::ostream &os, const PartitionGraph &g) {
    os << "graph pi_d" << g.d << "_n" << g.n << (g.include_zero ? "" : "_nozero") << " {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
    for (const auto &[u, v] : g.edges)
        os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
}

void write_edge_csv(std::ostream &os, const PartitionGraph &g) {
    for (const auto &[u, v] : g.edges)
        os << to_string(g.vertices[u]) << ',' << to_string(g.vertices[v]) << '\n';
}

std::string structure_report_json(const StructureReport &r) {
    nlohmann::ordered_json j;
    j["vertex_count"] = r.vertex_count;
    j["edge_count"] = r.edge_count;
    j["connected"] = r.connected;
    j["bipartite"] = r.bipartite;
    j["biconnected"] = r.biconnected;
    j["articulation_points"] = r.articulation_points;
    j["diameter"] = r.diameter;
    j["min_degree"] = r.min_degree;
    j["max_degree"] = r.max_degree;
    j["global_clustering"] = r.global_clustering;
    return j.dump(2) + "\n";
}

} // namespace pwords

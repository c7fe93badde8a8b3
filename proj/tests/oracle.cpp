#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pwords::oracle {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &acc,
                    std::vector<std::vector<int>> &out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int a = 1; a <= std::min(remaining, max_part); ++a) {
        acc.push_back(a);
        partitions_rec(remaining - a, a, acc, out);
        acc.pop_back();
    }
}

using Cells = std::map<std::vector<int>, int>;

bool can_increment(const Cells &p, const std::vector<int> &coord, int value) {
    std::vector<int> pred;
    for (std::size_t a = 0; a < coord.size(); ++a) {
        if (coord[a] < 2)
            continue;
        pred = coord;
        pred[a] -= 1;
        auto it = p.find(pred);
        if (it == p.end() || it->second < value + 1)
            return false;
    }
    return true;
}

bool predecessors_present(const Cells &p, const std::vector<int> &coord) {
    std::vector<int> pred;
    for (std::size_t a = 0; a < coord.size(); ++a) {
        if (coord[a] < 2)
            continue;
        pred = coord;
        pred[a] -= 1;
        if (!p.contains(pred))
            return false;
    }
    return true;
}

} // namespace

std::vector<std::vector<int>> naive_partitions(int n) {
    if (n < 1)
        throw ContractError("n must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

std::vector<DDimPartition> naive_ddim_partitions(int d, int n) {
    if (d < 2 || d > 3)
        throw ContractError("naive generation supports d in {2, 3}");
    if (n < 1 || n > 10)
        throw ContractError("naive generation supports n <= 10");

    std::set<Cells> cur;
    cur.insert(Cells{{std::vector<int>(static_cast<std::size_t>(d), 1), 1}});
    for (int m = 2; m <= n; ++m) {
        std::set<Cells> next;
        for (const Cells &p : cur) {
            // bump an existing cell
            for (const auto &[coord, value] : p) {
                if (can_increment(p, coord, value)) {
                    Cells q = p;
                    q[coord] += 1;
                    next.insert(std::move(q));
                }
            }
            // or grow the support by a fresh unit cell
            std::set<std::vector<int>> candidates;
            for (const auto &[coord, value] : p) {
                for (std::size_t a = 0; a < coord.size(); ++a) {
                    std::vector<int> succ = coord;
                    succ[a] += 1;
                    if (!p.contains(succ))
                        candidates.insert(std::move(succ));
                }
            }
            for (const auto &coord : candidates) {
                if (predecessors_present(p, coord)) {
                    Cells q = p;
                    q[coord] = 1;
                    next.insert(std::move(q));
                }
            }
        }
        cur = std::move(next);
    }

    std::vector<DDimPartition> out;
    out.reserve(cur.size());
    for (const Cells &p : cur) {
        DDimPartition dp;
        dp.d = d;
        dp.parts = p;
        out.push_back(std::move(dp));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> naive_edges(int d, int n) {
    WordSet ws = enumerate_words(d, n);
    if (ws.count() > 3000)
        throw ContractError("naive edge construction is guarded to 3000 vertices");
    std::vector<std::string> strs;
    strs.reserve(ws.count());
    for (const Word &w : ws.words)
        strs.push_back(to_string(w));

    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < strs.size(); ++i) {
        for (std::size_t j = i + 1; j < strs.size(); ++j) {
            int diff = 0;
            for (std::size_t k = 0; k < strs[i].size() && diff < 2; ++k)
                if (strs[i][k] != strs[j][k])
                    ++diff;
            if (diff == 1)
                edges.emplace_back(strs[i], strs[j]);
        }
    }
    return edges;
}

} // namespace pwords::oracle

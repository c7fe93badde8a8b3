#include "check_suites.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "pwords/analysis.hpp"
#include "pwords/graycode.hpp"
#include "pwords/graphs.hpp"
#include "pwords/words.hpp"

namespace pwords::checks {

namespace {

constexpr std::size_t kVertexGuard = 5000;

void add(std::vector<CheckResult> &out, const std::string &name, bool pass,
         const std::string &detail = "") {
    out.push_back({name, pass, detail});
}

// largest n <= max_n with p_d(n) <= kVertexGuard
int size_cap(int d, int max_n) {
    int n = 1;
    while (n < max_n && enumerate_words(d, n + 1).count() <= kVertexGuard)
        ++n;
    return n;
}

void suite_tables(std::vector<CheckResult> &out) {
    const std::vector<std::size_t> p1{1, 2, 3, 5, 7, 11};
    const std::vector<std::size_t> p2{1, 3, 6, 13, 24};
    const std::vector<std::size_t> p3{1, 4, 10, 26, 59, 140};
    auto check_table = [&](int d, const std::vector<std::size_t> &expected) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            auto n = static_cast<int>(i + 1);
            auto got = enumerate_words(d, n).count();
            std::ostringstream name;
            name << "count d=" << d << " n=" << n;
            add(out, name.str(), got == expected[i],
                "got " + std::to_string(got) + ", want " + std::to_string(expected[i]));
        }
    };
    check_table(1, p1);
    check_table(2, p2);
    check_table(3, p3);
}

void suite_words(std::vector<CheckResult> &out, int max_n) {
    for (int d = 1; d <= 3; ++d) {
        const int cap = std::min(size_cap(d, max_n), d == 1 ? 20 : 10);
        bool closure = true, round_trip = true, injective = true, symbols = true;
        for (int n = 1; n <= cap; ++n) {
            auto ws = enumerate_words(d, n);
            std::set<std::map<std::vector<int>, int>> decoded;
            long long symbol_sum = 0;
            for (const Word &w : ws.words) {
                Word ext = w;
                ext.push_back(0);
                closure = closure && validate(ext, d);
                if (!w.empty()) {
                    Word cut = w;
                    cut.pop_back();
                    closure = closure && validate(cut, d);
                }
                auto p = to_partition(w, d);
                round_trip = round_trip && from_partition(p) == w && p.total() == n;
                decoded.insert(p.parts);
                symbol_sum += static_cast<long long>(w.size());
            }
            injective = injective && decoded.size() == ws.count();
            long long totals = 0;
            for (long long t : symbol_totals(d, n))
                totals += t;
            symbols = symbols && totals == symbol_sum &&
                      totals == (n - 1) * static_cast<long long>(ws.count());
        }
        const std::string suffix = " d=" + std::to_string(d) + " n<=" + std::to_string(cap);
        add(out, "closure under append-0/truncate" + suffix, closure);
        add(out, "decode/encode round trip" + suffix, round_trip);
        add(out, "decoded partitions distinct" + suffix, injective);
        add(out, "symbol totals identity" + suffix, symbols);
    }
}

void suite_graphs(std::vector<CheckResult> &out, int max_n, int threads) {
    {
        const int cap = size_cap(1, max_n);
        bool connected = true, bipartite = true, diameter = true, clustering = true;
        bool edge_bounds = true;
        for (int n = 2; n <= cap; ++n) {
            auto g = build_graph(1, n);
            auto r = structure_report(g, threads);
            connected = connected && r.connected;
            bipartite = bipartite && r.bipartite;
            diameter = diameter && r.diameter == n - 1;
            clustering = clustering && r.global_clustering == 0.0;
            const auto v = static_cast<double>(g.vertex_count());
            edge_bounds = edge_bounds && g.edge_count() >= g.vertex_count() - 1 &&
                          (n < 3 || static_cast<double>(g.edge_count()) <=
                                        v * std::log2(v));
        }
        const std::string suffix = " d=1 n<=" + std::to_string(cap);
        add(out, "connected" + suffix, connected);
        add(out, "bipartite" + suffix, bipartite);
        add(out, "diameter = n-1" + suffix, diameter);
        add(out, "triangle-free (clustering 0)" + suffix, clustering);
        add(out, "edge count within [p-1, p*log2(p)]" + suffix, edge_bounds);

        bool biconnected = true;
        const int bicap = std::min(cap, 14);
        for (int n = 4; n <= bicap; ++n) {
            auto r = structure_report(build_graph(1, n, false), threads);
            biconnected = biconnected && r.connected && r.articulation_points.empty();
        }
        add(out, "no articulation points without the zero word, 4<=n<=" +
                     std::to_string(bicap),
            biconnected);

        bool lambda_ok = true;
        const int lcap = std::min(cap, 25);
        for (int n = 2; n <= lcap; ++n)
            lambda_ok = lambda_ok && lambda_edge_statistic(n) ==
                                         static_cast<long long>(build_graph(1, n).edge_count());
        add(out, "interior-part statistic counts the edges, n<=" + std::to_string(lcap),
            lambda_ok);
    }

    for (int d = 2; d <= 3; ++d) {
        const int cap = std::min(size_cap(d, max_n), 8);
        bool connected = true, diameter = true, coloring = true, clustering = true;
        bool clique = true;
        for (int n = 2; n <= cap; ++n) {
            auto g = build_graph(d, n);
            auto r = structure_report(g, threads);
            connected = connected && r.connected;
            diameter = diameter && r.diameter <= 2 * n - 3;
            clustering = clustering && r.global_clustering > 0.0;
            auto colors = proper_coloring(g);
            for (const auto &[u, v] : g.edges)
                coloring = coloring && colors[u] != colors[v];
            // the one-letter words with a zero tail form a d+1 clique
            for (int a = 0; a <= d && clique; ++a) {
                Word wa = zero_word(n);
                if (!wa.empty())
                    wa[0] = static_cast<Symbol>(a);
                clique = clique && g.index_of(wa).has_value();
            }
        }
        const std::string suffix = " d=" + std::to_string(d) + " n<=" + std::to_string(cap);
        add(out, "connected" + suffix, connected);
        add(out, "diameter <= 2n-3" + suffix, diameter);
        add(out, "symbol-sum coloring proper" + suffix, coloring);
        add(out, "clustering > 0" + suffix, clustering);
        add(out, "complete subgraph on the d+1 letters" + suffix, clique);
    }
}

void suite_gray(std::vector<CheckResult> &out, int max_n) {
    bool two_ok = true;
    const int cap2 = std::min(max_n, 10);
    for (int n = 4; n <= cap2; ++n)
        two_ok = two_ok && verify(gray2(n), build_graph(1, n, false));
    add(out, "2-gray codes verified, 4<=n<=" + std::to_string(cap2), two_ok);

    for (int d = 1; d <= 3; ++d) {
        const int cap = size_cap(d, max_n);
        bool three_ok = true;
        for (int n = 2; n <= cap; ++n)
            three_ok = three_ok && verify(gray3(d, n), build_graph(d, n));
        add(out, "3-gray codes verified d=" + std::to_string(d) + " n<=" + std::to_string(cap),
            three_ok);
    }
}

void suite_analysis(std::vector<CheckResult> &out, int max_n) {
    {
        const int cap = std::min(max_n, 40);
        bool match = true;
        for (int n = 1; n <= cap; ++n) {
            Histogram zeros;
            for (const Word &w : enumerate_words(1, n).words)
                ++zeros.bins[std::count(w.begin(), w.end(), Symbol{0}) + 1];
            match = match && zeros.bins == parts_histogram(n).bins;
        }
        add(out, "parts histogram = shifted zero counts, n<=" + std::to_string(cap), match);
    }
    {
        const int cap = std::min(max_n, 20);
        bool match = true;
        for (int n = 2; n <= cap; ++n) {
            auto [even, odd] = bipartition_sizes(build_graph(1, n));
            auto diff = static_cast<long long>(even > odd ? even - odd : odd - even);
            match = match && parity_imbalance(n) == diff;
        }
        add(out, "parity imbalance = bipartition difference, n<=" + std::to_string(cap), match);
    }
    {
        const double e = std::exp(1.0);
        std::vector<double> samples{1.0, e, e * e};
        auto f = fit(samples, FitFamily::lognormal);
        add(out, "lognormal MLE exact on {1, e, e^2}",
            std::fabs(f.mu - 1.0) < 1e-12 && std::fabs(f.sigma - std::sqrt(2.0 / 3.0)) < 1e-12);

        std::vector<double> base{1.5, 2.25, 7.75, 3.125, 11.0, 0.875};
        auto fb = fit(base, FitFamily::lognormal);
        std::vector<double> scaled = base;
        for (double &x : scaled)
            x *= 42.0;
        auto fs = fit(scaled, FitFamily::lognormal);
        add(out, "lognormal scale equivariance",
            std::fabs(fs.mu - (fb.mu + std::log(42.0))) < 1e-10 &&
                std::fabs(fs.sigma - fb.sigma) < 1e-10 &&
                std::fabs(fs.ks_statistic - fb.ks_statistic) < 1e-10);
    }
}

} // namespace

std::vector<CheckResult> run_suite(const std::string &suite, int max_n, int threads) {
    std::vector<CheckResult> out;
    bool known = false;
    if (suite == "tables" || suite == "all") {
        suite_tables(out);
        known = true;
    }
    if (suite == "words" || suite == "all") {
        suite_words(out, max_n);
        known = true;
    }
    if (suite == "graphs" || suite == "all") {
        suite_graphs(out, max_n, threads);
        known = true;
    }
    if (suite == "gray" || suite == "all") {
        suite_gray(out, max_n);
        known = true;
    }
    if (suite == "analysis" || suite == "all") {
        suite_analysis(out, max_n);
        known = true;
    }
    if (!known)
        throw ContractError("unknown suite: " + suite +
                            " (expected tables, words, graphs, gray, analysis, or all)");
    return out;
}

} // namespace pwords::checks

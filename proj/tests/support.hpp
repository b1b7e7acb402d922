#pragma once

// Reference computations written independently of the library internals.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "autgram/graph.hpp"
#include "autgram/perm.hpp"

namespace ref {

using autgram::Graph;
using autgram::Permutation;
using autgram::Word;

// Every permutation of V(g) checked against every vertex pair.
inline std::vector<Permutation> automorphisms(const Graph& g) {
    const int m = g.vertex_count();
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        bool ok = true;
        for (int u = 1; u <= m && ok; ++u)
            for (int v = u + 1; v <= m && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(img[u - 1], img[v - 1]);
        if (ok) out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// {w : w_i = σ(alpha(i))}.
inline std::set<Word> aligned_words(const std::vector<Permutation>& group, const Permutation& alpha) {
    std::set<Word> out;
    for (const auto& s : group) {
        Word w;
        for (int i = 1; i <= alpha.size(); ++i) w.symbols.push_back(s(alpha(i)));
        out.insert(w);
    }
    return out;
}

// Width of the elimination game on an adjacency matrix copy.
inline int game_width(const Graph& g, const std::vector<int>& order) {
    const int m = g.vertex_count();
    std::vector<std::vector<char>> adj(m + 1, std::vector<char>(m + 1, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(m + 1, 0);
    int width = 0;
    for (int v : order) {
        std::vector<int> nb;
        for (int u = 1; u <= m; ++u)
            if (!gone[u] && u != v && adj[v][u]) nb.push_back(u);
        width = std::max(width, static_cast<int>(nb.size()));
        for (int a : nb)
            for (int b : nb)
                if (a != b) adj[a][b] = 1;
        gone[v] = 1;
    }
    return width;
}

// Minimum over all m! elimination orders.
inline int treewidth(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 1);
    int best = g.vertex_count();
    do best = std::min(best, game_width(g, order));
    while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Vertex separation number minimized over all orders.
inline int pathwidth(const Graph& g) {
    const int m = g.vertex_count();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    int best = m;
    do {
        std::vector<int> pos(m + 1);
        for (int i = 0; i < m; ++i) pos[order[i]] = i;
        int worst = 0;
        for (int cut = 1; cut < m; ++cut) {
            int count = 0;
            for (int i = 0; i < cut; ++i) {
                bool crosses = false;
                for (int u = 1; u <= m; ++u) crosses = crosses || (g.adjacent(order[i], u) && pos[u] >= cut);
                count += crosses;
            }
            worst = std::max(worst, count);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline Word word(std::initializer_list<int> s) { return Word{std::vector<int>(s)}; }
inline Permutation perm(std::initializer_list<int> s) { return Permutation(std::vector<int>(s)); }

}  // namespace ref

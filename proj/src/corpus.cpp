#include "autgram/corpus.hpp"

namespace autgram::corpus {

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(1, n);
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(v, leaves + 1);
    return Graph(leaves + 1, std::move(e));
}

Graph cube3() {
    std::vector<Edge> e;
    for (int a = 0; a < 8; ++a)
        for (int bit = 1; bit < 8; bit <<= 1)
            if (!(a & bit)) e.emplace_back(a + 1, (a | bit) + 1);
    return Graph(8, std::move(e));
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i + 1, (i + 1) % 5 + 1);          // outer cycle
        e.emplace_back(i + 6, (i + 2) % 5 + 6);          // inner pentagram
        e.emplace_back(i + 1, i + 6);                    // spokes
    }
    return Graph(10, std::move(e));
}

Graph discrete(int n) { return Graph(n, {}); }

std::vector<Entry> standard() {
    return {{"P3", path(3)},    {"P4", path(4)},     {"C4", cycle(4)}, {"C5", cycle(5)},
            {"C6", cycle(6)},   {"K4", complete(4)}, {"star5", star(4)}, {"Q3", cube3()}};
}

}  // namespace autgram::corpus

#pragma once

#include <string>
#include <vector>

#include "autgram/graph.hpp"

namespace autgram::corpus {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,n}: leaves 1..n, center n+1.
Graph star(int leaves);
/// 3-cube on 1..8; vertex i+1 encodes the bit string i.
Graph cube3();
Graph petersen();
/// n isolated vertices.
Graph discrete(int n);

struct Entry {
    std::string name;
    Graph graph;
};

/// P3, P4, C4, C5, C6, K4, star K_{1,4} (center 5), Q3.
std::vector<Entry> standard();

}  // namespace autgram::corpus

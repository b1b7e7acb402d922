#include "autgram/annotate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "autgram/error.hpp"

namespace autgram {

Vertex AnnotatedBag::phi(Vertex v) const {
    int i = domain.index_of(v);
    if (i < 0) throw std::out_of_range("vertex " + std::to_string(v) + " outside annotation domain");
    return images[i];
}

VertexSet AnnotatedBag::image_of(const VertexSet& subset) const {
    std::vector<Vertex> out;
    for (Vertex v : subset) out.push_back(phi(v));
    return VertexSet(std::move(out));
}

std::string to_string(const AnnotatedBag& b) {
    std::string out = to_string(b.s) + " [";
    for (std::size_t i = 0; i < b.domain.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(b.domain[i]) + "->" + std::to_string(b.images[i]);
    }
    return out + "]";
}

AnnotatedBag make_annotated_bag(const VertexSet& s, const std::vector<std::pair<Vertex, Vertex>>& mapping) {
    auto sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    AnnotatedBag b;
    b.s = s;
    std::vector<Vertex> dom;
    for (auto [v, img] : sorted) {
        dom.push_back(v);
        b.images.push_back(img);
    }
    b.domain = VertexSet(dom);
    if (b.domain.size() != sorted.size()) throw std::invalid_argument("mapping lists a vertex twice");
    return b;
}

bool check_annotated_bag(const Graph& g, const AnnotatedBag& b) {
    if (b.domain != closed_neighborhood(g, b.s) || b.images.size() != b.domain.size())
        throw std::invalid_argument("annotation domain must be the closed neighborhood of the bag");
    std::vector<char> used(g.vertex_count() + 1, 0);
    for (Vertex img : b.images) {
        if (!g.has_vertex(img) || used[img]) return false;
        used[img] = 1;
    }
    if (VertexSet(b.images) != closed_neighborhood(g, b.image_of(b.s))) return false;
    for (std::size_t i = 0; i < b.domain.size(); ++i)
        for (std::size_t j = i + 1; j < b.domain.size(); ++j)
            if (g.adjacent(b.domain[i], b.domain[j]) != g.adjacent(b.images[i], b.images[j])) return false;
    return true;
}

std::vector<AnnotatedBag> enumerate_annotated_bags(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("annotated bags are not defined for an empty bag");
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("bag vertex " + std::to_string(v) + " out of range");

    const int m = g.vertex_count();
    const VertexSet domain = closed_neighborhood(g, s);
    // Bag members first, then the remaining neighborhood; each group ascending.
    std::vector<Vertex> rest;
    for (Vertex v : domain)
        if (!s.contains(v)) rest.push_back(v);

    std::vector<Vertex> image(m + 1, 0);
    std::vector<char> used(m + 1, 0);
    std::vector<Vertex> assigned;
    std::vector<AnnotatedBag> out;

    auto compatible = [&](Vertex v, Vertex c) {
        for (Vertex u : assigned)
            if (g.adjacent(u, v) != g.adjacent(image[u], c)) return false;
        return true;
    };

    std::vector<char> target(m + 1, 0);
    auto extend_rest = [&](auto&& self, std::size_t k) -> void {
        if (k == rest.size()) {
            AnnotatedBag b;
            b.s = s;
            b.domain = domain;
            for (Vertex v : domain) b.images.push_back(image[v]);
            out.push_back(std::move(b));
            return;
        }
        Vertex v = rest[k];
        for (Vertex c = 1; c <= m; ++c) {
            if (!target[c] || used[c] || !compatible(v, c)) continue;
            image[v] = c;
            used[c] = 1;
            assigned.push_back(v);
            self(self, k + 1);
            assigned.pop_back();
            used[c] = 0;
        }
    };

    auto extend_bag = [&](auto&& self, std::size_t k) -> void {
        if (k == s.size()) {
            std::vector<Vertex> img;
            for (Vertex v : s) img.push_back(image[v]);
            VertexSet closed = closed_neighborhood(g, VertexSet(std::move(img)));
            if (closed.size() != domain.size()) return;
            std::fill(target.begin(), target.end(), 0);
            for (Vertex c : closed)
                if (!used[c]) target[c] = 1;
            extend_rest(extend_rest, 0);
            return;
        }
        Vertex v = s[k];
        for (Vertex c = 1; c <= m; ++c) {
            // Bag vertices keep their whole neighborhood inside the domain, so degrees must match.
            if (used[c] || g.degree(c) != g.degree(v) || !compatible(v, c)) continue;
            image[v] = c;
            used[c] = 1;
            assigned.push_back(v);
            self(self, k + 1);
            assigned.pop_back();
            used[c] = 0;
        }
    };
    extend_bag(extend_bag, 0);

    std::sort(out.begin(), out.end(), [](const AnnotatedBag& a, const AnnotatedBag& b) { return a.images < b.images; });
    for (const auto& b : out)
        if (!check_annotated_bag(g, b)) throw SoundnessError("enumerated annotated bag fails its conditions");
    return out;
}

bool consistent_bags(const AnnotatedBag& parent, const AnnotatedBag& child) {
    std::size_t i = 0, j = 0;
    while (i < parent.domain.size() && j < child.domain.size()) {
        Vertex a = parent.domain[i], b = child.domain[j];
        if (a < b) {
            ++i;
        } else if (b < a) {
            ++j;
        } else {
            if (parent.images[i] != child.images[j]) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

void check_annotation(const Graph& g, const TreeDecomposition& t, const AnnotationAssignment& a) {
    if (static_cast<int>(a.size()) != t.shape.size())
        throw std::invalid_argument("annotation must label every decomposition node");
    for (int node = 0; node < t.shape.size(); ++node) {
        const auto where = "position '" + format_position(t.shape.position(node)) + "'";
        if (a[node].s != t.bag(node)) throw std::invalid_argument("erasure mismatch at " + where);
        if (!check_annotated_bag(g, a[node])) throw std::invalid_argument("invalid annotated bag at " + where);
        int parent = t.shape.parent(node);
        if (parent >= 0 && !consistent_bags(a[parent], a[node]))
            throw std::invalid_argument("inconsistent annotation between " + where + " and its parent");
    }
}

Permutation annotation_morphism(const Graph& g, const TreeDecomposition& t, const AnnotationAssignment& a) {
    check_annotation(g, t, a);
    const int m = g.vertex_count();
    std::vector<Vertex> image(m + 1, 0);
    for (const auto& b : a)
        for (std::size_t i = 0; i < b.domain.size(); ++i) {
            Vertex v = b.domain[i];
            if (image[v] != 0 && image[v] != b.images[i])
                throw std::invalid_argument("annotation morphism ill-defined at vertex " + std::to_string(v));
            image[v] = b.images[i];
        }
    std::vector<char> hit(m + 1, 0);
    for (Vertex v = 1; v <= m; ++v) {
        if (image[v] == 0) throw SoundnessError("annotation morphism undefined at vertex " + std::to_string(v));
        if (hit[image[v]]) throw SoundnessError("annotation morphism is not injective");
        hit[image[v]] = 1;
    }
    Permutation sigma(std::vector<int>(image.begin() + 1, image.end()));
    for (auto [u, v] : g.edges())
        if (!g.adjacent(sigma(u), sigma(v))) throw SoundnessError("annotation morphism does not preserve edges");
    return sigma;
}

AnnotationAssignment restrict_automorphism(const Graph& g, const TreeDecomposition& t, const Permutation& sigma) {
    AnnotationAssignment a;
    for (int node = 0; node < t.shape.size(); ++node) {
        AnnotatedBag b;
        b.s = t.bag(node);
        b.domain = closed_neighborhood(g, b.s);
        for (Vertex v : b.domain) b.images.push_back(sigma(v));
        a.push_back(std::move(b));
    }
    return a;
}

std::vector<std::vector<AnnotatedBag>> annotated_bags_per_node(const Graph& g, const TreeDecomposition& t) {
    std::map<VertexSet, std::vector<AnnotatedBag>> cache;
    std::vector<std::vector<AnnotatedBag>> out;
    for (int node = 0; node < t.shape.size(); ++node) {
        const auto& bag = t.bag(node);
        auto it = cache.find(bag);
        if (it == cache.end()) it = cache.emplace(bag, enumerate_annotated_bags(g, bag)).first;
        out.push_back(it->second);
    }
    return out;
}

long for_each_annotation(const Graph& g, const TreeDecomposition& t,
                         const std::function<bool(const AnnotationAssignment&)>& visit) {
    auto per_node = annotated_bags_per_node(g, t);
    auto order = t.shape.preorder();
    AnnotationAssignment current(t.shape.size());
    long visited = 0;
    bool stop = false;
    auto step = [&](auto&& self, std::size_t k) -> void {
        if (stop) return;
        if (k == order.size()) {
            ++visited;
            if (!visit(current)) stop = true;
            return;
        }
        int node = order[k];
        int parent = t.shape.parent(node);
        for (const auto& b : per_node[node]) {
            if (parent >= 0 && !consistent_bags(current[parent], b)) continue;
            current[node] = b;
            self(self, k + 1);
            if (stop) return;
        }
    };
    step(step, 0);
    return visited;
}

}  // namespace autgram

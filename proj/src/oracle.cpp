#include "autgram/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "autgram/error.hpp"

namespace autgram::oracle {

namespace {

// Degree plus sorted multiset of neighbor degrees; automorphisms preserve it.
std::vector<std::vector<int>> vertex_profiles(const Graph& g) {
    std::vector<std::vector<int>> profile(g.vertex_count() + 1);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        auto& p = profile[v];
        p.push_back(g.degree(v));
        for (Vertex u : g.neighbors(v)) p.push_back(g.degree(u));
        std::sort(p.begin() + 1, p.end());
    }
    return profile;
}

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& sigma) {
    if (sigma.size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (!g.adjacent(sigma(u), sigma(v))) return false;
    // A bijection mapping edges to edges maps the finite edge set onto itself.
    return true;
}

std::vector<Permutation> brute_force_automorphisms(const Graph& g, int cap) {
    const int m = g.vertex_count();
    if (m > cap)
        throw PreconditionError("oracle refused: " + std::to_string(m) + " vertices exceeds cap " + std::to_string(cap));
    auto profile = vertex_profiles(g);
    std::vector<int> image(m + 1, 0);
    std::vector<char> used(m + 1, 0);
    std::vector<Permutation> out;

    auto extend = [&](auto&& self, Vertex v) -> void {
        if (v > m) {
            out.emplace_back(std::vector<int>(image.begin() + 1, image.end()));
            return;
        }
        for (Vertex c = 1; c <= m; ++c) {
            if (used[c] || profile[c] != profile[v]) continue;
            bool ok = true;
            for (Vertex u = 1; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], c);
            if (!ok) continue;
            image[v] = c;
            used[c] = 1;
            self(self, v + 1);
            used[c] = 0;
        }
    };
    extend(extend, 1);
    std::sort(out.begin(), out.end());
    return out;
}

RestrictedAction restricted_action(const Graph& g, int n, int cap) {
    if (n < 1 || n > g.vertex_count()) throw std::invalid_argument("prefix size out of range");
    RestrictedAction result;
    std::set<Permutation> restricted;
    for (const auto& sigma : brute_force_automorphisms(g, cap)) {
        std::vector<int> img;
        for (int i = 1; i <= n; ++i) {
            if (sigma(i) > n) {
                result.violation = sigma;
                result.group.clear();
                return result;
            }
            img.push_back(sigma(i));
        }
        restricted.insert(Permutation(std::move(img)));
    }
    result.group.assign(restricted.begin(), restricted.end());
    return result;
}

bool is_group(const std::vector<Permutation>& perms) {
    if (perms.empty()) return false;
    const int n = perms.front().size();
    std::set<Permutation> set(perms.begin(), perms.end());
    for (const auto& p : set)
        if (p.size() != n) return false;
    if (!set.contains(Permutation::identity(n))) return false;
    for (const auto& a : set) {
        if (!set.contains(inverse(a))) return false;
        for (const auto& b : set)
            if (!set.contains(compose(a, b))) return false;
    }
    return true;
}

long group_index(const std::vector<Permutation>& big, const std::vector<Permutation>& small) {
    if (!is_group(big) || !is_group(small)) throw std::invalid_argument("group_index: argument is not a group");
    std::set<Permutation> big_set(big.begin(), big.end());
    std::set<Permutation> small_set(small.begin(), small.end());
    for (const auto& h : small_set)
        if (!big_set.contains(h)) throw std::invalid_argument("group_index: small is not a subgroup of big");
    if (big_set.size() % small_set.size() != 0)
        throw std::invalid_argument("group_index: order does not divide (corrupted input)");
    return static_cast<long>(big_set.size() / small_set.size());
}

std::vector<Permutation> left_coset(const Permutation& beta, const std::vector<Permutation>& group) {
    std::vector<Permutation> out;
    out.reserve(group.size());
    for (const auto& g : group) out.push_back(compose(beta, g));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> left_transversal(const std::vector<Permutation>& big, const std::vector<Permutation>& small) {
    long index = group_index(big, small);
    std::set<Permutation> covered;
    std::vector<Permutation> reps;
    auto take = [&](const Permutation& beta) {
        reps.push_back(beta);
        for (auto& p : left_coset(beta, small)) covered.insert(std::move(p));
    };
    take(Permutation::identity(big.front().size()));
    std::vector<Permutation> sorted = big;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& beta : sorted)
        if (!covered.contains(beta)) take(beta);
    if (static_cast<long>(reps.size()) != index) throw SoundnessError("transversal size differs from index");
    return reps;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace autgram::oracle

#include "popgrow/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace popgrow::oracles {

namespace {

// Straightforward coordinate-based adjacency; no linear-offset tricks.
std::vector<std::size_t> adjacent(const Shape& shape, const Neighborhood& v, std::size_t i) {
    std::vector<std::size_t> out;
    for (const auto& y : neighbors(shape.coordinate(i), v, shape)) out.push_back(shape.index(y));
    return out;
}

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

}  // namespace

DistanceMap bfs_distance(const Shape& shape, const SeedList& seeds, const Neighborhood& v, const GridImage* domain) {
    DistanceMap out{shape, std::vector<std::uint32_t>(shape.size(), DistanceMap::kUnreached)};
    std::deque<std::size_t> frontier;
    for (const auto& seed : seeds) {
        for (const auto& x : seed.pixels) {
            const auto i = shape.index(x);
            if (domain && (*domain)[i] == 0) throw std::invalid_argument("seed outside domain");
            if (out.values[i] == 0) throw std::invalid_argument("overlapping seeds");
            out.values[i] = 0;
            frontier.push_back(i);
        }
    }
    while (!frontier.empty()) {
        const auto i = frontier.front();
        frontier.pop_front();
        for (auto j : adjacent(shape, v, i)) {
            if (domain && (*domain)[j] == 0) continue;
            if (out.values[j] != DistanceMap::kUnreached) continue;
            out.values[j] = out.values[i] + 1;
            frontier.push_back(j);
        }
    }
    return out;
}

LabelMap unionfind_clusters(const GridImage& image, const Neighborhood& v) {
    const auto& shape = image.shape();
    DisjointSet sets(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (image[i] == 0) continue;
        for (auto j : adjacent(shape, v, i))
            if (image[j] != 0) sets.unite(i, j);
    }
    LabelMap out(shape);
    std::map<std::size_t, std::int32_t> number;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (image[i] == 0) continue;
        auto [it, inserted] = number.emplace(sets.find(i), static_cast<std::int32_t>(number.size()));
        out.labels[i] = it->second;
    }
    return out;
}

MinimaResult naive_minima(const GridImage& f, const Neighborhood& v) {
    const auto& shape = f.shape();
    MinimaResult out{LabelMap(shape), {}};
    for (std::size_t start = 0; start < shape.size(); ++start) {
        if (out.components.labels[start] != LabelMap::kUnassigned) continue;
        const auto id = static_cast<std::int32_t>(out.is_minimum.size());
        std::vector<std::size_t> members{start};
        out.components.labels[start] = id;
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (auto j : adjacent(shape, v, members[k])) {
                if (f[j] == f[start] && out.components.labels[j] == LabelMap::kUnassigned) {
                    out.components.labels[j] = id;
                    members.push_back(j);
                }
            }
        }
        bool minimum = true;
        for (auto m : members)
            for (auto j : adjacent(shape, v, m))
                if (out.components.labels[j] != id && !(f[m] < f[j])) minimum = false;
        out.is_minimum.push_back(minimum);
    }
    return out;
}

IterativeResult iterative_erosion_reconstruction(const GridImage& f, const GridImage& g, const Neighborhood& v) {
    if (!(f.shape() == g.shape())) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] < g[i]) throw std::invalid_argument("iterative reconstruction needs f >= g");

    const auto& shape = f.shape();
    std::vector<Value> current(f.values().begin(), f.values().end());
    std::size_t applications = 0;
    for (;;) {
        std::vector<Value> next(current.size());
        for (std::size_t i = 0; i < current.size(); ++i) {
            Value eroded = current[i];
            for (auto j : adjacent(shape, v, i)) eroded = std::min(eroded, current[j]);
            next[i] = std::max(eroded, g[i]);
        }
        ++applications;
        if (next == current) break;
        current = std::move(next);
    }
    return {GridImage(shape, std::move(current)), applications, applications - 1};
}

std::set<std::vector<std::size_t>> minima_sets(const MinimaResult& result) {
    std::map<std::int32_t, std::vector<std::size_t>> members;
    const auto& labels = result.components.labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto c = labels[i];
        if (c >= 0 && result.is_minimum[static_cast<std::size_t>(c)]) members[c].push_back(i);
    }
    std::set<std::vector<std::size_t>> out;
    for (auto& [id, pixels] : members) out.insert(std::move(pixels));
    return out;
}

bool same_partition(const LabelMap& a, const LabelMap& b) {
    if (!(a.shape == b.shape) || a.labels.size() != b.labels.size()) return false;
    std::map<std::int32_t, std::int32_t> forward, backward;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        const auto la = a.labels[i];
        const auto lb = b.labels[i];
        if ((la < 0 || lb < 0) && la != lb) return false;
        if (la < 0) continue;
        auto [f, fi] = forward.emplace(la, lb);
        auto [r, ri] = backward.emplace(lb, la);
        if (f->second != lb || r->second != la) return false;
    }
    return true;
}

}  // namespace popgrow::oracles

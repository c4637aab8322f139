#include "liftobs/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "liftobs/error.hpp"

namespace liftobs {

Nerve::Nerve(int vertices, std::vector<Simplex> facets) : vertices_(vertices), facets_(std::move(facets)) {
    require_input(vertices_ >= 1, "nerve: need at least one vertex");
    require_input(!facets_.empty(), "nerve: need at least one facet");
    for (Simplex& f : facets_) {
        require_input(!f.empty(), "nerve: empty facet");
        std::sort(f.begin(), f.end());
        require_input(std::adjacent_find(f.begin(), f.end()) == f.end(),
                      "nerve: facet has a repeated vertex");
        require_input(f.front() >= 0 && f.back() < vertices_, "nerve: facet vertex out of range");
        require_input(f.size() <= 12, "nerve: facet too large");
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

    for (size_t i = 0; i < facets_.size(); ++i)
        for (size_t j = 0; j < facets_.size(); ++j)
            if (i != j)
                require_input(!std::includes(facets_[j].begin(), facets_[j].end(),
                                             facets_[i].begin(), facets_[i].end()),
                              "nerve: facet list contains a non-maximal facet");

    std::vector<char> covered(size_t(vertices_), 0);
    for (const Simplex& f : facets_)
        for (int v : f) covered[size_t(v)] = 1;
    for (int v = 0; v < vertices_; ++v)
        require_input(covered[size_t(v)], "nerve: vertex " + std::to_string(v) + " lies in no facet");

    dim_ = 0;
    for (const Simplex& f : facets_) dim_ = std::max(dim_, int(f.size()) - 1);

    // all nonempty subsets of each facet
    std::vector<std::set<Simplex>> build(size_t(dim_) + 1);
    for (const Simplex& f : facets_) {
        int sz = int(f.size());
        for (unsigned mask = 1; mask < (1u << sz); ++mask) {
            Simplex s;
            for (int b = 0; b < sz; ++b)
                if (mask & (1u << b)) s.push_back(f[size_t(b)]);
            build[s.size() - 1].insert(std::move(s));
        }
    }
    by_dim_.assign(size_t(dim_) + 1, {});
    for (int k = 0; k <= dim_; ++k) by_dim_[size_t(k)].assign(build[size_t(k)].begin(), build[size_t(k)].end());

    // connected components over the edge graph
    component_.assign(size_t(vertices_), -1);
    component_count_ = 0;
    for (int v = 0; v < vertices_; ++v) {
        if (component_[size_t(v)] >= 0) continue;
        std::vector<int> stack{v};
        component_[size_t(v)] = component_count_;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (dim_ >= 1)
                for (const Simplex& e : by_dim_[1]) {
                    int other = e[0] == x ? e[1] : (e[1] == x ? e[0] : -1);
                    if (other >= 0 && component_[size_t(other)] < 0) {
                        component_[size_t(other)] = component_count_;
                        stack.push_back(other);
                    }
                }
        }
        ++component_count_;
    }
}

Nerve Nerve::sphere(int n) {
    require_input(n >= 1, "sphere nerve: dimension must be >= 1");
    require_input(n <= 8, "sphere nerve: dimension out of supported range");
    int v = n + 2;
    std::vector<Simplex> facets;
    // all (n+1)-subsets = complements of single vertices
    for (int omit = 0; omit < v; ++omit) {
        Simplex f;
        for (int i = 0; i < v; ++i)
            if (i != omit) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return Nerve(v, std::move(facets));
}

Nerve Nerve::projective_plane() {
    // antipodal quotient of the icosahedron boundary; every edge lies in exactly
    // two of the ten triangles
    return Nerve(6, {{0, 1, 3},
                     {0, 1, 4},
                     {0, 2, 3},
                     {0, 2, 5},
                     {0, 4, 5},
                     {1, 2, 4},
                     {1, 2, 5},
                     {1, 3, 5},
                     {2, 3, 4},
                     {3, 4, 5}});
}

Nerve Nerve::disjoint_union(const Nerve& a, const Nerve& b) {
    std::vector<Simplex> facets = a.facets();
    for (Simplex f : b.facets()) {
        for (int& v : f) v += a.vertices();
        facets.push_back(std::move(f));
    }
    return Nerve(a.vertices() + b.vertices(), std::move(facets));
}

Nerve Nerve::parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int vertices = -1;
    std::vector<Simplex> facets;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (vertices < 0) {
            std::string kw;
            ls >> kw >> vertices;
            require_input(bool(ls) && kw == "vertices", "nerve file: expected header 'vertices N'");
            continue;
        }
        Simplex f;
        int v;
        while (ls >> v) f.push_back(v);
        if (!f.empty()) facets.push_back(std::move(f));
    }
    require_input(vertices >= 1, "nerve file: missing 'vertices N' header");
    return Nerve(vertices, std::move(facets));
}

std::string Nerve::format_text() const {
    std::ostringstream out;
    out << "vertices " << vertices_ << "\n";
    for (const Simplex& f : facets_) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
    return out.str();
}

const std::vector<Simplex>& Nerve::simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dim_) return none;
    return by_dim_[size_t(k)];
}

int Nerve::index_of(const Simplex& sorted) const {
    int k = int(sorted.size()) - 1;
    if (k < 0 || k > dim_) return -1;
    const auto& list = by_dim_[size_t(k)];
    auto it = std::lower_bound(list.begin(), list.end(), sorted);
    if (it == list.end() || *it != sorted) return -1;
    return int(it - list.begin());
}

} // namespace liftobs

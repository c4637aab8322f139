#pragma once

#include <memory>
#include <string>
#include <vector>

namespace liftobs {

/** Sorted strictly increasing vertex tuple. */
using Simplex = std::vector<int>;

/**
 * Abstract simplicial complex given by its maximal faces. Construction
 * validates facet maximality and vertex coverage and derives the full
 * per-dimension simplex lists (all nonempty subsets of facets, lex sorted).
 */
class Nerve {
public:
    Nerve(int vertices, std::vector<Simplex> facets);

    /** Boundary of the (n+1)-simplex: all (n+1)-subsets of {0,...,n+1}. */
    static Nerve sphere(int n);
    /** Minimal 6-vertex triangulation of the real projective plane. */
    static Nerve projective_plane();
    static Nerve disjoint_union(const Nerve& a, const Nerve& b);

    // Format: line "vertices N", then one facet per line (space-separated indices).
    static Nerve parse_text(const std::string& text);
    std::string format_text() const;

    int vertices() const { return vertices_; }
    int dim() const { return dim_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    /** All k-dimensional simplices in lex order; empty past dim(). */
    const std::vector<Simplex>& simplices(int k) const;
    int simplex_count(int k) const { return int(simplices(k).size()); }
    /** Index into simplices(k), or -1. */
    int index_of(const Simplex& sorted) const;
    bool has(const Simplex& sorted) const { return index_of(sorted) >= 0; }

    int component_count() const { return component_count_; }
    const std::vector<int>& component_of() const { return component_; }

    bool operator==(const Nerve& o) const {
        return vertices_ == o.vertices_ && facets_ == o.facets_;
    }
    bool operator!=(const Nerve& o) const { return !(*this == o); }

private:
    int vertices_;
    std::vector<Simplex> facets_;
    int dim_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<int> component_;
    int component_count_ = 0;
};

using NervePtr = std::shared_ptr<const Nerve>;

} // namespace liftobs

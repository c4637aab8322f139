#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftobs/matrix.hpp"

namespace liftobs {

/**
 * Finitely generated abelian group in invariant-factor form:
 * Z^free_rank x Z/d_1 x ... x Z/d_t with d_i >= 2 and d_1 | d_2 | ... | d_t.
 * Canonical generator order: free generators first, then torsion generators
 * in increasing invariant-factor order.
 */
struct FgAbGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    FgAbGroup() = default;
    FgAbGroup(int rank, std::vector<Int> factors);

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free_group(int rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const Int& n);

    int gens() const { return free_rank + int(torsion.size()); }
    /** 0 for a free generator, the invariant factor for a torsion generator. */
    Int gen_order(int i) const;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // finite groups only

    /** Canonical coordinate reduction: torsion coordinates to least non-negative residue. */
    std::vector<Int> reduce(std::vector<Int> x) const;
    bool is_zero_elt(const std::vector<Int>& x) const;
    std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) const;
    std::vector<Int> neg(const std::vector<Int>& x) const;
    std::vector<Int> smul(const Int& k, const std::vector<Int>& x) const;
    /** 0 for infinite order. */
    Int elt_order(const std::vector<Int>& x) const;

    /** Columns d_i * e_i over the torsion generators (gens x torsion.size()). */
    IntMatrix order_lattice() const;

    bool operator==(const FgAbGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    std::string to_string() const;
};

/** Z^generator_count modulo the column span of relations. */
struct Presentation {
    int generator_count = 0;
    IntMatrix relations;  // generator_count x k

    Presentation(int gens, IntMatrix rel);
};

struct Canonicalized {
    FgAbGroup group;
    IntMatrix to_canonical;    // group.gens() x generator_count, original -> canonical coords
    IntMatrix from_canonical;  // generator_count x group.gens(), representative lifts
};

/** Invariant-factor decomposition of a presentation, with the coordinate change. */
Canonicalized canonicalize(const Presentation& p);

/**
 * Homomorphism between groups in canonical coordinates; column i is the image of
 * source generator i. Well-definedness (order compatibility) is checked on
 * construction and entries are canonically reduced.
 */
struct AbHom {
    FgAbGroup source, target;
    IntMatrix matrix;  // target.gens() x source.gens()

    AbHom(FgAbGroup src, FgAbGroup tgt, IntMatrix m);
    static AbHom zero(const FgAbGroup& src, const FgAbGroup& tgt);
    static AbHom identity(const FgAbGroup& g);

    std::vector<Int> apply(const std::vector<Int>& x) const;
    bool is_zero() const { return matrix.is_zero(); }

    AbHom operator+(const AbHom& o) const;
    AbHom operator-() const;
    bool operator==(const AbHom& o) const;
};

/** compose(f, g) = f after g. */
AbHom compose(const AbHom& f, const AbHom& g);

struct KerCoker {
    FgAbGroup kernel;
    IntMatrix kernel_reps;  // source coords of kernel generators, source.gens() x kernel.gens()
    FgAbGroup cokernel;
    AbHom coker_proj;  // target ->> cokernel, coker_proj . f = 0
};

KerCoker kernel_cokernel(const AbHom& f);

bool is_isomorphism(const AbHom& f);
/** Inverse of an isomorphism. */
AbHom inverse_iso(const AbHom& f);

/** Some x with f(x) = t, if t lies in the image. */
std::optional<std::vector<Int>> preimage(const AbHom& f, const std::vector<Int>& t);

/** Hom(A, B) as an abstract group. */
/** Canonical invariant-factor form of A (+) B. */
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);

/** Ext(A, B) = direct sum of B/d_iB over the invariant factors of A. */
FgAbGroup ext_group(const FgAbGroup& a, const FgAbGroup& b);

struct Homology {
    FgAbGroup group;
    IntMatrix reps;  // ambient (middle-group) coords of generators
};

/** ker(f) / im(g) for f . g = 0; g maps into f's source. */
Homology homology(const AbHom& f, const AbHom& g);

/** Group spec grammar: "0" | terms joined by 'x', term = "Z" | "Z^r" | "Z/n". */
FgAbGroup parse_group_spec(const std::string& spec);

} // namespace liftobs

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liftobs/abelian.hpp"
#include "liftobs/coeffmod.hpp"
#include "liftobs/fingroup.hpp"
#include "liftobs/nerve.hpp"

namespace liftobs {

using CechCoeff = CoeffModule;

/**
 * Abelian k-cochain on a nerve. One value per sorted (k+1)-tuple simplex;
 * unsorted access is antisymmetric (sign of the sorting permutation) and
 * degenerate tuples read as zero.
 */
class CechCochain {
public:
    CechCochain(NervePtr nerve, int degree, CechCoeff coeff);
    static CechCochain zero(NervePtr nerve, int degree, CechCoeff coeff) {
        return CechCochain(std::move(nerve), degree, std::move(coeff));
    }

    int degree() const { return degree_; }
    const CechCoeff& coeff() const { return coeff_; }
    const Nerve& nerve() const { return *nerve_; }
    const NervePtr& nerve_ptr() const { return nerve_; }

    const std::vector<Rat>& value(int idx) const;
    void set_value(int idx, std::vector<Rat> v);
    /** Antisymmetric tuple access; repeated vertices give zero. */
    std::vector<Rat> value_at(std::vector<int> tuple) const;

    bool is_zero() const;
    CechCochain operator+(const CechCochain& o) const;
    CechCochain operator-() const;
    CechCochain smul(const Int& k) const;
    bool operator==(const CechCochain& o) const;
    bool operator!=(const CechCochain& o) const { return !(*this == o); }

private:
    NervePtr nerve_;
    int degree_;
    CechCoeff coeff_;
    std::vector<std::vector<Rat>> vals_;
};

/** Alternating-sum coboundary; requires degree < dim of the nerve. */
CechCochain coboundary(const CechCochain& c);

bool is_cocycle(const CechCochain& c);

/**
 * Top-degree evaluation on the sphere nerve: sum of (-1)^j times the value on
 * the facet omitting vertex j. Kills coboundaries; detects the top class.
 */
std::vector<Rat> s_tilde(const CechCochain& c);

/** Degree k on sphere(n) to degree k+1 on sphere(n+1): old value on tuples ending in the new vertex, zero otherwise. */
CechCochain suspend(const CechCochain& c);

/**
 * Connecting lift for the coefficient sequence Z^m >-> Q^m ->> (Q/Z)^m: lift a
 * (Q/Z)^m-valued cocycle by canonical [0,1) representatives, take the
 * coboundary, and read the result as a Z^m-valued cocycle.
 */
CechCochain iota_lift(const CechCochain& c);

/** Signed incidence matrix of delta : C^(k-1) -> C^k; rows = k-simplices. */
IntMatrix cech_coboundary_matrix(const Nerve& nerve, int k);

/**
 * Witness search for c = coboundary(beta): per-coordinate integer or modular
 * solve against the incidence matrix. Construct once per (nerve, degree,
 * coefficients) and query many cochains.
 */
class CechCoboundarySolver {
public:
    CechCoboundarySolver(NervePtr nerve, int degree, CechCoeff coeff);
    std::optional<CechCochain> witness(const CechCochain& c) const;

private:
    NervePtr nerve_;
    int degree_;
    CechCoeff coeff_;
    IntMatrix dmat_;
    std::vector<std::unique_ptr<ModularSolver>> per_coord_;  // Group kind
    std::unique_ptr<ModularSolver> plain_;                   // QmodZ kind, scaled per query
};

/** One-shot wrapper around CechCoboundarySolver. */
std::optional<CechCochain> is_coboundary(const CechCochain& c);

/**
 * Pull back along a vertex map into c's nerve: value on a simplex is the
 * antisymmetric read of the image tuple. The map must send simplices to
 * simplices (degenerate images allowed, reading as zero).
 */
CechCochain pullback_cochain(const CechCochain& c, const std::vector<int>& vertex_map,
                             NervePtr domain);

/** All vertex maps domain -> codomain sending simplices to (possibly degenerate) simplices. */
std::vector<std::vector<int>> enumerate_simplicial_maps(const Nerve& domain, const Nerve& codomain);

/**
 * Cochain with values in a finite, possibly non-abelian group; degrees 0 and 1
 * only. Degree-1 access is inverse-on-transposition and identity on repeats.
 */
class KCochain {
public:
    KCochain(NervePtr nerve, int degree, std::shared_ptr<const FiniteGroup> group);

    int degree() const { return degree_; }
    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    const Nerve& nerve() const { return *nerve_; }
    const NervePtr& nerve_ptr() const { return nerve_; }

    int value(int idx) const { return vals_[size_t(idx)]; }
    void set_value(int idx, int g);
    int value_at(int i, int j) const;  // degree 1
    int value_at(int i) const;         // degree 0

    /** Degree 1: g_ij g_jk = g_ik on every triangle. Degree 0: vacuous. */
    bool is_cocycle() const;
    /** Degree 0: constant on every edge (hence on every component). */
    bool locally_constant() const;

    bool operator==(const KCochain& o) const;

private:
    NervePtr nerve_;
    int degree_;
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<int> vals_;
};

/**
 * Central lift defect of a 1-cocycle: (i,j,k) -> s(g_ij) s(g_jk) s(g_ik)^-1
 * read in kernel coordinates, where s is the extension's section. The result is
 * an abelian 2-cocycle; its class does not depend on the section.
 */
CechCochain delta1_lift(const KCochain& g, const FiniteCentralExt& ext);

/** Lift defect of a locally constant 0-cochain: (i,j) -> s(f_i) s(f_j)^-1 in kernel coordinates. */
CechCochain delta0_lift(const KCochain& f, const FiniteCentralExt& ext);

/** All 1-cocycles, deterministic order; forced-edge propagation keeps the search small. */
std::vector<KCochain> enumerate_1cocycles(NervePtr nerve, std::shared_ptr<const FiniteGroup> group);

/**
 * The first (in enumeration order) Z/2-valued 1-cocycle that is not of the form
 * b_i - b_j; on the projective-plane nerve this is the orientation double cover.
 */
KCochain double_cover_cocycle(NervePtr nerve);

/** Read a Group-kind integer cochain through a coordinate map into another group. */
CechCochain pushforward_values(const CechCochain& c, const AbHom& phi);
/** Same, into (Q/Z)^m via per-generator values; orders must be respected. */
CechCochain pushforward_values_qmodz(const CechCochain& c, const std::vector<std::vector<Rat>>& gen_values);

// Abelian cochain file format: one line per simplex, "v0 v1 ... : c0 c1 ...".
std::string format_cochain(const CechCochain& c);
CechCochain parse_cochain(const std::string& text, NervePtr nerve, int degree, CechCoeff coeff);
// K-valued: "v0 v1 : element-index".
std::string format_kcochain(const KCochain& c);
KCochain parse_kcochain(const std::string& text, NervePtr nerve, int degree,
                        std::shared_ptr<const FiniteGroup> group);

} // namespace liftobs

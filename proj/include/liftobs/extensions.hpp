#pragma once

#include <optional>
#include <vector>

#include "liftobs/abelian.hpp"
#include "liftobs/zvalues.hpp"

namespace liftobs {

/**
 * Class of a central extension of A by B in ext coordinates: one element of
 * B/d_iB per invariant factor d_i of A, pinned by the convention
 * d_i * (lift of the i-th torsion generator) = i-th component.
 * Components are stored as B-coordinate vectors, canonically reduced in B/d_iB.
 */
struct ExtClass {
    FgAbGroup base;
    FgAbGroup coeff;
    std::vector<std::vector<Int>> comp;  // one per base.torsion entry

    ExtClass(FgAbGroup base_, FgAbGroup coeff_, std::vector<std::vector<Int>> comps);
    static ExtClass zero(const FgAbGroup& base_, const FgAbGroup& coeff_);

    bool is_zero() const;
    bool operator==(const ExtClass& o) const;
    bool operator!=(const ExtClass& o) const { return !(*this == o); }
};

ExtClass baer_sum(const ExtClass& e1, const ExtClass& e2);
ExtClass negate_ext(const ExtClass& e);

/** Push coefficients along phi : B -> B'. */
ExtClass pushforward_ext(const AbHom& phi, const ExtClass& e);

/**
 * Pull back along psi : A' -> A. Internally evaluates the canonical symmetric
 * cocycle representative (least-residue section carries) of e along psi and
 * reduces in ext coordinates.
 */
ExtClass pullback_ext(const AbHom& psi, const ExtClass& e);

/**
 * Value of the canonical symmetric 2-cocycle representative of e at (x, y);
 * the section is the least-residue one, so the value is the carry combination
 * sum_i comp_i * [x_i + y_i >= d_i] in B.
 */
std::vector<Int> symmetric_cocycle_value(const ExtClass& e, const std::vector<Int>& x,
                                         const std::vector<Int>& y);

/**
 * Homomorphism from a finitely generated A into Z = (Q/Z)^m x D, given by
 * values on canonical generators. Order compatibility is checked.
 */
struct FlatHom {
    FgAbGroup source;
    ZShape shape;
    std::vector<ZElement> values;  // one per source generator

    FlatHom(FgAbGroup src, ZShape shape_, std::vector<ZElement> vals);
    static FlatHom zero(const FgAbGroup& src, const ZShape& shape_);

    ZElement apply(const std::vector<Int>& x) const;
    /** Discrete parts as a homomorphism source -> D. */
    AbHom discrete_part() const;
    /** Same values with the discrete part zeroed. */
    FlatHom connected_part() const;
    bool discrete_is_zero() const;
};

/**
 * Connecting map for Gamma = Z^m inside Q^m over Z_0 = (Q/Z)^m: the class of the
 * pullback of that extension along phi, in Ext(A, Z^m). The i-th component is
 * d_i * (canonical [0,1) lift of phi(g_i)) reduced mod d_i. Free generators
 * contribute nothing. Requires the discrete part of phi to vanish.
 */
ExtClass connecting_delta(const FlatHom& phi);

/**
 * Characteristic data of a central extension of K by Z = (Q/Z)^m x D:
 * the two connecting maps on homotopy data plus, when the pi2-side map vanishes,
 * the class of the induced fundamental-group extension.
 */
struct CentralExtData {
    FgAbGroup pi1K, pi2K, D;
    int gamma_rank = 0;
    AbHom d1;  // pi1K -> D
    AbHom d2;  // pi2K -> Z^gamma_rank
    std::optional<ExtClass> fund_ext;  // over (pi1K, Z^gamma_rank); only when d2 = 0

    CentralExtData(FgAbGroup pi1, FgAbGroup pi2, FgAbGroup d, int m, AbHom d1_, AbHom d2_,
                   std::optional<ExtClass> fe);
    static CentralExtData trivial(const FgAbGroup& pi1, const FgAbGroup& pi2, const FgAbGroup& d,
                                  int m);
    FgAbGroup gamma_group() const { return FgAbGroup::free_group(gamma_rank); }
};

/** Data of the pushforward of the universal covering extension along a flat gamma. */
CentralExtData flat_extension_data(const FlatHom& gamma, const FgAbGroup& pi2K);

/** Componentwise Baer sum; fund_ext present only when both operands carry it. */
CentralExtData baer_sum_data(const CentralExtData& e1, const CentralExtData& e2);

/** Restriction along phi1 : H1 -> pi1K, phi2 : H2 -> pi2K. */
CentralExtData pullback_data(const AbHom& phi1, const AbHom& phi2, const CentralExtData& e);

} // namespace liftobs

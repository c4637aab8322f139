#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftobs/abelian.hpp"
#include "liftobs/cech.hpp"
#include "liftobs/extensions.hpp"
#include "liftobs/fingroup.hpp"
#include "liftobs/grpcoh.hpp"

namespace liftobs {

/** Covering datum: a nerve together with a locally finite 1-cocycle on it. */
struct CoveringData {
    NervePtr nerve;
    KCochain cocycle;  // valued in pi1X
};

/**
 * Characteristic data of a principal bundle. With pi1X absent the base is
 * treated as 1-connected and h2 must be an isomorphism. pi1P_class is the
 * degree-2 class of the fundamental-group extension, with coefficients in
 * the canonical form of coker(d2P).
 */
struct BundleData {
    FgAbGroup pi2X, pi3X, H2X, H3X;
    AbHom h2;   // pi2X -> H2X
    AbHom d2P;  // pi2X -> pi1K
    AbHom d3P;  // pi3X -> pi2K
    std::optional<FiniteGroup> pi1X;
    std::optional<CoveringData> covering;
    std::optional<GroupCochain> pi1P_class;

    bool one_connected() const { return !pi1X.has_value(); }
};

/** Validates that extension and bundle shapes fit together; throws on mismatch. */
void check_shapes(const CentralExtData& ext, const BundleData& b);

enum class Verdict {
    LiftsForAllP,
    NonzeroOnPi3,
    NonzeroOnPi2,
    AsphericalNonzero,
    AsphericalUndetermined,
    Zero,
};
std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

struct ObstructionReport {
    AbHom pi2_hom;  // pi2X -> D
    AbHom pi3_hom;  // pi3X -> Z^m
    std::optional<ExtClass> flat_ext;
    std::optional<CechCochain> cech_class;
    Verdict verdict = Verdict::AsphericalUndetermined;
    std::vector<std::string> provenance;
};

AbHom pi3_component(const CentralExtData& ext, const BundleData& b);
AbHom pi2_component(const CentralExtData& ext, const BundleData& b);

/** Evaluation of the obstruction over a 2-sphere: h in pi1K, result in D. */
std::vector<Int> sphere_class_s2(const CentralExtData& ext, const std::vector<Int>& h);
/** Degree-2 evaluation for the Chern-type class: negation. */
std::vector<Int> chern_class_s2(const std::vector<Int>& h);

/** Composite d2 . pi2f; equals the negated degree-0 square evaluation. */
AbHom degree_zero_component(const CentralExtData& ext, const AbHom& pi2f);

Verdict vanishing_verdict(const CentralExtData& ext, const BundleData& b);

/**
 * Flat obstruction over a 1-connected base: the negated connecting class of
 * gamma . d2P in Ext(pi2X, Z^m).
 */
ExtClass flat_obstruction_1conn(const FlatHom& gamma, const BundleData& b);

/**
 * Views of the pushed fundamental-group class for a flat extension over a
 * base with given pi1X. pushed carries the connected coordinates, pushed_disc
 * the discrete ones; ext_view exists for abelian pi1X, symmetric class and
 * integral section powers; cech_view needs covering data and finite D.
 * Every view carries the leading minus sign of the obstruction formulas.
 */
struct FlatGeneralView {
    GroupCochain pushed;       // (Q/Z)^m-valued, negated
    GroupCochain pushed_disc;  // D-valued, negated
    std::optional<ExtClass> ext_view;
    std::optional<CechCochain> cech_view;
};
FlatGeneralView flat_obstruction_general(const FlatHom& gamma, const BundleData& b);

/** Extension of the covering cocycle's group by f's coefficients, lifted edgewise. */
CechCochain obs_cover(const KCochain& g, const GroupCochain& f);

/** True iff the bundle lifts to the universal-cover extension: class bounds. */
bool zeta_lift_verdict(const GroupCochain& pi1P_class);

/** Ext(H2X, Z^m): the flat-graded piece of the degree-3 target. */
FgAbGroup lambda3_group(const BundleData& b, int m);

/** Asserts the flat class is torsion (Ext of f.g. groups into Z^m is finite). */
bool torsion_flag(const ObstructionReport& r, const BundleData& b);

/** The one table of applied leading signs, with the formula each belongs to. */
const char* sign_ledger_text();

/** Full pipeline: components, refinements where data allows, verdict. */
ObstructionReport compute_report(const CentralExtData& ext, const BundleData& b);

} // namespace liftobs

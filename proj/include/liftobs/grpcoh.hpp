#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "liftobs/abelian.hpp"
#include "liftobs/coeffmod.hpp"
#include "liftobs/extensions.hpp"
#include "liftobs/fingroup.hpp"

namespace liftobs {

using FinGroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * Normalized n-cochain on a finite group with trivial action: one coefficient
 * value per n-tuple of group elements, zero whenever a slot holds the
 * identity. Tuple index is sum of g_i * |G|^i (first slot fastest).
 *
 * Degree 0 is a single value (the empty tuple).
 */
class GroupCochain {
public:
    GroupCochain(FinGroupPtr group, int degree, CoeffModule coeff);
    static GroupCochain zero(FinGroupPtr group, int degree, CoeffModule coeff) {
        return GroupCochain(std::move(group), degree, std::move(coeff));
    }

    int degree() const { return degree_; }
    const CoeffModule& coeff() const { return coeff_; }
    const FiniteGroup& group() const { return *group_; }
    const FinGroupPtr& group_ptr() const { return group_; }

    int tuple_count() const { return int(vals_.size()); }
    std::vector<int> tuple_of(int idx) const;
    int index_of(const std::vector<int>& tuple) const;

    const std::vector<Rat>& value(int idx) const;
    std::vector<Rat> value_at(const std::vector<int>& tuple) const;
    /** Rejects nonzero values on identity-bearing tuples. */
    void set_value(int idx, std::vector<Rat> v);
    void set_value_at(const std::vector<int>& tuple, std::vector<Rat> v);

    bool is_zero() const;
    GroupCochain operator+(const GroupCochain& o) const;
    GroupCochain operator-() const;
    GroupCochain smul(const Int& k) const;
    bool operator==(const GroupCochain& o) const;
    bool operator!=(const GroupCochain& o) const { return !(*this == o); }

private:
    FinGroupPtr group_;
    int degree_;
    CoeffModule coeff_;
    std::vector<std::vector<Rat>> vals_;
};

/** Trivial-action bar differential; degree at most 2 in, delta.delta = 0. */
GroupCochain bar_coboundary(const GroupCochain& c);

/** Cocycle test through the internal differential tables (degree <= 3). */
bool is_group_cocycle(const GroupCochain& c);

/**
 * A raw degree-2 value table shifted into the normalized complex. For a
 * cocycle the shift is the constant coboundary by f(1,1); the returned
 * cochain is cohomologous to the input.
 */
struct Normalized2Cocycle {
    GroupCochain cochain;
    std::vector<Rat> shift;  // coefficient value subtracted as a constant coboundary
};
Normalized2Cocycle normalize_2cocycle(FinGroupPtr group, CoeffModule coeff,
                                      const std::vector<std::vector<Rat>>& full_table);

/**
 * H^n(G, M) for trivial action, n <= 3, via integer linear algebra on the
 * normalized cochain coordinates. Q/Z coefficients (degrees 1..2 only) are
 * computed as integral cohomology one degree up, since Q^m is cohomologically
 * trivial in positive degrees; rational coefficients give zero in degree >= 1,
 * witnessed by averaging.
 */
FgAbGroup cohomology_group(const FiniteGroup& g, const CoeffModule& coeff, int degree,
                           int order_bound = 8);

/** Witness (n-1)-cochain with coboundary c, or nullopt. Input must be a cocycle. */
std::optional<GroupCochain> is_group_coboundary(const GroupCochain& c);

/**
 * Connecting map for Z^m -> Q^m -> (Q/Z)^m: lift a (Q/Z)^m-valued 2-cocycle
 * canonically to [0,1)^m and take the bar coboundary, an integer 3-cocycle.
 */
GroupCochain delta2_connecting(const GroupCochain& f);

/** f(k,k') = s(k) s(k') s(kk')^{-1} in Z-coordinates; normalized 2-cocycle. */
GroupCochain cocycle_of_extension(const FiniteCentralExt& ext);

/**
 * Group table on Z x G with (z,k)(z',k') = (z + z' + f(k,k'), k k');
 * pair index is z + |Z| * k. Requires a finite coefficient group.
 */
FiniteCentralExt extension_of_cocycle(const GroupCochain& f);

/** Pointwise coefficient pushforward along a homomorphism. */
GroupCochain pushforward_coeff(const AbHom& gamma, const GroupCochain& c);
/** Pointwise pushforward into (Q/Z)^m; gamma must have no discrete component. */
GroupCochain pushforward_coeff(const FlatHom& gamma, const GroupCochain& c);

/**
 * Ext coordinates of the abelian extension built from a symmetric cocycle
 * over an abelian group: component i is the d_i-fold power of a section
 * lift of the i-th canonical generator.
 */
ExtClass ext_of_symmetric_class(const GroupCochain& f);

/** Baer sum through cocycle addition; quotients and kernels must agree. */
FiniteCentralExt baer_sum_finite(const FiniteCentralExt& a, const FiniteCentralExt& b);

} // namespace liftobs

#pragma once

#include <string>
#include <vector>

#include "liftobs/abelian.hpp"

namespace liftobs {

/**
 * Coefficient module for cochain values: a finitely generated group (integer
 * coordinates), (Q/Z)^m, or Q^m (lift computations only). Values are vectors
 * of rationals; reduce() enforces the canonical representative per kind.
 */
struct CoeffModule {
    enum class Kind { Group, QmodZ, Rational } kind = Kind::Group;
    FgAbGroup group;
    int m = 0;

    static CoeffModule of_group(FgAbGroup g);
    static CoeffModule qmodz(int m);
    static CoeffModule rational(int m);

    int dim() const { return kind == Kind::Group ? group.gens() : m; }
    bool operator==(const CoeffModule& o) const {
        return kind == o.kind && group == o.group && m == o.m;
    }
    bool operator!=(const CoeffModule& o) const { return !(*this == o); }

    std::vector<Rat> zero() const { return std::vector<Rat>(size_t(dim())); }
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    std::vector<Rat> add(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    std::vector<Rat> neg(const std::vector<Rat>& a) const;
    std::vector<Rat> smul(const Int& k, const std::vector<Rat>& a) const;
    bool is_zero(const std::vector<Rat>& a) const;
    std::string to_string() const;
};

} // namespace liftobs

#pragma once

#include <string>
#include <vector>

#include "liftobs/abelian.hpp"

namespace liftobs {

/**
 * Finite group given by its multiplication table. The table is verified on
 * construction (closure, associativity, identity, inverses), so a FiniteGroup
 * value is always an actual group.
 */
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, std::string name = "");

    static FiniteGroup trivial();
    static FiniteGroup cyclic(const Int& n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup quaternion8();
    /** Table of a finite FgAbGroup; element index = mixed-radix coordinates. */
    static FiniteGroup from_abelian(const FgAbGroup& g);
    /** Named built-ins: "Q8" or any finite parse_group_spec string ("Z/n", "Z/a x Z/b", ...). */
    static FiniteGroup from_spec(const std::string& spec);
    // Format: line "order N", then N table rows of N indices.
    static FiniteGroup parse_table_text(const std::string& text);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[size_t(a) * size_t(n_) + size_t(b)]; }
    int inv(int a) const { return inv_[size_t(a)]; }
    int identity() const { return e_; }
    bool is_abelian() const { return abelian_; }
    int order_of(int a) const;
    /** a^k for any integer k. */
    int power(int a, const Int& k) const;

    const std::string& name() const { return name_; }
    std::string format_table_text() const;

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<int> table_;  // table_[a*n + b] = a*b
    int e_ = 0;
    std::vector<int> inv_;
    bool abelian_ = true;
    std::string name_;
};

/** Mixed-radix element index of torsion coordinates in a finite FgAbGroup. */
int abelian_index(const FgAbGroup& g, const std::vector<Int>& coords);
std::vector<Int> abelian_coords(const FgAbGroup& g, int index);

/** True iff some multiplicative bijection exists; backtracking over generator images. */
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/**
 * Invariant-factor structure of an abelian FiniteGroup together with table
 * elements realizing the canonical generators. Verified: the induced
 * coordinate map is a group isomorphism.
 */
struct AbelianStructure {
    FgAbGroup group;
    std::vector<int> gen_elts;  // one table element per canonical generator
    std::vector<std::vector<Int>> coords_of;  // coords_of[element] = canonical coordinates
};

AbelianStructure abelian_structure(const FiniteGroup& g);

/**
 * Central extension Z >-> total ->> quotient of finite groups, with a chosen
 * normalized section. All structural claims are revalidated on construction:
 * embed is an injective central homomorphism, proj is surjective with kernel
 * exactly im(embed), proj(section(k)) = k, section(1) = 1.
 */
struct FiniteCentralExt {
    FiniteGroup total;
    FiniteGroup quotient;
    FgAbGroup z;               // finite abelian kernel
    std::vector<int> embed;    // z mixed-radix index -> total element
    std::vector<int> proj;     // total element -> quotient element
    std::vector<int> section;  // quotient element -> total element

    FiniteCentralExt(FiniteGroup total_, FiniteGroup quotient_, FgAbGroup z_,
                     std::vector<int> embed_, std::vector<int> proj_, std::vector<int> section_);

    /** z index of a total element in the embedded kernel, -1 otherwise. */
    int z_index_of(int t) const { return z_lookup_[size_t(t)]; }

    /** Same extension with a different normalized section. */
    FiniteCentralExt with_section(std::vector<int> section_) const;

    /** Z/(2k) as extension of Z/k by Z/2 ... here the classic k=2 case. */
    static FiniteCentralExt z4_over_z2();
    /** Quaternion extension Z/2 >-> Q8 ->> Z/2 x Z/2. */
    static FiniteCentralExt q8_over_v4();
    /** Split product Z x K with the homomorphic section k -> (0, k). */
    static FiniteCentralExt split(const FgAbGroup& z, const FiniteGroup& k);

private:
    std::vector<int> z_lookup_;
    void validate();
};

} // namespace liftobs

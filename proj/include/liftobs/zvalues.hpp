#pragma once

#include <string>
#include <vector>

#include "liftobs/abelian.hpp"

namespace liftobs {

/** Reduce into [0, 1). */
Rat reduce_mod1(const Rat& q);
/** Parse "p/q" or "p"; canonicalized. */
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& q);

/** Element of (Q/Z)^m; coordinates stored as reduced fractions in [0, 1). */
struct QmodZVector {
    std::vector<Rat> v;

    QmodZVector() = default;
    explicit QmodZVector(std::vector<Rat> coords);
    static QmodZVector zero(int m) { return QmodZVector(std::vector<Rat>(size_t(m))); }

    int dim() const { return int(v.size()); }
    bool is_zero() const;
    QmodZVector add(const QmodZVector& o) const;
    QmodZVector neg() const;
    QmodZVector smul(const Int& k) const;
    bool operator==(const QmodZVector& o) const { return v == o.v; }

    /** Canonical representatives in [0,1)^m (the stored coordinates). */
    std::vector<Rat> canonical_lift() const { return v; }
};

/** Coefficient shape of the central group: identity component (Q/Z)^m times discrete part D. */
struct ZShape {
    int gamma_rank = 0;
    FgAbGroup d;

    bool operator==(const ZShape& o) const { return gamma_rank == o.gamma_rank && d == o.d; }
};

/** Element of Z = (Q/Z)^m x D; discrete coordinates canonically reduced in D. */
struct ZElement {
    QmodZVector conn;
    std::vector<Int> disc;

    static ZElement zero(const ZShape& s);
    bool matches(const ZShape& s) const;
    bool is_zero(const ZShape& s) const;
    ZElement add(const ZShape& s, const ZElement& o) const;
    ZElement neg(const ZShape& s) const;
    ZElement smul(const ZShape& s, const Int& k) const;
    bool operator==(const ZElement& o) const { return conn == o.conn && disc == o.disc; }
};

} // namespace liftobs

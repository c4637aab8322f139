#include "liftobs/zvalues.hpp"

#include <algorithm>

#include "liftobs/error.hpp"

namespace liftobs {

Rat reduce_mod1(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    r -= Rat(fl);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s) {
    try {
        Rat q(s);
        // canonicalize on a zero denominator is a hard fault in gmp
        require_input(q.get_den() != 0, "bad fraction '" + s + "': zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("bad fraction '" + s + "'");
    }
}

std::string format_rat(const Rat& q) { return q.get_str(); }

QmodZVector::QmodZVector(std::vector<Rat> coords) : v(std::move(coords)) {
    for (auto& x : v) x = reduce_mod1(x);
}

bool QmodZVector::is_zero() const {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

QmodZVector QmodZVector::add(const QmodZVector& o) const {
    require_internal(v.size() == o.v.size(), "Q/Z vector dimension mismatch");
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] + o.v[i];
    return QmodZVector(std::move(r));
}

QmodZVector QmodZVector::neg() const {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return QmodZVector(std::move(r));
}

QmodZVector QmodZVector::smul(const Int& k) const {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(k) * v[i];
    return QmodZVector(std::move(r));
}

ZElement ZElement::zero(const ZShape& s) {
    return ZElement{QmodZVector::zero(s.gamma_rank), std::vector<Int>(size_t(s.d.gens()))};
}

bool ZElement::matches(const ZShape& s) const {
    return conn.dim() == s.gamma_rank && int(disc.size()) == s.d.gens();
}

bool ZElement::is_zero(const ZShape& s) const { return conn.is_zero() && s.d.is_zero_elt(disc); }

ZElement ZElement::add(const ZShape& s, const ZElement& o) const {
    require_internal(matches(s) && o.matches(s), "Z element shape mismatch");
    return ZElement{conn.add(o.conn), s.d.add(disc, o.disc)};
}

ZElement ZElement::neg(const ZShape& s) const {
    require_internal(matches(s), "Z element shape mismatch");
    return ZElement{conn.neg(), s.d.neg(disc)};
}

ZElement ZElement::smul(const ZShape& s, const Int& k) const {
    require_internal(matches(s), "Z element shape mismatch");
    return ZElement{conn.smul(k), s.d.smul(k, disc)};
}

} // namespace liftobs

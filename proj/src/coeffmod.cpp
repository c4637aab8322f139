#include "liftobs/coeffmod.hpp"

#include "liftobs/error.hpp"
#include "liftobs/zvalues.hpp"

namespace liftobs {

CoeffModule CoeffModule::of_group(FgAbGroup g) {
    CoeffModule c;
    c.kind = Kind::Group;
    c.group = std::move(g);
    return c;
}

CoeffModule CoeffModule::qmodz(int m) {
    require_input(m >= 0, "coefficient rank must be non-negative");
    CoeffModule c;
    c.kind = Kind::QmodZ;
    c.m = m;
    return c;
}

CoeffModule CoeffModule::rational(int m) {
    require_input(m >= 0, "coefficient rank must be non-negative");
    CoeffModule c;
    c.kind = Kind::Rational;
    c.m = m;
    return c;
}

std::vector<Rat> CoeffModule::reduce(std::vector<Rat> v) const {
    require_input(int(v.size()) == dim(), "cochain value has wrong coordinate count");
    switch (kind) {
        case Kind::Group: {
            std::vector<Int> iv(v.size());
            for (size_t i = 0; i < v.size(); ++i) {
                require_input(v[i].get_den() == 1, "integer coefficient expected");
                iv[i] = v[i].get_num();
            }
            iv = group.reduce(iv);
            for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(iv[i]);
            return v;
        }
        case Kind::QmodZ:
            for (Rat& q : v) q = reduce_mod1(q);
            return v;
        case Kind::Rational:
            for (Rat& q : v) q.canonicalize();
            return v;
    }
    throw internal_error("unreachable coefficient kind");
}

std::vector<Rat> CoeffModule::add(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    require_internal(a.size() == b.size(), "coefficient arity mismatch");
    std::vector<Rat> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return reduce(std::move(out));
}

std::vector<Rat> CoeffModule::neg(const std::vector<Rat>& a) const {
    std::vector<Rat> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return reduce(std::move(out));
}

std::vector<Rat> CoeffModule::smul(const Int& k, const std::vector<Rat>& a) const {
    std::vector<Rat> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(k) * a[i];
    return reduce(std::move(out));
}

bool CoeffModule::is_zero(const std::vector<Rat>& a) const {
    for (const Rat& q : a)
        if (q != 0) return false;
    return true;
}

std::string CoeffModule::to_string() const {
    switch (kind) {
        case Kind::Group:
            return group.to_string();
        case Kind::QmodZ:
            return "(Q/Z)^" + std::to_string(m);
        case Kind::Rational:
            return "Q^" + std::to_string(m);
    }
    return "?";
}

} // namespace liftobs

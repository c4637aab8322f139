#include "liftobs/extensions.hpp"

#include "liftobs/error.hpp"

namespace liftobs {

namespace {

// Reduce a component of Ext(A, B) for invariant factor d: the coordinate over a
// free generator of B lives in Z/d, over a torsion generator of order e in
// Z/gcd(d, e).
std::vector<Int> reduce_component(const FgAbGroup& coeff, const Int& d, std::vector<Int> c) {
    require_internal(int(c.size()) == coeff.gens(), "ext component coordinate mismatch");
    for (int j = 0; j < coeff.gens(); ++j) {
        Int e = coeff.gen_order(j);
        Int m = (e == 0) ? d : gcd(d, e);
        if (m != 0) c[size_t(j)] = nonneg_mod(c[size_t(j)], m);
    }
    return c;
}

} // namespace

ExtClass::ExtClass(FgAbGroup base_, FgAbGroup coeff_, std::vector<std::vector<Int>> comps)
    : base(std::move(base_)), coeff(std::move(coeff_)), comp(std::move(comps)) {
    require_internal(comp.size() == base.torsion.size(), "one ext component per invariant factor");
    for (size_t i = 0; i < comp.size(); ++i) comp[i] = reduce_component(coeff, base.torsion[i], std::move(comp[i]));
}

ExtClass ExtClass::zero(const FgAbGroup& base_, const FgAbGroup& coeff_) {
    std::vector<std::vector<Int>> c(base_.torsion.size(), std::vector<Int>(size_t(coeff_.gens())));
    return ExtClass(base_, coeff_, std::move(c));
}

bool ExtClass::is_zero() const {
    for (const auto& c : comp)
        for (const Int& x : c)
            if (x != 0) return false;
    return true;
}

bool ExtClass::operator==(const ExtClass& o) const {
    return base == o.base && coeff == o.coeff && comp == o.comp;
}

ExtClass baer_sum(const ExtClass& e1, const ExtClass& e2) {
    require_input(e1.base == e2.base && e1.coeff == e2.coeff, "baer sum: class homes differ");
    std::vector<std::vector<Int>> c(e1.comp.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i].resize(e1.comp[i].size());
        for (size_t j = 0; j < c[i].size(); ++j) c[i][j] = e1.comp[i][j] + e2.comp[i][j];
    }
    return ExtClass(e1.base, e1.coeff, std::move(c));
}

ExtClass negate_ext(const ExtClass& e) {
    std::vector<std::vector<Int>> c(e.comp.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i].resize(e.comp[i].size());
        for (size_t j = 0; j < c[i].size(); ++j) c[i][j] = -e.comp[i][j];
    }
    return ExtClass(e.base, e.coeff, std::move(c));
}

ExtClass pushforward_ext(const AbHom& phi, const ExtClass& e) {
    require_input(phi.source == e.coeff, "pushforward: coefficient group mismatch");
    std::vector<std::vector<Int>> c;
    c.reserve(e.comp.size());
    for (const auto& comp : e.comp) c.push_back(phi.matrix.apply(comp));
    return ExtClass(e.base, phi.target, std::move(c));
}

std::vector<Int> symmetric_cocycle_value(const ExtClass& e, const std::vector<Int>& x,
                                         const std::vector<Int>& y) {
    auto xr = e.base.reduce(x);
    auto yr = e.base.reduce(y);
    std::vector<Int> val(size_t(e.coeff.gens()));
    for (size_t i = 0; i < e.base.torsion.size(); ++i) {
        size_t k = size_t(e.base.free_rank) + i;
        if (xr[k] + yr[k] >= e.base.torsion[i])  // least-residue section carry
            for (size_t j = 0; j < val.size(); ++j) val[j] += e.comp[i][j];
    }
    return e.coeff.reduce(std::move(val));
}

ExtClass pullback_ext(const AbHom& psi, const ExtClass& e) {
    require_input(psi.target == e.base, "pullback: base group mismatch");
    const FgAbGroup& a2 = psi.source;
    std::vector<std::vector<Int>> c;
    c.reserve(a2.torsion.size());
    for (size_t j = 0; j < a2.torsion.size(); ++j) {
        const Int& dj = a2.torsion[j];
        std::vector<Int> gj(size_t(a2.gens()), Int(0));
        gj[size_t(a2.free_rank) + j] = 1;
        std::vector<Int> img = psi.apply(gj);
        // Image of a torsion generator is torsion, so its free coordinates vanish.
        for (int i = 0; i < e.base.free_rank; ++i)
            require_internal(img[size_t(i)] == 0, "torsion generator image must be torsion");
        // Cyclic norm of the canonical symmetric representative along the image:
        // sum over base torsion coordinates of (d_j * img_i / d_i) carries.
        std::vector<Int> val(size_t(e.coeff.gens()));
        for (size_t i = 0; i < e.base.torsion.size(); ++i) {
            Int num = dj * img[size_t(e.base.free_rank) + i];
            require_internal(num % e.base.torsion[i] == 0, "order condition violated in pullback");
            Int q = num / e.base.torsion[i];
            if (q == 0) continue;
            for (size_t t = 0; t < val.size(); ++t) val[t] += q * e.comp[i][t];
        }
        c.push_back(std::move(val));
    }
    return ExtClass(a2, e.coeff, std::move(c));
}

FlatHom::FlatHom(FgAbGroup src, ZShape shape_, std::vector<ZElement> vals)
    : source(std::move(src)), shape(std::move(shape_)), values(std::move(vals)) {
    require_internal(int(values.size()) == source.gens(), "one value per generator");
    for (int i = 0; i < source.gens(); ++i) {
        require_internal(values[size_t(i)].matches(shape), "value shape mismatch");
        Int d = source.gen_order(i);
        if (d == 0) continue;
        require_input(values[size_t(i)].smul(shape, d).is_zero(shape),
                      "hom into Z not well-defined: generator of order " + d.get_str() +
                          " maps to a value not killed by it");
    }
}

FlatHom FlatHom::zero(const FgAbGroup& src, const ZShape& shape_) {
    return FlatHom(src, shape_, std::vector<ZElement>(size_t(src.gens()), ZElement::zero(shape_)));
}

ZElement FlatHom::apply(const std::vector<Int>& x) const {
    auto xr = source.reduce(x);
    ZElement acc = ZElement::zero(shape);
    for (size_t i = 0; i < xr.size(); ++i) {
        if (xr[i] == 0) continue;
        acc = acc.add(shape, values[i].smul(shape, xr[i]));
    }
    return acc;
}

AbHom FlatHom::discrete_part() const {
    IntMatrix m(shape.d.gens(), source.gens());
    for (int j = 0; j < source.gens(); ++j)
        for (int i = 0; i < shape.d.gens(); ++i) m.at(i, j) = values[size_t(j)].disc[size_t(i)];
    return AbHom(source, shape.d, std::move(m));
}

FlatHom FlatHom::connected_part() const {
    std::vector<ZElement> vals = values;
    for (auto& v : vals) v.disc.assign(v.disc.size(), Int(0));
    return FlatHom(source, shape, std::move(vals));
}

bool FlatHom::discrete_is_zero() const { return discrete_part().is_zero(); }

ExtClass connecting_delta(const FlatHom& phi) {
    require_input(phi.discrete_is_zero(), "connecting map needs values in the identity component");
    const FgAbGroup& a = phi.source;
    const int m = phi.shape.gamma_rank;
    std::vector<std::vector<Int>> comps;
    comps.reserve(a.torsion.size());
    for (size_t i = 0; i < a.torsion.size(); ++i) {
        const Int& d = a.torsion[i];
        const QmodZVector& v = phi.values[size_t(a.free_rank) + i].conn;
        std::vector<Int> c(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            Rat scaled = Rat(d) * v.v[size_t(j)];  // canonical [0,1) lift times the order
            scaled.canonicalize();
            require_internal(scaled.get_den() == 1, "order condition must clear denominators");
            c[size_t(j)] = scaled.get_num();
        }
        comps.push_back(std::move(c));
    }
    return ExtClass(a, FgAbGroup::free_group(m), std::move(comps));
}

CentralExtData::CentralExtData(FgAbGroup pi1, FgAbGroup pi2, FgAbGroup d, int m, AbHom d1_,
                               AbHom d2_, std::optional<ExtClass> fe)
    : pi1K(std::move(pi1)),
      pi2K(std::move(pi2)),
      D(std::move(d)),
      gamma_rank(m),
      d1(std::move(d1_)),
      d2(std::move(d2_)),
      fund_ext(std::move(fe)) {
    require_input(d1.source == pi1K && d1.target == D, "d1 must map pi1(K) to D");
    require_input(d2.source == pi2K && d2.target == FgAbGroup::free_group(gamma_rank),
                  "d2 must map pi2(K) to Z^m");
    if (fund_ext) {
        require_input(fund_ext->base == pi1K && fund_ext->coeff == FgAbGroup::free_group(gamma_rank),
                      "fund_ext must live over (pi1K, Z^m)");
        require_input(d2.is_zero(),
                      "fund_ext is only meaningful when d2 vanishes: the fundamental-group "
                      "extension class exists only for extensions with vanishing pi2 connecting map");
    }
}

CentralExtData CentralExtData::trivial(const FgAbGroup& pi1, const FgAbGroup& pi2,
                                       const FgAbGroup& d, int m) {
    return CentralExtData(pi1, pi2, d, m, AbHom::zero(pi1, d),
                          AbHom::zero(pi2, FgAbGroup::free_group(m)),
                          ExtClass::zero(pi1, FgAbGroup::free_group(m)));
}

CentralExtData flat_extension_data(const FlatHom& gamma, const FgAbGroup& pi2K) {
    const FgAbGroup& pi1 = gamma.source;
    AbHom d2 = AbHom::zero(pi2K, FgAbGroup::free_group(gamma.shape.gamma_rank));
    return CentralExtData(pi1, pi2K, gamma.shape.d, gamma.shape.gamma_rank, gamma.discrete_part(),
                          std::move(d2), connecting_delta(gamma.connected_part()));
}

CentralExtData baer_sum_data(const CentralExtData& e1, const CentralExtData& e2) {
    require_input(e1.pi1K == e2.pi1K && e1.pi2K == e2.pi2K && e1.D == e2.D &&
                      e1.gamma_rank == e2.gamma_rank,
                  "baer sum of extension data: shapes differ");
    std::optional<ExtClass> fe;
    AbHom d2 = e1.d2 + e2.d2;
    if (e1.fund_ext && e2.fund_ext && d2.is_zero()) fe = baer_sum(*e1.fund_ext, *e2.fund_ext);
    return CentralExtData(e1.pi1K, e1.pi2K, e1.D, e1.gamma_rank, e1.d1 + e2.d1, std::move(d2),
                          std::move(fe));
}

CentralExtData pullback_data(const AbHom& phi1, const AbHom& phi2, const CentralExtData& e) {
    require_input(phi1.target == e.pi1K, "pullback_data: phi1 must land in pi1K");
    require_input(phi2.target == e.pi2K, "pullback_data: phi2 must land in pi2K");
    AbHom d1 = compose(e.d1, phi1);
    AbHom d2 = compose(e.d2, phi2);
    std::optional<ExtClass> fe;
    if (e.fund_ext && d2.is_zero()) fe = pullback_ext(phi1, *e.fund_ext);
    return CentralExtData(phi1.source, phi2.source, e.D, e.gamma_rank, std::move(d1), std::move(d2),
                          std::move(fe));
}

} // namespace liftobs

#include "liftobs/engine.hpp"

#include <algorithm>

#include "liftobs/error.hpp"
#include "liftobs/zvalues.hpp"

namespace liftobs {

namespace {

// Deterministic preimage of a cokernel generator under the projection.
std::vector<Int> coker_rep(const KerCoker& kc, int i) {
    std::vector<Int> e(size_t(kc.cokernel.gens()));
    e[size_t(i)] = 1;
    auto r = preimage(kc.coker_proj, e);
    require_internal(r.has_value(), "cokernel projection must be surjective");
    return *r;
}

// Factor f : pi1K -> T through coker(d2P); valid once f kills im(d2P).
AbHom factor_through_coker(const AbHom& f, const KerCoker& kc) {
    IntMatrix m(f.target.gens(), kc.cokernel.gens());
    for (int i = 0; i < kc.cokernel.gens(); ++i) {
        auto y = f.apply(coker_rep(kc, i));
        for (int r = 0; r < f.target.gens(); ++r) m.at(r, i) = y[size_t(r)];
    }
    return AbHom(kc.cokernel, f.target, std::move(m));
}

FlatHom factor_flat_through_coker(const FlatHom& gamma, const KerCoker& kc) {
    std::vector<ZElement> vals;
    vals.reserve(size_t(kc.cokernel.gens()));
    for (int i = 0; i < kc.cokernel.gens(); ++i) vals.push_back(gamma.apply(coker_rep(kc, i)));
    return FlatHom(kc.cokernel, gamma.shape, std::move(vals));
}

bool cochain_symmetric(const GroupCochain& f) {
    const FiniteGroup& g = f.group();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < a; ++b)
            if (f.value_at({a, b}) != f.value_at({b, a})) return false;
    return true;
}

// Section-power norms of a (Q/Z)^m-valued symmetric cocycle along the
// canonical generators; the Ext component is d_i times the norm when that
// product is integral.
std::optional<ExtClass> ext_view_of_pushed(const GroupCochain& pushed) {
    const FiniteGroup& g = pushed.group();
    if (!g.is_abelian() || !cochain_symmetric(pushed)) return std::nullopt;
    AbelianStructure s = abelian_structure(g);
    int m = pushed.coeff().m;
    std::vector<std::vector<Int>> comps;
    for (size_t i = 0; i < s.gen_elts.size(); ++i) {
        int a = s.gen_elts[i];
        Int d = s.group.gen_order(int(i));
        std::vector<Rat> acc(static_cast<size_t>(m));
        int x = a;
        for (Int k = 1; k < d; ++k) {
            auto v = pushed.value_at({x, a});
            for (size_t j = 0; j < v.size(); ++j) acc[j] += v[j];
            x = g.mul(x, a);
        }
        std::vector<Int> comp(static_cast<size_t>(m));
        for (size_t j = 0; j < acc.size(); ++j) {
            Rat t = Rat(d) * reduce_mod1(acc[j]);
            t.canonicalize();
            if (t.get_den() != 1) return std::nullopt;  // norm does not close up integrally
            comp[j] = t.get_num();
        }
        comps.push_back(std::move(comp));
    }
    return ExtClass(s.group, FgAbGroup::free_group(m), std::move(comps));
}

struct Analysis {
    AbHom pi2, pi3;
    std::optional<ExtClass> flat_ext;
    std::optional<CechCochain> cech;
    bool cech_trivial = false;
    Verdict verdict = Verdict::AsphericalUndetermined;
    std::vector<std::string> provenance;
};

Analysis analyze(const CentralExtData& ext, const BundleData& b) {
    check_shapes(ext, b);
    Analysis a{pi2_component(ext, b), pi3_component(ext, b), std::nullopt, std::nullopt};
    a.provenance.push_back("pi3_hom = d2 . d3P");
    a.provenance.push_back("pi2_hom = -(d1 . d2P)");

    if (!a.pi3.is_zero()) {
        a.verdict = Verdict::NonzeroOnPi3;
        return a;
    }
    if (!a.pi2.is_zero()) {
        a.verdict = Verdict::NonzeroOnPi2;
        return a;
    }
    if (ext.d2.is_zero() && ext.d1.is_zero() && ext.fund_ext && ext.fund_ext->is_zero()) {
        a.verdict = Verdict::LiftsForAllP;
        a.provenance.push_back("d2 = 0, d1 = 0, fundamental class = 0: no bundle obstructs");
        return a;
    }
    if (ext.gamma_rank == 0 && ext.D.is_trivial()) {
        // The whole obstruction target vanishes with Z trivial.
        a.verdict = Verdict::Zero;
        a.provenance.push_back("trivial center: obstruction target is the zero group");
        return a;
    }

    if (b.one_connected() && ext.d2.is_zero() && ext.fund_ext) {
        a.flat_ext = negate_ext(pullback_ext(b.d2P, *ext.fund_ext));
        a.provenance.push_back("flat_ext = -pullback(d2P, fund_ext)");
    }
    if (!b.one_connected() && b.pi1P_class && b.covering && ext.D.is_finite()) {
        // pi2_hom = 0 here, so d1 kills im(d2P) and factors through the
        // cokernel; push the fundamental-group class and realize it on the
        // covering nerve.
        KerCoker kc = kernel_cokernel(b.d2P);
        AbHom d1bar = factor_through_coker(ext.d1, kc);
        GroupCochain disc = pushforward_coeff(d1bar, *b.pi1P_class);
        a.cech = -obs_cover(b.covering->cocycle, disc);
        a.cech_trivial = is_coboundary(*a.cech).has_value();
        a.provenance.push_back(
            "cech_class = -delta1_lift(covering, extension(d1bar_* pi1P_class))");
    }

    if (a.flat_ext && !a.flat_ext->is_zero())
        a.verdict = Verdict::AsphericalNonzero;
    else if (a.cech && !a.cech_trivial)
        a.verdict = Verdict::AsphericalNonzero;
    else if (b.one_connected() && a.flat_ext)
        a.verdict = Verdict::Zero;  // both graded pieces computed zero
    else if (!b.one_connected() && ext.gamma_rank == 0 && a.cech && a.cech_trivial)
        a.verdict = Verdict::Zero;  // no free part, discrete part bounds
    else
        a.verdict = Verdict::AsphericalUndetermined;
    return a;
}

} // namespace

void check_shapes(const CentralExtData& ext, const BundleData& b) {
    std::vector<std::string> bad;
    if (b.h2.source != b.pi2X) bad.push_back("h2 source differs from pi2X");
    if (b.h2.target != b.H2X) bad.push_back("h2 target differs from H2X");
    if (b.d2P.source != b.pi2X) bad.push_back("d2P source differs from pi2X");
    if (b.d2P.target != ext.pi1K) bad.push_back("d2P target differs from pi1K");
    if (b.d3P.source != b.pi3X) bad.push_back("d3P source differs from pi3X");
    if (b.d3P.target != ext.pi2K) bad.push_back("d3P target differs from pi2K");
    if (b.one_connected()) {
        if (!is_isomorphism(b.h2)) bad.push_back("1-connected base needs h2 to be an isomorphism");
        if (b.pi1P_class) bad.push_back("pi1P_class requires pi1X");
        if (b.covering) bad.push_back("covering cocycle requires pi1X");
    }
    if (b.pi1P_class) {
        if (b.pi1X && b.pi1P_class->group() != *b.pi1X)
            bad.push_back("pi1P_class group differs from pi1X");
        if (b.pi1P_class->degree() != 2) bad.push_back("pi1P_class must have degree 2");
        FgAbGroup coker = kernel_cokernel(b.d2P).cokernel;
        if (b.pi1P_class->coeff() != CoeffModule::of_group(coker))
            bad.push_back("pi1P_class coefficients must be the canonical form of coker(d2P)");
        else if (!is_group_cocycle(*b.pi1P_class))
            bad.push_back("pi1P_class is not a cocycle");
    }
    if (b.covering) {
        if (b.pi1X && b.covering->cocycle.group() != *b.pi1X)
            bad.push_back("covering cocycle group differs from pi1X");
        if (b.covering->cocycle.degree() != 1) bad.push_back("covering cocycle must have degree 1");
        else if (!b.covering->cocycle.is_cocycle())
            bad.push_back("covering cocycle violates the triangle condition");
    }
    if (!bad.empty()) {
        std::string msg = "inconsistent scenario shapes:";
        for (const auto& s : bad) msg += "\n  - " + s;
        throw input_error(msg);
    }
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::LiftsForAllP: return "LiftsForAllP";
        case Verdict::NonzeroOnPi3: return "NonzeroOnPi3";
        case Verdict::NonzeroOnPi2: return "NonzeroOnPi2";
        case Verdict::AsphericalNonzero: return "AsphericalNonzero";
        case Verdict::AsphericalUndetermined: return "AsphericalUndetermined";
        case Verdict::Zero: return "Zero";
    }
    throw internal_error("unknown verdict");
}

Verdict parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::LiftsForAllP, Verdict::NonzeroOnPi3, Verdict::NonzeroOnPi2,
                      Verdict::AsphericalNonzero, Verdict::AsphericalUndetermined, Verdict::Zero})
        if (verdict_name(v) == s) return v;
    throw input_error("unknown verdict '" + s + "'");
}

AbHom pi3_component(const CentralExtData& ext, const BundleData& b) {
    require_input(b.d3P.target == ext.pi2K, "pi3 component: d3P target differs from pi2K");
    return compose(ext.d2, b.d3P);
}

AbHom pi2_component(const CentralExtData& ext, const BundleData& b) {
    require_input(b.d2P.target == ext.pi1K, "pi2 component: d2P target differs from pi1K");
    return -compose(ext.d1, b.d2P);
}

std::vector<Int> sphere_class_s2(const CentralExtData& ext, const std::vector<Int>& h) {
    auto v = ext.d1.apply(h);
    for (auto& x : v) x = -x;
    return ext.D.reduce(v);
}

std::vector<Int> chern_class_s2(const std::vector<Int>& h) {
    std::vector<Int> v(h.size());
    for (size_t i = 0; i < h.size(); ++i) v[i] = -h[i];
    return v;
}

AbHom degree_zero_component(const CentralExtData& ext, const AbHom& pi2f) {
    require_input(pi2f.target == ext.pi2K, "degree-0 component: map must land in pi2K");
    return compose(ext.d2, pi2f);
}

Verdict vanishing_verdict(const CentralExtData& ext, const BundleData& b) {
    return analyze(ext, b).verdict;
}

ExtClass flat_obstruction_1conn(const FlatHom& gamma, const BundleData& b) {
    require_input(b.one_connected(), "flat route needs a 1-connected base");
    require_input(gamma.source == b.d2P.target, "flat route: gamma must live on pi1K");
    std::vector<ZElement> vals;
    vals.reserve(size_t(b.pi2X.gens()));
    for (int i = 0; i < b.pi2X.gens(); ++i)
        vals.push_back(gamma.apply(b.d2P.matrix.column_vec(i)));
    FlatHom composite(b.pi2X, gamma.shape, std::move(vals));
    return negate_ext(connecting_delta(composite));
}

FlatGeneralView flat_obstruction_general(const FlatHom& gamma, const BundleData& b) {
    require_input(b.pi1P_class.has_value(), "general flat route needs pi1P_class");
    require_input(gamma.source == b.d2P.target, "general flat route: gamma must live on pi1K");
    for (int i = 0; i < b.pi2X.gens(); ++i) {
        ZElement y = gamma.apply(b.d2P.matrix.column_vec(i));
        require_input(y.is_zero(gamma.shape),
                      "asphericity precondition violated: gamma . d2P is nonzero, the "
                      "degree-2 component applies instead");
    }
    KerCoker kc = kernel_cokernel(b.d2P);
    FlatHom gbar = factor_flat_through_coker(gamma, kc);
    GroupCochain pushed = -pushforward_coeff(gbar.connected_part(), *b.pi1P_class);
    GroupCochain pushed_disc = -pushforward_coeff(gbar.discrete_part(), *b.pi1P_class);
    FlatGeneralView out{pushed, pushed_disc, std::nullopt, std::nullopt};
    if (auto raw = ext_view_of_pushed(-pushed)) out.ext_view = negate_ext(*raw);
    if (b.covering && gamma.shape.d.is_finite())
        out.cech_view = -obs_cover(b.covering->cocycle, -pushed_disc);
    return out;
}

CechCochain obs_cover(const KCochain& g, const GroupCochain& f) {
    require_input(f.degree() == 2, "covering route needs a degree-2 class");
    require_input(g.group() == f.group(), "covering cocycle group differs from the class group");
    FiniteCentralExt ext = extension_of_cocycle(f);
    return delta1_lift(g, ext);
}

bool zeta_lift_verdict(const GroupCochain& pi1P_class) {
    return is_group_coboundary(pi1P_class).has_value();
}

FgAbGroup lambda3_group(const BundleData& b, int m) {
    require_input(b.one_connected(), "flat-graded piece defined for 1-connected bases here");
    require_input(m >= 0, "rank must be non-negative");
    return ext_group(b.H2X, FgAbGroup::free_group(m));
}

bool torsion_flag(const ObstructionReport& r, const BundleData& b) {
    require_input(b.one_connected(), "torsion check applies to 1-connected bases");
    if (r.flat_ext) {
        FgAbGroup home = ext_group(r.flat_ext->base, r.flat_ext->coeff);
        require_internal(home.is_finite(), "Ext of a f.g. group into Z^m must be finite");
    } else {
        require_internal(ext_group(b.H2X, FgAbGroup::free_group(1)).is_finite(),
                         "Ext of a f.g. group into Z must be finite");
    }
    return true;
}

const char* sign_ledger_text() {
    return "sign ledger (every leading sign, applied exactly once each)\n"
           "  pi3_hom        = +(d2 . d3P)        degree-3 homotopy component\n"
           "  pi2_hom        = -(d1 . d2P)        degree-2 homotopy component\n"
           "  sphere_s2      = -d1(h)             2-sphere evaluation\n"
           "  chern_s2       = -h                 degree-2 Chern-type evaluation\n"
           "  degree0        = +(d2 . pi2f)       reported as the negated square evaluation\n"
           "  flat 1conn     = -connecting(gamma . d2P)\n"
           "  flat general   = -(gamma_bar pushforward), every view\n"
           "  cech realize   = -delta1_lift(covering, extension(pushforward))\n";
}

ObstructionReport compute_report(const CentralExtData& ext, const BundleData& b) {
    Analysis a = analyze(ext, b);
    ObstructionReport r{a.pi2, a.pi3, std::move(a.flat_ext), std::move(a.cech), a.verdict,
                        std::move(a.provenance)};
    return r;
}

} // namespace liftobs

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "liftobs/engine.hpp"
#include "liftobs/error.hpp"
#include "liftobs/scenario.hpp"

using namespace liftobs;

namespace {

const std::string kData = TEST_DATA_DIR;

FinGroupPtr fg(const std::string& spec) {
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_spec(spec));
}

AbHom hom1(const FgAbGroup& src, const FgAbGroup& tgt, long entry) {
    return AbHom(src, tgt, IntMatrix(1, 1, {Int(entry)}));
}

// pi1K = Z/2, pi2K = Z, D = Z/2, one connected coordinate
CentralExtData sample_ext(long d1e, long d2e) {
    FgAbGroup z2 = FgAbGroup::cyclic(2), z = FgAbGroup::free_group(1);
    return CentralExtData(z2, z, z2, 1, hom1(z2, z2, d1e), hom1(z, z, d2e), std::nullopt);
}

BundleData sample_bundle() {
    FgAbGroup z = FgAbGroup::free_group(1), z2 = FgAbGroup::cyclic(2);
    BundleData b{z, z, z, z, AbHom::identity(z), hom1(z, z2, 1), hom1(z, z, 3),
                 std::nullopt, std::nullopt, std::nullopt};
    return b;
}

} // namespace

TEST_CASE("homotopy components by hand") {
    CentralExtData ext = sample_ext(1, 2);
    BundleData b = sample_bundle();
    AbHom pi3 = pi3_component(ext, b);
    CHECK(pi3.source == FgAbGroup::free_group(1));
    CHECK(pi3.target == FgAbGroup::free_group(1));
    CHECK(pi3.matrix.at(0, 0) == 6);
    AbHom pi2 = pi2_component(ext, b);
    CHECK(pi2.target == FgAbGroup::cyclic(2));
    CHECK(pi2.matrix.at(0, 0) == 1);  // -(1 * 1) reduced mod 2

    CHECK(sphere_class_s2(ext, {Int(1)}) == std::vector<Int>{Int(1)});
    CHECK(sphere_class_s2(ext, {Int(0)}) == std::vector<Int>{Int(0)});
    CHECK(chern_class_s2({Int(5), Int(-3)}) == std::vector<Int>{Int(-5), Int(3)});
    AbHom d0 = degree_zero_component(ext, AbHom::identity(FgAbGroup::free_group(1)));
    CHECK(d0 == ext.d2);
}

TEST_CASE("component sums follow data sums") {
    CentralExtData e1 = sample_ext(1, 2), e2 = sample_ext(0, 5);
    BundleData b = sample_bundle();
    CentralExtData sum = baer_sum_data(e1, e2);
    CHECK(pi3_component(sum, b) == pi3_component(e1, b) + pi3_component(e2, b));
    CHECK(pi2_component(sum, b) == pi2_component(e1, b) + pi2_component(e2, b));
}

TEST_CASE("shape validation collects every violation") {
    CentralExtData ext = sample_ext(1, 2);
    BundleData b = sample_bundle();
    b.h2 = AbHom::zero(b.pi2X, b.H2X);  // not an isomorphism over a 1-connected base
    auto coker = kernel_cokernel(b.d2P).cokernel;
    b.pi1P_class = GroupCochain(fg("Z/2"), 2, CoeffModule::of_group(coker));
    try {
        check_shapes(ext, b);
        FAIL("expected a shape error");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(e.kind() == ErrKind::Input);
        CHECK(msg.find("h2") != std::string::npos);
        CHECK(msg.find("pi1P_class requires pi1X") != std::string::npos);
    }
}

TEST_CASE("verdict names round trip") {
    for (Verdict v : {Verdict::LiftsForAllP, Verdict::NonzeroOnPi3, Verdict::NonzeroOnPi2,
                      Verdict::AsphericalNonzero, Verdict::AsphericalUndetermined, Verdict::Zero})
        CHECK(parse_verdict(verdict_name(v)) == v);
    CHECK_THROWS_AS(parse_verdict("NoSuchVerdict"), Error);
}

TEST_CASE("verdicts across the stored scenarios") {
    auto expect = [&](const std::string& file, Verdict v) {
        ScenarioConfig cfg = parse_scenario(kData + "/" + file);
        ObstructionReport r = compute_report(cfg.extension, cfg.bundle);
        CHECK(r.verdict == v);
        CHECK(vanishing_verdict(cfg.extension, cfg.bundle) == v);
        return r;
    };
    ObstructionReport m1 = expect("pu_s3_m1.json", Verdict::NonzeroOnPi3);
    CHECK(m1.pi3_hom.matrix.at(0, 0) == 1);
    ObstructionReport m5 = expect("pu_s3_m5.json", Verdict::NonzeroOnPi3);
    CHECK(m5.pi3_hom.matrix.at(0, 0) == 5);
    ObstructionReport so3 = expect("so3_s2.json", Verdict::NonzeroOnPi2);
    CHECK_FALSE(so3.pi2_hom.is_zero());
    ObstructionReport fin = expect("findim_s3.json", Verdict::Zero);
    CHECK(fin.pi3_hom.is_zero());
    REQUIRE(fin.flat_ext.has_value());
    CHECK(fin.flat_ext->is_zero());
    expect("trivial_ext.json", Verdict::LiftsForAllP);
    ObstructionReport rp2 = expect("rp2_flat.json", Verdict::AsphericalNonzero);
    REQUIRE(rp2.cech_class.has_value());
    CHECK_FALSE(is_coboundary(*rp2.cech_class).has_value());
}

TEST_CASE("aspherical branches built by hand") {
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    FgAbGroup none = FgAbGroup::trivial();
    AbHom d1 = AbHom::zero(z2, none), d2 = AbHom::zero(none, FgAbGroup::free_group(1));
    BundleData b{z2, none, z2, none, AbHom::identity(z2), hom1(z2, z2, 1),
                 AbHom::zero(none, none), std::nullopt, std::nullopt, std::nullopt};

    ExtClass gen(z2, FgAbGroup::free_group(1), {{Int(1)}});
    CentralExtData with_fund(z2, none, none, 1, d1, d2, gen);
    ObstructionReport r = compute_report(with_fund, b);
    CHECK(r.verdict == Verdict::AsphericalNonzero);
    REQUIRE(r.flat_ext.has_value());
    CHECK(*r.flat_ext == gen);  // -pullback along the identity keeps the order-2 class

    CentralExtData no_fund(z2, none, none, 1, d1, d2, std::nullopt);
    CHECK(compute_report(no_fund, b).verdict == Verdict::AsphericalUndetermined);
}

TEST_CASE("covering route reaches the zero verdict on a bounding class") {
    ScenarioConfig cfg = parse_scenario(kData + "/rp2_flat.json");
    const GroupCochain& cls = *cfg.bundle.pi1P_class;
    cfg.bundle.pi1P_class = GroupCochain::zero(cls.group_ptr(), 2, cls.coeff());
    ObstructionReport r = compute_report(cfg.extension, cfg.bundle);
    CHECK(r.verdict == Verdict::Zero);
    REQUIRE(r.cech_class.has_value());
    CHECK(is_coboundary(*r.cech_class).has_value());
}

TEST_CASE("flat obstruction over a 1-connected base") {
    FgAbGroup z4 = FgAbGroup::cyclic(4), z2 = FgAbGroup::cyclic(2);
    FgAbGroup none = FgAbGroup::trivial();
    BundleData b{z4, none, z4, none, AbHom::identity(z4), hom1(z4, z2, 1),
                 AbHom::zero(none, none), std::nullopt, std::nullopt, std::nullopt};
    ZShape shape{1, none};
    FlatHom gamma(z2, shape, {ZElement{QmodZVector({Rat(1, 2)}), {}}});
    ExtClass e = flat_obstruction_1conn(gamma, b);
    CHECK(e.base == z4);
    CHECK(e.comp == std::vector<std::vector<Int>>{{Int(2)}});

    CHECK(lambda3_group(b, 2) == FgAbGroup(0, {4, 4}));
    ObstructionReport r{AbHom::zero(none, none), AbHom::zero(none, none), e, std::nullopt,
                        Verdict::AsphericalNonzero, {}};
    CHECK(torsion_flag(r, b));
}

TEST_CASE("general flat views") {
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    FgAbGroup none = FgAbGroup::trivial();
    ZShape shape{1, none};

    SUBCASE("order-2 class reads off in ext coordinates") {
        BundleData b{none, none, none, none, AbHom::identity(none), AbHom::zero(none, z2),
                     AbHom::zero(none, none), FiniteGroup::cyclic(2), std::nullopt, std::nullopt};
        auto coker = kernel_cokernel(b.d2P).cokernel;
        GroupCochain cls(fg("Z/2"), 2, CoeffModule::of_group(coker));
        cls.set_value_at({1, 1}, {Rat(1)});
        b.pi1P_class = cls;
        FlatHom gamma(z2, shape, {ZElement{QmodZVector({Rat(1, 2)}), {}}});
        FlatGeneralView view = flat_obstruction_general(gamma, b);
        CHECK(view.pushed.value_at({1, 1}) == std::vector<Rat>{Rat(1, 2)});
        CHECK(view.pushed_disc.coeff().dim() == 0);
        REQUIRE(view.ext_view.has_value());
        CHECK(*view.ext_view == ExtClass(z2, FgAbGroup::free_group(1), {{Int(1)}}));
        CHECK_FALSE(view.cech_view.has_value());
    }

    SUBCASE("mixed generator orders block the section-power norm") {
        FgAbGroup mixed(0, {2, 4});
        BundleData b{none, none, none, none, AbHom::identity(none), AbHom::zero(none, mixed),
                     AbHom::zero(none, none), FiniteGroup::from_spec("Z/2 x Z/4"), std::nullopt,
                     std::nullopt};
        auto coker = kernel_cokernel(b.d2P).cokernel;
        REQUIRE(coker == mixed);
        // carry of the first coordinate, valued on the order-4 generator
        GroupCochain cls(fg("Z/2 x Z/4"), 2, CoeffModule::of_group(coker));
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y) {
                auto cx = abelian_coords(mixed, x), cy = abelian_coords(mixed, y);
                if (cx[0] + cy[0] >= 2)
                    cls.set_value_at({x, y}, {Rat(0), Rat(1)});
            }
        REQUIRE(is_group_cocycle(cls));
        b.pi1P_class = cls;
        FlatHom gamma(mixed, shape,
                      {ZElement{QmodZVector({Rat(1, 2)}), {}},
                       ZElement{QmodZVector({Rat(1, 4)}), {}}});
        FlatGeneralView view = flat_obstruction_general(gamma, b);
        CHECK_FALSE(view.ext_view.has_value());
    }

    SUBCASE("covering view with a trivial discrete part stays well-defined") {
        BundleData b{none, none, none, none, AbHom::identity(none), AbHom::zero(none, z2),
                     AbHom::zero(none, none), FiniteGroup::cyclic(2), std::nullopt, std::nullopt};
        auto coker = kernel_cokernel(b.d2P).cokernel;
        GroupCochain cls(fg("Z/2"), 2, CoeffModule::of_group(coker));
        cls.set_value_at({1, 1}, {Rat(1)});
        b.pi1P_class = cls;
        auto nerve = std::make_shared<const Nerve>(Nerve::sphere(1));
        KCochain trivial_cocycle(nerve, 1, fg("Z/2"));
        REQUIRE(trivial_cocycle.is_cocycle());
        b.covering = CoveringData{nerve, trivial_cocycle};
        FlatHom gamma(z2, shape, {ZElement{QmodZVector({Rat(1, 2)}), {}}});
        FlatGeneralView view = flat_obstruction_general(gamma, b);
        REQUIRE(view.cech_view.has_value());
        CHECK(view.cech_view->is_zero());
    }
}

TEST_CASE("covering realization separates the two double-cover classes") {
    auto rp2 = std::make_shared<const Nerve>(Nerve::projective_plane());
    KCochain cover = double_cover_cocycle(rp2);
    GroupCochain cls = cocycle_of_extension(FiniteCentralExt::z4_over_z2());
    CechCochain out = obs_cover(cover, cls);
    CHECK(out.degree() == 2);
    CHECK(is_cocycle(out));
    CHECK_FALSE(is_coboundary(out).has_value());

    GroupCochain zero_cls = GroupCochain::zero(cls.group_ptr(), 2, cls.coeff());
    CHECK(is_coboundary(obs_cover(cover, zero_cls)).has_value());
}

TEST_CASE("universal-cover lift verdict") {
    GroupCochain nontrivial = cocycle_of_extension(FiniteCentralExt::z4_over_z2());
    CHECK_FALSE(zeta_lift_verdict(nontrivial));
    CHECK(zeta_lift_verdict(GroupCochain::zero(nontrivial.group_ptr(), 2, nontrivial.coeff())));
}

TEST_CASE("the sign table names every formula once") {
    std::string text = sign_ledger_text();
    for (const char* key : {"pi3_hom", "pi2_hom", "sphere_s2", "chern_s2", "degree0",
                            "flat 1conn", "flat general", "cech realize"})
        CHECK(text.find(key) != std::string::npos);
}

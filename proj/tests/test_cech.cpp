#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liftobs/cech.hpp"
#include "liftobs/error.hpp"

using namespace liftobs;

namespace {

NervePtr sphere_ptr(int n) { return std::make_shared<const Nerve>(Nerve::sphere(n)); }
NervePtr rp2_ptr() { return std::make_shared<const Nerve>(Nerve::projective_plane()); }

CechCochain random_cochain(NervePtr nerve, int degree, CechCoeff coeff, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    CechCochain c(nerve, degree, coeff);
    for (int i = 0; i < nerve->simplex_count(degree); ++i) {
        std::vector<Rat> v;
        for (int j = 0; j < coeff.dim(); ++j) {
            Rat q(entry(rng), coeff.kind == CechCoeff::Kind::Group ? 1 : 12);
            q.canonicalize();
            v.push_back(q);
        }
        c.set_value(i, coeff.reduce(std::move(v)));
    }
    return c;
}

} // namespace

TEST_CASE("nerve shapes") {
    Nerve s1 = Nerve::sphere(1);
    CHECK(s1.vertices() == 3);
    CHECK(s1.dim() == 1);
    CHECK(s1.simplex_count(1) == 3);
    CHECK(s1.simplex_count(0) == 3);

    Nerve s2 = Nerve::sphere(2);
    CHECK(s2.vertices() == 4);
    CHECK(s2.simplex_count(1) == 6);
    CHECK(s2.simplex_count(2) == 4);

    Nerve rp2 = Nerve::projective_plane();
    CHECK(rp2.vertices() == 6);
    CHECK(rp2.dim() == 2);
    CHECK(rp2.facets().size() == 10);
    CHECK(rp2.simplex_count(1) == 15);
    // Euler characteristic of the projective plane
    CHECK(rp2.simplex_count(0) - rp2.simplex_count(1) + rp2.simplex_count(2) == 1);

    CHECK(rp2.index_of({0, 1}) >= 0);
    CHECK(rp2.index_of({0, 1, 2}) == -1);
    CHECK(Nerve::parse_text(rp2.format_text()) == rp2);
    CHECK(Nerve::disjoint_union(s1, s1).component_count() == 2);
    CHECK(s1.component_count() == 1);

    // facets must be maximal
    CHECK_THROWS_AS(Nerve(3, {{0, 1, 2}, {0, 1}}), Error);
}

TEST_CASE("cochain access is antisymmetric") {
    auto s2 = sphere_ptr(2);
    CechCochain c(s2, 1, CechCoeff::of_group(FgAbGroup::free_group(1)));
    c.set_value(s2->index_of({0, 1}), {Rat(5)});
    CHECK(c.value_at({0, 1}) == std::vector<Rat>{Rat(5)});
    CHECK(c.value_at({1, 0}) == std::vector<Rat>{Rat(-5)});
    CHECK(c.value_at({1, 1}) == std::vector<Rat>{Rat(0)});

    CechCochain d = c + c;
    CHECK(d.value_at({0, 1}) == std::vector<Rat>{Rat(10)});
    CHECK((-c).value_at({0, 1}) == std::vector<Rat>{Rat(-5)});
    CHECK(c.smul(3).value_at({0, 1}) == std::vector<Rat>{Rat(15)});
    CHECK_FALSE(c.is_zero());
    CHECK(parse_cochain(format_cochain(c), s2, 1, c.coeff()) == c);
}

TEST_CASE("coboundary squares to zero and matches its matrix") {
    std::mt19937 rng(402);
    auto rp2 = rp2_ptr();
    for (CechCoeff coeff : {CechCoeff::of_group(FgAbGroup::free_group(1)),
                            CechCoeff::of_group(FgAbGroup::cyclic(4)), CechCoeff::qmodz(1)}) {
        for (int t = 0; t < 20; ++t) {
            CechCochain c = random_cochain(rp2, 0, coeff, rng);
            CechCochain dc = coboundary(c);
            CHECK(is_cocycle(dc));
            CHECK(coboundary(dc).is_zero());
        }
    }
    // the incidence matrix computes the same differential
    IntMatrix dm = cech_coboundary_matrix(*rp2, 2);
    CechCochain c = random_cochain(rp2, 1, CechCoeff::of_group(FgAbGroup::free_group(1)), rng);
    CechCochain dc = coboundary(c);
    for (int i = 0; i < rp2->simplex_count(2); ++i) {
        Rat s;
        for (int j = 0; j < rp2->simplex_count(1); ++j)
            s += Rat(dm.at(i, j)) * c.value(j)[0];
        CHECK(dc.value(i)[0] == s);
    }
}

TEST_CASE("top evaluation kills coboundaries and sees the fundamental cochain") {
    std::mt19937 rng(403);
    for (int n : {1, 2}) {
        auto sp = sphere_ptr(n);
        for (int t = 0; t < 25; ++t) {
            CechCochain b =
                random_cochain(sp, n - 1, CechCoeff::of_group(FgAbGroup::free_group(1)), rng);
            CHECK(s_tilde(coboundary(b)) == std::vector<Rat>{Rat(0)});
        }
        // a single-facet cochain pairs to +-1
        CechCochain f(sp, n, CechCoeff::of_group(FgAbGroup::free_group(1)));
        f.set_value(0, {Rat(1)});
        std::vector<Rat> v = s_tilde(f);
        CHECK((v[0] == 1 || v[0] == -1));
    }
}

TEST_CASE("suspension raises degree and commutes with the differential") {
    std::mt19937 rng(404);
    auto s2 = sphere_ptr(2);
    for (int t = 0; t < 25; ++t) {
        CechCochain c = random_cochain(s2, 1, CechCoeff::of_group(FgAbGroup::cyclic(6)), rng);
        CechCochain sc = suspend(c);
        CHECK(sc.degree() == 2);
        CHECK(sc.nerve() == Nerve::sphere(3));
        CHECK(coboundary(suspend(c)) == suspend(coboundary(c)));
    }
    // values sit on tuples ending in the new vertex
    CechCochain c(s2, 1, CechCoeff::of_group(FgAbGroup::free_group(1)));
    c.set_value(s2->index_of({0, 1}), {Rat(7)});
    CechCochain sc = suspend(c);
    CHECK(sc.value_at({0, 1, 4}) == std::vector<Rat>{Rat(7)});
    CHECK(sc.value_at({0, 1, 2}) == std::vector<Rat>{Rat(0)});
}

TEST_CASE("integer lift of a fractional cocycle") {
    auto s2 = sphere_ptr(2);
    // bound a fractional 0-cochain, lift the resulting 1-cocycle
    CechCochain b(s2, 0, CechCoeff::qmodz(1));
    b.set_value(0, {Rat(1, 2)});
    CechCochain c = coboundary(b);
    REQUIRE(is_cocycle(c));
    CechCochain lifted = iota_lift(c);
    CHECK(lifted.degree() == 2);
    CHECK(lifted.coeff().kind == CechCoeff::Kind::Group);
    CHECK(is_cocycle(lifted));
    // the lift of a bounding cocycle bounds integrally
    auto w = is_coboundary(lifted);
    REQUIRE(w.has_value());
    CHECK(coboundary(*w) == lifted);
    // only fractional cocycles lift
    CechCochain g(s2, 1, CechCoeff::of_group(FgAbGroup::cyclic(2)));
    CHECK_THROWS_AS(iota_lift(g), Error);
}

TEST_CASE("coboundary witnesses are exact") {
    std::mt19937 rng(405);
    auto rp2 = rp2_ptr();
    CechCoeff z2 = CechCoeff::of_group(FgAbGroup::cyclic(2));
    CechCoboundarySolver solver(rp2, 2, z2);
    for (int t = 0; t < 10; ++t) {
        CechCochain b = random_cochain(rp2, 1, z2, rng);
        CechCochain target(rp2, 2, z2);
        CechCochain d = coboundary(b);
        for (int i = 0; i < rp2->simplex_count(2); ++i) target.set_value(i, z2.reduce(d.value(i)));
        auto w = solver.witness(target);
        REQUIRE(w.has_value());
        CechCochain dw = coboundary(*w);
        for (int i = 0; i < rp2->simplex_count(2); ++i)
            CHECK(z2.reduce(dw.value(i)) == target.value(i));
    }
    // a single facet pairs nontrivially against the fundamental cycle mod 2
    CechCochain one(rp2, 2, z2);
    one.set_value(0, {Rat(1)});
    CHECK_FALSE(solver.witness(one).has_value());
}

TEST_CASE("pullback commutes with the differential") {
    std::mt19937 rng(406);
    auto s2 = sphere_ptr(2);
    auto rp2 = rp2_ptr();
    auto maps = enumerate_simplicial_maps(*s2, *rp2);
    CHECK(maps.size() > 0);
    int tried = 0;
    for (const auto& vm : maps) {
        if (tried++ > 8) break;
        for (int t = 0; t < 4; ++t) {
            CechCochain c = random_cochain(rp2, 1, CechCoeff::of_group(FgAbGroup::cyclic(4)), rng);
            CHECK(pullback_cochain(coboundary(c), vm, s2) ==
                  coboundary(pullback_cochain(c, vm, s2)));
        }
    }
}

TEST_CASE("group-valued cochains") {
    auto rp2 = rp2_ptr();
    KCochain dc = double_cover_cocycle(rp2);
    CHECK(dc.degree() == 1);
    CHECK(dc.group().order() == 2);
    CHECK(dc.is_cocycle());
    // inverse on transposition
    int e01 = dc.value_at(0, 1);
    CHECK(dc.value_at(1, 0) == dc.group().inv(e01));
    CHECK(dc.value_at(2, 2) == dc.group().identity());
    CHECK(parse_kcochain(format_kcochain(dc), rp2, 1, dc.group_ptr()) == dc);

    // not a coboundary of vertex labels: b_i - b_j always vanishes on cycles
    bool from_labels = false;
    for (int mask = 0; mask < 64 && !from_labels; ++mask) {
        bool match = true;
        for (int i = 0; i < 6 && match; ++i)
            for (int j = i + 1; j < 6 && match; ++j) {
                Simplex s{i, j};
                if (rp2->index_of(s) < 0) continue;
                int want = (((mask >> i) & 1) ^ ((mask >> j) & 1));
                if (dc.value_at(i, j) != want) match = false;
            }
        from_labels = match;
    }
    CHECK_FALSE(from_labels);
}

TEST_CASE("one-cocycle enumeration counts") {
    auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    // hollow triangle: no 2-simplex, so every labeling is a cocycle, and
    // 8 = 4 coboundaries times the circle's two classes
    auto s1 = sphere_ptr(1);
    auto cs1 = enumerate_1cocycles(s1, z2);
    CHECK(cs1.size() == 8);
    for (const auto& c : cs1) CHECK(c.is_cocycle());
    // projective plane: coboundaries times the two lifting classes
    auto rp2 = rp2_ptr();
    auto crp2 = enumerate_1cocycles(rp2, z2);
    CHECK(crp2.size() == 64);
    bool found = false;
    for (const auto& c : crp2)
        if (c == double_cover_cocycle(rp2)) found = true;
    CHECK(found);
}

TEST_CASE("lift defect of cocycles and constants") {
    auto rp2 = rp2_ptr();
    FiniteCentralExt e = FiniteCentralExt::z4_over_z2();
    KCochain g = double_cover_cocycle(rp2);
    CechCochain defect = delta1_lift(g, e);
    CHECK(defect.degree() == 2);
    CHECK(is_cocycle(defect));
    CHECK_FALSE(is_coboundary(defect).has_value());

    // the same class through the quaternion extension over the diagonal copy
    // stays a cocycle with Z/2 values
    FiniteCentralExt q = FiniteCentralExt::q8_over_v4();
    auto v4 = std::make_shared<const FiniteGroup>(q.quotient);
    for (const auto& c : enumerate_1cocycles(rp2, v4)) {
        CechCochain d = delta1_lift(c, q);
        CHECK(is_cocycle(d));
    }

    // constant 0-cochains have zero defect
    auto z2g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    KCochain f(rp2, 0, z2g);
    for (int i = 0; i < 6; ++i) f.set_value(i, 1);
    CHECK(f.locally_constant());
    CHECK(delta0_lift(f, e).is_zero());
}

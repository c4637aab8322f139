#include "liftobs/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "liftobs/error.hpp"

namespace liftobs {

FgAbGroup::FgAbGroup(int rank, std::vector<Int> factors) : free_rank(rank), torsion(std::move(factors)) {
    require_internal(rank >= 0, "free rank must be non-negative");
    for (size_t i = 0; i < torsion.size(); ++i) {
        require_internal(torsion[i] >= 2, "invariant factors must be >= 2");
        if (i) require_internal(torsion[i] % torsion[i - 1] == 0, "invariant factors must form a divisibility chain");
    }
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    require_internal(n >= 0, "cyclic order must be non-negative");
    if (n == 0) return free_group(1);
    if (n == 1) return trivial();
    return FgAbGroup(0, {n});
}

Int FgAbGroup::gen_order(int i) const {
    require_internal(i >= 0 && i < gens(), "generator index out of range");
    return i < free_rank ? Int(0) : torsion[size_t(i - free_rank)];
}

Int FgAbGroup::order() const {
    require_internal(is_finite(), "order of an infinite group");
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

std::vector<Int> FgAbGroup::reduce(std::vector<Int> x) const {
    require_internal(int(x.size()) == gens(), "element coordinate count mismatch");
    for (size_t i = 0; i < torsion.size(); ++i) x[free_rank + i] = nonneg_mod(x[free_rank + i], torsion[i]);
    return x;
}

bool FgAbGroup::is_zero_elt(const std::vector<Int>& x) const {
    auto r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

std::vector<Int> FgAbGroup::add(const std::vector<Int>& x, const std::vector<Int>& y) const {
    require_internal(x.size() == y.size() && int(x.size()) == gens(), "element coordinate count mismatch");
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return reduce(std::move(z));
}

std::vector<Int> FgAbGroup::neg(const std::vector<Int>& x) const {
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
    return reduce(std::move(z));
}

std::vector<Int> FgAbGroup::smul(const Int& k, const std::vector<Int>& x) const {
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = k * x[i];
    return reduce(std::move(z));
}

Int FgAbGroup::elt_order(const std::vector<Int>& x) const {
    auto r = reduce(x);
    for (int i = 0; i < free_rank; ++i)
        if (r[i] != 0) return 0;
    Int ord = 1;
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (r[free_rank + i] == 0) continue;
        Int g = gcd(torsion[i], r[free_rank + i]);
        Int o = torsion[i] / g;
        ord = lcm(ord, o);
    }
    return ord;
}

IntMatrix FgAbGroup::order_lattice() const {
    IntMatrix m(gens(), int(torsion.size()));
    for (size_t i = 0; i < torsion.size(); ++i) m.at(free_rank + int(i), int(i)) = torsion[i];
    return m;
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " x ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

Presentation::Presentation(int gens, IntMatrix rel) : generator_count(gens), relations(std::move(rel)) {
    require_internal(gens >= 0, "presentation generator count must be non-negative");
    require_internal(relations.rows() == gens, "relation matrix must have one row per generator");
}

Canonicalized canonicalize(const Presentation& p) {
    const int m = p.generator_count;
    SnfResult f = smith_normal_form(p.relations);
    const int nd = std::min(m, p.relations.cols());

    // Row i of U carries order s_i (0 beyond the diagonal / rank).
    std::vector<int> free_idx, tors_idx;
    std::vector<Int> factors;
    for (int i = 0; i < m; ++i) {
        Int o = (i < nd) ? f.s.at(i, i) : Int(0);
        if (o == 1) continue;
        if (o == 0)
            free_idx.push_back(i);
        else
            tors_idx.push_back(i);
    }
    for (int i : tors_idx) factors.push_back(f.s.at(i, i));

    std::vector<int> sel = free_idx;
    sel.insert(sel.end(), tors_idx.begin(), tors_idx.end());

    Canonicalized c;
    c.group = FgAbGroup(int(free_idx.size()), factors);
    c.to_canonical = f.u.select_rows(sel);
    IntMatrix uinv = inverse_unimodular(f.u);
    c.from_canonical = uinv.select_columns(sel);
    return c;
}

namespace {

// Order compatibility: for each source generator of order d, d * column must
// vanish in the target.
void check_well_defined(const FgAbGroup& src, const FgAbGroup& tgt, const IntMatrix& m) {
    for (int j = 0; j < src.gens(); ++j) {
        Int d = src.gen_order(j);
        if (d == 0) continue;
        for (int i = 0; i < tgt.gens(); ++i) {
            Int o = tgt.gen_order(i);
            Int v = d * m.at(i, j);
            bool ok = (o == 0) ? (v == 0) : (v % o == 0);
            require_input(ok, "homomorphism not well-defined: generator of order " + d.get_str() +
                                  " maps to an element not killed by it");
        }
    }
}

IntMatrix reduce_columns(const FgAbGroup& tgt, IntMatrix m) {
    for (int i = 0; i < tgt.gens(); ++i) {
        Int o = tgt.gen_order(i);
        if (o == 0) continue;
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = nonneg_mod(m.at(i, j), o);
    }
    return m;
}

} // namespace

AbHom::AbHom(FgAbGroup src, FgAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    require_internal(matrix.rows() == target.gens() && matrix.cols() == source.gens(),
                     "hom matrix shape mismatch");
    check_well_defined(source, target, matrix);
    matrix = reduce_columns(target, std::move(matrix));
}

AbHom AbHom::zero(const FgAbGroup& src, const FgAbGroup& tgt) {
    return AbHom(src, tgt, IntMatrix(tgt.gens(), src.gens()));
}

AbHom AbHom::identity(const FgAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.gens())); }

std::vector<Int> AbHom::apply(const std::vector<Int>& x) const {
    require_internal(int(x.size()) == source.gens(), "hom apply: coordinate count mismatch");
    return target.reduce(matrix.apply(x));
}

AbHom AbHom::operator+(const AbHom& o) const {
    require_internal(source == o.source && target == o.target, "hom sum shape mismatch");
    return AbHom(source, target, matrix + o.matrix);
}

AbHom AbHom::operator-() const { return AbHom(source, target, -matrix); }

bool AbHom::operator==(const AbHom& o) const {
    return source == o.source && target == o.target && matrix == o.matrix;
}

AbHom compose(const AbHom& f, const AbHom& g) {
    require_input(f.source == g.target, "compose: inner group mismatch (" + g.target.to_string() +
                                            " vs " + f.source.to_string() + ")");
    return AbHom(g.source, f.target, f.matrix * g.matrix);
}

KerCoker kernel_cokernel(const AbHom& f) {
    const FgAbGroup& A = f.source;
    const FgAbGroup& B = f.target;
    IntMatrix ra = A.order_lattice();
    IntMatrix rb = B.order_lattice();

    KerCoker out{FgAbGroup::trivial(), IntMatrix(), FgAbGroup::trivial(),
                 AbHom::zero(B, FgAbGroup::trivial())};

    // Cokernel: Z^B.gens() / (im f + order lattice of B).
    Canonicalized co = canonicalize(Presentation(B.gens(), f.matrix.hcat(rb)));
    out.cokernel = co.group;
    out.coker_proj = AbHom(B, co.group, co.to_canonical);

    // Kernel: lift { x : f(x) = 0 } to the lattice L = proj_x ker [F | R_B],
    // then present L / (order lattice of A).
    IntMatrix w = kernel_basis(f.matrix.hcat(rb));
    std::vector<int> xrows(size_t(A.gens()));
    std::iota(xrows.begin(), xrows.end(), 0);
    IntMatrix kx = w.select_rows(xrows);
    IntMatrix bl = column_span_basis(kx);  // A.gens() x q

    IntMatrix rel(bl.cols(), ra.cols());
    for (int j = 0; j < ra.cols(); ++j) {
        auto z = solve_integer(bl, ra.column_vec(j));
        require_internal(z.has_value(), "order lattice must lie in the kernel lattice");
        for (int i = 0; i < bl.cols(); ++i) rel.at(i, j) = (*z)[i];
    }
    Canonicalized kc = canonicalize(Presentation(bl.cols(), rel));
    out.kernel = kc.group;
    IntMatrix reps = bl * kc.from_canonical;
    out.kernel_reps = reduce_columns(A, std::move(reps));
    return out;
}

bool is_isomorphism(const AbHom& f) {
    KerCoker kc = kernel_cokernel(f);
    return kc.kernel.is_trivial() && kc.cokernel.is_trivial();
}

AbHom inverse_iso(const AbHom& f) {
    require_input(is_isomorphism(f), "inverse of a non-isomorphism");
    IntMatrix m(f.source.gens(), f.target.gens());
    for (int j = 0; j < f.target.gens(); ++j) {
        std::vector<Int> e(size_t(f.target.gens()), Int(0));
        e[size_t(j)] = 1;
        auto x = preimage(f, e);
        require_internal(x.has_value(), "surjective map must have preimages");
        for (int i = 0; i < f.source.gens(); ++i) m.at(i, j) = (*x)[i];
    }
    return AbHom(f.target, f.source, std::move(m));
}

std::optional<std::vector<Int>> preimage(const AbHom& f, const std::vector<Int>& t) {
    require_internal(int(t.size()) == f.target.gens(), "preimage: coordinate count mismatch");
    std::vector<Int> mods(size_t(f.target.gens()));
    for (int i = 0; i < f.target.gens(); ++i) mods[size_t(i)] = f.target.gen_order(i);
    auto x = solve_modular(f.matrix, t, mods);
    if (!x) return std::nullopt;
    return f.source.reduce(*x);
}

namespace {

FgAbGroup sum_of_cyclics(const std::vector<Int>& orders) {
    // orders: 0 = Z piece, n >= 1 = Z/n piece. Canonicalize via a diagonal presentation.
    std::vector<Int> diag;
    int rank = 0;
    for (const Int& o : orders) {
        if (o == 0)
            ++rank;
        else
            diag.push_back(o);
    }
    IntMatrix rel = IntMatrix::diagonal(diag);
    // Pad rows for the free pieces (no relations on them).
    IntMatrix full(rank + rel.rows(), rel.cols());
    for (int i = 0; i < rel.rows(); ++i)
        for (int j = 0; j < rel.cols(); ++j) full.at(rank + i, j) = rel.at(i, j);
    return canonicalize(Presentation(rank + rel.rows(), full)).group;
}

} // namespace

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> pieces;
    for (int i = 0; i < a.gens(); ++i) pieces.push_back(a.gen_order(i));
    for (int j = 0; j < b.gens(); ++j) pieces.push_back(b.gen_order(j));
    return sum_of_cyclics(pieces);
}

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> pieces;
    for (int i = 0; i < a.gens(); ++i)
        for (int j = 0; j < b.gens(); ++j) {
            Int da = a.gen_order(i), db = b.gen_order(j);
            if (da == 0)
                pieces.push_back(db);  // Hom(Z, C) = C
            else if (db == 0)
                pieces.push_back(1);  // Hom(Z/d, Z) = 0
            else
                pieces.push_back(gcd(da, db));
        }
    return sum_of_cyclics(pieces);
}

FgAbGroup ext_group(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> pieces;
    for (const Int& d : a.torsion)
        for (int j = 0; j < b.gens(); ++j) {
            Int db = b.gen_order(j);
            pieces.push_back(db == 0 ? d : gcd(d, db));  // (B/dB) piece per coordinate
        }
    return sum_of_cyclics(pieces);
}

Homology homology(const AbHom& f, const AbHom& g) {
    require_input(g.target == f.source, "homology: maps are not composable");
    require_input(compose(f, g).is_zero(), "homology: composite is not zero");
    const FgAbGroup& B = f.source;
    IntMatrix rb = B.order_lattice();
    IntMatrix rc = f.target.order_lattice();

    IntMatrix w = kernel_basis(f.matrix.hcat(rc));
    std::vector<int> xrows(size_t(B.gens()));
    std::iota(xrows.begin(), xrows.end(), 0);
    IntMatrix kx = w.select_rows(xrows);
    IntMatrix bk = column_span_basis(kx);  // B.gens() x s

    IntMatrix j = g.matrix.hcat(rb);
    IntMatrix rel(bk.cols(), j.cols());
    for (int c = 0; c < j.cols(); ++c) {
        auto z = solve_integer(bk, j.column_vec(c));
        require_internal(z.has_value(), "image must lie in the kernel lattice");
        for (int i = 0; i < bk.cols(); ++i) rel.at(i, c) = (*z)[i];
    }
    Canonicalized hc = canonicalize(Presentation(bk.cols(), rel));
    Homology out;
    out.group = hc.group;
    IntMatrix reps = bk * hc.from_canonical;
    out.reps = reduce_columns(B, std::move(reps));
    return out;
}

FgAbGroup parse_group_spec(const std::string& spec) {
    std::string s;
    for (char ch : spec)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw input_error("group spec: empty string");
    if (s == "0" || s == "1") return FgAbGroup::trivial();

    std::vector<Int> pieces;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('x', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        try {
            if (term == "Z") {
                pieces.push_back(0);
            } else if (term.rfind("Z^", 0) == 0) {
                long r = std::stol(term.substr(2));
                require_input(r >= 1, "group spec: rank must be >= 1 in '" + term + "'");
                for (long i = 0; i < r; ++i) pieces.push_back(0);
            } else if (term.rfind("Z/", 0) == 0) {
                Int n(term.substr(2));
                require_input(n >= 1, "group spec: modulus must be >= 1 in '" + term + "'");
                pieces.push_back(n);
            } else {
                throw input_error("group spec: bad term '" + term + "'");
            }
        } catch (const std::invalid_argument&) {
            throw input_error("group spec: bad term '" + term + "'");
        }
    }
    return sum_of_cyclics(pieces);
}

} // namespace liftobs

#include "liftobs/cech.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "liftobs/error.hpp"
#include "liftobs/extensions.hpp"
#include "liftobs/zvalues.hpp"

namespace liftobs {

CechCochain::CechCochain(NervePtr nerve, int degree, CechCoeff coeff)
    : nerve_(std::move(nerve)), degree_(degree), coeff_(std::move(coeff)) {
    require_internal(bool(nerve_), "cochain needs a nerve");
    require_input(degree_ >= 0, "cochain degree must be non-negative");
    vals_.assign(size_t(nerve_->simplex_count(degree_)),
                 std::vector<Rat>(size_t(coeff_.dim())));
}

const std::vector<Rat>& CechCochain::value(int idx) const {
    require_internal(idx >= 0 && idx < int(vals_.size()), "cochain index out of range");
    return vals_[size_t(idx)];
}

void CechCochain::set_value(int idx, std::vector<Rat> v) {
    require_internal(idx >= 0 && idx < int(vals_.size()), "cochain index out of range");
    vals_[size_t(idx)] = coeff_.reduce(std::move(v));
}

std::vector<Rat> CechCochain::value_at(std::vector<int> tuple) const {
    require_input(int(tuple.size()) == degree_ + 1, "tuple arity does not match degree");
    // sort with parity; repeated vertices read as zero
    int sign = 1;
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        for (size_t j = 0; j + 1 < tuple.size() - i; ++j)
            if (tuple[j] > tuple[j + 1]) {
                std::swap(tuple[j], tuple[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] == tuple[i + 1]) return std::vector<Rat>(size_t(coeff_.dim()));
    int idx = nerve_->index_of(tuple);
    require_input(idx >= 0, "tuple is not a simplex of the nerve");
    return sign == 1 ? vals_[size_t(idx)] : coeff_.neg(vals_[size_t(idx)]);
}

bool CechCochain::is_zero() const {
    for (const auto& v : vals_)
        if (!coeff_.is_zero(v)) return false;
    return true;
}

CechCochain CechCochain::operator+(const CechCochain& o) const {
    require_input(*nerve_ == *o.nerve_ && degree_ == o.degree_ && coeff_ == o.coeff_,
                  "cochain addition: shape mismatch");
    CechCochain out(nerve_, degree_, coeff_);
    for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = coeff_.add(vals_[i], o.vals_[i]);
    return out;
}

CechCochain CechCochain::operator-() const {
    CechCochain out(nerve_, degree_, coeff_);
    for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = coeff_.neg(vals_[i]);
    return out;
}

CechCochain CechCochain::smul(const Int& k) const {
    CechCochain out(nerve_, degree_, coeff_);
    for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = coeff_.smul(k, vals_[i]);
    return out;
}

bool CechCochain::operator==(const CechCochain& o) const {
    return *nerve_ == *o.nerve_ && degree_ == o.degree_ && coeff_ == o.coeff_ && vals_ == o.vals_;
}

CechCochain coboundary(const CechCochain& c) {
    require_input(c.degree() < c.nerve().dim(),
                  "coboundary: cochain degree is already the top dimension");
    int k = c.degree();
    CechCochain out(c.nerve_ptr(), k + 1, c.coeff());
    const auto& tops = c.nerve().simplices(k + 1);
    for (size_t t = 0; t < tops.size(); ++t) {
        std::vector<Rat> acc(size_t(c.coeff().dim()));
        for (size_t j = 0; j < tops[t].size(); ++j) {
            Simplex face = tops[t];
            face.erase(face.begin() + long(j));
            int fi = c.nerve().index_of(face);
            require_internal(fi >= 0, "face of a simplex missing from the nerve");
            const std::vector<Rat>& v = c.value(fi);
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += (j % 2 ? -v[i] : v[i]);
        }
        out.set_value(int(t), std::move(acc));
    }
    return out;
}

bool is_cocycle(const CechCochain& c) {
    if (c.degree() >= c.nerve().dim()) return true;  // no higher simplices to test against
    return coboundary(c).is_zero();
}

std::vector<Rat> s_tilde(const CechCochain& c) {
    int n = c.degree();
    require_input(n >= 1 && c.nerve() == Nerve::sphere(n),
                  "s_tilde: expected a top-degree cochain on the sphere nerve");
    std::vector<Rat> acc(size_t(c.coeff().dim()));
    for (int omit = 0; omit < n + 2; ++omit) {
        Simplex f;
        for (int i = 0; i < n + 2; ++i)
            if (i != omit) f.push_back(i);
        const std::vector<Rat>& v = c.value(c.nerve().index_of(f));
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += (omit % 2 ? -v[i] : v[i]);
    }
    return c.coeff().reduce(std::move(acc));
}

CechCochain suspend(const CechCochain& c) {
    int n = c.nerve().vertices() - 2;
    require_input(n >= 1 && c.nerve() == Nerve::sphere(n),
                  "suspend: cochain must live on a sphere nerve");
    int vnew = n + 2;  // the added vertex of sphere(n+1)
    auto up = std::make_shared<const Nerve>(Nerve::sphere(n + 1));
    CechCochain out(up, c.degree() + 1, c.coeff());
    const auto& simps = up->simplices(c.degree() + 1);
    for (size_t t = 0; t < simps.size(); ++t) {
        if (simps[t].back() != vnew) continue;  // value zero away from the new vertex
        Simplex base(simps[t].begin(), simps[t].end() - 1);
        out.set_value(int(t), c.value(c.nerve().index_of(base)));
    }
    return out;
}

CechCochain iota_lift(const CechCochain& c) {
    require_input(c.coeff().kind == CechCoeff::Kind::QmodZ,
                  "iota_lift: coefficients must be (Q/Z)^m");
    require_input(c.degree() < c.nerve().dim(), "iota_lift: no room for the coboundary degree");
    require_input(is_cocycle(c), "iota_lift: input is not a cocycle");
    int m = c.coeff().m;
    // canonical [0,1) lift, then the rational coboundary
    CechCochain lift(c.nerve_ptr(), c.degree(), CechCoeff::rational(m));
    for (int i = 0; i < c.nerve().simplex_count(c.degree()); ++i) lift.set_value(i, c.value(i));
    CechCochain dlift = coboundary(lift);
    CechCochain out(c.nerve_ptr(), c.degree() + 1, CechCoeff::of_group(FgAbGroup::free_group(m)));
    for (int i = 0; i < c.nerve().simplex_count(c.degree() + 1); ++i) {
        std::vector<Rat> v = dlift.value(i);
        for (const Rat& q : v)
            require_internal(q.get_den() == 1, "lift coboundary must be integral on a cocycle");
        out.set_value(i, std::move(v));
    }
    return out;
}

IntMatrix cech_coboundary_matrix(const Nerve& nerve, int k) {
    require_input(k >= 1 && k <= nerve.dim(), "coboundary matrix: degree out of range");
    const auto& rows = nerve.simplices(k);
    IntMatrix d(int(rows.size()), nerve.simplex_count(k - 1));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < rows[r].size(); ++j) {
            Simplex face = rows[r];
            face.erase(face.begin() + long(j));
            d.at(int(r), nerve.index_of(face)) += (j % 2 ? -1 : 1);
        }
    return d;
}

CechCoboundarySolver::CechCoboundarySolver(NervePtr nerve, int degree, CechCoeff coeff)
    : nerve_(std::move(nerve)), degree_(degree), coeff_(std::move(coeff)) {
    require_input(degree_ >= 1 && degree_ <= nerve_->dim(),
                  "coboundary witness: degree out of range");
    dmat_ = cech_coboundary_matrix(*nerve_, degree_);
    if (coeff_.kind == CechCoeff::Kind::Group) {
        for (int j = 0; j < coeff_.group.gens(); ++j) {
            std::vector<Int> mod(size_t(dmat_.rows()), coeff_.group.gen_order(j));
            per_coord_.push_back(std::make_unique<ModularSolver>(dmat_, mod));
        }
    } else {
        require_input(coeff_.kind == CechCoeff::Kind::QmodZ,
                      "coboundary witness: rational coefficients unsupported");
    }
}

std::optional<CechCochain> CechCoboundarySolver::witness(const CechCochain& c) const {
    require_input(c.degree() == degree_ && c.coeff() == coeff_ && c.nerve() == *nerve_,
                  "coboundary witness: cochain shape mismatch");
    CechCochain beta(nerve_, degree_ - 1, coeff_);
    int nlow = nerve_->simplex_count(degree_ - 1);

    for (int j = 0; j < coeff_.dim(); ++j) {
        std::vector<Int> x;
        if (coeff_.kind == CechCoeff::Kind::Group) {
            std::vector<Int> rhs(size_t(dmat_.rows()));
            for (int r = 0; r < dmat_.rows(); ++r) rhs[size_t(r)] = c.value(r)[size_t(j)].get_num();
            auto sol = per_coord_[size_t(j)]->solve(rhs);
            if (!sol) return std::nullopt;
            x = std::move(*sol);
            for (int i = 0; i < nlow; ++i) {
                std::vector<Rat> v = beta.value(i);
                v[size_t(j)] = Rat(x[size_t(i)]);
                beta.set_value(i, std::move(v));
            }
        } else {
            // clear denominators: with L = lcm, solve D y = L c modulo L and divide back
            Int L = 1;
            for (int r = 0; r < dmat_.rows(); ++r) L = lcm(L, Int(c.value(r)[size_t(j)].get_den()));
            std::vector<Int> rhs(size_t(dmat_.rows()));
            for (int r = 0; r < dmat_.rows(); ++r) {
                Rat scaled = Rat(L) * c.value(r)[size_t(j)];
                require_internal(scaled.get_den() == 1, "denominator clearing failed");
                rhs[size_t(r)] = scaled.get_num();
            }
            std::vector<Int> mod(size_t(dmat_.rows()), L);
            auto sol = solve_modular(dmat_, rhs, mod);
            if (!sol) return std::nullopt;
            for (int i = 0; i < nlow; ++i) {
                std::vector<Rat> v = beta.value(i);
                v[size_t(j)] = reduce_mod1(Rat((*sol)[size_t(i)], L));
                beta.set_value(i, std::move(v));
            }
        }
    }
    require_internal(coboundary(beta) == c, "coboundary witness fails to reproduce the cochain");
    return beta;
}

std::optional<CechCochain> is_coboundary(const CechCochain& c) {
    CechCoboundarySolver solver(c.nerve_ptr(), c.degree(), c.coeff());
    return solver.witness(c);
}

CechCochain pullback_cochain(const CechCochain& c, const std::vector<int>& vertex_map,
                             NervePtr domain) {
    require_input(int(vertex_map.size()) == domain->vertices(),
                  "pullback: vertex map arity mismatch");
    for (int v : vertex_map)
        require_input(v >= 0 && v < c.nerve().vertices(), "pullback: vertex image out of range");
    for (const Simplex& f : domain->facets()) {
        Simplex img;
        for (int v : f) img.push_back(vertex_map[size_t(v)]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        require_input(c.nerve().has(img), "pullback: map is not simplicial on facet");
    }
    CechCochain out(domain, c.degree(), c.coeff());
    const auto& simps = domain->simplices(c.degree());
    for (size_t t = 0; t < simps.size(); ++t) {
        std::vector<int> img;
        for (int v : simps[t]) img.push_back(vertex_map[size_t(v)]);
        out.set_value(int(t), c.value_at(std::move(img)));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_simplicial_maps(const Nerve& domain, const Nerve& codomain) {
    double total = 1;
    for (int v = 0; v < domain.vertices(); ++v) total *= codomain.vertices();
    require_input(total <= 1e7, "simplicial map enumeration out of supported range");

    auto simplicial = [&](const std::vector<int>& vm) {
        for (const Simplex& f : domain.facets()) {
            Simplex img;
            for (int v : f) img.push_back(vm[size_t(v)]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!codomain.has(img)) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> out;
    std::vector<int> vm(size_t(domain.vertices()), 0);
    while (true) {
        if (simplicial(vm)) out.push_back(vm);
        int p = domain.vertices() - 1;
        while (p >= 0 && vm[size_t(p)] + 1 == codomain.vertices()) vm[size_t(p--)] = 0;
        if (p < 0) break;
        ++vm[size_t(p)];
    }
    return out;
}

KCochain::KCochain(NervePtr nerve, int degree, std::shared_ptr<const FiniteGroup> group)
    : nerve_(std::move(nerve)), degree_(degree), group_(std::move(group)) {
    require_input(degree_ == 0 || degree_ == 1,
                  "group-valued cochains exist in degrees 0 and 1 only");
    vals_.assign(size_t(nerve_->simplex_count(degree_)), group_->identity());
}

void KCochain::set_value(int idx, int g) {
    require_internal(idx >= 0 && idx < int(vals_.size()), "cochain index out of range");
    require_input(g >= 0 && g < group_->order(), "group element index out of range");
    vals_[size_t(idx)] = g;
}

int KCochain::value_at(int i, int j) const {
    require_internal(degree_ == 1, "edge access on a 0-cochain");
    if (i == j) return group_->identity();
    Simplex e = i < j ? Simplex{i, j} : Simplex{j, i};
    int idx = nerve_->index_of(e);
    require_input(idx >= 0, "edge is not a simplex of the nerve");
    int v = vals_[size_t(idx)];
    return i < j ? v : group_->inv(v);
}

int KCochain::value_at(int i) const {
    require_internal(degree_ == 0, "vertex access on a 1-cochain");
    int idx = nerve_->index_of({i});
    require_input(idx >= 0, "vertex is not a simplex of the nerve");
    return vals_[size_t(idx)];
}

bool KCochain::is_cocycle() const {
    if (degree_ != 1) return true;
    for (const Simplex& t : nerve_->simplices(2)) {
        int gij = value_at(t[0], t[1]), gjk = value_at(t[1], t[2]), gik = value_at(t[0], t[2]);
        if (group_->mul(gij, gjk) != gik) return false;
    }
    return true;
}

bool KCochain::locally_constant() const {
    require_internal(degree_ == 0, "local constancy applies to 0-cochains");
    for (const Simplex& e : nerve_->simplices(1))
        if (value_at(e[0]) != value_at(e[1])) return false;
    return true;
}

bool KCochain::operator==(const KCochain& o) const {
    return *nerve_ == *o.nerve_ && degree_ == o.degree_ && *group_ == *o.group_ && vals_ == o.vals_;
}

namespace {

std::vector<Rat> z_coords_of(const FiniteCentralExt& ext, int total_elt) {
    int zi = ext.z_index_of(total_elt);
    require_internal(zi >= 0, "lift defect landed outside the central kernel");
    std::vector<Int> c = abelian_coords(ext.z, zi);
    std::vector<Rat> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = Rat(c[i]);
    return out;
}

} // namespace

CechCochain delta1_lift(const KCochain& g, const FiniteCentralExt& ext) {
    require_input(g.degree() == 1, "delta1_lift: input must be a 1-cochain");
    require_input(g.group() == ext.quotient, "delta1_lift: cocycle group differs from the quotient");
    require_input(g.is_cocycle(), "delta1_lift: cocycle condition violated");
    CechCochain out(g.nerve_ptr(), 2, CechCoeff::of_group(ext.z));
    const auto& tris = g.nerve().simplices(2);
    for (size_t t = 0; t < tris.size(); ++t) {
        int a = ext.section[size_t(g.value_at(tris[t][0], tris[t][1]))];
        int b = ext.section[size_t(g.value_at(tris[t][1], tris[t][2]))];
        int c = ext.section[size_t(g.value_at(tris[t][0], tris[t][2]))];
        int defect = ext.total.mul(ext.total.mul(a, b), ext.total.inv(c));
        out.set_value(int(t), z_coords_of(ext, defect));
    }
    return out;
}

CechCochain delta0_lift(const KCochain& f, const FiniteCentralExt& ext) {
    require_input(f.degree() == 0, "delta0_lift: input must be a 0-cochain");
    require_input(f.group() == ext.quotient, "delta0_lift: cochain group differs from the quotient");
    require_input(f.locally_constant(), "delta0_lift: cochain is not locally constant");
    CechCochain out(f.nerve_ptr(), 1, CechCoeff::of_group(ext.z));
    const auto& edges = f.nerve().simplices(1);
    for (size_t t = 0; t < edges.size(); ++t) {
        int a = ext.section[size_t(f.value_at(edges[t][0]))];
        int b = ext.section[size_t(f.value_at(edges[t][1]))];
        out.set_value(int(t), z_coords_of(ext, ext.total.mul(a, ext.total.inv(b))));
    }
    return out;
}

std::vector<KCochain> enumerate_1cocycles(NervePtr nerve, std::shared_ptr<const FiniteGroup> group) {
    const auto& edges = nerve->simplices(1);
    require_input(edges.size() <= 32, "cocycle enumeration out of supported range");

    // triangles as edge-index triples (ij, jk, ik)
    struct Tri {
        int ij, jk, ik;
    };
    std::vector<Tri> tris;
    for (const Simplex& t : nerve->simplices(2))
        tris.push_back({nerve->index_of({t[0], t[1]}), nerve->index_of({t[1], t[2]}),
                        nerve->index_of({t[0], t[2]})});

    const FiniteGroup& k = *group;
    std::vector<int> assign(edges.size(), -1);
    std::vector<KCochain> out;

    auto consistent = [&](int edge) {
        for (const Tri& t : tris) {
            if (t.ij != edge && t.jk != edge && t.ik != edge) continue;
            int a = assign[size_t(t.ij)], b = assign[size_t(t.jk)], c = assign[size_t(t.ik)];
            if (a >= 0 && b >= 0 && c >= 0 && k.mul(a, b) != c) return false;
        }
        return true;
    };

    std::function<void(void)> dfs = [&]() {
        int next = -1;
        for (size_t i = 0; i < assign.size(); ++i)
            if (assign[i] < 0) {
                next = int(i);
                break;
            }
        if (next < 0) {
            KCochain c(nerve, 1, group);
            for (size_t i = 0; i < assign.size(); ++i) c.set_value(int(i), assign[i]);
            out.push_back(std::move(c));
            return;
        }
        // a triangle with the two other edges known forces this one
        int forced = -1;
        for (const Tri& t : tris) {
            int v = -1;
            int a = assign[size_t(t.ij)], b = assign[size_t(t.jk)], c = assign[size_t(t.ik)];
            if (t.ij == next && b >= 0 && c >= 0) v = k.mul(c, k.inv(b));
            if (t.jk == next && a >= 0 && c >= 0) v = k.mul(k.inv(a), c);
            if (t.ik == next && a >= 0 && b >= 0) v = k.mul(a, b);
            if (v >= 0) {
                if (forced >= 0 && forced != v) return;  // contradictory constraints
                forced = v;
            }
        }
        if (forced >= 0) {
            assign[size_t(next)] = forced;
            if (consistent(next)) dfs();
            assign[size_t(next)] = -1;
            return;
        }
        for (int v = 0; v < k.order(); ++v) {
            assign[size_t(next)] = v;
            if (consistent(next)) dfs();
            assign[size_t(next)] = -1;
        }
    };
    dfs();
    return out;
}

KCochain double_cover_cocycle(NervePtr nerve) {
    auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    const auto& edges = nerve->simplices(1);

    // spanning-tree propagation decides the coboundary question without linear algebra
    auto splits = [&](const KCochain& g) {
        std::vector<int> b(size_t(nerve->vertices()), -1);
        for (int root = 0; root < nerve->vertices(); ++root) {
            if (b[size_t(root)] >= 0) continue;
            b[size_t(root)] = 0;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (const Simplex& e : edges) {
                    int other = e[0] == x ? e[1] : (e[1] == x ? e[0] : -1);
                    if (other < 0) continue;
                    int want = (b[size_t(x)] + g.value_at(e[0], e[1])) % 2;
                    if (b[size_t(other)] < 0) {
                        b[size_t(other)] = want;
                        stack.push_back(other);
                    } else if (b[size_t(other)] != want) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    for (const KCochain& g : enumerate_1cocycles(nerve, z2))
        if (!splits(g)) return g;
    throw input_error("nerve admits no nonsplit double cover");
}

CechCochain pushforward_values(const CechCochain& c, const AbHom& phi) {
    require_input(c.coeff().kind == CechCoeff::Kind::Group, "pushforward: integer cochain expected");
    require_input(phi.source == c.coeff().group, "pushforward: coefficient group mismatch");
    CechCochain out(c.nerve_ptr(), c.degree(), CechCoeff::of_group(phi.target));
    for (int i = 0; i < c.nerve().simplex_count(c.degree()); ++i) {
        std::vector<Int> x(size_t(c.coeff().dim()));
        for (size_t j = 0; j < x.size(); ++j) x[j] = c.value(i)[j].get_num();
        std::vector<Int> y = phi.apply(x);
        std::vector<Rat> v(y.size());
        for (size_t j = 0; j < y.size(); ++j) v[j] = Rat(y[j]);
        out.set_value(i, std::move(v));
    }
    return out;
}

CechCochain pushforward_values_qmodz(const CechCochain& c, const FlatHom& gamma) {
    require_input(c.coeff().kind == CechCoeff::Kind::Group, "pushforward: integer cochain expected");
    require_input(gamma.source == c.coeff().group, "pushforward: coefficient group mismatch");
    require_input(gamma.shape.d.is_trivial(), "pushforward: discrete target part must be trivial");
    int m = gamma.shape.gamma_rank;
    CechCochain out(c.nerve_ptr(), c.degree(), CechCoeff::qmodz(m));
    for (int i = 0; i < c.nerve().simplex_count(c.degree()); ++i) {
        std::vector<Int> x(size_t(c.coeff().dim()));
        for (size_t j = 0; j < x.size(); ++j) x[j] = c.value(i)[j].get_num();
        ZElement z = gamma.apply(x);
        out.set_value(i, z.conn.v);
    }
    return out;
}

std::string format_cochain(const CechCochain& c) {
    std::ostringstream out;
    const auto& simps = c.nerve().simplices(c.degree());
    for (size_t t = 0; t < simps.size(); ++t) {
        for (size_t i = 0; i < simps[t].size(); ++i) out << (i ? " " : "") << simps[t][i];
        out << " :";
        for (const Rat& q : c.value(int(t))) out << " " << format_rat(q);
        out << "\n";
    }
    return out.str();
}

namespace {

// shared line splitter for the "tuple : payload" cochain format
bool split_cochain_line(const std::string& line, std::vector<int>& tuple, std::string& payload) {
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) return false;
    require_input(colon != std::string::npos, "cochain file: missing ':' in line '" + line + "'");
    std::istringstream ts(line.substr(0, colon));
    tuple.clear();
    int v;
    while (ts >> v) tuple.push_back(v);
    require_input(!tuple.empty(), "cochain file: empty tuple in line '" + line + "'");
    payload = line.substr(colon + 1);
    return true;
}

} // namespace

CechCochain parse_cochain(const std::string& text, NervePtr nerve, int degree, CechCoeff coeff) {
    CechCochain c(std::move(nerve), degree, std::move(coeff));
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> tuple;
        std::string payload;
        if (!split_cochain_line(line, tuple, payload)) continue;
        require_input(int(tuple.size()) == degree + 1,
                      "cochain file: tuple arity mismatch in line '" + line + "'");
        int idx = c.nerve().index_of(tuple);
        require_input(idx >= 0, "cochain file: unknown simplex in line '" + line + "'");
        std::istringstream ps(payload);
        std::vector<Rat> vals;
        std::string tok;
        while (ps >> tok) vals.push_back(parse_rat(tok));
        c.set_value(idx, std::move(vals));
    }
    return c;
}

std::string format_kcochain(const KCochain& c) {
    std::ostringstream out;
    const auto& simps = c.nerve().simplices(c.degree());
    for (size_t t = 0; t < simps.size(); ++t) {
        for (size_t i = 0; i < simps[t].size(); ++i) out << (i ? " " : "") << simps[t][i];
        out << " : " << c.value(int(t)) << "\n";
    }
    return out.str();
}

KCochain parse_kcochain(const std::string& text, NervePtr nerve, int degree,
                        std::shared_ptr<const FiniteGroup> group) {
    KCochain c(std::move(nerve), degree, std::move(group));
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> tuple;
        std::string payload;
        if (!split_cochain_line(line, tuple, payload)) continue;
        require_input(int(tuple.size()) == degree + 1,
                      "cochain file: tuple arity mismatch in line '" + line + "'");
        int idx = c.nerve().index_of(tuple);
        require_input(idx >= 0, "cochain file: unknown simplex in line '" + line + "'");
        std::istringstream ps(payload);
        int g = -1;
        require_input(bool(ps >> g), "cochain file: missing group element in line '" + line + "'");
        c.set_value(idx, g);
    }
    return c;
}

} // namespace liftobs

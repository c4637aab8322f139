#include "liftobs/grpcoh.hpp"

#include <algorithm>

#include "liftobs/error.hpp"
#include "liftobs/matrix.hpp"
#include "liftobs/zvalues.hpp"

namespace liftobs {

namespace {

bool has_identity_slot(const FiniteGroup& g, const std::vector<int>& tuple) {
    for (int x : tuple)
        if (x == g.identity()) return true;
    return false;
}

} // namespace

GroupCochain::GroupCochain(FinGroupPtr group, int degree, CoeffModule coeff)
    : group_(std::move(group)), degree_(degree), coeff_(std::move(coeff)) {
    require_internal(bool(group_), "group cochain needs a group");
    require_input(degree_ >= 0 && degree_ <= 3, "group cochain degree must be 0..3");
    long count = 1;
    for (int i = 0; i < degree_; ++i) {
        count *= group_->order();
        require_input(count <= 1 << 20, "group cochain value table too large");
    }
    vals_.assign(size_t(count), coeff_.zero());
}

std::vector<int> GroupCochain::tuple_of(int idx) const {
    require_internal(idx >= 0 && idx < tuple_count(), "tuple index out of range");
    std::vector<int> t(static_cast<size_t>(degree_));
    for (int i = 0; i < degree_; ++i) {
        t[size_t(i)] = idx % group_->order();
        idx /= group_->order();
    }
    return t;
}

int GroupCochain::index_of(const std::vector<int>& tuple) const {
    require_input(int(tuple.size()) == degree_, "tuple length must match the degree");
    int idx = 0;
    for (int i = degree_ - 1; i >= 0; --i) {
        int x = tuple[size_t(i)];
        require_input(x >= 0 && x < group_->order(), "tuple entry out of range");
        idx = idx * group_->order() + x;
    }
    return idx;
}

const std::vector<Rat>& GroupCochain::value(int idx) const {
    require_internal(idx >= 0 && idx < tuple_count(), "tuple index out of range");
    return vals_[size_t(idx)];
}

std::vector<Rat> GroupCochain::value_at(const std::vector<int>& tuple) const {
    return vals_[size_t(index_of(tuple))];
}

void GroupCochain::set_value(int idx, std::vector<Rat> v) {
    require_internal(idx >= 0 && idx < tuple_count(), "tuple index out of range");
    auto r = coeff_.reduce(std::move(v));
    if (has_identity_slot(*group_, tuple_of(idx)))
        require_input(coeff_.is_zero(r),
                      "normalized cochain: tuples with an identity slot must carry zero");
    vals_[size_t(idx)] = std::move(r);
}

void GroupCochain::set_value_at(const std::vector<int>& tuple, std::vector<Rat> v) {
    set_value(index_of(tuple), std::move(v));
}

bool GroupCochain::is_zero() const {
    for (const auto& v : vals_)
        if (!coeff_.is_zero(v)) return false;
    return true;
}

GroupCochain GroupCochain::operator+(const GroupCochain& o) const {
    require_input(*group_ == *o.group_ && degree_ == o.degree_ && coeff_ == o.coeff_,
                  "cochain sum: shape mismatch");
    GroupCochain out(group_, degree_, coeff_);
    for (int i = 0; i < tuple_count(); ++i)
        out.vals_[size_t(i)] = coeff_.add(vals_[size_t(i)], o.vals_[size_t(i)]);
    return out;
}

GroupCochain GroupCochain::operator-() const {
    GroupCochain out(group_, degree_, coeff_);
    for (int i = 0; i < tuple_count(); ++i) out.vals_[size_t(i)] = coeff_.neg(vals_[size_t(i)]);
    return out;
}

GroupCochain GroupCochain::smul(const Int& k) const {
    GroupCochain out(group_, degree_, coeff_);
    for (int i = 0; i < tuple_count(); ++i)
        out.vals_[size_t(i)] = coeff_.smul(k, vals_[size_t(i)]);
    return out;
}

bool GroupCochain::operator==(const GroupCochain& o) const {
    return *group_ == *o.group_ && degree_ == o.degree_ && coeff_ == o.coeff_ && vals_ == o.vals_;
}

namespace {

// Raw bar differential as a full value table of degree n+1 (n <= 3). The
// normalized cochains form a subcomplex, so identity-bearing entries stay
// zero; verified below rather than assumed.
std::vector<std::vector<Rat>> bar_delta_values(const GroupCochain& c) {
    const FiniteGroup& g = c.group();
    int n = c.degree();
    long count = 1;
    for (int i = 0; i < n + 1; ++i) count *= g.order();
    std::vector<std::vector<Rat>> out(static_cast<size_t>(count));
    std::vector<int> t(size_t(n + 1));
    for (long idx = 0; idx < count; ++idx) {
        long rem = idx;
        for (int i = 0; i <= n; ++i) {
            t[size_t(i)] = int(rem % g.order());
            rem /= g.order();
        }
        std::vector<Rat> acc = c.coeff().zero();
        auto add_term = [&](const std::vector<int>& sub, int sign) {
            auto v = c.value_at(sub);
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] += sign > 0 ? v[i] : -v[i];
        };
        add_term(std::vector<int>(t.begin() + 1, t.end()), +1);
        for (int j = 1; j <= n; ++j) {
            std::vector<int> sub;
            sub.reserve(size_t(n));
            for (int i = 0; i < j - 1; ++i) sub.push_back(t[size_t(i)]);
            sub.push_back(g.mul(t[size_t(j - 1)], t[size_t(j)]));
            for (int i = j + 1; i <= n; ++i) sub.push_back(t[size_t(i)]);
            add_term(sub, j % 2 == 0 ? +1 : -1);
        }
        add_term(std::vector<int>(t.begin(), t.end() - 1), (n + 1) % 2 == 0 ? +1 : -1);
        out[size_t(idx)] = c.coeff().reduce(std::move(acc));
        if (has_identity_slot(g, t))
            require_internal(c.coeff().is_zero(out[size_t(idx)]),
                             "bar differential left the normalized subcomplex");
    }
    return out;
}

// Full-table tuple indices avoiding the identity, ascending.
std::vector<long> normalized_tuples(const FiniteGroup& g, int n) {
    long count = 1;
    for (int i = 0; i < n; ++i) count *= g.order();
    std::vector<long> out;
    std::vector<int> t(static_cast<size_t>(n));
    for (long idx = 0; idx < count; ++idx) {
        long rem = idx;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            t[size_t(i)] = int(rem % g.order());
            rem /= g.order();
            if (t[size_t(i)] == g.identity()) ok = false;
        }
        if (ok) out.push_back(idx);
    }
    return out;
}

// Bar differential C^n -> C^{n+1} on normalized coordinates (one coefficient
// coordinate; the same matrix serves every cyclic piece).
IntMatrix bar_matrix(const FiniteGroup& g, int n) {
    require_internal(n >= 0 && n <= 3, "bar matrix degree out of range");
    auto rows_t = normalized_tuples(g, n + 1);
    auto cols_t = normalized_tuples(g, n);
    long full = 1;
    for (int i = 0; i < n; ++i) full *= g.order();
    std::vector<long> col_of(size_t(full), -1);
    for (size_t j = 0; j < cols_t.size(); ++j) col_of[size_t(cols_t[j])] = long(j);

    IntMatrix m(int(rows_t.size()), int(cols_t.size()));
    std::vector<int> t(size_t(n + 1));
    for (size_t r = 0; r < rows_t.size(); ++r) {
        long rem = rows_t[r];
        for (int i = 0; i <= n; ++i) {
            t[size_t(i)] = int(rem % g.order());
            rem /= g.order();
        }
        auto add_term = [&](const std::vector<int>& sub, int sign) {
            bool norm = true;
            long idx = 0;
            for (int i = n - 1; i >= 0; --i) {
                if (sub[size_t(i)] == g.identity()) norm = false;
                idx = idx * g.order() + sub[size_t(i)];
            }
            if (!norm) return;  // normalized cochains vanish there
            long ccol = col_of[size_t(idx)];
            require_internal(ccol >= 0, "bar matrix: missing column");
            m.at(int(r), int(ccol)) += sign;
        };
        add_term(std::vector<int>(t.begin() + 1, t.end()), +1);
        for (int j = 1; j <= n; ++j) {
            std::vector<int> sub;
            sub.reserve(size_t(n));
            for (int i = 0; i < j - 1; ++i) sub.push_back(t[size_t(i)]);
            sub.push_back(g.mul(t[size_t(j - 1)], t[size_t(j)]));
            for (int i = j + 1; i <= n; ++i) sub.push_back(t[size_t(i)]);
            add_term(sub, j % 2 == 0 ? +1 : -1);
        }
        add_term(std::vector<int>(t.begin(), t.end() - 1), (n + 1) % 2 == 0 ? +1 : -1);
    }
    return m;
}

// Generators of ker(a mod o) in (Z/o)^cols, or the integer kernel for o = 0.
IntMatrix kernel_basis_mod(const IntMatrix& a, const Int& o) {
    if (o == 0) return kernel_basis(a);
    SnfResult f = smith_normal_form(a);
    std::vector<int> keep;
    std::vector<Int> scale;
    for (int i = 0; i < a.cols(); ++i) {
        if (i < f.rank) {
            Int m = o / gcd(f.s.at(i, i), o);
            if (m == o) continue;  // o-fold columns are zero mod o
            keep.push_back(i);
            scale.push_back(m);
        } else {
            keep.push_back(i);
            scale.push_back(1);
        }
    }
    IntMatrix k(a.cols(), int(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j)
        for (int i = 0; i < a.cols(); ++i) k.at(i, int(j)) = f.v.at(i, keep[j]) * scale[j];
    return k;
}

// ker(dn mod o) / im(dn_1 mod o) as an abstract group.
FgAbGroup piece_cohomology(const IntMatrix& dn, const IntMatrix& dn_1, const Int& o) {
    require_internal((dn * dn_1).is_zero(), "bar differentials do not compose to zero");
    IntMatrix k = kernel_basis_mod(dn, o);
    int t = k.cols();
    if (t == 0) return FgAbGroup::trivial();
    IntMatrix span = k.hcat(dn_1);
    if (o != 0) {
        std::vector<Int> diag(size_t(k.rows()), o);
        span = span.hcat(IntMatrix::diagonal(diag));
    }
    IntMatrix w = kernel_basis(span);
    std::vector<int> top(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) top[size_t(i)] = i;
    IntMatrix rel = w.select_rows(top);
    return canonicalize(Presentation(t, rel)).group;
}

} // namespace

GroupCochain bar_coboundary(const GroupCochain& c) {
    require_input(c.degree() <= 2, "bar coboundary is exposed for degree at most 2");
    auto table = bar_delta_values(c);
    GroupCochain out(c.group_ptr(), c.degree() + 1, c.coeff());
    for (size_t i = 0; i < table.size(); ++i) out.set_value(int(i), std::move(table[i]));
    return out;
}

bool is_group_cocycle(const GroupCochain& c) {
    auto table = bar_delta_values(c);
    for (const auto& v : table)
        if (!c.coeff().is_zero(v)) return false;
    return true;
}

Normalized2Cocycle normalize_2cocycle(FinGroupPtr group, CoeffModule coeff,
                                      const std::vector<std::vector<Rat>>& full_table) {
    require_internal(bool(group), "normalize: group required");
    const FiniteGroup& g = *group;
    long count = long(g.order()) * g.order();
    require_input(long(full_table.size()) == count,
                  "degree-2 value table must list all |G|^2 tuples");
    auto at = [&](int a, int b) -> const std::vector<Rat>& {
        return full_table[size_t(a + g.order() * b)];
    };
    // Cocycle check on the raw table.
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int c = 0; c < g.order(); ++c) {
                std::vector<Rat> acc = coeff.reduce(at(b, c));
                auto sub = [&](const std::vector<Rat>& v) {
                    for (size_t i = 0; i < acc.size(); ++i) acc[i] -= v[i];
                };
                auto add = [&](const std::vector<Rat>& v) {
                    for (size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
                };
                sub(at(g.mul(a, b), c));
                add(at(a, g.mul(b, c)));
                sub(at(a, b));
                require_input(coeff.is_zero(coeff.reduce(std::move(acc))),
                              "degree-2 table is not a cocycle");
            }
    // A cocycle has f(1,x) = f(x,1) = f(1,1); subtracting the constant
    // coboundary by f(1,1) lands in the normalized complex.
    std::vector<Rat> shift = coeff.reduce(at(g.identity(), g.identity()));
    GroupCochain out(group, 2, coeff);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            std::vector<Rat> v = at(a, b);
            require_input(int(v.size()) == coeff.dim(), "value table arity mismatch");
            for (size_t i = 0; i < v.size(); ++i) v[i] -= shift[i];
            out.set_value_at({a, b}, std::move(v));
        }
    require_internal(is_group_cocycle(out), "normalization broke the cocycle");
    return Normalized2Cocycle{std::move(out), std::move(shift)};
}

FgAbGroup cohomology_group(const FiniteGroup& g, const CoeffModule& coeff, int degree,
                           int order_bound) {
    require_input(degree >= 0 && degree <= 3, "cohomology degree must be 0..3");
    require_input(g.order() <= order_bound, "group order exceeds the cohomology bound");
    switch (coeff.kind) {
        case CoeffModule::Kind::Rational:
            // |G| is invertible on Q^m, so positive degrees vanish (see the
            // averaging witness in is_group_coboundary). Degree 0 would be
            // Q^m itself, which has no finite presentation here.
            require_input(degree >= 1, "rational coefficients are not finitely generated in degree 0");
            return FgAbGroup::trivial();
        case CoeffModule::Kind::QmodZ: {
            require_input(degree >= 1, "Q/Z coefficients are not finitely generated in degree 0");
            require_input(degree <= 2,
                          "Q/Z cohomology is supported in degrees 1 and 2 only: the "
                          "dimension shift to integral coefficients leaves the computable range");
            if (g.order() == 1) return FgAbGroup::trivial();
            // Q^m is cohomologically trivial in positive degrees (averaging
            // inverts |G|), so Z^m -> Q^m -> (Q/Z)^m shifts the dimension:
            // classes here are integral classes one degree up.
            return cohomology_group(g, CoeffModule::of_group(FgAbGroup::free_group(coeff.m)),
                                    degree + 1, order_bound);
        }
        case CoeffModule::Kind::Group:
            break;
    }
    const FgAbGroup& m = coeff.group;
    if (degree == 0) return m;  // invariants of the trivial action
    IntMatrix dn = bar_matrix(g, degree);
    IntMatrix dn_1 = bar_matrix(g, degree - 1);
    FgAbGroup out = FgAbGroup::trivial();
    for (int i = 0; i < m.gens(); ++i)
        out = direct_sum(out, piece_cohomology(dn, dn_1, m.gen_order(i)));
    return out;
}

std::optional<GroupCochain> is_group_coboundary(const GroupCochain& c) {
    int n = c.degree();
    require_input(n >= 1, "coboundary test needs positive degree");
    require_input(is_group_cocycle(c), "coboundary test requires a cocycle");
    const FiniteGroup& g = c.group();
    FinGroupPtr gp = c.group_ptr();

    if (c.coeff().kind == CoeffModule::Kind::Rational) {
        // Averaging contracts rational cocycles: u = (-1)^n / |G| * sum over
        // the last slot, then delta u = c.
        if (n == 1) {
            require_internal(c.is_zero(), "rational 1-cocycle on a finite group must vanish");
            return GroupCochain::zero(gp, 0, c.coeff());
        }
        GroupCochain u(gp, n - 1, c.coeff());
        auto subs = normalized_tuples(g, n - 1);
        for (long idx : subs) {
            std::vector<int> t = u.tuple_of(int(idx));
            std::vector<Rat> acc = c.coeff().zero();
            std::vector<int> full = t;
            full.push_back(0);
            for (int x = 0; x < g.order(); ++x) {
                full.back() = x;
                auto v = c.value_at(full);
                for (size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
            }
            Rat scale(n % 2 == 0 ? 1 : -1, g.order());
            scale.canonicalize();
            for (auto& q : acc) q *= scale;
            u.set_value(int(idx), std::move(acc));
        }
        require_internal(bar_coboundary(u) == c, "averaging witness failed");
        return u;
    }

    if (c.coeff().kind == CoeffModule::Kind::QmodZ) {
        // c bounds in Q/Z iff its integral Bockstein bounds in Z^m: lift, take
        // the bar differential, and solve one degree higher over Z. A witness
        // w there makes lift(c) - w a rational cocycle, which averaging
        // contracts; reducing that contraction mod 1 bounds c.
        require_input(n <= 2, "Q/Z coboundary test supports degree at most 2");
        GroupCochain lift(c.group_ptr(), n, CoeffModule::rational(c.coeff().m));
        for (int i = 0; i < c.tuple_count(); ++i) lift.set_value(i, c.value(i));
        GroupCochain bock = bar_coboundary(lift);  // integer-valued 3-cocycle data
        GroupCochain bock_int(gp, n + 1, CoeffModule::of_group(FgAbGroup::free_group(c.coeff().m)));
        for (int i = 0; i < bock.tuple_count(); ++i) {
            auto v = bock.value(i);
            for (auto& q : v)
                require_internal(q.get_den() == 1, "Bockstein values must be integers");
            bock_int.set_value(i, std::move(v));
        }
        auto w = is_group_coboundary(bock_int);
        if (!w) return std::nullopt;
        GroupCochain resid(gp, n, CoeffModule::rational(c.coeff().m));
        for (int i = 0; i < lift.tuple_count(); ++i) {
            auto v = lift.value(i);
            const auto& wv = w->value(i);
            for (size_t j = 0; j < v.size(); ++j) v[j] -= wv[j];
            resid.set_value(i, std::move(v));
        }
        auto u = is_group_coboundary(resid);
        require_internal(u.has_value(), "rational residual must bound");
        GroupCochain out(gp, n - 1, c.coeff());
        for (int i = 0; i < u->tuple_count(); ++i) out.set_value(i, u->value(i));
        require_internal(bar_coboundary(out) == c, "Q/Z witness failed");
        return out;
    }

    const FgAbGroup& b = c.coeff().group;
    IntMatrix d = bar_matrix(g, n - 1);
    auto rows_t = normalized_tuples(g, n);
    auto cols_t = normalized_tuples(g, n - 1);
    require_internal(int(rows_t.size()) == d.rows() && int(cols_t.size()) == d.cols(),
                     "bar matrix shape mismatch");
    GroupCochain out(gp, n - 1, c.coeff());
    std::vector<std::vector<Int>> witness(cols_t.size(), std::vector<Int>(size_t(b.gens())));
    for (int j = 0; j < b.gens(); ++j) {
        std::vector<Int> mods(size_t(d.rows()), b.gen_order(j));
        ModularSolver solver(d, mods);
        std::vector<Int> rhs(size_t(d.rows()));
        for (size_t r = 0; r < rows_t.size(); ++r)
            rhs[r] = c.value(int(rows_t[r]))[size_t(j)].get_num();
        auto x = solver.solve(rhs);
        if (!x) return std::nullopt;
        for (size_t col = 0; col < cols_t.size(); ++col) witness[col][size_t(j)] = (*x)[col];
    }
    for (size_t col = 0; col < cols_t.size(); ++col) {
        std::vector<Rat> v(witness[col].size());
        for (size_t j = 0; j < v.size(); ++j) v[j] = Rat(witness[col][j]);
        out.set_value(int(cols_t[col]), std::move(v));
    }
    require_internal(bar_coboundary(out) == c, "coboundary witness failed");
    return out;
}

GroupCochain delta2_connecting(const GroupCochain& f) {
    require_input(f.degree() == 2, "connecting map takes a degree-2 cocycle");
    require_input(f.coeff().kind == CoeffModule::Kind::QmodZ,
                  "connecting map takes Q/Z coefficients");
    require_input(is_group_cocycle(f), "connecting map requires a cocycle");
    int m = f.coeff().m;
    GroupCochain lift(f.group_ptr(), 2, CoeffModule::rational(m));
    for (int i = 0; i < f.tuple_count(); ++i) lift.set_value(i, f.value(i));
    GroupCochain raw = bar_coboundary(lift);
    GroupCochain out(f.group_ptr(), 3, CoeffModule::of_group(FgAbGroup::free_group(m)));
    for (int i = 0; i < raw.tuple_count(); ++i) {
        auto v = raw.value(i);
        for (const Rat& q : v)
            require_internal(q.get_den() == 1, "connecting map must produce integers");
        out.set_value(i, std::move(v));
    }
    require_internal(is_group_cocycle(out), "connecting map output is not a cocycle");
    return out;
}

GroupCochain cocycle_of_extension(const FiniteCentralExt& ext) {
    auto q = std::make_shared<const FiniteGroup>(ext.quotient);
    GroupCochain f(q, 2, CoeffModule::of_group(ext.z));
    const FiniteGroup& t = ext.total;
    for (int a = 0; a < q->order(); ++a)
        for (int b = 0; b < q->order(); ++b) {
            int prod = t.mul(ext.section[size_t(a)], ext.section[size_t(b)]);
            int zt = t.mul(prod, t.inv(ext.section[size_t(q->mul(a, b))]));
            int zi = ext.z_index_of(zt);
            require_internal(zi >= 0, "section defect must be central");
            auto coords = abelian_coords(ext.z, zi);
            std::vector<Rat> v(coords.size());
            for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(coords[i]);
            f.set_value_at({a, b}, std::move(v));
        }
    require_internal(is_group_cocycle(f), "section defect is not a cocycle");
    return f;
}

FiniteCentralExt extension_of_cocycle(const GroupCochain& f) {
    require_input(f.degree() == 2, "extension needs a degree-2 cocycle");
    require_input(f.coeff().kind == CoeffModule::Kind::Group && f.coeff().group.is_finite(),
                  "extension needs finite integer coefficients");
    require_input(is_group_cocycle(f), "extension table needs a cocycle (associativity)");
    const FgAbGroup& z = f.coeff().group;
    const FiniteGroup& g = f.group();
    long zn = 1;
    for (const Int& d : z.torsion) zn *= d.get_si();
    long total = zn * g.order();
    require_input(total <= 512, "extension order exceeds the table bound");

    auto zval = [&](int a, int b) {
        auto v = f.value_at({a, b});
        std::vector<Int> c(v.size());
        for (size_t i = 0; i < v.size(); ++i) c[i] = v[i].get_num();
        return c;
    };
    std::vector<int> table(size_t(total) * size_t(total));
    for (long i = 0; i < total; ++i) {
        int zi = int(i % zn), ki = int(i / zn);
        auto zc = abelian_coords(z, zi);
        for (long j = 0; j < total; ++j) {
            int zj = int(j % zn), kj = int(j / zn);
            std::vector<Int> s = z.add(zc, abelian_coords(z, zj));
            s = z.add(s, zval(ki, kj));
            long out = abelian_index(z, s) + zn * long(g.mul(ki, kj));
            table[size_t(i * total + j)] = int(out);
        }
    }
    FiniteGroup tot(int(total), std::move(table));
    std::vector<int> embed(static_cast<size_t>(zn));
    std::vector<int> proj(static_cast<size_t>(total));
    std::vector<int> section(size_t(g.order()));
    for (long zi = 0; zi < zn; ++zi) embed[size_t(zi)] = int(zi);
    for (long t = 0; t < total; ++t) proj[size_t(t)] = int(t / zn);
    for (int k = 0; k < g.order(); ++k) section[size_t(k)] = int(zn * k);
    return FiniteCentralExt(std::move(tot), g, z, std::move(embed), std::move(proj),
                            std::move(section));
}

GroupCochain pushforward_coeff(const AbHom& gamma, const GroupCochain& c) {
    require_input(c.coeff().kind == CoeffModule::Kind::Group,
                  "pushforward: integer-coefficient cochain expected");
    require_input(gamma.source == c.coeff().group, "pushforward: coefficient group mismatch");
    GroupCochain out(c.group_ptr(), c.degree(), CoeffModule::of_group(gamma.target));
    for (int i = 0; i < c.tuple_count(); ++i) {
        const auto& v = c.value(i);
        std::vector<Int> x(v.size());
        for (size_t j = 0; j < v.size(); ++j) x[j] = v[j].get_num();
        auto y = gamma.apply(x);
        std::vector<Rat> w(y.size());
        for (size_t j = 0; j < y.size(); ++j) w[j] = Rat(y[j]);
        out.set_value(i, std::move(w));
    }
    return out;
}

GroupCochain pushforward_coeff(const FlatHom& gamma, const GroupCochain& c) {
    require_input(c.coeff().kind == CoeffModule::Kind::Group,
                  "pushforward: integer-coefficient cochain expected");
    require_input(gamma.source == c.coeff().group, "pushforward: coefficient group mismatch");
    require_input(gamma.discrete_is_zero(),
                  "pushforward into Q/Z needs a purely connected map");
    GroupCochain out(c.group_ptr(), c.degree(), CoeffModule::qmodz(gamma.shape.gamma_rank));
    for (int i = 0; i < c.tuple_count(); ++i) {
        const auto& v = c.value(i);
        std::vector<Int> x(v.size());
        for (size_t j = 0; j < v.size(); ++j) x[j] = v[j].get_num();
        out.set_value(i, gamma.apply(x).conn.v);
    }
    return out;
}

ExtClass ext_of_symmetric_class(const GroupCochain& f) {
    require_input(f.degree() == 2, "symmetric class must have degree 2");
    require_input(f.coeff().kind == CoeffModule::Kind::Group,
                  "symmetric class needs integer coefficients");
    const FiniteGroup& g = f.group();
    require_input(g.is_abelian(), "symmetric class lives over an abelian group");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < a; ++b)
            require_input(f.value_at({a, b}) == f.value_at({b, a}),
                          "cocycle is not symmetric");
    require_input(is_group_cocycle(f), "symmetric class must be a cocycle");

    AbelianStructure s = abelian_structure(g);
    const FgAbGroup& base = s.group;
    const FgAbGroup& b = f.coeff().group;
    std::vector<std::vector<Int>> comps;
    for (size_t i = 0; i < s.gen_elts.size(); ++i) {
        // d-fold power of a section lift of the i-th generator lands in the
        // coefficient group; that value is the Ext component.
        int a = s.gen_elts[i];
        Int d = base.gen_order(int(i));
        std::vector<Int> acc(size_t(b.gens()));
        int x = a;
        for (Int k = 1; k < d; ++k) {
            auto v = f.value_at({x, a});
            std::vector<Int> iv(v.size());
            for (size_t j = 0; j < v.size(); ++j) iv[j] = v[j].get_num();
            acc = b.add(acc, iv);
            x = g.mul(x, a);
        }
        comps.push_back(std::move(acc));
    }
    return ExtClass(base, b, std::move(comps));
}

FiniteCentralExt baer_sum_finite(const FiniteCentralExt& a, const FiniteCentralExt& b) {
    require_input(a.quotient == b.quotient, "Baer sum needs a common quotient");
    require_input(a.z == b.z, "Baer sum needs a common kernel");
    GroupCochain f = cocycle_of_extension(a);
    GroupCochain h = cocycle_of_extension(b);
    return extension_of_cocycle(f + h);
}

} // namespace liftobs

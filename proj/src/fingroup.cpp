#include "liftobs/fingroup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "liftobs/error.hpp"

namespace liftobs {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string name)
    : n_(order), table_(std::move(table)), name_(std::move(name)) {
    require_input(n_ >= 1, "group table: order must be >= 1");
    require_input(table_.size() == size_t(n_) * size_t(n_), "group table: wrong entry count");
    for (int v : table_) require_input(v >= 0 && v < n_, "group table: entry out of range");

    int e = -1;
    for (int c = 0; c < n_; ++c) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a) ok = mul(c, a) == a && mul(a, c) == a;
        if (ok) {
            e = c;
            break;
        }
    }
    require_input(e >= 0, "group table: no identity element");
    e_ = e;

    inv_.assign(size_t(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == e_ && mul(b, a) == e_) {
                inv_[size_t(a)] = b;
                break;
            }
        require_input(inv_[size_t(a)] >= 0, "group table: missing inverse");
    }

    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                require_input(mul(mul(a, b), c) == mul(a, mul(b, c)),
                              "group table: multiplication is not associative");

    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
        for (int b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, "1"); }

FiniteGroup FiniteGroup::cyclic(const Int& n) {
    require_input(n >= 1 && n.fits_sint_p(), "cyclic group: order must be a small positive integer");
    int m = int(n.get_si());
    std::vector<int> t(size_t(m) * size_t(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[size_t(a) * size_t(m) + size_t(b)] = (a + b) % m;
    return FiniteGroup(m, std::move(t), "Z/" + Int(n).get_str());
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    // index = i + a.order() * j for (i, j)
    std::vector<int> t(size_t(n) * size_t(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int i = a.mul(x % a.order(), y % a.order());
            int j = b.mul(x / a.order(), y / a.order());
            t[size_t(x) * size_t(n) + size_t(y)] = i + a.order() * j;
        }
    return FiniteGroup(n, std::move(t), a.name() + " x " + b.name());
}

FiniteGroup FiniteGroup::quaternion8() {
    // Indices 0..7 = 1, -1, i, -i, j, -j, k, -k; pairs (sign, axis) with axis 0=1, 1=i, 2=j, 3=k.
    auto idx = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
    // axis multiplication: result (sign, axis)
    auto axmul = [](int a, int b, int& sign, int& axis) {
        sign = 1;
        if (a == 0) {
            axis = b;
        } else if (b == 0) {
            axis = a;
        } else if (a == b) {
            axis = 0;
            sign = -1;
        } else {
            // i*j=k, j*k=i, k*i=j and the odd permutations flip sign
            axis = 6 - a - b;  // the third axis among {1,2,3}
            sign = (b == a % 3 + 1) ? 1 : -1;
        }
    };
    std::vector<int> t(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int sx = (x % 2) ? -1 : 1, ax = x / 2;
            int sy = (y % 2) ? -1 : 1, ay = y / 2;
            int s, az;
            axmul(ax, ay, s, az);
            t[size_t(x) * 8 + size_t(y)] = idx(sx * sy * s, az);
        }
    return FiniteGroup(8, std::move(t), "Q8");
}

FiniteGroup FiniteGroup::from_abelian(const FgAbGroup& g) {
    require_input(g.is_finite(), "from_abelian: group must be finite");
    Int big = g.order();
    require_input(big.fits_sint_p() && big <= 4096, "from_abelian: group too large for a table");
    int n = int(big.get_si());
    std::vector<int> t(size_t(n) * size_t(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[size_t(x) * size_t(n) + size_t(y)] =
                abelian_index(g, g.add(abelian_coords(g, x), abelian_coords(g, y)));
    return FiniteGroup(n, std::move(t), g.to_string());
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
    std::string s;
    for (char ch : spec)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "Q8") return quaternion8();
    FgAbGroup g = parse_group_spec(spec);
    require_input(g.is_finite(), "group spec '" + spec + "' is not a finite group");
    return from_abelian(g);
}

FiniteGroup FiniteGroup::parse_table_text(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    int n = 0;
    in >> kw >> n;
    require_input(in && kw == "order", "group file: expected header 'order N'");
    require_input(n >= 1 && n <= 512, "group file: order out of range");
    std::vector<int> t;
    t.reserve(size_t(n) * size_t(n));
    int v;
    while (in >> v) t.push_back(v);
    require_input(t.size() == size_t(n) * size_t(n), "group file: expected N*N table entries");
    return FiniteGroup(n, std::move(t));
}

int FiniteGroup::order_of(int a) const {
    int x = a, k = 1;
    while (x != e_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::power(int a, const Int& k) const {
    Int r = k % order_of(a);
    if (r < 0) r += order_of(a);
    int x = e_;
    for (Int i = 0; i < r; ++i) x = mul(x, a);
    return x;
}

std::string FiniteGroup::format_table_text() const {
    std::ostringstream out;
    out << "order " << n_ << "\n";
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) out << (b ? " " : "") << mul(a, b);
        out << "\n";
    }
    return out.str();
}

int abelian_index(const FgAbGroup& g, const std::vector<Int>& coords) {
    require_internal(g.is_finite(), "abelian_index: group must be finite");
    std::vector<Int> c = g.reduce(coords);
    Int idx = 0, stride = 1;
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        idx += c[i] * stride;
        stride *= g.torsion[i];
    }
    return int(idx.get_si());
}

std::vector<Int> abelian_coords(const FgAbGroup& g, int index) {
    require_internal(g.is_finite(), "abelian_coords: group must be finite");
    std::vector<Int> c(size_t(g.gens()));
    Int rem = index;
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        c[i] = rem % g.torsion[i];
        rem /= g.torsion[i];
    }
    return c;
}

namespace {

std::vector<int> small_generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<char> reach(size_t(g.order()), 0);
    reach[size_t(g.identity())] = 1;
    int count = 1;
    while (count < g.order()) {
        int next = -1;
        for (int a = 0; a < g.order(); ++a)
            if (!reach[size_t(a)]) {
                next = a;
                break;
            }
        gens.push_back(next);
        // closure under the enlarged generating set
        std::vector<int> frontier{g.identity()};
        std::fill(reach.begin(), reach.end(), 0);
        reach[size_t(g.identity())] = 1;
        count = 1;
        while (!frontier.empty()) {
            std::vector<int> nf;
            for (int x : frontier)
                for (int s : gens) {
                    int y = g.mul(x, s);
                    if (!reach[size_t(y)]) {
                        reach[size_t(y)] = 1;
                        ++count;
                        nf.push_back(y);
                    }
                }
            frontier = std::move(nf);
        }
    }
    return gens;
}

// Extends the partial map determined by generator images to a full homomorphism,
// or reports failure. Images must respect products; bijectivity checked by the caller.
bool build_hom(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
               const std::vector<int>& imgs, std::vector<int>& f) {
    f.assign(size_t(a.order()), -1);
    f[size_t(a.identity())] = b.identity();
    std::vector<int> frontier{a.identity()};
    while (!frontier.empty()) {
        std::vector<int> nf;
        for (int x : frontier)
            for (size_t i = 0; i < gens.size(); ++i) {
                int y = a.mul(x, gens[i]);
                int fy = b.mul(f[size_t(x)], imgs[i]);
                if (f[size_t(y)] == -1) {
                    f[size_t(y)] = fy;
                    nf.push_back(y);
                } else if (f[size_t(y)] != fy) {
                    return false;
                }
            }
        frontier = std::move(nf);
    }
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (f[size_t(a.mul(x, y))] != b.mul(f[size_t(x)], f[size_t(y)])) return false;
    return true;
}

} // namespace

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> oa(size_t(a.order())), ob(size_t(b.order()));
    for (int x = 0; x < a.order(); ++x) oa[size_t(x)] = a.order_of(x);
    for (int x = 0; x < b.order(); ++x) ob[size_t(x)] = b.order_of(x);
    {
        auto sa = oa, sb = ob;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> gens = small_generating_set(a);
    std::vector<int> imgs(gens.size(), -1);
    std::vector<int> f;

    std::function<bool(size_t)> dfs = [&](size_t pos) -> bool {
        if (pos == gens.size()) {
            if (!build_hom(a, b, gens, imgs, f)) return false;
            std::vector<char> seen(size_t(b.order()), 0);
            for (int v : f) {
                if (seen[size_t(v)]) return false;
                seen[size_t(v)] = 1;
            }
            return true;
        }
        for (int cand = 0; cand < b.order(); ++cand) {
            if (ob[size_t(cand)] != oa[size_t(gens[pos])]) continue;
            imgs[pos] = cand;
            if (dfs(pos + 1)) return true;
        }
        return false;
    };
    return dfs(0);
}

AbelianStructure abelian_structure(const FiniteGroup& g) {
    require_input(g.is_abelian(), "abelian_structure: group is not abelian");

    // Greedy invariant-factor peeling: the largest element order is the last factor,
    // and a maximal cyclic subgroup splits off.
    std::function<std::vector<int>(const FiniteGroup&)> peel = [&](const FiniteGroup& h) {
        std::vector<int> gens;  // element of h per factor, ascending order sizes
        if (h.order() == 1) return gens;
        int best = -1, bo = 0;
        for (int x = 0; x < h.order(); ++x)
            if (h.order_of(x) > bo) {
                bo = h.order_of(x);
                best = x;
            }
        // cosets of <best>
        std::vector<int> cyc;
        {
            int x = h.identity();
            do {
                cyc.push_back(x);
                x = h.mul(x, best);
            } while (x != h.identity());
        }
        std::vector<int> coset_of(size_t(h.order()), -1);
        std::vector<int> reps;
        for (int x = 0; x < h.order(); ++x) {
            if (coset_of[size_t(x)] >= 0) continue;
            int id = int(reps.size());
            reps.push_back(x);
            for (int c : cyc) coset_of[size_t(h.mul(x, c))] = id;
        }
        int qn = int(reps.size());
        std::vector<int> qt(size_t(qn) * size_t(qn));
        for (int i = 0; i < qn; ++i)
            for (int j = 0; j < qn; ++j)
                qt[size_t(i) * size_t(qn) + size_t(j)] = coset_of[size_t(h.mul(reps[i], reps[j]))];
        FiniteGroup q(qn, std::move(qt));
        std::vector<int> sub = peel(q);
        for (int qg : sub) {
            // lift each quotient generator to a representative of the same order
            int want = q.order_of(qg);
            int lift = -1;
            for (int x = 0; x < h.order(); ++x)
                if (coset_of[size_t(x)] == qg && h.order_of(x) == want) {
                    lift = x;
                    break;
                }
            require_internal(lift >= 0, "abelian_structure: no order-preserving coset lift");
            gens.push_back(lift);
        }
        gens.push_back(best);
        return gens;
    };

    std::vector<int> gen_elts = peel(g);
    std::vector<Int> factors;
    for (int e : gen_elts) factors.push_back(g.order_of(e));
    AbelianStructure out{FgAbGroup(0, factors), gen_elts, {}};

    // verify: coordinates -> element is a bijective homomorphism
    Int total = out.group.order();
    require_internal(total == g.order(), "abelian_structure: factor product mismatch");
    std::vector<int> elt_of(size_t(g.order()), -1);
    out.coords_of.assign(size_t(g.order()), {});
    for (int idx = 0; idx < g.order(); ++idx) {
        std::vector<Int> c = abelian_coords(out.group, idx);
        int x = g.identity();
        for (size_t i = 0; i < gen_elts.size(); ++i) x = g.mul(x, g.power(gen_elts[i], c[i]));
        require_internal(elt_of[size_t(x)] == -1, "abelian_structure: coordinate map not injective");
        elt_of[size_t(x)] = idx;
        out.coords_of[size_t(x)] = c;
    }
    return out;
}

FiniteCentralExt::FiniteCentralExt(FiniteGroup total_, FiniteGroup quotient_, FgAbGroup z_,
                                   std::vector<int> embed_, std::vector<int> proj_,
                                   std::vector<int> section_)
    : total(std::move(total_)),
      quotient(std::move(quotient_)),
      z(std::move(z_)),
      embed(std::move(embed_)),
      proj(std::move(proj_)),
      section(std::move(section_)) {
    validate();
}

void FiniteCentralExt::validate() {
    require_input(z.is_finite(), "central extension: kernel must be finite");
    Int zn = z.order();
    require_input(zn.fits_sint_p() && int(zn.get_si()) * quotient.order() == total.order(),
                  "central extension: |total| != |Z| * |quotient|");
    int zcount = int(zn.get_si());
    require_input(int(embed.size()) == zcount, "central extension: embed table size");
    require_input(int(proj.size()) == total.order(), "central extension: proj table size");
    require_input(int(section.size()) == quotient.order(), "central extension: section table size");

    z_lookup_.assign(size_t(total.order()), -1);
    for (int i = 0; i < zcount; ++i) {
        int t = embed[size_t(i)];
        require_input(t >= 0 && t < total.order(), "central extension: embed out of range");
        require_input(z_lookup_[size_t(t)] == -1, "central extension: embed not injective");
        z_lookup_[size_t(t)] = i;
    }
    for (int i = 0; i < zcount; ++i)
        for (int j = 0; j < zcount; ++j) {
            int ij = abelian_index(z, z.add(abelian_coords(z, i), abelian_coords(z, j)));
            require_input(embed[size_t(ij)] == total.mul(embed[size_t(i)], embed[size_t(j)]),
                          "central extension: embed is not a homomorphism");
        }
    for (int i = 0; i < zcount; ++i)
        for (int t = 0; t < total.order(); ++t)
            require_input(total.mul(embed[size_t(i)], t) == total.mul(t, embed[size_t(i)]),
                          "central extension: embedded kernel is not central");

    std::vector<char> hit(size_t(quotient.order()), 0);
    for (int t = 0; t < total.order(); ++t) {
        require_input(proj[size_t(t)] >= 0 && proj[size_t(t)] < quotient.order(),
                      "central extension: proj out of range");
        hit[size_t(proj[size_t(t)])] = 1;
    }
    for (char h : hit) require_input(h, "central extension: proj not surjective");
    for (int a = 0; a < total.order(); ++a)
        for (int b = 0; b < total.order(); ++b)
            require_input(proj[size_t(total.mul(a, b))] ==
                              quotient.mul(proj[size_t(a)], proj[size_t(b)]),
                          "central extension: proj is not a homomorphism");
    for (int t = 0; t < total.order(); ++t)
        require_input((proj[size_t(t)] == quotient.identity()) == (z_lookup_[size_t(t)] >= 0),
                      "central extension: kernel of proj differs from im(embed)");

    for (int k = 0; k < quotient.order(); ++k) {
        int s = section[size_t(k)];
        require_input(s >= 0 && s < total.order() && proj[size_t(s)] == k,
                      "central extension: section is not a right inverse of proj");
    }
    require_input(section[size_t(quotient.identity())] == total.identity(),
                  "central extension: section not normalized");
}

FiniteCentralExt FiniteCentralExt::with_section(std::vector<int> section_) const {
    return FiniteCentralExt(total, quotient, z, embed, proj, std::move(section_));
}

FiniteCentralExt FiniteCentralExt::z4_over_z2() {
    return FiniteCentralExt(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), FgAbGroup::cyclic(2),
                            {0, 2}, {0, 1, 0, 1}, {0, 1});
}

FiniteCentralExt FiniteCentralExt::q8_over_v4() {
    FiniteGroup q8 = FiniteGroup::quaternion8();
    FiniteGroup v4 = FiniteGroup::from_abelian(FgAbGroup(0, {2, 2}));
    // 1,-1 -> (0,0); i,-i -> (1,0); j,-j -> (0,1); k,-k -> (1,1)
    std::vector<int> proj{0, 0, 1, 1, 2, 2, 3, 3};
    std::vector<int> section{0, 2, 4, 6};
    return FiniteCentralExt(q8, v4, FgAbGroup::cyclic(2), {0, 1}, std::move(proj),
                            std::move(section));
}

FiniteCentralExt FiniteCentralExt::split(const FgAbGroup& z, const FiniteGroup& k) {
    FiniteGroup zg = FiniteGroup::from_abelian(z);
    FiniteGroup total = FiniteGroup::direct_product(zg, k);
    int zn = zg.order();
    std::vector<int> embed(static_cast<size_t>(zn));
    std::vector<int> proj(size_t(total.order()));
    std::vector<int> section(size_t(k.order()));
    for (int i = 0; i < zn; ++i) embed[size_t(i)] = i;  // (z, 1) has index z
    for (int t = 0; t < total.order(); ++t) proj[size_t(t)] = t / zn;
    for (int q = 0; q < k.order(); ++q) section[size_t(q)] = q * zn;
    return FiniteCentralExt(std::move(total), k, z, std::move(embed), std::move(proj),
                            std::move(section));
}

} // namespace liftobs

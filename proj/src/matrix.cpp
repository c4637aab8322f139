#include "liftobs/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "liftobs/error.hpp"

namespace liftobs {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    require_internal(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    require_internal(a_.size() == size_t(rows) * size_t(cols), "entry count mismatch");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

Int& IntMatrix::at(int r, int c) {
    require_internal(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    return a_[size_t(r) * cols_ + c];
}

const Int& IntMatrix::at(int r, int c) const {
    require_internal(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    return a_[size_t(r) * cols_ + c];
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require_internal(cols_ == o.rows_, "matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    require_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    require_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    require_internal(int(x.size()) == cols_, "matrix apply shape mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

IntMatrix IntMatrix::column(int c) const {
    IntMatrix r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

std::vector<Int> IntMatrix::column_vec(int c) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    require_internal(rows_ == o.rows_, "hcat row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& idx) const {
    IntMatrix r(rows_, int(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, int(j)) = at(i, idx[j]);
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
    IntMatrix r(int(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) r.at(int(i), j) = at(idx[i], j);
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

void IntMatrix::negate_row(int r) {
    for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(int c) {
    for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

std::vector<Int> SnfResult::diag() const {
    std::vector<Int> d;
    for (int i = 0; i < rank; ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

// Smallest-absolute-value nonzero entry of s restricted to [t..) x [t..);
// ties broken by lowest (row, col). Returns false if the submatrix is zero.
bool find_pivot(const IntMatrix& s, int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j) {
            const Int& x = s.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult r;
    r.s = m;
    r.u = IntMatrix::identity(m.rows());
    r.v = IntMatrix::identity(m.cols());
    IntMatrix& s = r.s;
    const int n = std::min(m.rows(), m.cols());

    for (int t = 0; t < n; ++t) {
        for (;;) {
            int pr, pc;
            if (!find_pivot(s, t, pr, pc)) {
                r.rank = t;
                goto done;
            }
            s.swap_rows(t, pr);
            r.u.swap_rows(t, pr);
            s.swap_cols(t, pc);
            r.v.swap_cols(t, pc);

            // Clear column t below the pivot, then row t to its right.
            bool dirty = false;
            for (int i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);  // truncating division, |rem| < |pivot|
                s.add_row_multiple(i, t, -q);
                r.u.add_row_multiple(i, t, -q);
                if (s.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                s.add_col_multiple(j, t, -q);
                r.v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // smaller remainder exists; repick pivot

            // Pivot is the lone entry in its row and column. Enforce divisibility:
            // fold in the first offending row and continue.
            bool fixed = true;
            for (int i = t + 1; i < s.rows() && fixed; ++i)
                for (int j = t + 1; j < s.cols() && fixed; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        r.u.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            r.u.negate_row(t);
        }
        r.rank = t + 1;
    }
done:
    return r;
}

Int det(const IntMatrix& m) {
    require_internal(m.rows() == m.cols(), "determinant needs a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination with row pivoting.
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    require_internal(is_unimodular(m), "inverse requires a unimodular matrix");
    // U m V = I for unimodular m, hence m^-1 = V U.
    SnfResult f = smith_normal_form(m);
    require_internal(f.s == IntMatrix::identity(m.rows()), "unimodular matrix must have trivial form");
    return f.v * f.u;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SnfResult f = smith_normal_form(m);
    std::vector<int> idx;
    for (int j = f.rank; j < m.cols(); ++j) idx.push_back(j);
    return f.v.select_columns(idx);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    require_internal(int(b.size()) == m.rows(), "solve shape mismatch");
    SnfResult f = smith_normal_form(m);
    std::vector<Int> c = f.u.apply(b);
    std::vector<Int> y(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (i < f.rank) {
            const Int& d = f.s.at(i, i);
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return f.v.apply(y);
}

ModularSolver::ModularSolver(const IntMatrix& m, const std::vector<Int>& mod)
    : rows_(m.rows()), cols_(m.cols()) {
    require_internal(int(mod.size()) == m.rows(), "modulus vector shape mismatch");
    // Append one lattice column per nonzero modulus and factor the exact system.
    std::vector<int> extra;
    for (int i = 0; i < m.rows(); ++i)
        if (mod[size_t(i)] != 0) extra.push_back(i);
    IntMatrix lat(m.rows(), int(extra.size()));
    for (size_t k = 0; k < extra.size(); ++k) lat.at(extra[k], int(k)) = mod[size_t(extra[k])];
    f_ = smith_normal_form(m.hcat(lat));
}

std::optional<std::vector<Int>> ModularSolver::solve(const std::vector<Int>& b) const {
    require_internal(int(b.size()) == rows_, "solve shape mismatch");
    std::vector<Int> c = f_.u.apply(b);
    std::vector<Int> y(size_t(f_.v.rows()));
    for (int i = 0; i < rows_; ++i) {
        if (i < f_.rank) {
            const Int& d = f_.s.at(i, i);
            if (c[size_t(i)] % d != 0) return std::nullopt;
            y[size_t(i)] = c[size_t(i)] / d;
        } else if (c[size_t(i)] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x = f_.v.apply(y);
    x.resize(size_t(cols_));
    return x;
}

std::optional<std::vector<Int>> solve_modular(const IntMatrix& m, const std::vector<Int>& b,
                                              const std::vector<Int>& mod) {
    return ModularSolver(m, mod).solve(b);
}

IntMatrix column_span_basis(const IntMatrix& m) {
    // U m V = S, so the lattice im(m) has basis { s_i * (U^-1 e_i) : i < rank }.
    SnfResult f = smith_normal_form(m);
    IntMatrix uinv = inverse_unimodular(f.u);
    IntMatrix basis(m.rows(), f.rank);
    for (int j = 0; j < f.rank; ++j)
        for (int i = 0; i < m.rows(); ++i) basis.at(i, j) = uinv.at(i, j) * f.s.at(j, j);
    return basis;
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw input_error("matrix file: expected header line \"rows cols\"");
    std::vector<Int> entries;
    entries.reserve(size_t(rows) * size_t(cols));
    std::string tok;
    for (long k = 0; k < rows * cols; ++k) {
        if (!(in >> tok)) throw input_error("matrix file: too few entries");
        try {
            entries.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw input_error("matrix file: bad integer '" + tok + "'");
        }
    }
    if (in >> tok) throw input_error("matrix file: trailing data '" + tok + "'");
    return IntMatrix(int(rows), int(cols), std::move(entries));
}

std::string format_matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m.at(i, j).get_str();
        }
        out << "\n";
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << format_matrix_text(m); }

Int nonneg_mod(const Int& a, const Int& m) {
    require_internal(m > 0, "nonneg_mod needs a positive modulus");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace liftobs

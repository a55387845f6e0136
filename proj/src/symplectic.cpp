#include "hyperu/symplectic.hpp"

#include <bit>
#include <deque>
#include <set>

#include "hyperu/error.hpp"
#include "hyperu/gb_group.hpp"

namespace hyperu {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0))
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>> &rows)
{
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == nc, ErrorCode::invalid_argument, "ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    IntMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix &m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            (*this)(r0 + r, c0 + c) = m(r, c);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
    require(a.cols() == b.rows(), ErrorCode::invalid_argument, "matrix shape mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class &x = a(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                p(r, c) += x * b(k, c);
        }
    return p;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::invalid_argument,
            "matrix shape mismatch");
    IntMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i)
        s.data_[i] += b.data_[i];
    return s;
}

IntMatrix operator-(const IntMatrix &a)
{
    IntMatrix n = a;
    for (auto &x : n.data_)
        x = -x;
    return n;
}

bool IntMatrix::operator==(const IntMatrix &o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

IntMatrix standard_j(int g)
{
    IntMatrix j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix &m)
{
    require(m.rows() == m.cols(), ErrorCode::invalid_argument, "symplectic test needs a square matrix");
    require(m.rows() > 0 && m.rows() % 2 == 0, ErrorCode::invalid_argument,
            "symplectic test needs even dimension, got " + std::to_string(m.rows()));
    const IntMatrix j = standard_j(static_cast<int>(m.rows() / 2));
    return m.transpose() * j * m == j;
}

// ---------------------------------------------------------------------------
// SymplecticMatrix

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : g_(static_cast<int>(m.rows() / 2)), m_(std::move(m))
{
    require(is_symplectic(m_), ErrorCode::invalid_argument, "matrix is not symplectic");
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m, Trusted) : g_(static_cast<int>(m.rows() / 2)), m_(std::move(m)) {}

SymplecticMatrix SymplecticMatrix::identity(int g)
{
    check_genus(g);
    return SymplecticMatrix(IntMatrix::identity(2 * g), Trusted{});
}

SymplecticMatrix SymplecticMatrix::j(int g)
{
    check_genus(g);
    return SymplecticMatrix(standard_j(g), Trusted{});
}

SymplecticMatrix SymplecticMatrix::translation(const IntMatrix &s)
{
    require(s.rows() == s.cols() && s.rows() > 0, ErrorCode::invalid_argument, "translation needs square S");
    require(s == s.transpose(), ErrorCode::invalid_argument, "translation needs symmetric S");
    const std::size_t g = s.rows();
    IntMatrix m = IntMatrix::identity(2 * g);
    m.set_block(0, g, s);
    return SymplecticMatrix(std::move(m), Trusted{});
}

SymplecticMatrix SymplecticMatrix::elementary_block(int g, int row, int col)
{
    check_genus(g);
    require(row != col && row >= 0 && col >= 0 && row < g && col < g, ErrorCode::invalid_argument,
            "elementary block needs distinct in-range indices");
    IntMatrix m = IntMatrix::identity(2 * g);
    m(row, col) = 1;
    // (1 + E_rc)^{-T} = 1 - E_cr
    m(g + col, g + row) = -1;
    return SymplecticMatrix(std::move(m), Trusted{});
}

SymplecticMatrix SymplecticMatrix::inverse() const
{
    const IntMatrix j = standard_j(g_);
    return SymplecticMatrix(-(j * m_.transpose() * j), Trusted{});
}

SymplecticMatrix operator*(const SymplecticMatrix &x, const SymplecticMatrix &y)
{
    require_same_genus(x.genus(), y.genus());
    return SymplecticMatrix(x.m_ * y.m_, SymplecticMatrix::Trusted{});
}

namespace {

bool diagonal_even(const IntMatrix &p)
{
    for (std::size_t i = 0; i < p.rows(); ++i)
        if (mpz_odd_p(p(i, i).get_mpz_t()))
            return false;
    return true;
}

} // namespace

bool is_gamma12(const SymplecticMatrix &gamma)
{
    return diagonal_even(gamma.a().transpose() * gamma.c()) && diagonal_even(gamma.b().transpose() * gamma.d());
}

bool is_gamma2(const SymplecticMatrix &gamma)
{
    return reduce_mod2(gamma) == SpF2Matrix::identity(gamma.genus());
}

SymplecticMatrix inverse_transpose(const SymplecticMatrix &gamma)
{
    const int g = gamma.genus();
    IntMatrix m(2 * g, 2 * g);
    m.set_block(0, 0, gamma.d());
    m.set_block(0, g, -gamma.c());
    m.set_block(g, 0, -gamma.b());
    m.set_block(g, g, gamma.a());
    return SymplecticMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// F_2

namespace {

std::uint64_t half_mask(int g) { return (std::uint64_t{1} << g) - 1; }

std::uint64_t swap_halves(int g, std::uint64_t x)
{
    return ((x & half_mask(g)) << g) | (x >> g);
}

int quadratic(int g, std::uint64_t x)
{
    return std::popcount(x & (x >> g) & half_mask(g)) & 1;
}

std::uint64_t column(const std::vector<std::uint64_t> &rows, int c)
{
    std::uint64_t col = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        col |= ((rows[r] >> c) & 1U) << r;
    return col;
}

} // namespace

int f2_form(int g, std::uint64_t x, std::uint64_t y)
{
    return std::popcount(x & swap_halves(g, y)) & 1;
}

bool is_symplectic_f2(int g, const std::vector<std::uint64_t> &rows)
{
    const int n = 2 * g;
    std::vector<std::uint64_t> cols(n);
    for (int c = 0; c < n; ++c)
        cols[c] = column(rows, c);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (f2_form(g, cols[i], cols[k]) != f2_form(g, std::uint64_t{1} << i, std::uint64_t{1} << k))
                return false;
    return true;
}

SpF2Matrix::SpF2Matrix(int g, std::vector<std::uint64_t> rows) : g_(g), rows_(std::move(rows))
{
    check_genus(g);
    require(rows_.size() == static_cast<std::size_t>(2 * g), ErrorCode::invalid_argument,
            "F_2 matrix needs 2g rows");
    for (auto r : rows_)
        require((r >> (2 * g)) == 0, ErrorCode::invalid_argument, "F_2 row exceeds 2g columns");
    require(is_symplectic_f2(g, rows_), ErrorCode::invalid_argument, "matrix is not symplectic over F_2");
}

SpF2Matrix SpF2Matrix::identity(int g)
{
    check_genus(g);
    std::vector<std::uint64_t> rows(2 * g);
    for (int i = 0; i < 2 * g; ++i)
        rows[i] = std::uint64_t{1} << i;
    return SpF2Matrix(g, std::move(rows), Trusted{});
}

SpF2Matrix SpF2Matrix::transvection(int g, std::uint64_t v)
{
    check_genus(g);
    require(v != 0 && (v >> (2 * g)) == 0, ErrorCode::invalid_argument, "transvection needs a nonzero vector");
    const std::uint64_t w = swap_halves(g, v);
    std::vector<std::uint64_t> rows(2 * g);
    for (int r = 0; r < 2 * g; ++r)
        rows[r] = (std::uint64_t{1} << r) ^ (((v >> r) & 1U) ? w : 0);
    return SpF2Matrix(g, std::move(rows), Trusted{});
}

std::uint64_t SpF2Matrix::apply(std::uint64_t x) const
{
    std::uint64_t y = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        y |= std::uint64_t(std::popcount(rows_[r] & x) & 1) << r;
    return y;
}

SpF2Matrix SpF2Matrix::transpose() const
{
    std::vector<std::uint64_t> t(rows_.size());
    for (int c = 0; c < 2 * g_; ++c)
        t[c] = column(rows_, c);
    return SpF2Matrix(g_, std::move(t), Trusted{});
}

SpF2Matrix SpF2Matrix::inverse_transpose() const
{
    std::vector<std::uint64_t> out(rows_.size());
    for (int r = 0; r < 2 * g_; ++r)
        out[r] = swap_halves(g_, rows_[(r + g_) % (2 * g_)]);
    return SpF2Matrix(g_, std::move(out), Trusted{});
}

SpF2Matrix SpF2Matrix::inverse() const { return inverse_transpose().transpose(); }

SpF2Matrix operator*(const SpF2Matrix &x, const SpF2Matrix &y)
{
    require_same_genus(x.g_, y.g_);
    std::vector<std::uint64_t> out(x.rows_.size(), 0);
    for (std::size_t r = 0; r < x.rows_.size(); ++r)
        for (std::size_t k = 0; k < y.rows_.size(); ++k)
            if ((x.rows_[r] >> k) & 1U)
                out[r] ^= y.rows_[k];
    return SpF2Matrix(x.g_, std::move(out), SpF2Matrix::Trusted{});
}

SpF2Matrix reduce_mod2(const SymplecticMatrix &gamma)
{
    const int g = gamma.genus();
    const IntMatrix &m = gamma.matrix();
    std::vector<std::uint64_t> rows(2 * g, 0);
    for (int r = 0; r < 2 * g; ++r)
        for (int c = 0; c < 2 * g; ++c)
            if (mpz_odd_p(m(r, c).get_mpz_t()))
                rows[r] |= std::uint64_t{1} << c;
    return SpF2Matrix(g, std::move(rows));
}

bool is_gamma12_mod2(const SpF2Matrix &m)
{
    // diag(A^T C)_j and diag(B^T D)_j are both Q(column j).
    for (int c = 0; c < 2 * m.genus(); ++c)
        if (quadratic(m.genus(), column(m.rows(), c)))
            return false;
    return true;
}

bool preserves_parity(const SpF2Matrix &m)
{
    const int g = m.genus();
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    for (std::uint64_t x = 0; x < n; ++x)
        if (quadratic(g, m.apply(x)) != quadratic(g, x))
            return false;
    return true;
}

Characteristic act_on_characteristic(const SpF2Matrix &m, const Characteristic &xi)
{
    require_same_genus(m.genus(), xi.genus());
    return Characteristic::from_coords(xi.genus(), m.inverse_transpose().apply(xi.coords()));
}

Characteristic act_on_characteristic(const SymplecticMatrix &gamma, const Characteristic &xi)
{
    return act_on_characteristic(reduce_mod2(gamma), xi);
}

// ---------------------------------------------------------------------------
// Orders

namespace {

mpz_class pow2(unsigned long e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

} // namespace

OrderFormulas order_formulas(int g)
{
    require(g >= 1, ErrorCode::invalid_argument, "genus must be positive");
    const auto ug = static_cast<unsigned long>(g);
    OrderFormulas f;
    f.sp_f2 = pow2(ug * ug);
    for (unsigned long i = 1; i <= ug; ++i)
        f.sp_f2 *= pow2(2 * i) - 1;
    f.o_plus = 2 * pow2(ug * (ug - 1)) * (pow2(ug) - 1);
    for (unsigned long i = 1; i + 1 <= ug; ++i)
        f.o_plus *= pow2(2 * i) - 1;
    require(mpz_divisible_p(f.sp_f2.get_mpz_t(), f.o_plus.get_mpz_t()) != 0, ErrorCode::internal,
            "group orders do not divide");
    f.quotient = f.sp_f2 / f.o_plus;
    return f;
}

std::vector<SpF2Matrix> enumerate_sp_f2(int g)
{
    check_genus(g, kMaxExhaustiveSpGenus);
    const int n = 2 * g;
    const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    std::vector<SpF2Matrix> out;
    std::vector<std::uint64_t> rows(n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int r = 0; r < n; ++r)
            rows[r] = (bits >> (r * n)) & row_mask;
        if (is_symplectic_f2(g, rows))
            out.emplace_back(g, rows);
    }
    return out;
}

ParityGroupCount enumerate_parity_group(int g)
{
    ParityGroupCount count{0, 0};
    for (const auto &m : enumerate_sp_f2(g)) {
        ++count.group_order;
        if (preserves_parity(m))
            ++count.parity_preserving_order;
    }
    return count;
}

std::vector<SpF2Matrix> transvection_generators(int g)
{
    check_genus(g);
    require(g <= kMaxEnumerationGenus, ErrorCode::too_large, "too many transvections");
    std::vector<SpF2Matrix> out;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    for (std::uint64_t v = 1; v < n; ++v)
        out.push_back(SpF2Matrix::transvection(g, v));
    return out;
}

std::vector<SpF2Matrix> group_closure(const std::vector<SpF2Matrix> &gens, std::size_t limit)
{
    require(!gens.empty(), ErrorCode::invalid_argument, "closure needs at least one generator");
    const SpF2Matrix id = SpF2Matrix::identity(gens.front().genus());
    std::set<SpF2Matrix> seen{id};
    std::deque<SpF2Matrix> frontier{id};
    while (!frontier.empty()) {
        SpF2Matrix cur = frontier.front();
        frontier.pop_front();
        for (const auto &s : gens) {
            SpF2Matrix next = cur * s;
            if (seen.insert(next).second) {
                require(seen.size() <= limit, ErrorCode::too_large, "group closure exceeded its limit");
                frontier.push_back(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Generators and random words

std::vector<SymplecticMatrix> generator_family(int g)
{
    check_genus(g);
    std::vector<SymplecticMatrix> gens{SymplecticMatrix::j(g)};
    auto add_translation = [&](std::vector<std::pair<int, int>> entries) {
        IntMatrix s(g, g);
        for (auto [r, c] : entries)
            s(r, c) = 1;
        gens.push_back(SymplecticMatrix::translation(s));
    };
    for (int i = 0; i < g; ++i)
        add_translation({{i, i}});
    for (int i = 0; i < g; ++i)
        for (int k = i + 1; k < g; ++k) {
            add_translation({{i, k}, {k, i}});
            add_translation({{i, i}, {k, k}});
        }
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c)
            if (r != c)
                gens.push_back(SymplecticMatrix::elementary_block(g, r, c));
    return gens;
}

SymplecticMatrix random_word(int g, Rng &rng, int length)
{
    const auto gens = generator_family(g);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    SymplecticMatrix w = SymplecticMatrix::identity(g);
    for (int i = 0; i < length; ++i)
        w = w * gens[pick(rng)];
    return w;
}

SymplecticMatrix random_gamma12_word(int g, Rng &rng, int length)
{
    for (int attempt = 0; attempt < 100000; ++attempt) {
        SymplecticMatrix w = random_word(g, rng, length);
        if (is_gamma12(w))
            return w;
    }
    throw Error(ErrorCode::internal, "no Gamma_{1,2} word found");
}

std::map<SpF2Matrix, SymplecticMatrix> integer_lifts(int g)
{
    check_genus(g, kMaxExhaustiveSpGenus);
    const auto gens = generator_family(g);
    std::vector<SpF2Matrix> gens_mod2;
    for (const auto &s : gens)
        gens_mod2.push_back(reduce_mod2(s));

    std::map<SpF2Matrix, SymplecticMatrix> lifts;
    lifts.emplace(SpF2Matrix::identity(g), SymplecticMatrix::identity(g));
    std::deque<SpF2Matrix> frontier{SpF2Matrix::identity(g)};
    while (!frontier.empty()) {
        const SpF2Matrix cur = frontier.front();
        frontier.pop_front();
        const SymplecticMatrix lift = lifts.at(cur);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            SpF2Matrix next = cur * gens_mod2[i];
            if (!lifts.contains(next)) {
                lifts.emplace(next, lift * gens[i]);
                frontier.push_back(std::move(next));
            }
        }
    }
    return lifts;
}

} // namespace hyperu

#pragma once

// Integer symplectic matrices, their mod-2 images, the subgroups Gamma_{1,2}
// and Gamma(2), and the finite group orders over F_2.
//
// Block layout throughout is gamma = (A B; C D) with J = (0 1; -1 0).

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "hyperu/characteristics.hpp"

namespace hyperu {

/// Dense exact-integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix &m);

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator-(const IntMatrix &a);
    bool operator==(const IntMatrix &o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// J = (0 1; -1 0) of size 2g.
IntMatrix standard_j(int g);

/// M^T J M == J exactly. Throws on non-square or odd-sized input.
bool is_symplectic(const IntMatrix &m);

/// An element of Sp_{2g}(Z); the constructor rejects anything else.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(IntMatrix m);

    static SymplecticMatrix identity(int g);
    static SymplecticMatrix j(int g);
    /// (1 S; 0 1) for symmetric S.
    static SymplecticMatrix translation(const IntMatrix &s);
    /// (U 0; 0 U^{-T}) with U = 1 + E_{row,col}, row != col.
    static SymplecticMatrix elementary_block(int g, int row, int col);

    int genus() const { return g_; }
    const IntMatrix &matrix() const { return m_; }
    IntMatrix a() const { return m_.block(0, 0, g_, g_); }
    IntMatrix b() const { return m_.block(0, g_, g_, g_); }
    IntMatrix c() const { return m_.block(g_, 0, g_, g_); }
    IntMatrix d() const { return m_.block(g_, g_, g_, g_); }

    /// -J gamma^T J.
    SymplecticMatrix inverse() const;

    friend SymplecticMatrix operator*(const SymplecticMatrix &x, const SymplecticMatrix &y);
    bool operator==(const SymplecticMatrix &o) const { return m_ == o.m_; }

private:
    struct Trusted {};
    SymplecticMatrix(IntMatrix m, Trusted);

    int g_;
    IntMatrix m_;
};

/// diag(A^T C) and diag(B^T D) are all even.
bool is_gamma12(const SymplecticMatrix &gamma);
/// gamma == 1 (mod 2).
bool is_gamma2(const SymplecticMatrix &gamma);
/// (D -C; -B A).
SymplecticMatrix inverse_transpose(const SymplecticMatrix &gamma);

/// A 2g x 2g matrix over F_2, symplectic for the form (0 1; 1 0). Row r is a
/// bit mask over columns in the coordinate layout of Characteristic::coords().
class SpF2Matrix {
public:
    SpF2Matrix(int g, std::vector<std::uint64_t> rows);
    static SpF2Matrix identity(int g);
    /// Symplectic transvection x -> x + <x,v> v.
    static SpF2Matrix transvection(int g, std::uint64_t v);

    int genus() const { return g_; }
    const std::vector<std::uint64_t> &rows() const { return rows_; }
    bool entry(int r, int c) const { return (rows_[r] >> c) & 1U; }

    std::uint64_t apply(std::uint64_t x) const;
    SpF2Matrix transpose() const;
    /// J' M^T J'.
    SpF2Matrix inverse() const;
    /// J' M J', the F_2 image of (D -C; -B A).
    SpF2Matrix inverse_transpose() const;

    friend SpF2Matrix operator*(const SpF2Matrix &x, const SpF2Matrix &y);
    bool operator==(const SpF2Matrix &) const = default;
    bool operator<(const SpF2Matrix &o) const { return rows_ < o.rows_; }

private:
    struct Trusted {};
    SpF2Matrix(int g, std::vector<std::uint64_t> rows, Trusted) : g_(g), rows_(std::move(rows)) {}

    int g_;
    std::vector<std::uint64_t> rows_;
};

/// The bilinear form x^T (0 1; 1 0) y over F_2 on coordinate vectors.
int f2_form(int g, std::uint64_t x, std::uint64_t y);
bool is_symplectic_f2(int g, const std::vector<std::uint64_t> &rows);

SpF2Matrix reduce_mod2(const SymplecticMatrix &gamma);

/// Diagonal-evenness test evaluated on any mod-2 image.
bool is_gamma12_mod2(const SpF2Matrix &m);
/// Q(Mx) == Q(x) for every x, with Q the parity form.
bool preserves_parity(const SpF2Matrix &m);

/// The action on characteristics: gamma^{-T} applied to (top || bottom) mod 2.
Characteristic act_on_characteristic(const SymplecticMatrix &gamma, const Characteristic &xi);
Characteristic act_on_characteristic(const SpF2Matrix &m, const Characteristic &xi);

struct OrderFormulas {
    mpz_class sp_f2;
    mpz_class o_plus;
    mpz_class quotient;
};

OrderFormulas order_formulas(int g);

struct ParityGroupCount {
    mpz_class group_order;
    mpz_class parity_preserving_order;
};

inline constexpr int kMaxExhaustiveSpGenus = 2;

/// Exhaustive scan of all 2g x 2g matrices over F_2; g <= 2.
ParityGroupCount enumerate_parity_group(int g);
/// Every element of Sp_{2g}(F_2) from the exhaustive scan; g <= 2.
std::vector<SpF2Matrix> enumerate_sp_f2(int g);

/// One transvection per nonzero v, ordered by v.
std::vector<SpF2Matrix> transvection_generators(int g);

/// Group generated by `gens`; throws once more than `limit` elements appear.
std::vector<SpF2Matrix> group_closure(const std::vector<SpF2Matrix> &gens, std::size_t limit = 2'000'000);

/// J, T_s (s symmetric 0/1 with one or two nonzero entries) and the
/// elementary block matrices.
std::vector<SymplecticMatrix> generator_family(int g);

using Rng = std::mt19937_64;

inline constexpr int kDefaultWordLength = 20;

/// Product of `length` generators drawn uniformly from generator_family(g).
SymplecticMatrix random_word(int g, Rng &rng, int length = kDefaultWordLength);
/// Rejection-sampled random_word that lies in Gamma_{1,2}.
SymplecticMatrix random_gamma12_word(int g, Rng &rng, int length = kDefaultWordLength);

/// A fixed integer lift of every element of Sp_{2g}(F_2): the first word over
/// generator_family(g) reaching it in breadth-first order. g <= 2.
std::map<SpF2Matrix, SymplecticMatrix> integer_lifts(int g);

} // namespace hyperu

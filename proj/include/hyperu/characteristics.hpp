#pragma once

// Half-integer theta characteristics xi in (1/2 Z)^{2g} / Z^{2g}, stored as the
// mod-2 numerators of 2*xi.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperu {

class Characteristic {
public:
    /// Bit i of `top` / `bottom` is the numerator of coordinate i+1 of xi_1 / xi_2.
    Characteristic(int g, std::uint32_t top, std::uint32_t bottom);
    static Characteristic zero(int g) { return Characteristic(g, 0, 0); }

    /// Lexicographic code: the bit string a1..ag b1..bg read as a binary
    /// integer with a1 most significant.
    static Characteristic from_code(int g, std::uint64_t code);
    std::uint64_t code() const;

    /// Coordinate vector x = (top || bottom) with x_k at bit k, the layout
    /// used by 2g x 2g matrices over F_2.
    static Characteristic from_coords(int g, std::uint64_t coords);
    std::uint64_t coords() const;

    int genus() const { return g_; }
    std::uint32_t top() const { return top_; }
    std::uint32_t bottom() const { return bottom_; }
    bool top_bit(int i) const { return (top_ >> i) & 1U; }
    bool bottom_bit(int i) const { return (bottom_ >> i) & 1U; }
    bool is_zero() const { return top_ == 0 && bottom_ == 0; }

    bool operator==(const Characteristic &) const = default;
    bool operator<(const Characteristic &o) const { return code() < o.code(); }

private:
    int g_;
    std::uint32_t top_;
    std::uint32_t bottom_;
};

/// e_*(xi) = (-1)^{top . bottom}; returns +1 or -1.
int parity(const Characteristic &xi);
inline bool is_odd(const Characteristic &xi) { return parity(xi) < 0; }

Characteristic add(const Characteristic &a, const Characteristic &b);
inline Characteristic operator+(const Characteristic &a, const Characteristic &b) { return add(a, b); }

/// The symplectic form 4 xi^T J zeta mod 2.
int pairing(const Characteristic &a, const Characteristic &b);

/// e(a) e(b) e(c) e(a+b+c) == -1. Rejects repeated arguments.
bool is_azygetic_triple(const Characteristic &a, const Characteristic &b, const Characteristic &c);

struct ParitySplit {
    std::vector<Characteristic> evens;
    std::vector<Characteristic> odds;
};

/// All 2^{2g} characteristics in code order.
std::vector<Characteristic> enumerate_characteristics(int g);
ParitySplit enumerate_by_parity(int g);

/// "[a1 ... ag | b1 ... bg]".
std::string to_string(const Characteristic &xi);
Characteristic parse_characteristic(std::string_view text);

} // namespace hyperu

#include "hyperu/characteristics.hpp"

#include <bit>
#include <cctype>

#include "hyperu/error.hpp"
#include "hyperu/gb_group.hpp"

namespace hyperu {

namespace {

std::uint32_t low_bits(int g) { return g >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g) - 1; }

// Reverses the g low bits: bit i <-> bit g-1-i.
std::uint32_t reverse_bits(std::uint32_t v, int g)
{
    std::uint32_t out = 0;
    for (int i = 0; i < g; ++i)
        if ((v >> i) & 1U)
            out |= std::uint32_t{1} << (g - 1 - i);
    return out;
}

} // namespace

Characteristic::Characteristic(int g, std::uint32_t top, std::uint32_t bottom)
    : g_(g), top_(top), bottom_(bottom)
{
    check_genus(g);
    require((top & ~low_bits(g)) == 0 && (bottom & ~low_bits(g)) == 0,
            ErrorCode::invalid_argument, "characteristic bits exceed genus");
}

Characteristic Characteristic::from_code(int g, std::uint64_t code)
{
    check_genus(g);
    auto hi = static_cast<std::uint32_t>(code >> g);
    auto lo = static_cast<std::uint32_t>(code & low_bits(g));
    require((code >> (2 * g)) == 0, ErrorCode::invalid_argument, "code exceeds 2g bits");
    return Characteristic(g, reverse_bits(hi, g), reverse_bits(lo, g));
}

std::uint64_t Characteristic::code() const
{
    return (std::uint64_t{reverse_bits(top_, g_)} << g_) | reverse_bits(bottom_, g_);
}

Characteristic Characteristic::from_coords(int g, std::uint64_t coords)
{
    check_genus(g);
    require((coords >> (2 * g)) == 0, ErrorCode::invalid_argument, "coordinate vector exceeds 2g bits");
    return Characteristic(g, static_cast<std::uint32_t>(coords & low_bits(g)),
                          static_cast<std::uint32_t>(coords >> g));
}

std::uint64_t Characteristic::coords() const
{
    return std::uint64_t{top_} | (std::uint64_t{bottom_} << g_);
}

int parity(const Characteristic &xi)
{
    return (std::popcount(xi.top() & xi.bottom()) & 1) ? -1 : 1;
}

Characteristic add(const Characteristic &a, const Characteristic &b)
{
    require_same_genus(a.genus(), b.genus());
    return Characteristic(a.genus(), a.top() ^ b.top(), a.bottom() ^ b.bottom());
}

int pairing(const Characteristic &a, const Characteristic &b)
{
    require_same_genus(a.genus(), b.genus());
    return std::popcount((a.top() & b.bottom()) ^ (a.bottom() & b.top())) & 1;
}

bool is_azygetic_triple(const Characteristic &a, const Characteristic &b, const Characteristic &c)
{
    require_same_genus(a.genus(), b.genus());
    require_same_genus(a.genus(), c.genus());
    require(!(a == b) && !(a == c) && !(b == c), ErrorCode::invalid_argument,
            "azygetic triple needs three distinct characteristics");
    return parity(a) * parity(b) * parity(c) * parity(a + b + c) == -1;
}

std::vector<Characteristic> enumerate_characteristics(int g)
{
    check_genus(g, kMaxEnumerationGenus);
    std::vector<Characteristic> out;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    out.reserve(n);
    for (std::uint64_t c = 0; c < n; ++c)
        out.push_back(Characteristic::from_code(g, c));
    return out;
}

ParitySplit enumerate_by_parity(int g)
{
    ParitySplit split;
    for (const auto &xi : enumerate_characteristics(g))
        (is_odd(xi) ? split.odds : split.evens).push_back(xi);
    return split;
}

std::string to_string(const Characteristic &xi)
{
    std::string s = "[";
    for (int i = 0; i < xi.genus(); ++i)
        s += (i ? " " : "") + std::to_string(int(xi.top_bit(i)));
    s += " |";
    for (int i = 0; i < xi.genus(); ++i)
        s += " " + std::to_string(int(xi.bottom_bit(i)));
    return s + "]";
}

Characteristic parse_characteristic(std::string_view text)
{
    std::vector<int> top, bottom;
    bool seen_bar = false, open = false, closed = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
            continue;
        if (ch == '[' && !open) {
            open = true;
        } else if (ch == ']' && open && !closed) {
            closed = true;
        } else if (ch == '|' && open && !closed && !seen_bar) {
            seen_bar = true;
        } else if ((ch == '0' || ch == '1') && open && !closed) {
            (seen_bar ? bottom : top).push_back(ch - '0');
        } else {
            throw Error(ErrorCode::invalid_argument, "malformed characteristic: " + std::string(text));
        }
    }
    require(open && closed && seen_bar && !top.empty() && top.size() == bottom.size(),
            ErrorCode::invalid_argument, "malformed characteristic: " + std::string(text));
    const int g = static_cast<int>(top.size());
    std::uint32_t t = 0, b = 0;
    for (int i = 0; i < g; ++i) {
        t |= std::uint32_t(top[i]) << i;
        b |= std::uint32_t(bottom[i]) << i;
    }
    return Characteristic(g, t, b);
}

} // namespace hyperu

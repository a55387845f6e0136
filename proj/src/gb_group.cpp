#include "hyperu/gb_group.hpp"

#include <bit>

#include "hyperu/error.hpp"

namespace hyperu {

int Label::bit(int g) const
{
    if (is_infinity())
        return 2 * g + 1;
    require(value_ >= 1 && value_ <= 2 * g + 1, ErrorCode::invalid_argument,
            "label " + std::to_string(value_) + " out of range for genus " + std::to_string(g));
    return value_ - 1;
}

std::string to_string(Label label)
{
    return label.is_infinity() ? std::string("inf") : std::to_string(label.value());
}

void check_genus(int g, int max_genus)
{
    require(g >= 1, ErrorCode::invalid_argument, "genus must be positive, got " + std::to_string(g));
    require(g <= max_genus, ErrorCode::too_large,
            "genus " + std::to_string(g) + " exceeds the limit " + std::to_string(max_genus));
}

std::uint64_t full_mask(int g)
{
    return (std::uint64_t{1} << (2 * g + 2)) - 1;
}

std::uint64_t infinity_bit(int g)
{
    return std::uint64_t{1} << (2 * g + 1);
}

std::uint64_t label_mask(int g, std::span<const Label> labels)
{
    check_genus(g);
    std::uint64_t mask = 0;
    for (Label l : labels)
        mask |= std::uint64_t{1} << l.bit(g);
    return mask;
}

std::vector<Label> labels_of(int g, std::uint64_t mask)
{
    std::vector<Label> out;
    for (int i = 0; i < 2 * g + 1; ++i)
        if ((mask >> i) & 1U)
            out.push_back(Label::finite(i + 1));
    if (mask & infinity_bit(g))
        out.push_back(Label::infinity());
    return out;
}

BranchSet::BranchSet(int g, std::uint64_t mask) : g_(g), mask_(mask)
{
    check_genus(g);
    require((mask & ~full_mask(g)) == 0, ErrorCode::invalid_argument, "mask has bits outside B");
    require(std::popcount(mask) % 2 == 0, ErrorCode::invalid_argument,
            "only even subsets of B belong to G_B");
}

BranchSet BranchSet::from_labels(int g, std::span<const Label> labels)
{
    std::uint64_t mask = label_mask(g, labels);
    require(static_cast<std::size_t>(std::popcount(mask)) == labels.size(),
            ErrorCode::invalid_argument, "repeated label");
    return BranchSet(g, mask);
}

int BranchSet::size() const { return std::popcount(mask_); }

bool BranchSet::contains(Label label) const { return (mask_ >> label.bit(g_)) & 1U; }

std::vector<Label> BranchSet::labels() const { return labels_of(g_, mask_); }

BranchSet BranchSet::complement() const { return BranchSet(g_, mask_ ^ full_mask(g_)); }

namespace {

std::string braced(const std::vector<Label> &labels)
{
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            s += ",";
        s += to_string(labels[i]);
    }
    return s + "}";
}

} // namespace

std::string to_string(const BranchSet &set) { return braced(set.labels()); }

GBClass::GBClass(const BranchSet &r)
    : rep_((r.mask() & infinity_bit(r.genus())) ? r.complement() : r)
{
}

std::string to_string(const GBClass &cls) { return to_string(cls.rep()); }

GBClass canonical_class(int g, std::span<const Label> labels)
{
    return GBClass(BranchSet::from_labels(g, labels));
}

GBClass identity_class(int g) { return GBClass(BranchSet(g, 0)); }

GBClass symm_diff(const GBClass &a, const GBClass &b)
{
    require_same_genus(a.genus(), b.genus());
    return GBClass(BranchSet(a.genus(), a.rep().mask() ^ b.rep().mask()));
}

std::pair<int, int> class_size_pair(const GBClass &a)
{
    int k = a.rep().size();
    return {k, 2 * a.genus() + 2 - k};
}

std::vector<GBClass> enumerate_gb(int g)
{
    check_genus(g, kMaxEnumerationGenus);
    std::vector<GBClass> out;
    out.reserve(std::size_t{1} << (2 * g));
    const std::uint64_t finite_limit = std::uint64_t{1} << (2 * g + 1);
    for (std::uint64_t m = 0; m < finite_limit; ++m)
        if (std::popcount(m) % 2 == 0)
            out.emplace_back(BranchSet(g, m));
    return out;
}

} // namespace hyperu

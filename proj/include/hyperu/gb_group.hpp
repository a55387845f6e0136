#pragma once

// The group G_B of even subsets of the branch labels B = {1, ..., 2g+1, inf}
// taken modulo complement, under symmetric difference.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperu {

/// Largest genus whose label set fits in a 64-bit mask.
inline constexpr int kMaxMaskGenus = 31;
/// Largest genus accepted by the exhaustive enumerators.
inline constexpr int kMaxEnumerationGenus = 12;

/// A branch-point label: a finite index 1..2g+1 or the point at infinity.
class Label {
public:
    static constexpr Label infinity() { return Label(0); }
    static constexpr Label finite(int index) { return Label(index); }

    constexpr bool is_infinity() const { return value_ == 0; }
    /// Finite index (1-based); 0 for infinity.
    constexpr int value() const { return value_; }

    /// Bit position in a label mask of genus g; infinity sits at 2g+1.
    int bit(int g) const;

    auto operator<=>(const Label &) const = default;

private:
    constexpr explicit Label(int v) : value_(v) {}
    int value_;
};

std::string to_string(Label label);

void check_genus(int g, int max_genus = kMaxMaskGenus);

/// Mask with one bit per label, finite labels first and infinity last.
std::uint64_t label_mask(int g, std::span<const Label> labels);
std::vector<Label> labels_of(int g, std::uint64_t mask);
/// Mask of the full label set B.
std::uint64_t full_mask(int g);
std::uint64_t infinity_bit(int g);

/// An even subset of B.
class BranchSet {
public:
    BranchSet(int g, std::uint64_t mask);
    static BranchSet from_labels(int g, std::span<const Label> labels);

    int genus() const { return g_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool contains(Label label) const;
    std::vector<Label> labels() const;
    BranchSet complement() const;

    bool operator==(const BranchSet &) const = default;

private:
    int g_;
    std::uint64_t mask_;
};

std::string to_string(const BranchSet &set);

/// An element of G_B. The stored representative never contains infinity; of
/// the pair {B, empty} it is the empty set. Membership of infinity is a
/// property of representatives, so the class exposes none.
class GBClass {
public:
    explicit GBClass(const BranchSet &any_representative);

    int genus() const { return rep_.genus(); }
    const BranchSet &rep() const { return rep_; }
    bool is_identity() const { return rep_.mask() == 0; }

    bool operator==(const GBClass &o) const { return rep_ == o.rep_; }
    bool operator<(const GBClass &o) const { return rep_.mask() < o.rep_.mask(); }

private:
    BranchSet rep_;
};

std::string to_string(const GBClass &cls);

/// Class of an even label set; throws on odd cardinality or out-of-range labels.
GBClass canonical_class(int g, std::span<const Label> labels);
GBClass identity_class(int g);
GBClass symm_diff(const GBClass &a, const GBClass &b);
/// (|rep|, 2g+2-|rep|): the cardinalities of the two representatives.
std::pair<int, int> class_size_pair(const GBClass &a);
/// All 2^{2g} classes, ordered by representative mask.
std::vector<GBClass> enumerate_gb(int g);

} // namespace hyperu

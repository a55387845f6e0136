#pragma once

// eta-maps (coordinates of the two-torsion classes {i, inf}), U-sets, and the
// orbit computation that exhibits every admissible U-set at small genus.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperu/characteristics.hpp"
#include "hyperu/gb_group.hpp"
#include "hyperu/symplectic.hpp"

namespace hyperu {

/// images[i] is the characteristic of the class {i+1, inf}. Validity is not
/// enforced on construction; see validate_eta.
class EtaMap {
public:
    EtaMap(int g, std::vector<Characteristic> images);

    int genus() const { return g_; }
    const std::vector<Characteristic> &images() const { return images_; }
    const Characteristic &image(int label) const { return images_.at(label - 1); }

    bool operator==(const EtaMap &) const = default;

private:
    int g_;
    std::vector<Characteristic> images_;
};

struct EtaReport {
    bool zero_sum = false;
    bool spans = false;
    bool azygetic = false;
    bool valid() const { return zero_sum && spans && azygetic; }
};

EtaReport validate_eta(const EtaMap &eta);

inline constexpr int kMaxBaseEtaGenus = 5;

/// Lexicographically smallest valid eta-map (code order), found by backtracking.
EtaMap base_eta(int g);

/// Sum of images over the finite labels of `representative`.
Characteristic eta_of_set(const EtaMap &eta, const BranchSet &representative);
Characteristic eta_of_class(const EtaMap &eta, const GBClass &cls);

/// A subset of B containing inf with |U| = g+1 (mod 4); both are checked on
/// construction.
class USet {
public:
    USet(int g, std::uint64_t mask);
    static USet from_labels(int g, const std::vector<Label> &labels);

    int genus() const { return g_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool contains(Label label) const { return (mask_ >> label.bit(g_)) & 1U; }
    /// Sorted, inf last.
    std::vector<Label> members() const { return labels_of(g_, mask_); }

    bool operator==(const USet &) const = default;
    bool operator<(const USet &o) const { return g_ != o.g_ ? g_ < o.g_ : mask_ < o.mask_; }

private:
    int g_;
    std::uint64_t mask_;
};

std::string to_string(const USet &u);

/// {i : e_*(eta({i, inf})) = -1} together with inf. Rejects an invalid eta.
USet u_set(const EtaMap &eta);

/// The class T with U = T (g odd) or U = T o {inf} (g even).
GBClass t_set(const USet &u);
/// Forward direction: apply the genus-dependent rule to T and keep the member
/// of the class that contains inf.
USet u_from_t(const GBClass &t);

/// #(S o U) for one representative S.
int symmetric_difference_size(const BranchSet &s, const USet &u);

EtaMap transform_eta(const SymplecticMatrix &gamma, const EtaMap &eta);
EtaMap transform_eta(const SpF2Matrix &m, const EtaMap &eta);

struct UOrbit {
    /// Distinct U-sets in discovery order.
    std::vector<USet> sets;
    /// witnesses[k] maps base_eta(g) to an eta-map with U-set sets[k].
    std::vector<SpF2Matrix> witnesses;
};

inline constexpr int kMaxOrbitGenus = 4;

/// Closure of u_set(base_eta(g)) under the transvection generators; g <= 4.
UOrbit u_orbit(int g);

/// Every subset of B containing inf with cardinality g+1 (mod 4), ordered by mask.
std::vector<USet> enumerate_admissible_u(int g);

} // namespace hyperu

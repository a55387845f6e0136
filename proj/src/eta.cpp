#include "hyperu/eta.hpp"

#include <bit>
#include <deque>
#include <map>

#include "hyperu/error.hpp"

namespace hyperu {

EtaMap::EtaMap(int g, std::vector<Characteristic> images) : g_(g), images_(std::move(images))
{
    check_genus(g);
    require(images_.size() == static_cast<std::size_t>(2 * g + 1), ErrorCode::invalid_argument,
            "eta-map needs 2g+1 images");
    for (const auto &xi : images_)
        require_same_genus(g, xi.genus());
}

namespace {

int rank_f2(std::vector<std::uint64_t> vs)
{
    int rank = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] == 0)
            continue;
        ++rank;
        const std::uint64_t pivot = vs[i] & -vs[i];
        for (std::size_t k = i + 1; k < vs.size(); ++k)
            if (vs[k] & pivot)
                vs[k] ^= vs[i];
    }
    return rank;
}

} // namespace

EtaReport validate_eta(const EtaMap &eta)
{
    const int g = eta.genus();
    const auto &im = eta.images();
    EtaReport report;

    Characteristic sum = Characteristic::zero(g);
    std::vector<std::uint64_t> coords;
    for (const auto &xi : im) {
        sum = sum + xi;
        coords.push_back(xi.coords());
    }
    report.zero_sum = sum.is_zero();
    report.spans = rank_f2(coords) == 2 * g;

    report.azygetic = true;
    for (std::size_t a = 0; a < im.size() && report.azygetic; ++a)
        for (std::size_t b = a + 1; b < im.size() && report.azygetic; ++b)
            for (std::size_t c = b + 1; c < im.size() && report.azygetic; ++c) {
                if (im[a] == im[b] || im[a] == im[c] || im[b] == im[c])
                    report.azygetic = false;
                else
                    report.azygetic = is_azygetic_triple(im[a], im[b], im[c]);
            }
    return report;
}

namespace {

// Backtracking over codes; parity and pairing are computed on codes directly
// since the code is a coordinate permutation applied equally to both halves.
//
// For distinct a, b, c the azygetic condition reads
// pairing(a,b) + pairing(a,c) + pairing(b,c) = 1, so the pairs with pairing 0
// form a complete bipartite graph. Zero-sum makes every image pair to 1 with an
// even number of the others, which leaves only the trivial bipartition: all
// pairings in a valid eta-map are 1. Candidates are filtered on that, and the
// forced last image is still checked against the full triple condition.
class EtaSearch {
public:
    explicit EtaSearch(int g) : g_(g), n_(std::uint64_t{1} << (2 * g)) {}

    std::vector<std::uint64_t> run()
    {
        std::vector<std::uint64_t> all;
        for (std::uint64_t c = 1; c < n_; ++c)
            all.push_back(c);
        if (!extend(all))
            throw Error(ErrorCode::internal, "no valid eta-map found for genus " + std::to_string(g_));
        return chosen_;
    }

private:
    std::uint64_t low() const { return (std::uint64_t{1} << g_) - 1; }

    int odd(std::uint64_t code) const { return std::popcount((code >> g_) & code & low()) & 1; }

    int pair(std::uint64_t a, std::uint64_t b) const
    {
        return std::popcount(((a >> g_) & b & low()) ^ (a & (b >> g_) & low())) & 1;
    }

    bool azygetic(std::uint64_t a, std::uint64_t b, std::uint64_t c) const
    {
        return (odd(a) ^ odd(b) ^ odd(c) ^ odd(a ^ b ^ c)) == 1;
    }

    bool fits(std::uint64_t c) const
    {
        for (std::size_t i = 0; i < chosen_.size(); ++i)
            for (std::size_t k = i + 1; k < chosen_.size(); ++k)
                if (!azygetic(chosen_[i], chosen_[k], c))
                    return false;
        return true;
    }

    bool independent_with(std::uint64_t c) const
    {
        std::vector<std::uint64_t> vs = chosen_;
        vs.push_back(c);
        int rank = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] == 0)
                continue;
            ++rank;
            const std::uint64_t pivot = vs[i] & -vs[i];
            for (std::size_t k = i + 1; k < vs.size(); ++k)
                if (vs[k] & pivot)
                    vs[k] ^= vs[i];
        }
        return rank == static_cast<int>(vs.size());
    }

    // `candidates` are ascending, above chosen_.back(), and pair to 1 with
    // every chosen code. The last image is forced by the zero-sum condition.
    bool extend(const std::vector<std::uint64_t> &candidates)
    {
        const std::size_t need = 2 * static_cast<std::size_t>(g_);
        if (chosen_.size() == need) {
            std::uint64_t last = 0;
            for (auto c : chosen_)
                last ^= c;
            if (last <= chosen_.back() || !fits(last))
                return false;
            chosen_.push_back(last);
            return true;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates.size() - i < need - chosen_.size())
                return false;
            const std::uint64_t c = candidates[i];
            if (!independent_with(c) || !fits(c))
                continue;
            std::vector<std::uint64_t> next;
            for (std::size_t k = i + 1; k < candidates.size(); ++k)
                if (pair(c, candidates[k]) == 1)
                    next.push_back(candidates[k]);
            chosen_.push_back(c);
            if (extend(next))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    int g_;
    std::uint64_t n_;
    std::vector<std::uint64_t> chosen_;
};

} // namespace

EtaMap base_eta(int g)
{
    check_genus(g, kMaxBaseEtaGenus);
    std::vector<Characteristic> images;
    for (auto code : EtaSearch(g).run())
        images.push_back(Characteristic::from_code(g, code));
    EtaMap eta(g, std::move(images));
    require(validate_eta(eta).valid(), ErrorCode::internal, "base eta-map failed validation");
    return eta;
}

Characteristic eta_of_set(const EtaMap &eta, const BranchSet &representative)
{
    require_same_genus(eta.genus(), representative.genus());
    Characteristic sum = Characteristic::zero(eta.genus());
    for (int i = 0; i < 2 * eta.genus() + 1; ++i)
        if ((representative.mask() >> i) & 1U)
            sum = sum + eta.images()[i];
    return sum;
}

Characteristic eta_of_class(const EtaMap &eta, const GBClass &cls)
{
    return eta_of_set(eta, cls.rep());
}

// ---------------------------------------------------------------------------
// U-sets

USet::USet(int g, std::uint64_t mask) : g_(g), mask_(mask)
{
    check_genus(g);
    require((mask & ~full_mask(g)) == 0, ErrorCode::invalid_argument, "U-set has labels outside B");
    require((mask & infinity_bit(g)) != 0, ErrorCode::invalid_argument, "U-set must contain inf");
    require(std::popcount(mask) % 4 == (g + 1) % 4, ErrorCode::invalid_argument,
            "U-set cardinality must be g+1 mod 4");
}

USet USet::from_labels(int g, const std::vector<Label> &labels)
{
    const std::uint64_t mask = label_mask(g, labels);
    require(static_cast<std::size_t>(std::popcount(mask)) == labels.size(), ErrorCode::invalid_argument,
            "repeated label");
    return USet(g, mask);
}

int USet::size() const { return std::popcount(mask_); }

std::string to_string(const USet &u)
{
    std::string s = "{";
    const auto m = u.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        s += (i ? "," : "") + to_string(m[i]);
    return s + "}";
}

USet u_set(const EtaMap &eta)
{
    const EtaReport report = validate_eta(eta);
    require(report.valid(), ErrorCode::invalid_argument, "u_set needs a valid eta-map");
    const int g = eta.genus();
    std::uint64_t mask = infinity_bit(g);
    for (int i = 0; i < 2 * g + 1; ++i)
        if (is_odd(eta.images()[i]))
            mask |= std::uint64_t{1} << i;
    return USet(g, mask);
}

GBClass t_set(const USet &u)
{
    const int g = u.genus();
    const std::uint64_t mask = (g % 2 == 1) ? u.mask() : (u.mask() ^ infinity_bit(g));
    return GBClass(BranchSet(g, mask));
}

USet u_from_t(const GBClass &t)
{
    const int g = t.genus();
    const std::uint64_t rep = t.rep().mask();
    std::uint64_t u = (g % 2 == 1) ? rep : (rep ^ infinity_bit(g));
    if (!(u & infinity_bit(g)))
        u ^= full_mask(g);
    return USet(g, u);
}

int symmetric_difference_size(const BranchSet &s, const USet &u)
{
    require_same_genus(s.genus(), u.genus());
    return std::popcount(s.mask() ^ u.mask());
}

EtaMap transform_eta(const SpF2Matrix &m, const EtaMap &eta)
{
    require_same_genus(m.genus(), eta.genus());
    require(validate_eta(eta).valid(), ErrorCode::invalid_argument, "transform_eta needs a valid eta-map");
    std::vector<Characteristic> images;
    images.reserve(eta.images().size());
    for (const auto &xi : eta.images())
        images.push_back(act_on_characteristic(m, xi));
    EtaMap out(eta.genus(), std::move(images));
    require(validate_eta(out).valid(), ErrorCode::internal, "transformed eta-map is invalid");
    return out;
}

EtaMap transform_eta(const SymplecticMatrix &gamma, const EtaMap &eta)
{
    return transform_eta(reduce_mod2(gamma), eta);
}

// ---------------------------------------------------------------------------
// Orbit

UOrbit u_orbit(int g)
{
    check_genus(g, kMaxOrbitGenus);
    const EtaMap base = base_eta(g);
    const auto gens = transvection_generators(g);
    std::vector<SpF2Matrix> actions;
    for (const auto &s : gens)
        actions.push_back(s.inverse_transpose());

    // U(W . eta) only depends on the form q = Q o W^{-T}. Walking q -> q o G^{-T}
    // visits exactly the forms Q o W^{-T}, with witness W -> W G.
    using Form = std::vector<std::uint8_t>;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    Form parity_form(n);
    for (std::uint64_t x = 0; x < n; ++x)
        parity_form[x] = is_odd(Characteristic::from_coords(g, x)) ? 1 : 0;

    auto u_of = [&](const Form &q) {
        std::uint64_t mask = infinity_bit(g);
        for (int i = 0; i < 2 * g + 1; ++i)
            if (q[base.images()[i].coords()])
                mask |= std::uint64_t{1} << i;
        return USet(g, mask);
    };

    UOrbit orbit;
    std::map<Form, std::size_t> seen;
    std::map<USet, std::size_t> by_u;
    std::deque<std::pair<Form, SpF2Matrix>> frontier;

    auto visit = [&](Form q, SpF2Matrix w) {
        if (seen.contains(q))
            return;
        const USet u = u_of(q);
        require(!by_u.contains(u), ErrorCode::internal, "two parity forms share a U-set");
        require(u_set(transform_eta(w, base)) == u, ErrorCode::internal, "orbit witness disagrees");
        seen.emplace(q, orbit.sets.size());
        by_u.emplace(u, orbit.sets.size());
        orbit.sets.push_back(u);
        orbit.witnesses.push_back(w);
        frontier.emplace_back(std::move(q), std::move(w));
    };

    visit(parity_form, SpF2Matrix::identity(g));
    while (!frontier.empty()) {
        auto [q, w] = frontier.front();
        frontier.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Form next(n);
            for (std::uint64_t x = 0; x < n; ++x)
                next[x] = q[actions[k].apply(x)];
            visit(std::move(next), w * gens[k]);
        }
    }
    return orbit;
}

std::vector<USet> enumerate_admissible_u(int g)
{
    check_genus(g, kMaxEnumerationGenus);
    std::vector<USet> out;
    const std::uint64_t finite_limit = std::uint64_t{1} << (2 * g + 1);
    for (std::uint64_t m = 0; m < finite_limit; ++m)
        if (std::popcount(m) % 4 == g % 4)
            out.emplace_back(g, m | infinity_bit(g));
    return out;
}

} // namespace hyperu

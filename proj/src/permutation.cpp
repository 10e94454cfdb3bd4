#include "pxk/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pxk/errors.hpp"

namespace pxk {

Permutation::Permutation(std::vector<std::uint8_t> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto x : img_) {
        if (x >= img_.size() || seen[x])
            throw ValidationError("not a permutation image array");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::then(const Permutation& b) const {
    if (degree() != b.degree())
        throw ValidationError("composing permutations of different degree");
    std::vector<std::uint8_t> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) img[i] = b.img_[img_[i]];
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> img(degree());
    for (std::size_t i = 0; i < degree(); ++i)
        img[img_[i]] = static_cast<std::uint8_t>(i);
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::size_t Permutation::moved_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < degree(); ++i)
        if (img_[i] != i) ++n;
    return n;
}

std::string cycle_string(const Permutation& p, const std::vector<Label>& ground) {
    if (ground.size() != p.degree())
        throw ValidationError("ground size does not match permutation degree");
    std::string out;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (seen[i] || p(i) == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += ground[j].str();
            seen[j] = true;
            j = p(j);
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

PermutationGroup PermutationGroup::generate(std::vector<Label> ground,
                                            std::vector<Permutation> gens) {
    if (ground.size() > 12)
        throw ValidationError("permutation ground set too large");
    if (!std::is_sorted(ground.begin(), ground.end()))
        throw ValidationError("permutation ground set must be sorted");
    for (const auto& g : gens)
        if (g.degree() != ground.size())
            throw ValidationError("generator degree does not match ground set");

    std::set<Permutation> closed;
    std::deque<Permutation> frontier;
    Permutation id = Permutation::identity(ground.size());
    closed.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Permutation cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            Permutation nxt = cur.then(g);
            if (closed.insert(nxt).second) frontier.push_back(nxt);
        }
    }

    PermutationGroup grp;
    grp.ground_ = std::move(ground);
    grp.gens_ = std::move(gens);
    grp.elems_.assign(closed.begin(), closed.end());
    return grp;
}

bool PermutationGroup::contains(const Permutation& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermutationGroup::same_group(const PermutationGroup& o) const {
    if (ground_ != o.ground_)
        throw ValidationError("comparing groups over different ground sets");
    return elems_ == o.elems_;
}

bool PermutationGroup::subgroup_of(const PermutationGroup& o) const {
    if (ground_ != o.ground_)
        throw ValidationError("comparing groups over different ground sets");
    return std::includes(o.elems_.begin(), o.elems_.end(),
                         elems_.begin(), elems_.end());
}

std::vector<std::vector<std::size_t>> PermutationGroup::orbits() const {
    const std::size_t n = ground_.size();
    std::vector<std::size_t> root(n);
    for (std::size_t i = 0; i < n; ++i) root[i] = i;
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& g : gens_)
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t a = find(i), b = find(g(i));
            if (a != b) root[a] = b;
        }
    std::vector<std::vector<std::size_t>> out;
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
}

std::optional<std::vector<std::size_t>>
classify_symmetric_product(const PermutationGroup& g) {
    unsigned long long expect = 1;
    std::vector<std::size_t> sizes;
    for (const auto& orb : g.orbits()) {
        sizes.push_back(orb.size());
        for (std::size_t k = 2; k <= orb.size(); ++k) expect *= k;
        if (expect > 1'000'000'000ULL) return std::nullopt; // cannot match |G|
    }
    if (expect != g.order()) return std::nullopt;
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace pxk

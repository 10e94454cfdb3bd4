#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pxk/label.hpp"

namespace pxk {

// Permutation of {0,..,n-1}, stored as the image array.  Composition is
// diagrammatic: a.then(b) applies a first, then b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> img);
    static Permutation identity(std::size_t n);

    std::size_t degree() const { return img_.size(); }
    std::uint8_t operator()(std::size_t i) const { return img_[i]; }
    const std::vector<std::uint8_t>& image() const { return img_; }

    Permutation then(const Permutation& b) const;
    Permutation inverse() const;
    bool is_identity() const;
    // Number of non-fixed points; a transposition moves exactly two.
    std::size_t moved_points() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

private:
    std::vector<std::uint8_t> img_;
};

// Cycle notation over the given ground labels, e.g. "(1 4 2)"; fixed points
// are omitted, cycles start at their smallest moved point and are listed in
// increasing order of that point.  The identity prints as "()".
std::string cycle_string(const Permutation& p, const std::vector<Label>& ground);

// Finite permutation group on an ordered ground set, represented by its full
// element list (BFS closure of the generators).  Intended for small degrees;
// construction refuses ground sets larger than 12.
class PermutationGroup {
public:
    static PermutationGroup generate(std::vector<Label> ground,
                                     std::vector<Permutation> gens);

    const std::vector<Label>& ground() const { return ground_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const { return elems_; } // sorted
    std::size_t order() const { return elems_.size(); }
    bool trivial() const { return elems_.size() == 1; }

    bool contains(const Permutation& p) const;
    // The following require equal ground sets and throw ValidationError
    // otherwise.
    bool same_group(const PermutationGroup& o) const;
    bool subgroup_of(const PermutationGroup& o) const;

    // Orbits of the ground set, each sorted, ordered by smallest element.
    std::vector<std::vector<std::size_t>> orbits() const;

private:
    std::vector<Label> ground_;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elems_;
};

// If G is the direct product of the full symmetric groups on its orbits,
// the sorted orbit sizes (d_1 <= ... <= d_k); otherwise nullopt ("not a
// product").  G is such a product iff |G| equals the product of the orbit-size
// factorials, since G always embeds into that direct product.
std::optional<std::vector<std::size_t>>
classify_symmetric_product(const PermutationGroup& g);

} // namespace pxk

#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "pxk/label.hpp"

namespace pxk {

// A simplex is a finite set of vertex labels, stored sorted and deduplicated.
// The default-constructed simplex is the empty simplex with dim() == -1.
class Simplex {
public:
    Simplex() = default;

    static Simplex of(std::vector<Label> verts) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Simplex s;
        s.v_ = std::move(verts);
        return s;
    }

    static Simplex of_ints(std::initializer_list<std::int64_t> ns) {
        std::vector<Label> ls;
        for (auto n : ns) ls.emplace_back(n);
        return of(std::move(ls));
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<Label>& vertices() const { return v_; }
    const Label& operator[](std::size_t i) const { return v_[i]; }

    bool contains(const Label& l) const {
        return std::binary_search(v_.begin(), v_.end(), l);
    }
    // Position of l in the sorted vertex list; -1 if absent.
    int index_of(const Label& l) const {
        auto it = std::lower_bound(v_.begin(), v_.end(), l);
        if (it == v_.end() || *it != l) return -1;
        return static_cast<int>(it - v_.begin());
    }

    bool subset_of(const Simplex& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }

    Simplex union_with(const Simplex& o) const {
        std::vector<Label> out;
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                       std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }
    Simplex intersect(const Simplex& o) const {
        std::vector<Label> out;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                              std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }
    Simplex minus(const Simplex& o) const {
        std::vector<Label> out;
        std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                            std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) out += ",";
            out += v_[i].str();
        }
        return out + "}";
    }

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        return std::lexicographical_compare_three_way(
            a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
    }

private:
    std::vector<Label> v_; // sorted, unique
};

} // namespace pxk

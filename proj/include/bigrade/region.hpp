#ifndef BIGRADE_REGION_HPP
#define BIGRADE_REGION_HPP

#include <string>
#include <vector>

#include "bigrade/ring.hpp"

namespace bigrade {

// An up-closed subset of the quadrant {d >= floor}, represented by the
// finite antichain of its minimal elements (finite by Dickson's lemma).
// floor (0,0) models N^2 and floor (1,0) models Z_{>0} x Z_{>=0}; the
// region is empty iff the antichain is.
class Region {
public:
    explicit Region(Bidegree floor) : floor_(floor) {}
    Region(Bidegree floor, std::vector<Bidegree> minimal_elements);

    static Region empty(Bidegree floor) { return Region(floor); }
    static Region full(Bidegree floor) { return Region(floor, {floor}); }

    Bidegree floor() const { return floor_; }
    const std::vector<Bidegree>& minimal_elements() const { return mins_; }
    bool is_empty() const { return mins_.empty(); }
    bool is_full() const { return mins_.size() == 1 && mins_[0] == floor_; }

    bool contains(Bidegree d) const;

    Region intersect(const Region& o) const;  // floors must match
    Region unite(const Region& o) const;
    Region shift(Bidegree d) const;  // translates the set and its ambient
    // Same point set re-floored; points below the new floor are dropped.
    Region restricted_to(Bidegree floor) const;

    bool operator==(const Region& o) const {
        return floor_ == o.floor_ && mins_ == o.mins_;
    }

    std::string str() const;

private:
    Bidegree floor_;
    std::vector<Bidegree> mins_;
};

// A star-closed (down-closed) subset of Z^2 generated by a finite
// witness set E: (a,b) in E* iff some witness dominates it.
class DownSet {
public:
    DownSet() = default;
    explicit DownSet(std::vector<Bidegree> witnesses);

    const std::vector<Bidegree>& maximal_elements() const { return maxs_; }
    bool is_empty() const { return maxs_.empty(); }
    bool contains(Bidegree d) const;

    DownSet unite(const DownSet& o) const;

    // The up-closed complement within {d >= floor}.
    Region complement(Bidegree floor) const;

    bool operator==(const DownSet&) const = default;

private:
    std::vector<Bidegree> maxs_;
};

inline DownSet star_closure(std::vector<Bidegree> witnesses) {
    return DownSet(std::move(witnesses));
}

} // namespace bigrade

#endif

#include "bigrade/region.hpp"

#include <algorithm>

namespace bigrade {

namespace {

// Canonical antichain: clamp to the floor, drop dominated points, sort.
std::vector<Bidegree> normalize_mins(Bidegree floor, std::vector<Bidegree> pts) {
    for (auto& p : pts) p = p.clamp(floor);
    std::sort(pts.begin(), pts.end(), bidegree_lt);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Bidegree> out;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : out)
            if (p.geq(q)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            // A later point can still dominate an earlier one only in b.
            std::erase_if(out, [&](Bidegree q) { return q.geq(p); });
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), bidegree_lt);
    return out;
}

} // namespace

Region::Region(Bidegree floor, std::vector<Bidegree> minimal_elements)
    : floor_(floor), mins_(normalize_mins(floor, std::move(minimal_elements))) {}

bool Region::contains(Bidegree d) const {
    if (!d.geq(floor_)) return false;
    for (const auto& m : mins_)
        if (d.geq(m)) return true;
    return false;
}

Region Region::intersect(const Region& o) const {
    if (!(floor_ == o.floor_))
        throw contract_error("region ambient mismatch in intersect");
    std::vector<Bidegree> cand;
    cand.reserve(mins_.size() * o.mins_.size());
    for (const auto& p : mins_)
        for (const auto& q : o.mins_) cand.push_back(join(p, q));
    return Region(floor_, std::move(cand));
}

Region Region::unite(const Region& o) const {
    if (!(floor_ == o.floor_))
        throw contract_error("region ambient mismatch in union");
    std::vector<Bidegree> cand = mins_;
    cand.insert(cand.end(), o.mins_.begin(), o.mins_.end());
    return Region(floor_, std::move(cand));
}

Region Region::shift(Bidegree d) const {
    std::vector<Bidegree> pts = mins_;
    for (auto& p : pts) p = p + d;
    return Region(floor_ + d, std::move(pts));
}

Region Region::restricted_to(Bidegree floor) const {
    return Region(floor, mins_);
}

std::string Region::str() const {
    std::string s = "{";
    for (size_t i = 0; i < mins_.size(); ++i) {
        if (i) s += ", ";
        s += mins_[i].str();
    }
    return s + "}";
}

DownSet::DownSet(std::vector<Bidegree> witnesses) {
    std::sort(witnesses.begin(), witnesses.end(), bidegree_lt);
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    for (const auto& w : witnesses) {
        bool dominated = false;
        for (const auto& v : witnesses)
            if (w != v && v.geq(w)) {
                dominated = true;
                break;
            }
        if (!dominated) maxs_.push_back(w);
    }
}

bool DownSet::contains(Bidegree d) const {
    for (const auto& w : maxs_)
        if (w.geq(d)) return true;
    return false;
}

DownSet DownSet::unite(const DownSet& o) const {
    std::vector<Bidegree> w = maxs_;
    w.insert(w.end(), o.maxs_.begin(), o.maxs_.end());
    return DownSet(std::move(w));
}

Region DownSet::complement(Bidegree floor) const {
    Region r = Region::full(floor);
    for (const auto& w : maxs_) {
        // d escapes witness w iff d.a > w.a or d.b > w.b.
        Region escape(floor, {Bidegree{w.a + 1, floor.b}, Bidegree{floor.a, w.b + 1}});
        r = r.intersect(escape);
    }
    return r;
}

} // namespace bigrade

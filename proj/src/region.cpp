#include "homshift/region.hpp"

#include <algorithm>

namespace homshift {

namespace {

void check_dimension(std::size_t d) {
    if (d < 1) fail(ErrorCode::invalid_input, "region dimension must be at least 1");
}

} // namespace

Region Region::box(Site origin, Site extents) {
    check_dimension(extents.size());
    if (origin.size() != extents.size())
        fail(ErrorCode::invalid_input, "box origin/extents dimension mismatch");
    for (int e : extents)
        if (e < 1) fail(ErrorCode::invalid_input, "box extents must be positive");
    Region r;
    r.kind_ = RegionKind::box;
    r.d_ = static_cast<int>(extents.size());
    r.origin_ = std::move(origin);
    r.extents_ = std::move(extents);
    r.build_sites();
    return r;
}

Region Region::diamond(Site center, int radius) {
    check_dimension(center.size());
    if (radius < 0) fail(ErrorCode::invalid_input, "diamond radius must be nonnegative");
    Region r;
    r.kind_ = RegionKind::diamond;
    r.d_ = static_cast<int>(center.size());
    r.center_ = std::move(center);
    r.radius_ = radius;
    r.build_sites();
    return r;
}

Region Region::torus(Site extents) {
    check_dimension(extents.size());
    for (int e : extents)
        if (e < 1) fail(ErrorCode::invalid_input, "torus extents must be positive");
    Region r;
    r.kind_ = RegionKind::torus;
    r.d_ = static_cast<int>(extents.size());
    r.extents_ = std::move(extents);
    r.origin_.assign(r.d_, 0);
    r.build_sites();
    return r;
}

void Region::build_sites() {
    // Lexicographic sweep over the bounding box; diamonds filter by l1 radius.
    Site lo(d_), hi(d_);
    for (int k = 0; k < d_; ++k) {
        if (kind_ == RegionKind::diamond) {
            lo[k] = center_[k] - radius_;
            hi[k] = center_[k] + radius_;
        } else {
            lo[k] = origin_[k];
            hi[k] = origin_[k] + extents_[k] - 1;
        }
    }
    Site cur = lo;
    while (true) {
        if (kind_ != RegionKind::diamond || l1_distance(cur, center_) <= radius_)
            sites_.push_back(cur);
        int k = d_ - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
    }
    for (int i = 0; i < static_cast<int>(sites_.size()); ++i) index_[sites_[i]] = i;

    neighbors_.assign(sites_.size(), {});
    for (int i = 0; i < static_cast<int>(sites_.size()); ++i) {
        for (int k = 0; k < d_; ++k) {
            for (int step : {-1, +1}) {
                Site t = sites_[i];
                t[k] += step;
                auto j = index_of(t);
                if (j) neighbors_[i].push_back(*j);
            }
        }
    }

    for (int i = 0; i < static_cast<int>(sites_.size()); ++i) {
        for (int k = 0; k < d_; ++k) {
            Site t = sites_[i];
            t[k] += 1;
            if (kind_ == RegionKind::torus) {
                int e = extents_[k];
                if (t[k] == e) {
                    if (e == 2) continue; // wrap duplicates the forward pair
                    t[k] = 0;
                }
                pairs_.emplace_back(std::min(i, index_.at(t)), std::max(i, index_.at(t)));
            } else {
                auto j = index_of(t);
                if (j) pairs_.emplace_back(i, *j);
            }
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Site Region::canonical(const Site& s) const {
    if (kind_ != RegionKind::torus) return s;
    Site t = s;
    for (int k = 0; k < d_; ++k) {
        int e = extents_[k];
        t[k] = ((t[k] % e) + e) % e;
    }
    return t;
}

bool Region::contains(const Site& s) const {
    return index_of(s).has_value();
}

std::optional<int> Region::index_of(const Site& s) const {
    if (static_cast<int>(s.size()) != d_) return std::nullopt;
    auto it = index_.find(canonical(s));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Site> Region::boundary_sites(int thickness) const {
    if (kind_ == RegionKind::torus) return {};
    std::vector<Site> result;
    Site lo(d_), hi(d_);
    for (int k = 0; k < d_; ++k) {
        if (kind_ == RegionKind::diamond) {
            lo[k] = center_[k] - radius_ - thickness;
            hi[k] = center_[k] + radius_ + thickness;
        } else {
            lo[k] = origin_[k] - thickness;
            hi[k] = origin_[k] + extents_[k] - 1 + thickness;
        }
    }
    Site cur = lo;
    while (true) {
        if (!contains(cur)) {
            int dist;
            if (kind_ == RegionKind::diamond) {
                dist = std::max(0, l1_distance(cur, center_) - radius_);
            } else {
                dist = 0;
                for (int k = 0; k < d_; ++k) {
                    if (cur[k] < origin_[k]) dist += origin_[k] - cur[k];
                    else if (cur[k] > origin_[k] + extents_[k] - 1)
                        dist += cur[k] - (origin_[k] + extents_[k] - 1);
                }
            }
            if (dist >= 1 && dist <= thickness) result.push_back(cur);
        }
        int k = d_ - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
    }
    return result;
}

std::vector<int> Region::interior_indices() const {
    std::vector<int> result;
    for (int i = 0; i < static_cast<int>(sites_.size()); ++i) {
        if (kind_ == RegionKind::torus) {
            result.push_back(i);
            continue;
        }
        bool interior = true;
        for (int k = 0; k < d_ && interior; ++k) {
            for (int step : {-1, +1}) {
                Site t = sites_[i];
                t[k] += step;
                if (!contains(t)) {
                    interior = false;
                    break;
                }
            }
        }
        if (interior) result.push_back(i);
    }
    return result;
}

bool Region::operator==(const Region& other) const {
    if (kind_ != other.kind_ || d_ != other.d_) return false;
    switch (kind_) {
    case RegionKind::box: return origin_ == other.origin_ && extents_ == other.extents_;
    case RegionKind::diamond: return center_ == other.center_ && radius_ == other.radius_;
    case RegionKind::torus: return extents_ == other.extents_;
    }
    return false;
}

} // namespace homshift

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "projclose/hpoint.hpp"

namespace projclose {

/// Deduplicated, insertion-ordered set of projective points tagged with the
/// level of first appearance. The computational image of the closure set V.
class PointStore {
public:
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const HPoint& point(std::size_t i) const { return entries_[i].pt; }
    int level(std::size_t i) const { return entries_[i].lvl; }

    bool contains(const HPoint& p) const { return index_.count(p) != 0; }
    std::optional<std::size_t> find(const HPoint& p) const;

    /// Inserts p with the given level tag; returns false on a duplicate.
    /// Level tags must be non-decreasing in insertion order.
    bool insert(HPoint p, int level);

    int max_level() const { return entries_.empty() ? 0 : entries_.back().lvl; }

    /// Index of the first entry with the given level (entries are grouped).
    std::size_t level_begin(int level) const;

    // Closure bookkeeping, set by run_closure / run_moebius.
    bool stabilized() const { return stabilized_; }
    int last_completed_level() const {
        return last_completed_ > 0 ? last_completed_ : max_level();
    }
    void set_closure_status(bool stabilized, int last_completed_level);

private:
    struct Entry {
        HPoint pt;
        int lvl;
    };

    std::vector<Entry> entries_;
    std::unordered_map<HPoint, std::uint32_t, HPointHash> index_;
    bool stabilized_ = false;
    int last_completed_ = 0;
};

} // namespace projclose

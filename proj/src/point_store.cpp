#include "projclose/point_store.hpp"

#include <algorithm>

namespace projclose {

std::optional<std::size_t> PointStore::find(const HPoint& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return static_cast<std::size_t>(it->second);
}

bool PointStore::insert(HPoint p, int level) {
    auto [it, fresh] = index_.emplace(p, static_cast<std::uint32_t>(entries_.size()));
    if (!fresh) return false;
    entries_.push_back(Entry{std::move(p), level});
    return true;
}

std::size_t PointStore::level_begin(int level) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), level,
                               [](const Entry& e, int l) { return e.lvl < l; });
    return static_cast<std::size_t>(it - entries_.begin());
}

void PointStore::set_closure_status(bool stabilized, int last_completed_level) {
    stabilized_ = stabilized;
    last_completed_ = last_completed_level;
}

} // namespace projclose

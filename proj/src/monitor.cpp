#include "plic/kernel.hpp"

namespace plic {

MonitorSet MonitorSet::make(std::vector<Monitor> mons) {
    for (auto& m : mons) m.set = vset_sorted(std::move(m.set));
    std::sort(mons.begin(), mons.end(),
              [](const Monitor& a, const Monitor& b) { return a.set < b.set; });
    MonitorSet out;
    for (auto& m : mons) {
        if (!out.mons_.empty() && out.mons_.back().set == m.set) {
            out.mons_.back().low = std::max(out.mons_.back().low, m.low);
            out.mons_.back().upp = std::min(out.mons_.back().upp, m.upp);
        } else {
            out.mons_.push_back(std::move(m));
        }
    }
    return out;
}

int MonitorSet::index_of(const VList& set) const {
    auto it = std::lower_bound(mons_.begin(), mons_.end(), set,
                               [](const Monitor& m, const VList& s) { return m.set < s; });
    if (it == mons_.end() || it->set != set) return -1;
    return static_cast<int>(it - mons_.begin());
}

bool MonitorSet::any_zero_upp() const {
    for (const auto& m : mons_)
        if (m.upp <= 0 && !m.set.empty()) return true;
    return false;
}

void MonitorSet::for_each_feasible(const std::function<void(const std::vector<int>&)>& fn) const {
    std::vector<int> r(mons_.size());
    for (std::size_t i = 0; i < mons_.size(); ++i) {
        if (mons_[i].low > mons_[i].upp) return;  // empty product
        r[i] = mons_[i].low;
    }
    while (true) {
        fn(r);
        std::size_t i = 0;
        while (i < mons_.size()) {
            if (r[i] < mons_[i].upp) {
                ++r[i];
                break;
            }
            r[i] = mons_[i].low;
            ++i;
        }
        if (i == mons_.size()) break;
    }
}

std::vector<std::vector<int>> MonitorSet::feasible_vectors() const {
    std::vector<std::vector<int>> out;
    for_each_feasible([&](const std::vector<int>& r) { out.push_back(r); });
    return out;
}

Count MonitorSet::feasible_count() const {
    Count out = 1;
    for (const auto& m : mons_) {
        if (m.low > m.upp) return 0;
        out *= (m.upp - m.low + 1);
    }
    return out;
}

}  // namespace plic

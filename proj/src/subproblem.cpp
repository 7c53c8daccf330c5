#include "plic/kernel.hpp"

namespace plic {

Subproblem Subproblem::make(std::shared_ptr<const Graph> root, VList verts, VList boundary,
                            std::vector<Monitor> mons, int k) {
    Subproblem out;
    out.root_ = std::move(root);
    out.k_ = k;
    verts = vset_sorted(std::move(verts));
    boundary = vset_sorted(std::move(boundary));
    if (!vset_subset(boundary, verts)) throw std::invalid_argument("boundary outside vertex set");

    // fold zero-upp monitors into deletions until stable; merging can cascade
    VList folded;
    while (true) {
        MonitorSet ms = MonitorSet::make(mons);
        VList kill;
        for (const auto& m : ms.mons())
            if (m.upp <= 0 && !m.set.empty()) kill = vset_union(kill, m.set);
        if (kill.empty()) {
            // drop empty-set monitors with low 0; keep infeasible ones (they
            // empty the feasible space, which callers observe)
            std::vector<Monitor> cleaned;
            for (const auto& m : ms.mons()) {
                if (m.set.empty() && m.low <= 0) continue;
                cleaned.push_back(m);
            }
            out.mons_ = MonitorSet::make(std::move(cleaned));
            break;
        }
        folded = vset_union(folded, kill);
        verts = vset_minus(verts, kill);
        boundary = vset_minus(boundary, kill);
        std::vector<Monitor> next;
        for (const auto& m : ms.mons()) {
            if (m.upp <= 0) continue;
            next.push_back({vset_minus(m.set, kill), m.low, m.upp});
        }
        mons = std::move(next);
    }
    for (const auto& m : out.mons_.mons())
        if (!vset_subset(m.set, verts)) throw std::invalid_argument("monitor set outside graph");
    out.verts_ = std::move(verts);
    out.boundary_ = std::move(boundary);
    out.folded_ = std::move(folded);
    return out;
}

int Subproblem::upp_of_set(const VList& s) const {
    int best = k_;
    if (s.empty()) return 0;
    for (const auto& m : mons_.mons())
        if (vset_subset(s, m.set)) best = std::min(best, m.upp);
    return best;
}

int Subproblem::small_monitor_count() const {
    long long k4 = 1;
    for (int i = 0; i < 4; ++i) k4 *= std::max(1, k_);
    int c = 0;
    for (const auto& m : mons_.mons())
        if (m.upp > 0 && static_cast<long long>(m.set.size()) <= k4) ++c;
    return c;
}

int Subproblem::large_monitor_count() const {
    int c = 0;
    for (const auto& m : mons_.mons())
        if (m.upp > 0 && static_cast<int>(m.set.size()) > k_) ++c;
    return c;
}

std::size_t Subproblem::fingerprint() const {
    std::size_t h = std::hash<const Graph*>()(root_.get());
    hash_mix(h, std::size_t(k_));
    for (int v : verts_) hash_mix(h, std::size_t(v) + 7);
    hash_mix(h, 0xabcdef);
    for (int v : boundary_) hash_mix(h, std::size_t(v) + 11);
    for (const auto& m : mons_.mons()) {
        hash_mix(h, 0x5555);
        for (int v : m.set) hash_mix(h, std::size_t(v) + 13);
        hash_mix(h, std::size_t(m.low) * 131 + std::size_t(m.upp));
    }
    return h;
}

bool Subproblem::operator==(const Subproblem& o) const {
    if (root_.get() != o.root_.get() || k_ != o.k_ || verts_ != o.verts_ ||
        boundary_ != o.boundary_)
        return false;
    if (mons_.size() != o.mons_.size()) return false;
    for (int i = 0; i < mons_.size(); ++i) {
        const auto& a = mons_.mons()[i];
        const auto& b = o.mons_.mons()[i];
        if (a.set != b.set || a.low != b.low || a.upp != b.upp) return false;
    }
    return true;
}

}  // namespace plic

// Presentations up to ground relabelling correspond to multisets of "columns":
// a ground element is determined, up to renaming, by the set of vertices whose
// k-set contains it. We enumerate column multisets with every vertex covered
// exactly k times and pairwise distinct rows, then label canonically.
#include <algorithm>
#include <functional>
#include <map>

#include "sunflower/ksets.hpp"

namespace sunflower {

namespace {

using Column = std::vector<char>; // membership per vertex

// Labels columns in decreasing lexicographic order of membership (vertex 0
// most significant): the least labelling whose labels first appear in order.
std::vector<KSet> label_columns(std::vector<Column> cols, std::size_t n) {
    std::sort(cols.begin(), cols.end(), std::greater<>());
    std::vector<KSet> sets(n);
    for (std::size_t g = 0; g < cols.size(); ++g)
        for (std::size_t v = 0; v < n; ++v)
            if (cols[g][v]) sets[v].push_back(g);
    return sets;
}

} // namespace

Presentation canonical_presentation(const Presentation& p) {
    p.validate();
    const std::size_t n = p.sets.size();
    std::map<Ground, Column> by_ground;
    for (std::size_t v = 0; v < n; ++v)
        for (auto g : p.sets[v]) {
            auto& col = by_ground[g];
            col.resize(n, 0);
            col[v] = 1;
        }
    std::vector<Column> cols;
    for (auto& [g, c] : by_ground) cols.push_back(std::move(c));
    Presentation out;
    out.base = p.base;
    out.k = p.k;
    out.sets = label_columns(std::move(cols), n);
    return out;
}

void enumerate_presentations(const Structure& c, std::size_t k,
                             const std::function<bool(const Presentation&)>& visit,
                             std::size_t budget) {
    const std::size_t n = c.size();
    if (k == 0) throw InvalidArgument("enumerate_presentations: k must be positive");
    if (n > 63) throw BudgetExceeded("enumerate_presentations: more than 63 vertices");
    if (n == 0) {
        Presentation p;
        p.base = c;
        p.k = k;
        visit(p);
        return;
    }
    using Mask = std::uint64_t;
    std::vector<std::size_t> cap(n, k);
    std::vector<Mask> chosen;
    // rows[v]: bitset over chosen column indices, kept as a sorted index list
    std::vector<std::vector<std::uint32_t>> rows(n);
    std::size_t emitted = 0;
    bool stop = false;

    auto emit = [&]() {
        if (++emitted > budget) throw BudgetExceeded("enumerate_presentations: budget exceeded");
        std::vector<Column> cols;
        cols.reserve(chosen.size());
        for (auto m : chosen) {
            Column col(n, 0);
            for (std::size_t v = 0; v < n; ++v) col[v] = (m >> v) & 1;
            cols.push_back(std::move(col));
        }
        Presentation p;
        p.base = c;
        p.k = k;
        p.sets = label_columns(std::move(cols), n);
        if (!visit(p)) stop = true;
    };

    // In a non-increasing sequence of masks, the highest row with spare
    // capacity must belong to the next mask.
    std::function<void(Mask)> rec = [&](Mask prev) {
        if (stop) return;
        int h = -1;
        Mask avail = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (cap[v] > 0) {
                h = static_cast<int>(v);
                avail |= Mask{1} << v;
            }
        if (h < 0) {
            emit();
            return;
        }
        const Mask top = Mask{1} << h;
        const Mask rest = avail & ~top;
        // submasks of rest in decreasing order
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask m = top | sub;
            if (m <= prev) {
                const auto idx = static_cast<std::uint32_t>(chosen.size());
                chosen.push_back(m);
                bool ok = true;
                std::vector<std::size_t> finished;
                for (std::size_t v = 0; v < n; ++v)
                    if ((m >> v) & 1) {
                        --cap[v];
                        rows[v].push_back(idx);
                        if (cap[v] == 0) finished.push_back(v);
                    }
                // rows never change once full, so duplicates can be rejected now
                for (auto v : finished) {
                    for (std::size_t u = 0; u < n && ok; ++u)
                        if (u != v && cap[u] == 0 && rows[u] == rows[v]) ok = false;
                    if (!ok) break;
                }
                if (ok) rec(m);
                for (std::size_t v = 0; v < n; ++v)
                    if ((m >> v) & 1) {
                        ++cap[v];
                        rows[v].pop_back();
                    }
                chosen.pop_back();
                if (stop) return;
            }
            if (sub == 0) break;
        }
    };
    rec(~Mask{0});
}

std::size_t count_presentations(const Structure& c, std::size_t k, std::size_t budget) {
    std::size_t n = 0;
    enumerate_presentations(c, k, [&](const Presentation&) { return ++n, true; }, budget);
    return n;
}

} // namespace sunflower

#include "sunflower/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>

namespace sunflower {

ClassSpec::ClassSpec(Signature sig, std::vector<Structure> forbidden, std::string name)
    : sig_(std::move(sig)), forbidden_(std::move(forbidden)), name_(std::move(name)) {
    for (const auto& f : forbidden_) {
        if (!(f.signature() == sig_)) throw SignatureMismatch("forbidden structure has a different signature");
        if (!is_irreducible(f))
            throw InvalidArgument("forbidden structures must be irreducible (Gaifman graph a clique)");
    }
}

bool satisfies_class(const Structure& s, const ClassSpec& k) {
    if (!(s.signature() == k.signature())) throw SignatureMismatch();
    for (const auto& f : k.forbidden())
        if (embeds(f, s)) return false;
    return true;
}

namespace {

// Atom slots of a one-point type grouped by the set of parameters they mention.
struct Unit {
    std::vector<Vertex> params;                          // sorted
    std::vector<std::pair<std::size_t, std::size_t>> slots; // (relation, pattern index)
};

std::vector<Unit> type_units(const Signature& sig, std::size_t m) {
    std::map<std::vector<Vertex>, Unit> by;
    for (std::size_t r = 0; r < sig.size(); ++r) {
        const auto& pats = type_patterns(sig.arity(r), m);
        for (std::size_t j = 0; j < pats.size(); ++j) {
            std::vector<Vertex> ps;
            for (int e : pats[j])
                if (e >= 0) ps.push_back(static_cast<Vertex>(e));
            std::sort(ps.begin(), ps.end());
            ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
            auto& u = by[ps];
            u.params = ps;
            u.slots.emplace_back(r, j);
        }
    }
    std::vector<Unit> out;
    for (auto& [k, u] : by) out.push_back(std::move(u));
    std::stable_sort(out.begin(), out.end(),
                     [](const Unit& a, const Unit& b) { return a.params.size() < b.params.size(); });
    return out;
}

} // namespace

std::vector<QfType> admissible_types(const Structure& base, const ClassSpec& k, std::size_t budget) {
    const auto& sig = k.signature();
    if (!(base.signature() == sig)) throw SignatureMismatch();
    const std::size_t m = base.size();
    std::vector<Vertex> params(m);
    for (std::size_t i = 0; i < m; ++i) params[i] = static_cast<Vertex>(i);
    const auto units = type_units(sig, m);
    QfType cur = empty_type(sig, params);
    std::vector<QfType> out;
    std::size_t work = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t ui) {
        if (ui == units.size()) {
            if (satisfies_class(realise(base, cur), k)) out.push_back(cur);
            return;
        }
        const auto& u = units[ui];
        if (u.slots.size() > 20) throw BudgetExceeded("too many atom slots in one unit");
        const std::size_t options = std::size_t{1} << u.slots.size();
        for (std::size_t mask = 0; mask < options; ++mask) {
            if (++work > budget) throw BudgetExceeded("admissible type enumeration exceeded budget");
            for (std::size_t b = 0; b < u.slots.size(); ++b)
                cur.atoms[u.slots[b].first][u.slots[b].second] = (mask >> b) & 1;
            // Everything on params(u) + new point is decided now, so this check is final.
            std::vector<Vertex> sub = u.params;
            sub.push_back(static_cast<Vertex>(m));
            if (!satisfies_class(realise(base, cur).induced(sub), k)) continue;
            rec(ui + 1);
        }
        for (const auto& [r, j] : u.slots) cur.atoms[r][j] = 0;
    };
    rec(0);
    return out;
}

std::vector<Structure> one_point_structures(const ClassSpec& k) {
    const auto& sig = k.signature();
    std::vector<Structure> out;
    const std::size_t nr = sig.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << nr); ++mask) {
        std::vector<std::vector<Tuple>> rels(nr);
        for (std::size_t r = 0; r < nr; ++r)
            if ((mask >> r) & 1) rels[r].push_back(Tuple(sig.arity(r), 0));
        Structure s(sig, 1, std::move(rels));
        if (satisfies_class(s, k)) out.push_back(std::move(s));
    }
    return out;
}

bool is_transitive(const ClassSpec& k) { return one_point_structures(k).size() == 1; }

namespace {

using Slot = std::pair<std::size_t, Tuple>;

bool support_valid(const Signature& sig, const ShapeRules& rules, std::size_t wsize,
                   const std::vector<Slot>& config) {
    std::vector<std::size_t> count(sig.size(), 0);
    for (const auto& [r, t] : config) ++count[r];
    for (const auto& [r, t] : config) {
        const Shape sh = r < rules.shape.size() ? rules.shape[r] : Shape::Free;
        if (sh == Shape::Symmetric) {
            if (wsize != t.size()) return false;
        } else if (sh == Shape::Oriented) {
            if (t.size() != 2 || t[0] == t[1]) return false;
        }
    }
    for (std::size_t r = 0; r < sig.size(); ++r) {
        if (!count[r]) continue;
        const Shape sh = r < rules.shape.size() ? rules.shape[r] : Shape::Free;
        if (sh == Shape::Symmetric) {
            std::size_t fact = 1;
            for (unsigned i = 2; i <= sig.arity(r); ++i) fact *= i;
            if (count[r] != fact) return false;
        } else if (sh == Shape::Oriented) {
            if (count[r] > 1) return false;
        }
    }
    for (const auto& [a, b] : rules.disjoint)
        if (count[a] && count[b]) return false;
    return true;
}

} // namespace

std::vector<Structure> shape_forbidden(const Signature& sig, const ShapeRules& rules) {
    std::vector<Structure> found;
    const unsigned maxa = sig.max_arity();
    for (std::size_t m = 1; m <= maxa; ++m) {
        // Slots grouped by exact support (bitmask over m vertices).
        std::map<unsigned, std::vector<Slot>> groups;
        for (std::size_t r = 0; r < sig.size(); ++r) {
            const unsigned a = sig.arity(r);
            std::vector<Vertex> t(a, 0);
            for (;;) {
                unsigned mask = 0;
                for (auto v : t) mask |= 1u << v;
                groups[mask].emplace_back(r, t);
                std::size_t i = a;
                while (i > 0 && t[i - 1] == m - 1) --i;
                if (i == 0) break;
                ++t[i - 1];
                for (std::size_t j = i; j < a; ++j) t[j] = 0;
            }
        }
        const unsigned full = (1u << m) - 1;
        std::vector<std::pair<unsigned, std::vector<std::vector<Slot>>>> choices;
        bool possible = true;
        for (const auto& [mask, slots] : groups) {
            if (slots.size() > 16) throw BudgetExceeded("shape compilation: too many slots");
            const auto wsize = static_cast<std::size_t>(__builtin_popcount(mask));
            std::vector<std::vector<Slot>> opts;
            for (std::size_t sel = 0; sel < (std::size_t{1} << slots.size()); ++sel) {
                std::vector<Slot> cfg;
                for (std::size_t b = 0; b < slots.size(); ++b)
                    if ((sel >> b) & 1) cfg.push_back(slots[b]);
                const bool ok = support_valid(sig, rules, wsize, cfg);
                if (ok == (mask != full)) opts.push_back(std::move(cfg));
            }
            if (opts.empty()) possible = false;
            choices.emplace_back(mask, std::move(opts));
        }
        if (!possible || !groups.count(full)) continue;
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            std::vector<std::vector<Tuple>> rels(sig.size());
            for (std::size_t g = 0; g < choices.size(); ++g)
                for (const auto& [r, t] : choices[g].second[pick[g]]) rels[r].push_back(t);
            found.emplace_back(sig, m, std::move(rels));
            std::size_t g = choices.size();
            while (g > 0 && pick[g - 1] + 1 == choices[g - 1].second.size()) --g;
            if (g == 0) break;
            ++pick[g - 1];
            for (std::size_t h = g; h < choices.size(); ++h) pick[h] = 0;
        }
    }
    return dedupe_isomorphic(found);
}

Structure complete_structure(const Signature& sig, std::size_t r, std::size_t n) {
    const unsigned a = sig.arity(r);
    std::vector<std::vector<Tuple>> rels(sig.size());
    Tuple t(a, 0);
    if (n == 0) return Structure(sig, 0);
    for (;;) {
        bool inj = true;
        for (std::size_t i = 0; i < a && inj; ++i)
            for (std::size_t j = i + 1; j < a; ++j)
                if (t[i] == t[j]) inj = false;
        if (inj) rels[r].push_back(t);
        std::size_t i = a;
        while (i > 0 && t[i - 1] == n - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < a; ++j) t[j] = 0;
    }
    return Structure(sig, n, std::move(rels));
}

std::vector<Structure> dedupe_isomorphic(const std::vector<Structure>& xs) {
    std::vector<Structure> out;
    for (const auto& x : xs) {
        bool dup = false;
        for (const auto& y : out)
            if (are_isomorphic(x, y)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(x);
    }
    return out;
}

namespace classes {

namespace {

Signature sig_of(std::initializer_list<Relation> rs) { return Signature(std::vector<Relation>(rs)); }

std::vector<Structure> join(std::vector<Structure> a, const std::vector<Structure>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Symmetric closure of a list of vertex sets into one relation.
Structure hyperedges(const Signature& sig, std::size_t n, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<std::vector<Tuple>> rels(sig.size());
    for (auto e : edges) {
        std::sort(e.begin(), e.end());
        do {
            rels[0].push_back(e);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return Structure(sig, n, std::move(rels));
}

} // namespace

ClassSpec pure() { return ClassSpec(Signature{}, {}, "pure"); }

ClassSpec graphs() {
    auto sig = sig_of({{"E", 2}});
    return ClassSpec(sig, shape_forbidden(sig, {{Shape::Symmetric}, {}}), "graphs");
}

ClassSpec knfree(std::size_t n) {
    if (n < 2) throw InvalidArgument("knfree requires n >= 2");
    auto g = graphs();
    auto f = g.forbidden();
    f.push_back(complete_structure(g.signature(), 0, n));
    return ClassSpec(g.signature(), std::move(f), "knfree(" + std::to_string(n) + ")");
}

ClassSpec oriented() {
    auto sig = sig_of({{"E", 2}});
    return ClassSpec(sig, shape_forbidden(sig, {{Shape::Oriented}, {}}), "oriented");
}

ClassSpec hypergraphs(unsigned r) {
    if (r < 2) throw InvalidArgument("hypergraph uniformity must be >= 2");
    auto sig = sig_of({{"R", r}});
    return ClassSpec(sig, shape_forbidden(sig, {{Shape::Symmetric}, {}}),
                     "hypergraphs(" + std::to_string(r) + ")");
}

ClassSpec kn_hyper_free(std::size_t n, unsigned r) {
    if (n < r) throw InvalidArgument("kfree(n,r) requires n >= r");
    auto h = hypergraphs(r);
    auto f = h.forbidden();
    f.push_back(complete_structure(h.signature(), 0, n));
    return ClassSpec(h.signature(), std::move(f),
                     "kfree(" + std::to_string(n) + "," + std::to_string(r) + ")");
}

Structure f_hypergraph() {
    auto sig = sig_of({{"R", 3}});
    return hyperedges(sig, 5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {2, 3, 4}});
}

ClassSpec f_free_3hyper() {
    // Omitting F as a (not necessarily induced) subhypergraph means omitting,
    // as induced substructures, every 5-vertex supergraph of F.
    auto h = hypergraphs(3);
    const std::vector<std::vector<Vertex>> base = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3},
                                                   {1, 2, 3}, {0, 1, 4}, {2, 3, 4}};
    std::vector<std::vector<Vertex>> extra;
    for (Vertex a = 0; a < 5; ++a)
        for (Vertex b = a + 1; b < 5; ++b)
            for (Vertex c = b + 1; c < 5; ++c) {
                std::vector<Vertex> e{a, b, c};
                if (std::find(base.begin(), base.end(), e) == base.end()) extra.push_back(e);
            }
    std::vector<Structure> sup;
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
        auto edges = base;
        for (std::size_t i = 0; i < extra.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(extra[i]);
        sup.push_back(hyperedges(h.signature(), 5, edges));
    }
    return ClassSpec(h.signature(), join(h.forbidden(), dedupe_isomorphic(sup)), "f-free-3hyper");
}

ClassSpec rb() {
    auto sig = sig_of({{"R", 2}, {"B", 2}});
    auto f = shape_forbidden(sig, {{Shape::Symmetric, Shape::Symmetric}, {{0, 1}}});
    f.push_back(complete_structure(sig, 0, 3));
    f.push_back(complete_structure(sig, 1, 3));
    return ClassSpec(sig, std::move(f), "rb");
}

ClassSpec two_types() {
    return ClassSpec(sig_of({{"P", 1}}), {}, "two-types");
}

ClassSpec by_name(const std::string& name) {
    std::smatch m;
    if (name == "pure") return pure();
    if (name == "graphs") return graphs();
    if (name == "oriented") return oriented();
    if (name == "f-free-3hyper") return f_free_3hyper();
    if (name == "rb" || name == "rb-bichrome") return rb();
    if (name == "two-types") return two_types();
    static const std::regex kn(R"(knfree\((\d+)\))"), hy(R"(hypergraphs\((\d+)\))"),
        kr(R"(kfree\((\d+),(\d+)\))");
    if (std::regex_match(name, m, kn)) return knfree(std::stoul(m[1]));
    if (std::regex_match(name, m, hy)) return hypergraphs(static_cast<unsigned>(std::stoul(m[1])));
    if (std::regex_match(name, m, kr))
        return kn_hyper_free(std::stoul(m[1]), static_cast<unsigned>(std::stoul(m[2])));
    throw InvalidArgument("unknown class name '" + name + "'");
}

std::vector<std::string> names() {
    return {"pure", "graphs", "knfree(n)", "oriented", "hypergraphs(r)", "kfree(n,r)",
            "f-free-3hyper", "rb", "two-types"};
}

} // namespace classes

} // namespace sunflower

#include "sunflower/amalgam.hpp"

#include <functional>
#include <map>

namespace sunflower {

Amalgam free_amalgam(const Structure& a, const Structure& b0, const Embedding& f0,
                     const Structure& b1, const Embedding& f1) {
    if (!(a.signature() == b0.signature()) || !(a.signature() == b1.signature()))
        throw SignatureMismatch();
    if (!is_embedding(a, b0, f0.map)) throw InvalidArgument("free_amalgam: f0 is not an embedding");
    if (!is_embedding(a, b1, f1.map)) throw InvalidArgument("free_amalgam: f1 is not an embedding");
    Amalgam out;
    for (Vertex v = 0; v < b0.size(); ++v) out.g0.map.push_back(v);
    out.g1.map.assign(b1.size(), kNoVertex);
    for (Vertex x = 0; x < a.size(); ++x) out.g1.map[f1(x)] = f0(x);
    auto next = static_cast<Vertex>(b0.size());
    for (Vertex w = 0; w < b1.size(); ++w)
        if (out.g1.map[w] == kNoVertex) out.g1.map[w] = next++;
    auto rels = b0.all_tuples();
    for (std::size_t r = 0; r < b1.signature().size(); ++r)
        for (auto t : b1.tuples(r)) {
            for (auto& v : t) v = out.g1(v);
            rels[r].push_back(std::move(t));
        }
    out.result = Structure(a.signature(), next, std::move(rels));
    return out;
}

namespace {

// True iff every atom of p (over M parameters) whose parameters all translate
// under tr (entries -1 are excluded) agrees with q on the translated pattern.
bool agrees(const Signature& sig, const QfType& p, const std::vector<int>& tr, const QfType& q) {
    const std::size_t M = p.params.size(), Q = q.params.size();
    for (std::size_t r = 0; r < sig.size(); ++r) {
        const auto& pats = type_patterns(sig.arity(r), M);
        const auto& qp = type_patterns(sig.arity(r), Q);
        std::map<std::vector<int>, std::size_t> idx;
        for (std::size_t j = 0; j < qp.size(); ++j) idx.emplace(qp[j], j);
        std::vector<int> t;
        for (std::size_t j = 0; j < pats.size(); ++j) {
            t = pats[j];
            bool inside = true;
            for (auto& e : t) {
                if (e < 0) continue;
                e = tr[static_cast<std::size_t>(e)];
                if (e < 0) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            if (p.atoms[r][j] != q.atoms[r][idx.at(t)]) return false;
        }
    }
    return true;
}

// Memo of admissible_types keyed by the labelled base structure.
class TypeCache {
public:
    explicit TypeCache(const ClassSpec& k) : k_(k) {}
    const std::vector<QfType>& get(const Structure& s) {
        auto key = std::make_pair(s.size(), s.all_tuples());
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(std::move(key), admissible_types(s, k_)).first;
        return it->second;
    }

private:
    const ClassSpec& k_;
    std::map<std::pair<std::size_t, std::vector<std::vector<Tuple>>>, std::vector<QfType>> memo_;
};

std::vector<Vertex> iota_vec(std::size_t n, Vertex from = 0) {
    std::vector<Vertex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = from + static_cast<Vertex>(i);
    return v;
}

} // namespace

std::vector<Structure> class_members(const ClassSpec& k, std::size_t n) {
    std::vector<Structure> level{Structure(k.signature(), 0)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Structure> next;
        for (const auto& s : level)
            for (const auto& p : admissible_types(s, k)) next.push_back(realise(s, p));
        level = dedupe_isomorphic(next);
    }
    return level;
}

std::vector<Structure> strong_amalgams_over_empty(const Structure& a, const Structure& b,
                                                  const ClassSpec& k) {
    const std::size_t na = a.size(), nb = b.size();
    std::vector<Structure> out;
    TypeCache cache(k);
    std::function<void(const Structure&, std::size_t)> rec = [&](const Structure& s, std::size_t t) {
        if (t == nb) {
            out.push_back(s);
            return;
        }
        const QfType want = qf_type(b, static_cast<Vertex>(t), iota_vec(t));
        std::vector<int> tr(na + t, -1);
        for (std::size_t i = 0; i < t; ++i) tr[na + i] = static_cast<int>(i);
        for (const auto& p : cache.get(s))
            if (agrees(k.signature(), p, tr, want)) rec(realise(s, p), t + 1);
    };
    rec(a, 0);
    return out;
}

DapReport check_3dap_over_empty(const ClassSpec& k, std::size_t size_bound, std::size_t budget) {
    if (size_bound < 1) throw InvalidArgument("3-DAP check needs size_bound >= 1");
    std::vector<Structure> types;
    for (std::size_t n = 1; n <= size_bound; ++n) {
        auto ms = class_members(k, n);
        types.insert(types.end(), ms.begin(), ms.end());
    }
    DapReport rep;
    TypeCache cache(k);
    std::size_t work = 0;
    const auto& sig = k.signature();
    for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = i; j < types.size(); ++j)
            for (std::size_t l = j; l < types.size(); ++l) {
                const Structure &A0 = types[i], &A1 = types[j], &A2 = types[l];
                const std::size_t a0 = A0.size(), a1 = A1.size(), a2 = A2.size();
                const auto P01 = strong_amalgams_over_empty(A0, A1, k);
                const auto P02 = strong_amalgams_over_empty(A0, A2, k);
                const auto P12 = strong_amalgams_over_empty(A1, A2, k);
                for (const auto& p01 : P01)
                    for (const auto& p02 : P02)
                        for (const auto& p12 : P12) {
                            ++rep.families_checked;
                            // Add side 2 one point at a time on top of p01; only atoms
                            // meeting both side 0 and side 1 are free.
                            std::function<bool(const Structure&, std::size_t)> complete =
                                [&](const Structure& s, std::size_t t) -> bool {
                                if (t == a2) return true;
                                if (++work > budget) throw BudgetExceeded("3-DAP check exceeded budget");
                                std::vector<Vertex> ps02 = iota_vec(a0);
                                auto more = iota_vec(t, static_cast<Vertex>(a0));
                                ps02.insert(ps02.end(), more.begin(), more.end());
                                const QfType w02 = qf_type(p02, static_cast<Vertex>(a0 + t), ps02);
                                std::vector<Vertex> ps12 = iota_vec(a1);
                                more = iota_vec(t, static_cast<Vertex>(a1));
                                ps12.insert(ps12.end(), more.begin(), more.end());
                                const QfType w12 = qf_type(p12, static_cast<Vertex>(a1 + t), ps12);
                                const std::size_t M = a0 + a1 + t;
                                std::vector<int> tr02(M, -1), tr12(M, -1);
                                for (std::size_t v = 0; v < a0; ++v) tr02[v] = static_cast<int>(v);
                                for (std::size_t v = 0; v < a1; ++v) tr12[a0 + v] = static_cast<int>(v);
                                for (std::size_t q = 0; q < t; ++q) {
                                    tr02[a0 + a1 + q] = static_cast<int>(a0 + q);
                                    tr12[a0 + a1 + q] = static_cast<int>(a1 + q);
                                }
                                for (const auto& p : cache.get(s))
                                    if (agrees(sig, p, tr02, w02) && agrees(sig, p, tr12, w12) &&
                                        complete(realise(s, p), t + 1))
                                        return true;
                                return false;
                            };
                            if (!complete(p01, 0)) {
                                rep.pass = false;
                                rep.counterexample = DapFamily{{A0, A1, A2}, {p01, p02, p12}};
                                return rep;
                            }
                        }
            }
    return rep;
}

} // namespace sunflower

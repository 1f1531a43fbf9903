#include "sunflower/qftype.hpp"

#include <map>
#include <mutex>

namespace sunflower {

const std::vector<std::vector<int>>& type_patterns(unsigned arity, std::size_t m) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, std::size_t>, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.try_emplace({arity, m});
    if (!fresh) return it->second;
    auto& out = it->second;
    std::vector<int> cur(arity, -1);
    const int top = static_cast<int>(m) - 1;
    for (;;) {
        for (int e : cur)
            if (e < 0) {
                out.push_back(cur);
                break;
            }
        std::size_t i = arity;
        while (i > 0 && cur[i - 1] == top) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < arity; ++j) cur[j] = -1;
    }
    return out;
}

QfType empty_type(const Signature& sig, std::vector<Vertex> params) {
    QfType p;
    p.atoms.resize(sig.size());
    for (std::size_t r = 0; r < sig.size(); ++r)
        p.atoms[r].assign(type_patterns(sig.arity(r), params.size()).size(), 0);
    p.params = std::move(params);
    return p;
}

void validate_type(const Signature& sig, const QfType& p) {
    if (p.atoms.size() != sig.size()) throw InvalidArgument("type: relation count mismatch");
    for (std::size_t r = 0; r < sig.size(); ++r)
        if (p.atoms[r].size() != type_patterns(sig.arity(r), p.params.size()).size())
            throw InvalidArgument("type: atom count mismatch for '" + sig[r].name + "'");
    for (std::size_t i = 0; i < p.params.size(); ++i)
        for (std::size_t j = i + 1; j < p.params.size(); ++j)
            if (p.params[i] == p.params[j]) throw InvalidArgument("type: repeated parameter");
}

QfType qf_type(const Structure& s, Vertex v, std::span<const Vertex> params) {
    if (v >= s.size()) throw InvalidArgument("qf_type: vertex out of range");
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] >= s.size()) throw InvalidArgument("qf_type: parameter out of range");
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw InvalidArgument("qf_type: repeated parameter");
    }
    return qf_type_of(s, v, params);
}

Structure realise(const Structure& base, const QfType& p) {
    const auto& sig = base.signature();
    const std::size_t m = base.size();
    if (p.params.size() != m) throw InvalidArgument("realise: parameter count mismatch");
    validate_type(sig, p);
    auto rels = base.all_tuples();
    const auto x = static_cast<Vertex>(m);
    for (std::size_t r = 0; r < sig.size(); ++r) {
        const auto& pats = type_patterns(sig.arity(r), m);
        for (std::size_t j = 0; j < pats.size(); ++j) {
            if (!p.atoms[r][j]) continue;
            Tuple t;
            for (int e : pats[j]) t.push_back(e < 0 ? x : static_cast<Vertex>(e));
            rels[r].push_back(std::move(t));
        }
    }
    return Structure(sig, m + 1, std::move(rels));
}

std::size_t atom_count(const Signature& sig, std::size_t m) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < sig.size(); ++r) n += type_patterns(sig.arity(r), m).size();
    return n;
}

} // namespace sunflower

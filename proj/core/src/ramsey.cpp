#include "sunflower/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace sunflower {

namespace {

BigInt big_binom(const BigInt& m, unsigned n) {
    if (m < n) return 0;
    BigInt acc = 1;
    for (unsigned i = 0; i < n; ++i) acc = acc * (m - i) / (i + 1);
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational eval(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

// All set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<unsigned>> set_partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> a(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned mx) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (unsigned b = 0; b <= mx + (i > 0 ? 1 : 0); ++b) {
            a[i] = b;
            rec(i + 1, std::max(mx, b));
        }
    };
    if (n == 0) return {{}};
    rec(0, 0);
    return out;
}

} // namespace

// ---- suitable n-sets --------------------------------------------------------

std::vector<Rational> suitable_polynomial(const SuitableParams& p) {
    // prod_{i<n} (eps x - i) / n!  -  a0 x^n
    std::vector<Rational> poly{1};
    for (unsigned i = 0; i < p.n; ++i) {
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d] * p.epsilon;
            next[d] -= poly[d] * Rational(i);
        }
        poly = std::move(next);
    }
    const Rational nf(factorial(p.n));
    for (auto& c : poly) c /= nf;
    poly[p.n] -= p.a0;
    return poly;
}

namespace {

// 1 + max |c_i / c_n|: every real root lies strictly below it.
BigInt root_bound(const std::vector<Rational>& poly) {
    const Rational lead = poly.back();
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        Rational q = poly[i] / lead;
        if (q < 0) q = -q;
        m = std::max(m, q);
    }
    return floor_of(m) + 2;
}

} // namespace

SuitableParams suitable_params(unsigned n, const Rational& a1) {
    if (n < 2) throw InvalidArgument("suitable_params: n must be at least 2");
    if (a1 <= 0 || a1 >= 1) throw InvalidArgument("suitable_params: a1 must lie in (0, 1)");
    SuitableParams p;
    p.n = n;
    p.a1 = a1;
    p.epsilon = Rational(1, 2);
    for (unsigned t = 1;; ++t) {
        const Rational eps(BigInt(1), BigInt(1) << t);
        if (eps * n < 1 && rpow(1 - eps * n, n) > 1 - a1) {
            p.epsilon = eps;
            break;
        }
        if (t > 4096) throw InternalConsistency("suitable_params: no epsilon found");
    }
    p.a0 = rpow(p.epsilon, n) / Rational(2 * factorial(n));
    const auto poly = suitable_polynomial(p);
    const BigInt top = root_bound(poly);
    BigInt c = top;
    while (c >= 1 && eval(poly, Rational(c)) > 0) --c;
    p.c_min = (c + 1).convert_to<std::uint64_t>();
    return p;
}

bool check_suitable_params(const SuitableParams& p, std::uint64_t span) {
    if (p.epsilon <= 0 || p.epsilon * p.n >= 1) return false;
    if (!(rpow(1 - p.epsilon * p.n, p.n) > 1 - p.a1)) return false;
    if (p.a0 <= 0 || p.a0 >= 1) return false;
    const auto poly = suitable_polynomial(p);
    if (!(poly.back() > 0)) return false;
    const BigInt top = root_bound(poly);
    BigInt hi = BigInt(p.c_min) + span;
    if (hi < top) hi = top;
    for (BigInt c = p.c_min; c <= hi; ++c)
        if (!(eval(poly, Rational(c)) > 0)) return false;
    return true;
}

SuitableCounts count_suitable(const std::vector<std::vector<Vertex>>& parts,
                              const std::vector<Colouring>& colourings, CountMethod method) {
    const auto n = static_cast<unsigned>(parts.size());
    const std::size_t s = colourings.size();
    if (n == 0) throw InvalidArgument("count_suitable: no parts");
    for (const auto& chi : colourings)
        for (const auto& part : parts)
            for (auto v : part)
                if (v >= chi.values.size()) throw InvalidArgument("count_suitable: colouring not total");
    SuitableCounts out;
    out.mono.assign(s, std::vector<BigInt>(n, 0));
    out.hetero.assign(s, 0);

    if (method == CountMethod::Enumerate) {
        std::vector<std::pair<Vertex, unsigned>> all;
        for (unsigned i = 0; i < n; ++i)
            for (auto v : parts[i]) all.emplace_back(v, i);
        std::vector<std::size_t> idx(n);
        std::function<void(unsigned, std::size_t)> rec = [&](unsigned d, std::size_t from) {
            if (d == n) {
                std::vector<unsigned> cnt(n, 0);
                for (auto j : idx) ++cnt[all[j].second];
                const bool inside = std::count(cnt.begin(), cnt.end(), n) == 1;
                const bool transversal = std::all_of(cnt.begin(), cnt.end(), [](unsigned x) { return x == 1; });
                bool all_mono = inside, all_het = transversal;
                for (std::size_t r = 0; r < s; ++r) {
                    std::vector<std::uint64_t> cs;
                    for (auto j : idx) cs.push_back(colourings[r].values[all[j].first]);
                    std::sort(cs.begin(), cs.end());
                    const bool mono = cs.front() == cs.back();
                    const bool het = std::adjacent_find(cs.begin(), cs.end()) == cs.end();
                    if (inside && mono) ++out.mono[r][all[idx[0]].second];
                    if (transversal && het) ++out.hetero[r];
                    all_mono = all_mono && mono;
                    all_het = all_het && het;
                }
                if (all_mono || all_het) ++out.jointly_suitable;
                return;
            }
            for (std::size_t j = from; j < all.size(); ++j) {
                idx[d] = j;
                rec(d + 1, j + 1);
            }
        };
        rec(0, 0);
        return out;
    }

    // Tally path: colour class sizes per part.
    std::vector<std::vector<std::map<std::uint64_t, BigInt>>> tally(s, std::vector<std::map<std::uint64_t, BigInt>>(n));
    for (std::size_t r = 0; r < s; ++r)
        for (unsigned i = 0; i < n; ++i)
            for (auto v : parts[i]) ++tally[r][i][colourings[r].values[v]];
    for (std::size_t r = 0; r < s; ++r)
        for (unsigned i = 0; i < n; ++i)
            for (const auto& [q, m] : tally[r][i]) out.mono[r][i] += big_binom(m, n);

    // Heterochromatic transversals by Moebius inversion over set partitions of
    // the n positions: sum_pi mu(pi) prod_{B in pi} sum_q prod_{i in B} |V_i^q|.
    static const BigInt fact[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};
    if (n > 9) throw BudgetExceeded("count_suitable: tally path supports n <= 9");
    const auto pis = set_partitions(n);
    for (std::size_t r = 0; r < s; ++r) {
        BigInt total = 0;
        for (const auto& pi : pis) {
            const unsigned blocks = *std::max_element(pi.begin(), pi.end()) + 1;
            BigInt mu = 1, prod = 1;
            for (unsigned b = 0; b < blocks; ++b) {
                std::vector<unsigned> members;
                for (unsigned i = 0; i < n; ++i)
                    if (pi[i] == b) members.push_back(i);
                const auto sz = members.size();
                mu *= fact[sz - 1];
                if (sz % 2 == 0) mu = -mu;
                BigInt sum = 0;
                for (const auto& [q, m0] : tally[r][members[0]]) {
                    BigInt term = m0;
                    for (std::size_t t = 1; t < sz && term != 0; ++t) {
                        auto it = tally[r][members[t]].find(q);
                        term = it == tally[r][members[t]].end() ? BigInt(0) : term * it->second;
                    }
                    sum += term;
                }
                prod *= sum;
            }
            total += mu * prod;
        }
        out.hetero[r] = total;
    }

    if (s == 1) {
        out.jointly_suitable = out.hetero[0];
        for (unsigned i = 0; i < n; ++i) out.jointly_suitable += out.mono[0][i];
        return out;
    }
    // Several colourings: group vertices by their colour vector.
    std::vector<std::map<std::vector<std::uint64_t>, BigInt>> keys(n);
    for (unsigned i = 0; i < n; ++i)
        for (auto v : parts[i]) {
            std::vector<std::uint64_t> key(s);
            for (std::size_t r = 0; r < s; ++r) key[r] = colourings[r].values[v];
            ++keys[i][key];
        }
    for (unsigned i = 0; i < n; ++i)
        for (const auto& [k, m] : keys[i]) out.jointly_suitable += big_binom(m, n);
    std::vector<const std::vector<std::uint64_t>*> pick(n);
    std::function<void(unsigned, const BigInt&)> rec = [&](unsigned i, const BigInt& mult) {
        if (i == n) {
            out.jointly_suitable += mult;
            return;
        }
        for (const auto& [k, m] : keys[i]) {
            bool ok = true;
            for (unsigned j = 0; j < i && ok; ++j)
                for (std::size_t r = 0; r < s; ++r)
                    if ((*pick[j])[r] == k[r]) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            pick[i] = &k;
            rec(i + 1, mult * m);
        }
    };
    rec(0, 1);
    return out;
}

bool suitable_dichotomy(const SuitableParams& p, const std::vector<std::vector<Vertex>>& parts,
                        const Colouring& chi) {
    if (parts.size() != p.n) throw InvalidArgument("suitable_dichotomy: need n parts");
    const std::size_t c = parts[0].size();
    for (const auto& part : parts)
        if (part.size() != c) throw InvalidArgument("suitable_dichotomy: parts must have equal size");
    const auto counts = count_suitable(parts, {chi});
    const Rational cn = rpow(Rational(c), p.n);
    for (const auto& m : counts.mono[0])
        if (Rational(m) > p.a0 * cn) return true;
    return Rational(counts.hetero[0]) > (1 - p.a1) * cn;
}

// ---- probabilistic construction ----------------------------------------------

Rational default_epsilon(unsigned g) {
    if (g < 2) throw InvalidArgument("girth bound must be at least 2");
    for (unsigned t = 1;; ++t) {
        const Rational eps(BigInt(1), BigInt(1) << t);
        if (eps < Rational(1, g)) return eps;
    }
}

Rational edge_probability(std::uint64_t c, unsigned n, const Rational& eps) {
    if (c == 0) throw InvalidArgument("edge_probability: c must be positive");
    if (eps <= 0 || eps >= 1) throw InvalidArgument("edge_probability: epsilon must lie in (0, 1)");
    const BigInt a = boost::multiprecision::numerator(eps);
    const auto b = boost::multiprecision::denominator(eps).convert_to<unsigned>();
    // largest X with X^b <= c^a 2^(48 b); then c^eps ~ X / 2^48
    const BigInt target = boost::multiprecision::pow(BigInt(c), a.convert_to<unsigned>()) << (48 * b);
    BigInt lo = BigInt(1) << 48, hi = BigInt(c) << 49;
    while (lo + 1 < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, b) <= target) lo = mid;
        else hi = mid;
    }
    const Rational root(lo, BigInt(1) << 48);
    return root / rpow(Rational(c), n - 1);
}

GenParams make_gen_params(unsigned n, unsigned s, unsigned g, std::uint64_t c) {
    if (n < 2 || s < 1 || g < 2) throw InvalidArgument("need n >= 2, s >= 1, g >= 2");
    GenParams p;
    p.n = n;
    p.s = s;
    p.g = g;
    p.epsilon = default_epsilon(g);
    p.c = c;
    p.p = edge_probability(c, n, p.epsilon);
    return p;
}

FailureBound failure_bound(const GenParams& params, const Rational& a) {
    const long double c = static_cast<long double>(params.c);
    const long double n = params.n, s = params.s;
    const long double eps = to_long_double(params.epsilon);
    const long double av = to_long_double(a);
    FailureBound fb;
    fb.log_value = -av * std::pow(c, 1 + eps) + (c * n * s + c * n + 1) * std::log(c) + c * n * s * std::log(n);
    fb.value = std::exp(fb.log_value);
    fb.vacuous = fb.log_value >= 0;
    return fb;
}

BigInt count_potential_cycles(std::size_t vertices, unsigned n, unsigned m) {
    if (m < 2 || n < 2) throw InvalidArgument("count_potential_cycles: need m, n >= 2");
    if (vertices < m) return 0;
    BigInt seqs = 1;
    for (std::size_t i = 0; i < m; ++i) seqs *= vertices - i;
    const BigInt per = big_binom(BigInt(vertices - 2), n - 2);
    return seqs * boost::multiprecision::pow(per, m);
}

} // namespace sunflower

#include "torlist/surface.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "torlist/errors.hpp"
#include "torlist/graph_algos.hpp"

namespace torlist {

Rational Rational::make(long long num, long long den) {
    if (den == 0) throw invalid_parameter("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

bool rational_less(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

long long rational_ceil(const Rational& a) {
    long long q = a.num / a.den;
    if (a.num % a.den != 0 && a.num > 0) ++q;
    return q;
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x < 2) return x;
    std::uint64_t r = x;
    std::uint64_t next = (r + x / r) / 2;
    while (next < r) {
        r = next;
        next = (r + x / r) / 2;
    }
    while ((r + 1) <= x / (r + 1)) ++r; // guard against under-shoot
    while (r > x / r) --r;
    return r;
}

namespace {

constexpr long long kGenusCap = 1'000'000'000'000'000ll; // keeps 48g in range

} // namespace

long long heawood(long long g) {
    if (g < 1) throw invalid_parameter("Heawood number needs genus >= 1");
    if (g > kGenusCap) throw limit_error("genus too large for exact arithmetic");
    return (7 + static_cast<long long>(isqrt(1 + 48ull * g))) / 2;
}

long long heawood_nonorientable(long long k) {
    if (k < 1) throw invalid_parameter("nonorientable Heawood number needs genus >= 1");
    if (k > kGenusCap) throw limit_error("genus too large for exact arithmetic");
    return (7 + static_cast<long long>(isqrt(1 + 24ull * k))) / 2;
}

namespace {

long long ceil_div_nonneg(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

GenusValue orientable_genus_complete(long long r) {
    if (r < 3) return {0, true, false};
    if (r > 1'000'000'000) throw limit_error("r too large for exact arithmetic");
    return {ceil_div_nonneg((r - 3) * (r - 4), 12), false, false};
}

GenusValue nonorientable_genus_complete(long long r) {
    if (r < 3) return {0, true, false};
    if (r > 1'000'000'000) throw limit_error("r too large for exact arithmetic");
    if (r == 7) return {3, false, true};
    return {ceil_div_nonneg((r - 3) * (r - 4), 6), false, false};
}

long long genus_complete_bipartite(long long m, long long n) {
    if (m < 1 || n < 1) throw invalid_parameter("part sizes must be >= 1");
    if (m > 1'000'000'000 || n > 1'000'000'000)
        throw limit_error("part sizes too large for exact arithmetic");
    long long prod = (m - 2) * (n - 2);
    if (prod <= 0) return 0;
    return ceil_div_nonneg(prod, 4);
}

long long multipartite_genus_upper(long long m, long long r) {
    if (m < 1 || r < 3) throw invalid_parameter("needs m >= 1 and r >= 3");
    if (m > 100'000'000 || r > 100'000'000 || m * r > 100'000'000)
        throw limit_error("m*r too large for exact arithmetic");
    long long value = orientable_genus_complete(r).value + (m * m - 1) * r * (r - 1) / 2;
    long long cap = ceil_div_nonneg(m * m * r * r, 2);
    if (value > cap) throw internal_error("handle count exceeded the m^2 r^2 / 2 cap");
    return value;
}

long long kierstead_choice_k3r(long long r) {
    if (r < 1) throw invalid_parameter("needs r >= 1");
    if (r > kGenusCap) throw limit_error("r too large for exact arithmetic");
    return ceil_div_nonneg(4 * r - 1, 3);
}

long long euler_degree_bound(long long g, long long n) {
    if (g < 0 || n < 3) throw invalid_parameter("needs g >= 0 and n >= 3");
    if (g > kGenusCap || n > kGenusCap)
        throw limit_error("arguments too large for exact arithmetic");
    long long num = 6 * n + 12 * (g - 1);
    long long q = num / n;
    if (num % n != 0 && num < 0) --q;
    return std::max(q, 0ll);
}

long long euler_degree_cap(long long g) {
    if (g < 0) throw invalid_parameter("needs g >= 0");
    if (g > kGenusCap) throw limit_error("genus too large for exact arithmetic");
    return g == 0 ? 5 : 12 * g + 6;
}

long long ert_bipartite_threshold(long long k) {
    if (k < 1) throw invalid_parameter("needs k >= 1");
    if (k > 32) throw limit_error("binomial(2k-1, k) overflows past k = 32");
    __int128 value = 1;
    for (long long i = 1; i <= k - 1; ++i) {
        value = value * (k + i) / i; // binomial(k+i, i) stays integral
    }
    return static_cast<long long>(value);
}

long long jump_upper_bound(long long g) {
    long long h = heawood(g);
    if (h * h > 49 * g) throw internal_error("Heawood number exceeded 7 sqrt(g)");
    return h;
}

namespace {

// Dinic max-flow on a small integer network.
struct MaxFlow {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit MaxFlow(int n) : arcs(n) {}

    void add(int from, int to, long long cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter.assign(arcs.size(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }
};

// Does some nonempty vertex set have e(S)/|S| strictly above a/b?
bool density_above(const Multigraph& g, long long a, long long b) {
    auto deg = g.degrees();
    long long delta = g.n ? *std::max_element(deg.begin(), deg.end()) : 0;
    long long c1 = b * delta + 2 * std::max(a, 0ll) + 1;
    int s = g.n, t = g.n + 1;
    MaxFlow mf(g.n + 2);
    for (VertexId v = 0; v < g.n; ++v) {
        mf.add(s, v, c1);
        mf.add(v, t, c1 + 2 * a - b * deg[v]);
    }
    for (const auto& [u, v] : g.edges) {
        mf.add(u, v, b);
        mf.add(v, u, b);
    }
    // min cut = c1*n - 2*max_S (b e(S) - a |S|)
    return mf.run(s, t) < c1 * static_cast<long long>(g.n);
}

} // namespace

Rational max_subgraph_density(const Multigraph& g) {
    if (g.n == 0) throw invalid_parameter("density of the empty graph is undefined");
    if (!g.is_simple()) throw precondition_error("density computation requires a simple graph");
    if (g.n > 64) throw limit_error("density computation limited to 64 vertices");
    long long m = static_cast<long long>(g.edges.size());
    if (m == 0) return Rational{0, 1};

    long long n = g.n;
    // Narrow (lo, hi] to below the minimum gap 1/n^2 between candidate
    // densities, keeping the true value inside.
    Rational lo{0, 1}, hi{m, 1};
    while (static_cast<__int128>(hi.num) * lo.den * n * n -
               static_cast<__int128>(lo.num) * hi.den * n * n >
           static_cast<__int128>(lo.den) * hi.den) {
        Rational mid = Rational::make(hi.num * lo.den + lo.num * hi.den, 2 * lo.den * hi.den);
        if (density_above(g, mid.num, mid.den))
            lo = mid;
        else
            hi = mid;
    }
    // The unique candidate p/q with q <= n in (lo, hi].
    Rational best{0, 1};
    bool found = false;
    for (long long q = 1; q <= n; ++q) {
        long long p = static_cast<long long>(static_cast<__int128>(hi.num) * q / hi.den);
        p = std::min(p, m);
        Rational cand = Rational::make(p, q);
        if (rational_less(lo, cand) && !rational_less(hi, cand)) {
            if (!found || rational_less(best, cand)) best = cand;
            found = true;
        }
    }
    if (!found) throw internal_error("density binary search lost the candidate");
    return best;
}

int bipartite_choosability_bound(const Multigraph& g) {
    if (!is_bipartite(g).ok())
        throw precondition_error("density choosability bound requires a bipartite graph");
    if (g.edges.empty()) return 1;
    return static_cast<int>(rational_ceil(max_subgraph_density(g))) + 1;
}

} // namespace torlist

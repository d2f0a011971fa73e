#include "rootdata/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dahazeta::rootdata {

RankContext::RankContext(int rank) : n(rank) {
    if (rank < 1) throw std::invalid_argument("RankContext: rank must be >= 1");
}

std::vector<int> eps_vector(const Weight& b) {
    int n = static_cast<int>(b.size());
    std::vector<int> v(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) v[i] = v[i + 1] + b[i];
    return v;
}

Weight weight_from_eps(const std::vector<int>& v) {
    Weight b(v.size() - 1);
    for (size_t i = 0; i + 1 < v.size(); ++i) b[i] = v[i] - v[i + 1];
    return b;
}

bool is_dominant(const Weight& b) {
    return std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
}

Weight dominant_rep(const Weight& b) {
    auto v = eps_vector(b);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return weight_from_eps(v);
}

YoungDiagram weight_diagram(const Weight& b) {
    if (!is_dominant(b)) throw std::invalid_argument("weight_diagram: non-dominant weight");
    auto v = eps_vector(b);
    YoungDiagram l;
    for (int x : v)
        if (x > 0) l.push_back(x);
    return l;
}

Weight diagram_weight(const YoungDiagram& l, int n) {
    if (static_cast<int>(l.size()) > n)
        throw std::invalid_argument("diagram_weight: more rows than the rank allows");
    Weight b(n, 0);
    for (size_t i = 0; i < l.size(); ++i) {
        int next = i + 1 < l.size() ? l[i + 1] : 0;
        if (l[i] < next || l[i] <= 0)
            throw std::invalid_argument("diagram_weight: rows must be weakly decreasing positive");
        b[i] = l[i] - next;
    }
    return b;
}

Rat pairing(const Weight& b, const Weight& c) {
    if (b.size() != c.size()) throw std::invalid_argument("pairing: rank mismatch");
    auto v = eps_vector(b), w = eps_vector(c);
    long s = 0, sv = 0, sw = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        s += static_cast<long>(v[i]) * w[i];
        sv += v[i];
        sw += w[i];
    }
    return Rat(s) - Rat(sv) * Rat(sw) / Rat(static_cast<long>(v.size()));
}

Rat pairing_root(const Weight& b, int i, int j) {
    auto v = eps_vector(b);
    return Rat(v[i - 1] - v[j - 1]);
}

Rat rho_pairing(const Weight& b) {
    // (rho, omega_r) = r (n+1-r) / 2
    int n = static_cast<int>(b.size());
    Rat s = 0;
    for (int r = 1; r <= n; ++r)
        s += Rat(b[r - 1]) * Rat(static_cast<long>(r) * (n + 1 - r), 2);
    return s;
}

Rat norm2(const Weight& b) { return pairing(b, b); }

Rat omega_pairing(int r, const Weight& b, int n) {
    Weight w(n, 0);
    w[r - 1] = 1;
    return pairing(w, b);
}

Rat omega_norm2(int r, int n) {
    return Rat(static_cast<long>(r) * (n + 1 - r), n + 1);
}

Rat rho_pairing_two_ways(const Weight& b) {
    // direct sum over positive roots eps_i - eps_j, i < j
    auto v = eps_vector(b);
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) s += Rat(v[i] - v[j], 2);
    return s;
}

bool dominance_leq(const Weight& b, const Weight& c) {
    if (b.size() != c.size()) throw std::invalid_argument("dominance_leq: rank mismatch");
    auto v = eps_vector(b), w = eps_vector(c);
    // c - b must be in the nonnegative root cone: equal totals and
    // nonnegative partial sums of the difference
    long sv = std::accumulate(v.begin(), v.end(), 0L);
    long sw = std::accumulate(w.begin(), w.end(), 0L);
    if ((sw - sv) % static_cast<long>(v.size()) != 0) return false;
    long shift = (sw - sv) / static_cast<long>(v.size());  // lift b to equal total
    long run = 0;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        run += w[i] - (v[i] + shift);
        if (run < 0) return false;
    }
    return true;
}

std::vector<Weight> dominance_cone(const Weight& b) {
    // BFS downward: subtract positive roots, keep dominant representatives
    std::set<Weight> seen;
    std::vector<Weight> queue{b}, out;
    seen.insert(b);
    int n = static_cast<int>(b.size());
    while (!queue.empty()) {
        Weight cur = queue.back();
        queue.pop_back();
        out.push_back(cur);
        auto v = eps_vector(cur);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (i == j || v[i] <= v[j]) continue;  // need v_i > v_j to stay near dominant
                auto w = v;
                w[i] -= 1;
                w[j] += 1;
                std::sort(w.begin(), w.end(), std::greater<int>());
                Weight d = weight_from_eps(w);
                if (!is_dominant(d)) continue;
                if (!dominance_leq(d, b)) continue;
                if (seen.insert(d).second) queue.push_back(d);
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Weight> weyl_orbit(const Weight& b) {
    auto v = eps_vector(dominant_rep(b));
    std::sort(v.begin(), v.end());
    std::vector<Weight> out;
    do {
        out.push_back(weight_from_eps(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Weight apply_perm(const Perm& w, const Weight& b) {
    auto v = eps_vector(b);
    std::vector<int> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[w[i]] = v[i];
    return weight_from_eps(r);
}

Weight simple_reflect(int i, const Weight& b) {
    auto v = eps_vector(b);
    std::swap(v[i - 1], v[i]);
    return weight_from_eps(v);
}

Weight iota(const Weight& b) {
    Weight r(b.rbegin(), b.rend());
    return r;
}

Perm longest_element(int n) {
    Perm w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = n - i;
    return w;
}

Perm u_r_perm(int r, int n) {
    // u_r = w0 * w0^{(r)}: sends {0..r-1} -> {n+1-r..n}, {r..n} -> {0..n-r}
    Perm w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = i < r ? n + 1 - r + i : i - r;
    return w;
}

Perm perm_inverse(const Perm& w) {
    Perm r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<int>(i);
    return r;
}

int perm_length(const Perm& w) {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

std::vector<int> reduced_word(const Perm& w) {
    Perm a = w;
    std::vector<int> collected;
    for (;;) {
        bool descent = false;
        for (size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);          // a := a * s_{i+1}
                collected.push_back(static_cast<int>(i) + 1);
                descent = true;
                break;
            }
        }
        if (!descent) break;
    }
    std::reverse(collected.begin(), collected.end());  // w = s_{ik} ... s_{i1} reversed
    return collected;
}

YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b) {
    YoungDiagram r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        r[i] = std::max(x, y);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

YoungDiagram diagram_transpose(const YoungDiagram& a) {
    if (a.empty()) return {};
    YoungDiagram r(a[0], 0);
    for (int col = 0; col < a[0]; ++col)
        for (size_t row = 0; row < a.size(); ++row)
            if (a[row] > col) ++r[col];
    return r;
}

long diagram_size(const YoungDiagram& a) {
    return std::accumulate(a.begin(), a.end(), 0L);
}

int arm(const YoungDiagram& l, int row, int col) { return l[row] - col - 1; }

int leg(const YoungDiagram& l, int row, int col) {
    int c = 0;
    for (size_t r = row + 1; r < l.size(); ++r)
        if (l[r] > col) ++c;
    return c;
}

}  // namespace dahazeta::rootdata

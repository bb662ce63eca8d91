#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

namespace {

int succ(int v, int n) { return v == n ? 1 : v + 1; }

bool strictly_between(int lo, int x, int hi) { return lo < x && x < hi; }

bool chords_cross(const Pair& p, const Pair& q) {
    if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) {
        return false;
    }
    const bool c_in = strictly_between(p.first, q.first, p.second);
    const bool d_in = strictly_between(p.first, q.second, p.second);
    return c_in != d_in;
}

}  // namespace

bool admissible(const std::vector<Pair>& props, int n) {
    const int k = static_cast<int>(props.size());
    if (n < k + 4) {
        return false;
    }
    for (std::size_t a = 0; a < props.size(); ++a) {
        for (std::size_t b = a + 1; b < props.size(); ++b) {
            if (chords_cross(props[a], props[b])) {
                return false;
            }
        }
    }
    for (unsigned subset = 1; subset < (1U << k); ++subset) {
        std::set<int> vertices;
        int size = 0;
        for (int r = 0; r < k; ++r) {
            if (subset & (1U << r)) {
                ++size;
                const auto [i, j] = props[r];
                vertices.insert({i, succ(i, n), j, succ(j, n)});
            }
        }
        if (static_cast<int>(vertices.size()) < size + 3) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Pair>> admissible_sets(int k, int n) {
    std::vector<Pair> all;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            all.emplace_back(i, j);
        }
    }
    std::vector<std::vector<Pair>> out;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int depth, int start) {
        if (depth == k) {
            std::vector<Pair> props;
            for (int idx : pick) {
                props.push_back(all[idx]);
            }
            if (admissible(props, n)) {
                out.push_back(props);
            }
            return;
        }
        for (int idx = start; idx < static_cast<int>(all.size()); ++idx) {
            pick[depth] = idx;
            rec(depth + 1, idx + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t decorated_permutations(int k, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        int anti = 0;
        int fixed = 0;
        for (int i = 0; i < n; ++i) {
            anti += perm[i] < i ? 1 : 0;
            fixed += perm[i] == i ? 1 : 0;
        }
        // Each fixed point is coloured either way; colour "anti" adds one.
        for (unsigned colours = 0; colours < (1U << fixed); ++colours) {
            if (anti + std::popcount(colours) == k) {
                ++count;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::size_t le_fillings(int k, int n) {
    const int width = n - k;
    std::size_t count = 0;
    std::vector<int> shape(k, 0);
    std::function<void(int, int)> shapes = [&](int row, int max_len) {
        if (row == k) {
            std::vector<std::pair<int, int>> boxes;
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < shape[r]; ++c) {
                    boxes.emplace_back(r, c);
                }
            }
            for (unsigned long fill = 0; fill < (1UL << boxes.size()); ++fill) {
                auto plus = [&](int r, int c) {
                    for (std::size_t b = 0; b < boxes.size(); ++b) {
                        if (boxes[b] == std::pair{r, c}) {
                            return ((fill >> b) & 1UL) != 0;
                        }
                    }
                    return false;
                };
                bool ok = true;
                for (const auto& [r, c] : boxes) {
                    if (plus(r, c)) {
                        continue;
                    }
                    bool left = false;
                    bool above = false;
                    for (int cc = 0; cc < c; ++cc) {
                        left = left || plus(r, cc);
                    }
                    for (int rr = 0; rr < r; ++rr) {
                        above = above || plus(rr, c);
                    }
                    ok = ok && !(left && above);
                }
                count += ok ? 1 : 0;
            }
            return;
        }
        for (int len = 0; len <= max_len; ++len) {
            shape[row] = len;
            shapes(row + 1, len);
        }
    };
    shapes(0, width);
    return count;
}

bool vdp_search(const wlpw::LeGraph& g, SubsetMask sources, SubsetMask targets) {
    if (std::popcount(sources) != std::popcount(targets)) {
        throw std::invalid_argument("source and target sets differ in size");
    }
    std::vector<std::vector<int>> out(g.node_count);
    for (const auto& [a, b] : g.arcs) {
        out[a].push_back(b);
    }
    std::vector<int> src;
    std::vector<int> tgt;
    for (int a = 1; a <= g.n; ++a) {
        if (sources & wlpw::vertex_bit(a)) {
            src.push_back(g.label_node(a));
        }
        if (targets & wlpw::vertex_bit(a)) {
            tgt.push_back(g.label_node(a));
        }
    }
    std::vector<bool> used(g.node_count, false);
    std::vector<bool> target_used(g.node_count, false);
    std::function<bool(std::size_t)> route;
    std::function<bool(int, std::size_t)> walk = [&](int node, std::size_t which) -> bool {
        if (std::find(tgt.begin(), tgt.end(), node) != tgt.end() && !target_used[node]) {
            target_used[node] = true;
            if (route(which + 1)) {
                return true;
            }
            target_used[node] = false;
        }
        for (int next : out[node]) {
            if (used[next]) {
                continue;
            }
            used[next] = true;
            if (walk(next, which)) {
                return true;
            }
            used[next] = false;
        }
        return false;
    };
    route = [&](std::size_t which) -> bool {
        if (which == src.size()) {
            return true;
        }
        const int s = src[which];
        if (used[s]) {
            return false;
        }
        used[s] = true;
        if (walk(s, which)) {
            return true;
        }
        used[s] = false;
        return false;
    };
    return route(0);
}

std::vector<SubsetMask> transversal_bases(const std::vector<SubsetMask>& supports, int n) {
    const int k = static_cast<int>(supports.size());
    std::vector<SubsetMask> out;
    for (SubsetMask b = 0; b < (SubsetMask{1} << n); ++b) {
        if (std::popcount(b) != k) {
            continue;
        }
        std::vector<int> cols;
        for (int a = 1; a <= n; ++a) {
            if (b & wlpw::vertex_bit(a)) {
                cols.push_back(a);
            }
        }
        bool found = false;
        do {
            bool ok = true;
            for (int r = 0; r < k; ++r) {
                ok = ok && (supports[r] & wlpw::vertex_bit(cols[r])) != 0;
            }
            found = found || ok;
        } while (!found && std::next_permutation(cols.begin(), cols.end()));
        if (found) {
            out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end(), wlpw::lex_less);
    return out;
}

bool exchange_axiom(const std::vector<SubsetMask>& bases) {
    const std::unordered_set<SubsetMask> all(bases.begin(), bases.end());
    for (SubsetMask a : bases) {
        for (SubsetMask b : bases) {
            const SubsetMask only_a = a & ~b;
            const SubsetMask only_b = b & ~a;
            for (SubsetMask x = only_a; x; x &= x - 1) {
                const SubsetMask drop = x & (~x + 1);
                bool found = false;
                for (SubsetMask y = only_b; y && !found; y &= y - 1) {
                    const SubsetMask add = y & (~y + 1);
                    found = all.count((a & ~drop) | add) > 0;
                }
                if (!found) {
                    return false;
                }
            }
        }
    }
    return true;
}

Rational leibniz_det(const RationalMatrix& m) {
    const int size = static_cast<int>(m.size());
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < size; ++i) {
            for (int j = i + 1; j < size; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Rational term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < size; ++i) {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) {
    x %= p;
    return x < 0 ? x + p : x;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1;
    std::int64_t base = mod(a, p);
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = static_cast<std::int64_t>((__int128)result * base % p);
        }
        base = static_cast<std::int64_t>((__int128)base * base % p);
    }
    return result;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = inverse(m[rank][c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) {
                continue;
            }
            const std::int64_t f = static_cast<std::int64_t>((__int128)m[r][c] * inv % p);
            for (std::size_t cc = c; cc < cols; ++cc) {
                m[r][cc] = mod(m[r][cc] - static_cast<std::int64_t>((__int128)f * m[rank][cc] % p), p);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<long> betti_mod_p(const wlpw::ChainComplex& complex, std::int64_t p) {
    const int top = complex.top_degree();
    std::vector<std::size_t> ranks(top + 2, 0);
    wlpw::SparseColumn col;
    for (int d = 1; d <= top; ++d) {
        std::vector<std::vector<std::int64_t>> m(complex.generators(d - 1),
                                                 std::vector<std::int64_t>(complex.generators(d), 0));
        for (std::size_t j = 0; j < complex.generators(d); ++j) {
            complex.boundary_column(d, j, col);
            for (const auto& [row, value] : col) {
                m[row][j] = mod(value, p);
            }
        }
        ranks[d] = rank_mod_p(std::move(m), p);
    }
    std::vector<long> betti(top + 1);
    for (int d = 0; d <= top; ++d) {
        betti[d] = static_cast<long>(complex.generators(d)) - static_cast<long>(ranks[d]) -
                   static_cast<long>(ranks[d + 1]);
    }
    return betti;
}

Rational simple_pole_residue(const std::function<Rational(const Rational&)>& numerator,
                             const std::function<Rational(const Rational&)>& denominator, int degree) {
    std::vector<Rational> xs;
    for (int i = 0; i <= degree; ++i) {
        xs.push_back(Rational(3 * i + 1, 3));
    }
    Rational n0 = 0;
    Rational d1 = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j != i) {
                denom *= xs[i] - xs[j];
            }
        }
        // Lagrange basis value and derivative at t = 0.
        Rational at_zero = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j != i) {
                at_zero *= -xs[j];
            }
        }
        Rational slope = 0;
        for (std::size_t m = 0; m < xs.size(); ++m) {
            if (m == i) {
                continue;
            }
            Rational prod = 1;
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j != i && j != m) {
                    prod *= -xs[j];
                }
            }
            slope += prod;
        }
        n0 += numerator(xs[i]) * at_zero / denom;
        d1 += denominator(xs[i]) * slope / denom;
    }
    if (d1 == 0) {
        throw std::domain_error("denominator has no simple root at zero");
    }
    return n0 / d1;
}

int denominator_factor_count(const std::vector<Pair>& props, int n) {
    int total = 0;
    for (int e = 1; e <= n; ++e) {
        int s = 0;
        for (const auto& [i, j] : props) {
            s += (i == e ? 1 : 0) + (j == e ? 1 : 0);
        }
        total += s > 0 ? s + 1 : 0;
    }
    return total;
}

}  // namespace oracle

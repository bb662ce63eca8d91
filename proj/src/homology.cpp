#include "wlpw/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wlpw {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("boundary reduction overflowed 64-bit coefficients");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("boundary reduction overflowed 64-bit coefficients");
    }
    return r;
}

// out = alpha * u + beta * v
void combine(std::int64_t alpha, const SparseColumn& u, std::int64_t beta, const SparseColumn& v, SparseColumn& out) {
    out.clear();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < u.size() || j < v.size()) {
        std::uint32_t row = 0;
        std::int64_t c = 0;
        if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
            row = u[i].first;
            c = checked_mul(alpha, u[i].second);
            ++i;
        } else if (i == u.size() || v[j].first < u[i].first) {
            row = v[j].first;
            c = checked_mul(beta, v[j].second);
            ++j;
        } else {
            row = u[i].first;
            c = checked_add(checked_mul(alpha, u[i].second), checked_mul(beta, v[j].second));
            ++i;
            ++j;
        }
        if (c != 0) {
            out.emplace_back(row, c);
        }
    }
}

// Returns g = gcd(a, b) >= 0 with x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

constexpr std::size_t kDenseSmithLimit = 4'000'000;

std::vector<mpz_class> dense_torsion(const ChainComplex& cx, int d) {
    const std::size_t rows = cx.generators(d - 1);
    const std::size_t cols = cx.generators(d);
    if (rows * cols > kDenseSmithLimit) {
        throw std::runtime_error("non-unit pivot in degree " + std::to_string(d) +
                                 " and the boundary matrix is too large for a dense Smith form");
    }
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols, 0));
    SparseColumn col;
    for (std::size_t j = 0; j < cols; ++j) {
        cx.boundary_column(d, j, col);
        for (const auto& [r, c] : col) {
            m[r][j] = static_cast<long>(c);
        }
    }
    std::vector<mpz_class> out;
    for (const auto& f : smith_invariants(std::move(m))) {
        if (abs(f) != 1) {
            out.push_back(abs(f));
        }
    }
    return out;
}

}  // namespace

std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry in the trailing block moves to (t, t).
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (sgn(m[i][j]) != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) {
                std::sort(diag.begin(), diag.end(), [](const mpz_class& a, const mpz_class& b) { return abs(a) < abs(b); });
                return diag;
            }
            std::swap(m[t], m[pr]);
            for (auto& row : m) {
                std::swap(row[t], row[pc]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m[i][t]) == 0) {
                    continue;
                }
                const mpz_class q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) {
                    m[i][j] -= q * m[t][j];
                }
                clean = clean && sgn(m[i][t]) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m[t][j]) == 0) {
                    continue;
                }
                const mpz_class q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) {
                    m[i][j] -= q * m[i][t];
                }
                clean = clean && sgn(m[t][j]) == 0;
            }
            if (!clean) {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (sgn(m[i][j]) != 0 && mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t()) == 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) {
                            m[t][jj] += m[i][jj];
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                diag.push_back(abs(m[t][t]));
                break;
            }
        }
    }
    std::sort(diag.begin(), diag.end(), [](const mpz_class& a, const mpz_class& b) { return abs(a) < abs(b); });
    return diag;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::uint32_t>>& facets) {
    std::vector<std::set<std::vector<std::uint32_t>>> by_degree;
    for (auto facet : facets) {
        std::sort(facet.begin(), facet.end());
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
        const std::size_t m = facet.size();
        if (m == 0 || m > 20) {
            throw std::invalid_argument("facets must have between 1 and 20 vertices");
        }
        if (by_degree.size() < m) {
            by_degree.resize(m);
        }
        for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
            std::vector<std::uint32_t> face;
            for (std::size_t i = 0; i < m; ++i) {
                if ((mask >> i) & 1U) {
                    face.push_back(facet[i]);
                }
            }
            by_degree[face.size() - 1].insert(std::move(face));
        }
    }
    SimplicialComplex sc;
    for (const auto& level : by_degree) {
        std::vector<std::uint32_t> flat;
        for (const auto& s : level) {
            flat.insert(flat.end(), s.begin(), s.end());
        }
        sc.flat_.push_back(std::move(flat));
    }
    return sc;
}

SimplicialComplex SimplicialComplex::order_complex(const FacePoset& poset, const std::vector<std::size_t>& cells) {
    const std::size_t m = cells.size();
    std::vector<std::vector<std::uint32_t>> above(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (poset.dim(cells[i]) >= poset.dim(cells[j]) && poset.leq(cells[j], cells[i])) {
                throw std::invalid_argument("order_complex: cells are not sorted along a linear extension");
            }
            if (poset.leq(cells[i], cells[j])) {
                above[i].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }
    SimplicialComplex sc;
    std::vector<std::uint32_t> level(m);
    std::iota(level.begin(), level.end(), 0U);
    for (std::size_t width = 1; !level.empty(); ++width) {
        std::vector<std::uint32_t> next;
        const std::size_t count = level.size() / width;
        for (std::size_t s = 0; s < count; ++s) {
            const std::uint32_t* simplex = level.data() + s * width;
            for (std::uint32_t v : above[simplex[width - 1]]) {
                next.insert(next.end(), simplex, simplex + width);
                next.push_back(v);
            }
        }
        sc.flat_.push_back(std::move(level));
        level = std::move(next);
    }
    return sc;
}

std::size_t SimplicialComplex::generators(int degree) const {
    if (degree < 0 || degree > top_degree()) {
        return 0;
    }
    return flat_[degree].size() / static_cast<std::size_t>(degree + 1);
}

std::vector<std::uint32_t> SimplicialComplex::simplex(int degree, std::size_t j) const {
    const std::size_t w = static_cast<std::size_t>(degree) + 1;
    return {flat_.at(degree).begin() + static_cast<long>(j * w),
            flat_.at(degree).begin() + static_cast<long>((j + 1) * w)};
}

std::size_t SimplicialComplex::find(int degree, const std::uint32_t* vertices) const {
    const std::size_t w = static_cast<std::size_t>(degree) + 1;
    const auto& flat = flat_.at(degree);
    std::size_t lo = 0;
    std::size_t hi = flat.size() / w;
    const std::size_t count = hi;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (std::lexicographical_compare(flat.begin() + static_cast<long>(mid * w),
                                         flat.begin() + static_cast<long>((mid + 1) * w), vertices, vertices + w)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < count && std::equal(vertices, vertices + w, flat.begin() + static_cast<long>(lo * w))) {
        return lo;
    }
    return count;
}

void SimplicialComplex::boundary_column(int d, std::size_t j, SparseColumn& out) const {
    out.clear();
    const std::size_t w = static_cast<std::size_t>(d) + 1;
    const std::uint32_t* s = flat_.at(d).data() + j * w;
    std::uint32_t face[32];
    for (std::size_t i = 0; i < w; ++i) {
        std::size_t f = 0;
        for (std::size_t t = 0; t < w; ++t) {
            if (t != i) {
                face[f++] = s[t];
            }
        }
        const std::size_t idx = find(d - 1, face);
        if (idx == generators(d - 1)) {
            throw std::logic_error("simplicial complex is not closed under faces");
        }
        out.emplace_back(static_cast<std::uint32_t>(idx), (i % 2 == 0) ? 1 : -1);
    }
    std::sort(out.begin(), out.end());
}

CellularComplex::CellularComplex(const FacePoset& poset, const std::vector<std::size_t>& cells) {
    int top = -1;
    for (std::size_t c : cells) {
        top = std::max(top, poset.dim(c));
    }
    cells_by_degree_.assign(top + 1, {});
    std::map<std::size_t, std::uint32_t> local;
    for (std::size_t c : cells) {
        auto& level = cells_by_degree_[poset.dim(c)];
        local[c] = static_cast<std::uint32_t>(level.size());
        level.push_back(c);
    }
    columns_.assign(top + 1, {});
    std::map<std::pair<std::size_t, std::size_t>, int> inc;
    auto facets = [&](std::size_t c) {
        std::vector<std::size_t> out;
        for (std::size_t f : poset.covers_down(c)) {
            if (poset.dim(f) != poset.dim(c) - 1 || local.count(f) == 0) {
                throw std::logic_error("face poset is not graded or the cell set is not downward closed");
            }
            out.push_back(f);
        }
        return out;
    };
    for (int d = 1; d <= top; ++d) {
        for (std::size_t c : cells_by_degree_[d]) {
            const auto fs = facets(c);
            std::map<std::size_t, int> sign;
            if (d == 1) {
                if (fs.size() != 2) {
                    throw std::logic_error("a 1-cell without exactly two vertices");
                }
                sign[fs[0]] = 1;
                sign[fs[1]] = -1;
            } else {
                sign[fs[0]] = 1;
                std::vector<std::size_t> stack{fs[0]};
                while (!stack.empty()) {
                    const std::size_t f = stack.back();
                    stack.pop_back();
                    for (std::size_t g : facets(f)) {
                        std::vector<std::size_t> others;
                        for (std::size_t f2 : fs) {
                            if (f2 != f && poset.leq(g, f2)) {
                                others.push_back(f2);
                            }
                        }
                        if (others.size() != 1) {
                            throw std::logic_error("face poset violates the diamond property");
                        }
                        const std::size_t f2 = others[0];
                        const int s = -sign[f] * inc.at({f, g}) * inc.at({f2, g});
                        auto it = sign.find(f2);
                        if (it == sign.end()) {
                            sign[f2] = s;
                            stack.push_back(f2);
                        } else if (it->second != s) {
                            throw std::logic_error("inconsistent incidence signs");
                        }
                    }
                }
                if (sign.size() != fs.size()) {
                    throw std::logic_error("facet graph of a cell is disconnected");
                }
            }
            SparseColumn col;
            for (const auto& [f, s] : sign) {
                inc[{c, f}] = s;
                col.emplace_back(local.at(f), s);
            }
            std::sort(col.begin(), col.end());
            columns_[d].push_back(std::move(col));
        }
    }
}

long HomologyResult::euler_characteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < betti.size(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * betti[d];
    }
    return chi;
}

long HomologyResult::alternating_generator_sum() const {
    long chi = 0;
    for (std::size_t d = 0; d < generators.size(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(generators[d]);
    }
    return chi;
}

HomologyResult homology(const ChainComplex& cx) {
    const int top = cx.top_degree();
    HomologyResult res;
    if (top < 0) {
        return res;
    }
    res.generators.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        res.generators[d] = cx.generators(d);
    }
    res.ranks.assign(top + 2, 0);
    res.torsion.assign(top + 1, {});

    std::vector<char> cleared(res.generators[top], 0);
    SparseColumn col;
    SparseColumn tmp;
    SparseColumn tmp2;
    for (int d = top; d >= 1; --d) {
        const std::size_t rows = res.generators[d - 1];
        std::vector<std::int64_t> pivot_of(rows, -1);
        std::vector<SparseColumn> stored;
        std::vector<char> next_cleared(rows, 0);
        bool unit = true;
        for (std::size_t j = 0; j < res.generators[d]; ++j) {
            if (cleared[j] != 0) {
                continue;
            }
            cx.boundary_column(d, j, col);
            while (!col.empty()) {
                const std::uint32_t low = col.back().first;
                const std::int64_t a = col.back().second;
                if (pivot_of[low] < 0) {
                    break;
                }
                SparseColumn& p = stored[pivot_of[low]];
                const std::int64_t b = p.back().second;
                if (a % b == 0) {
                    combine(1, col, -(a / b), p, tmp);
                    col.swap(tmp);
                } else {
                    std::int64_t x = 0;
                    std::int64_t y = 0;
                    const std::int64_t g = ext_gcd(b, a, x, y);
                    combine(x, p, y, col, tmp);
                    combine(a / g, p, -(b / g), col, tmp2);
                    p.swap(tmp);
                    col.swap(tmp2);
                }
            }
            if (!col.empty()) {
                const std::uint32_t low = col.back().first;
                pivot_of[low] = static_cast<std::int64_t>(stored.size());
                next_cleared[low] = 1;
                stored.push_back(col);
            }
        }
        for (const auto& p : stored) {
            if (std::llabs(p.back().second) != 1) {
                unit = false;
            }
        }
        res.ranks[d] = stored.size();
        if (!unit) {
            res.unit_pivots = false;
            res.torsion[d - 1] = dense_torsion(cx, d);
        }
        cleared.swap(next_cleared);
    }
    res.betti.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        res.betti[d] = static_cast<long>(res.generators[d]) - static_cast<long>(res.ranks[d]) -
                       static_cast<long>(res.ranks[d + 1]);
    }
    return res;
}

HomologyResult homology(const Subcomplex& s) {
    return homology(SimplicialComplex::order_complex(*s.poset, s.cells));
}

HomologyResult cellular_homology(const Subcomplex& s) { return homology(CellularComplex(*s.poset, s.cells)); }

bool boundary_squares_to_zero(const ChainComplex& cx) {
    SparseColumn col;
    SparseColumn face;
    for (int d = 2; d <= cx.top_degree(); ++d) {
        for (std::size_t j = 0; j < cx.generators(d); ++j) {
            cx.boundary_column(d, j, col);
            std::map<std::uint32_t, std::int64_t> acc;
            for (const auto& [r, c] : col) {
                cx.boundary_column(d - 1, r, face);
                for (const auto& [r2, c2] : face) {
                    acc[r2] += c * c2;
                }
            }
            for (const auto& [r, c] : acc) {
                if (c != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace wlpw

#include "wlpw/le.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "wlpw/errors.hpp"

namespace wlpw {

LeDiagram::LeDiagram(int k, int n, std::vector<std::vector<bool>> rows) : k_(k), n_(n), rows_(std::move(rows)) {
    if (k < 0 || n < k) {
        throw std::invalid_argument("Le diagram needs 0 <= k <= n");
    }
    if (static_cast<int>(rows_.size()) > k) {
        throw std::invalid_argument("Le diagram has more than k rows");
    }
    rows_.resize(k);
    for (int r = 0; r < k; ++r) {
        if (static_cast<int>(rows_[r].size()) > n - k) {
            throw std::invalid_argument("Le diagram row longer than n-k");
        }
        if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
            throw std::invalid_argument("Le diagram rows must weakly decrease");
        }
    }
}

LeDiagram LeDiagram::parse(const std::string& text, int k, int n) {
    std::vector<std::vector<bool>> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '/')) {
        std::vector<bool> row;
        for (char ch : part) {
            if (ch == '+') {
                row.push_back(true);
            } else if (ch == '0') {
                row.push_back(false);
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + ch + "' in Le diagram");
            }
        }
        rows.push_back(std::move(row));
    }
    return LeDiagram(k, n, std::move(rows));
}

std::string LeDiagram::str() const {
    std::string out;
    for (int r = 0; r < k_; ++r) {
        if (r > 0) {
            out += '/';
        }
        for (bool b : rows_[r]) {
            out += b ? '+' : '0';
        }
    }
    return out;
}

bool validate_le(const LeDiagram& le) {
    for (int r = 0; r < le.k(); ++r) {
        for (int c = 0; c < le.row_length(r); ++c) {
            if (le.plus(r, c)) {
                continue;
            }
            bool left = false;
            for (int cc = 0; cc < c && !left; ++cc) {
                left = le.plus(r, cc);
            }
            bool above = false;
            for (int rr = 0; rr < r && !above; ++rr) {
                above = le.plus(rr, c);
            }
            if (left && above) {
                return false;
            }
        }
    }
    return true;
}

int dimension(const LeDiagram& le) {
    int d = 0;
    for (const auto& row : le.rows()) {
        d += static_cast<int>(std::count(row.begin(), row.end(), true));
    }
    return d;
}

LeGraph gamma_graph(const LeDiagram& le) {
    LeGraph g;
    g.k = le.k();
    g.n = le.n();
    const int m = le.n() - le.k();
    g.row_label.assign(g.k, 0);
    g.column_label.assign(m, 0);

    // Walk the border from the north-east corner: left steps are column
    // labels, down steps are row labels.
    int label = 1;
    int x = m;
    for (int r = 0; r < g.k; ++r) {
        while (x > le.row_length(r)) {
            g.column_label[--x] = label++;
        }
        g.row_label[r] = label++;
    }
    while (x > 0) {
        g.column_label[--x] = label++;
    }
    for (int r : g.row_label) {
        g.sources |= vertex_bit(r);
    }
    for (int c : g.column_label) {
        g.targets |= vertex_bit(c);
    }

    std::vector<std::vector<int>> node(g.k, std::vector<int>(m, -1));
    g.node_count = g.n;
    for (int r = 0; r < g.k; ++r) {
        for (int c = 0; c < le.row_length(r); ++c) {
            if (le.plus(r, c)) {
                node[r][c] = g.node_count++;
                g.box_of_node.emplace_back(r, c);
            }
        }
    }
    for (int r = 0; r < g.k; ++r) {
        int prev = g.label_node(g.row_label[r]);
        for (int c = le.row_length(r) - 1; c >= 0; --c) {
            if (node[r][c] >= 0) {
                g.arcs.emplace_back(prev, node[r][c]);
                prev = node[r][c];
            }
        }
    }
    for (int c = 0; c < m; ++c) {
        int prev = -1;
        for (int r = 0; r < g.k; ++r) {
            if (c < le.row_length(r) && node[r][c] >= 0) {
                if (prev >= 0) {
                    g.arcs.emplace_back(prev, node[r][c]);
                }
                prev = node[r][c];
            }
        }
        if (prev >= 0) {
            g.arcs.emplace_back(prev, g.label_node(g.column_label[c]));
        }
    }
    return g;
}

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

void add_arc(FlowGraph& fg, int from, int to) {
    auto cap = boost::get(boost::edge_capacity, fg);
    auto rev = boost::get(boost::edge_reverse, fg);
    auto e = boost::add_edge(from, to, fg).first;
    auto r = boost::add_edge(to, from, fg).first;
    cap[e] = 1;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
}

}  // namespace

bool vdp_exists(const LeGraph& g, SubsetMask sources_subset, SubsetMask targets_subset) {
    const int r = popcount(sources_subset);
    if (r != popcount(targets_subset)) {
        throw std::invalid_argument("vdp_exists: |I| != |J|");
    }
    if ((sources_subset & ~g.sources) != 0 || (targets_subset & ~g.targets) != 0) {
        throw std::invalid_argument("vdp_exists: I must be sources and J targets");
    }
    if (r == 0) {
        return true;
    }
    // Node v splits into in-copy 2v and out-copy 2v+1.
    const int s = 2 * g.node_count;
    const int t = s + 1;
    FlowGraph fg(t + 1);
    for (int v = 0; v < g.node_count; ++v) {
        add_arc(fg, 2 * v, 2 * v + 1);
    }
    for (const auto& [a, b] : g.arcs) {
        add_arc(fg, 2 * a + 1, 2 * b);
    }
    for (int a : mask_elements(sources_subset)) {
        add_arc(fg, s, 2 * g.label_node(a));
    }
    for (int a : mask_elements(targets_subset)) {
        add_arc(fg, 2 * g.label_node(a) + 1, t);
    }
    const long flow = boost::edmonds_karp_max_flow(fg, s, t);
    return flow == r;
}

BasisSet le_bases(const LeDiagram& le) {
    const LeGraph g = gamma_graph(le);
    std::vector<SubsetMask> bases;
    for (SubsetMask b : k_subsets(le.n(), le.k())) {
        if (vdp_exists(g, g.sources & ~b, g.targets & b)) {
            bases.push_back(b);
        }
    }
    return BasisSet(le.k(), le.n(), std::move(bases));
}

namespace {

void shapes(int k, int r, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (r == k) {
        out.push_back(cur);
        return;
    }
    for (int len = max_len; len >= 0; --len) {
        cur.push_back(len);
        shapes(k, r + 1, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<LeDiagram> enumerate_le_diagrams(int k, int n) {
    if (k < 0 || n < k) {
        throw std::invalid_argument("enumerate_le needs 0 <= k <= n");
    }
    std::vector<std::vector<int>> all_shapes;
    std::vector<int> cur;
    shapes(k, 0, n - k, cur, all_shapes);
    std::vector<LeDiagram> out;
    for (const auto& shape : all_shapes) {
        std::vector<std::pair<int, int>> boxes;
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < shape[r]; ++c) {
                boxes.emplace_back(r, c);
            }
        }
        if (boxes.size() > 30) {
            throw std::invalid_argument("enumerate_le: box too large");
        }
        for (unsigned long fill = 0; fill < (1UL << boxes.size()); ++fill) {
            std::vector<std::vector<bool>> rows(k);
            for (int r = 0; r < k; ++r) {
                rows[r].assign(shape[r], false);
            }
            for (std::size_t b = 0; b < boxes.size(); ++b) {
                rows[boxes[b].first][boxes[b].second] = ((fill >> b) & 1UL) != 0;
            }
            LeDiagram le(k, n, std::move(rows));
            if (validate_le(le)) {
                out.push_back(std::move(le));
            }
        }
    }
    return out;
}

std::vector<CatalogEntry> enumerate_le(int k, int n) {
    std::vector<CatalogEntry> out;
    for (auto& le : enumerate_le_diagrams(k, n)) {
        CatalogEntry e;
        e.bases = le_bases(le);
        e.dim = dimension(le);
        e.le = std::move(le);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.dim != b.dim) {
            return a.dim < b.dim;
        }
        return a.le.str() < b.le.str();
    });
    return out;
}

Catalog::Catalog(int k, int n) : k_(k), n_(n), entries_(enumerate_le(k, n)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!by_bases_.emplace(entries_[i].bases, i).second) {
            throw std::logic_error("two Le diagrams share a basis set: " + entries_[i].le.str());
        }
        by_le_.emplace(entries_[i].le.str(), i);
    }
}

const Catalog& Catalog::get(int k, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<Catalog>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{k, n}];
    if (!slot) {
        slot = std::make_unique<Catalog>(k, n);
    }
    return *slot;
}

std::optional<std::size_t> Catalog::find(const BasisSet& bases) const {
    auto it = by_bases_.find(bases);
    if (it == by_bases_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::size_t> Catalog::find(const std::string& le) const {
    auto it = by_le_.find(le);
    if (it == by_le_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const CatalogEntry& Catalog::by_bases(const BasisSet& bases) const {
    auto idx = find(bases);
    if (!idx) {
        throw NotAPositroid("no positroid cell of Gr(" + std::to_string(k_) + "," + std::to_string(n_) +
                            ") has these " + std::to_string(bases.size()) + " bases");
    }
    return entries_[*idx];
}

LeDiagram le_from_bases(const BasisSet& bases) {
    return Catalog::get(bases.rank(), bases.ground()).by_bases(bases).le;
}

}  // namespace wlpw

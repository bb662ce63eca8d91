#include "wlpw/diagram.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace wlpw {

Diagram::Diagram(int n, std::vector<Propagator> props) : n_(n), props_(std::move(props)) {
    if (n < 2 || n > 32) {
        throw std::invalid_argument("vertex count must lie in [2,32]");
    }
    for (auto& p : props_) {
        if (p.i > p.j) {
            std::swap(p.i, p.j);
        }
        if (p.i == p.j) {
            throw std::invalid_argument("propagator endpoints must lie on distinct edges");
        }
        if (p.i < 1 || p.j > n) {
            throw std::invalid_argument("propagator edge outside [1,n]");
        }
    }
    std::sort(props_.begin(), props_.end());
    if (std::adjacent_find(props_.begin(), props_.end()) != props_.end()) {
        throw std::invalid_argument("duplicate propagator");
    }
}

int Diagram::index_of(const Propagator& p) const {
    Propagator c = p;
    if (c.i > c.j) {
        std::swap(c.i, c.j);
    }
    auto it = std::find(props_.begin(), props_.end(), c);
    if (it == props_.end()) {
        throw std::invalid_argument("propagator (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                    ") is not in the diagram");
    }
    return static_cast<int>(it - props_.begin());
}

int next_vertex(int v, int n) { return v % n + 1; }

SubsetMask support_mask(const Propagator& p, int n) {
    return vertex_bit(p.i) | vertex_bit(next_vertex(p.i, n)) | vertex_bit(p.j) | vertex_bit(next_vertex(p.j, n));
}

std::vector<int> support(const Diagram& w, const Propagator& p) {
    return mask_elements(support_mask(w.prop(w.index_of(p)), w.n()));
}

SubsetMask support_of_subset(const Diagram& w, unsigned subset) {
    SubsetMask m = 0;
    for (int b = 0; b < w.k(); ++b) {
        if ((subset >> b) & 1U) {
            m |= support_mask(w.prop(b), w.n());
        }
    }
    return m;
}

bool crosses(const Propagator& p, const Propagator& q) {
    return (p.i < q.i && q.i < p.j && p.j < q.j) || (q.i < p.i && p.i < q.j && q.j < p.j);
}

std::string to_string(AdmissibilityReason r) {
    switch (r) {
        case AdmissibilityReason::Admissible: return "admissible";
        case AdmissibilityReason::TooFewVertices: return "too-few-vertices";
        case AdmissibilityReason::SmallSupport: return "small-support";
        case AdmissibilityReason::Crossing: return "crossing";
    }
    return "unknown";
}

Admissibility is_admissible(const Diagram& w) {
    const int k = w.k();
    if (w.n() < k + 4) {
        return {false, AdmissibilityReason::TooFewVertices, 0};
    }
    for (unsigned q = 1; q < (1U << k); ++q) {
        if (popcount(support_of_subset(w, q)) < std::popcount(q) + 3) {
            return {false, AdmissibilityReason::SmallSupport, q};
        }
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (crosses(w.prop(a), w.prop(b))) {
                return {false, AdmissibilityReason::Crossing, (1U << a) | (1U << b)};
            }
        }
    }
    return {true, AdmissibilityReason::Admissible, 0};
}

std::vector<unsigned> exact_subdiagrams(const Diagram& w) {
    std::vector<unsigned> out;
    for (unsigned q = 1; q < (1U << w.k()); ++q) {
        if (popcount(support_of_subset(w, q)) == std::popcount(q) + 3) {
            out.push_back(q);
        }
    }
    return out;
}

namespace {

// Splits into support-overlap components; each must be exact.
bool splits_into_exact_blocks(const std::vector<Propagator>& part, int n) {
    const int m = static_cast<int>(part.size());
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) {
            continue;
        }
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < m; ++b) {
                if (comp[b] < 0 && (support_mask(part[a], n) & support_mask(part[b], n)) != 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
            }
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        SubsetMask v = 0;
        int size = 0;
        for (int a = 0; a < m; ++a) {
            if (comp[a] == c) {
                v |= support_mask(part[a], n);
                ++size;
            }
        }
        if (popcount(v) != size + 3) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool equivalent(const Diagram& a, const Diagram& b) {
    if (a.n() != b.n() || a.k() != b.k()) {
        return false;
    }
    std::vector<Propagator> common;
    std::set_intersection(a.props().begin(), a.props().end(), b.props().begin(), b.props().end(),
                          std::back_inserter(common));
    const int c = static_cast<int>(common.size());
    for (unsigned keep = 0; keep < (1U << c); ++keep) {
        std::vector<Propagator> shared;
        for (int t = 0; t < c; ++t) {
            if ((keep >> t) & 1U) {
                shared.push_back(common[t]);
            }
        }
        std::vector<Propagator> ra;
        std::vector<Propagator> rb;
        std::set_difference(a.props().begin(), a.props().end(), shared.begin(), shared.end(), std::back_inserter(ra));
        std::set_difference(b.props().begin(), b.props().end(), shared.begin(), shared.end(), std::back_inserter(rb));
        SubsetMask va = 0;
        SubsetMask vb = 0;
        for (const auto& p : ra) {
            va |= support_mask(p, a.n());
        }
        for (const auto& p : rb) {
            vb |= support_mask(p, a.n());
        }
        if (va == vb && splits_into_exact_blocks(ra, a.n()) && splits_into_exact_blocks(rb, a.n())) {
            return true;
        }
    }
    return false;
}

std::vector<Diagram> enumerate_admissible(int k, int n) {
    std::vector<Diagram> out;
    if (k < 1 || n < k + 4) {
        return out;
    }
    std::vector<Propagator> all;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            all.push_back({i, j});
        }
    }
    const int m = static_cast<int>(all.size());
    std::vector<int> idx(k);
    for (int t = 0; t < k; ++t) {
        idx[t] = t;
    }
    while (true) {
        std::vector<Propagator> props;
        for (int t : idx) {
            props.push_back(all[t]);
        }
        Diagram w(n, std::move(props));
        if (is_admissible(w)) {
            out.push_back(std::move(w));
        }
        int t = k - 1;
        while (t >= 0 && idx[t] == m - k + t) {
            --t;
        }
        if (t < 0) {
            break;
        }
        ++idx[t];
        for (int s = t + 1; s < k; ++s) {
            idx[s] = idx[s - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram rotate(const Diagram& w, int r) {
    const int n = w.n();
    std::vector<Propagator> props;
    for (const auto& p : w.props()) {
        props.push_back({((p.i - 1 + r) % n + n) % n + 1, ((p.j - 1 + r) % n + n) % n + 1});
    }
    return Diagram(n, std::move(props));
}

std::vector<int> edge_order(const Diagram& w, int e) {
    const int n = w.n();
    std::vector<std::pair<int, int>> keyed;
    for (int b = 0; b < w.k(); ++b) {
        const auto& p = w.prop(b);
        if (p.i == e || p.j == e) {
            const int other = p.i == e ? p.j : p.i;
            keyed.emplace_back(-(((other - e) % n + n) % n), b);
        }
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (const auto& kb : keyed) {
        out.push_back(kb.second);
    }
    return out;
}

std::vector<int> row_order(const Diagram& w) {
    std::vector<int> out;
    std::vector<bool> seen(w.k(), false);
    for (int e = 1; e <= w.n(); ++e) {
        for (int b : edge_order(w, e)) {
            if (!seen[b]) {
                seen[b] = true;
                out.push_back(b);
            }
        }
    }
    return out;
}

bool BoundaryDiagram::same_diagram(const BoundaryDiagram& other) const {
    if (parent != other.parent || supports != other.supports || kind != other.kind) {
        return false;
    }
    if (kind == BoundaryKind::VertexDrop) {
        return true;
    }
    return edge == other.edge && std::minmax(prop, touched) == std::minmax(other.prop, other.touched);
}

BoundaryDiagram boundary_diagram(const Diagram& w, int prop, int vertex) {
    const int n = w.n();
    const Propagator& p = w.prop(prop);
    if ((support_mask(p, n) & vertex_bit(vertex)) == 0) {
        throw std::invalid_argument("vertex " + std::to_string(vertex) + " is not in the support of row " +
                                    std::to_string(prop));
    }
    BoundaryDiagram d;
    d.parent = w;
    d.prop = prop;
    d.vertex = vertex;
    d.edge = (vertex == p.i || vertex == next_vertex(p.i, n)) ? p.i : p.j;
    d.labels = {{prop, vertex}};
    for (const auto& q : w.props()) {
        d.supports.push_back(support_mask(q, n));
    }

    const bool toward_next = vertex == d.edge;
    const auto order = edge_order(w, d.edge);
    const auto pos = std::find(order.begin(), order.end(), prop) - order.begin();
    if (toward_next && pos + 1 < static_cast<long>(order.size())) {
        d.kind = BoundaryKind::PropagatorTouch;
        d.touched = order[pos + 1];
    } else if (!toward_next && pos > 0) {
        d.kind = BoundaryKind::PropagatorTouch;
        d.touched = order[pos - 1];
    } else {
        d.kind = BoundaryKind::VertexDrop;
        d.supports[prop] &= ~vertex_bit(vertex);
    }

    for (unsigned q = 1; q < (1U << w.k()) && !d.degenerate; ++q) {
        if (q == (1U << prop)) {
            continue;
        }
        SubsetMask v = 0;
        for (int b = 0; b < w.k(); ++b) {
            if ((q >> b) & 1U) {
                v |= d.supports[b];
            }
        }
        d.degenerate = popcount(v) < std::popcount(q) + 3;
    }
    return d;
}

std::vector<BoundaryDiagram> boundary_diagrams(const Diagram& w) {
    std::vector<BoundaryDiagram> out;
    for (int b = 0; b < w.k(); ++b) {
        for (int v : mask_elements(support_mask(w.prop(b), w.n()))) {
            auto d = boundary_diagram(w, b, v);
            auto it = std::find_if(out.begin(), out.end(), [&](const BoundaryDiagram& e) { return e.same_diagram(d); });
            if (it == out.end()) {
                out.push_back(std::move(d));
            } else {
                it->labels.emplace_back(b, v);
            }
        }
    }
    return out;
}

std::string format_diagram(const Diagram& w) {
    std::ostringstream os;
    os << "n=" << w.n() << ";props=";
    for (int b = 0; b < w.k(); ++b) {
        os << (b ? "," : "") << w.prop(b).i << "-" << w.prop(b).j;
    }
    return os.str();
}

Diagram parse_diagram(const std::string& text) {
    const auto semi = text.find(';');
    if (text.rfind("n=", 0) != 0 || semi == std::string::npos || text.compare(semi + 1, 6, "props=") != 0) {
        throw std::invalid_argument("diagram text must look like n=6;props=1-3,1-5");
    }
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(text.substr(2, semi - 2), &used);
        if (used != semi - 2) {
            throw std::invalid_argument("");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex count in: " + text);
    }
    std::vector<Propagator> props;
    std::stringstream ss(text.substr(semi + 7));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            throw std::invalid_argument("bad propagator '" + item + "'");
        }
        try {
            props.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
        } catch (const std::exception&) {
            throw std::invalid_argument("bad propagator '" + item + "'");
        }
    }
    return Diagram(n, std::move(props));
}

}  // namespace wlpw

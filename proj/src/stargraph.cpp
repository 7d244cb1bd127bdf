#include "cycpres/stargraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace cycpres {

namespace {

int mod(long a, long m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Unique neighbor lists, ignoring multiplicity; loops kept.
std::vector<std::vector<int>> adjacency(const Multigraph& g) {
    std::vector<std::set<int>> nb(static_cast<size_t>(g.vertex_count));
    for (auto [a, b] : g.edges) {
        nb[static_cast<size_t>(a)].insert(b);
        nb[static_cast<size_t>(b)].insert(a);
    }
    std::vector<std::vector<int>> out(nb.size());
    for (size_t i = 0; i < nb.size(); ++i) out[i].assign(nb[i].begin(), nb[i].end());
    return out;
}

std::vector<int> component_ids(const Multigraph& g, int& count) {
    auto adj = adjacency(g);
    std::vector<int> comp(static_cast<size_t>(g.vertex_count), -1);
    count = 0;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        comp[static_cast<size_t>(s)] = count;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = count;
                    q.push(w);
                }
        }
        ++count;
    }
    return comp;
}

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    dist[static_cast<size_t>(src)] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[static_cast<size_t>(v)])
            if (dist[static_cast<size_t>(w)] == -1) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

void Multigraph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
        throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
}

void Multigraph::finish() { std::sort(edges.begin(), edges.end()); }

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(static_cast<size_t>(vertex_count), 0);
    for (auto [a, b] : edges) {
        deg[static_cast<size_t>(a)]++;
        deg[static_cast<size_t>(b)]++;
    }
    return deg;
}

Multigraph make_star_vertices(int n) {
    Multigraph g;
    g.vertex_count = 2 * n;
    g.labels.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) g.labels.push_back("x" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.labels.push_back("x" + std::to_string(i) + "-");
    return g;
}

int star_vertex(const Letter& a, int n) { return a.sign > 0 ? a.index : n + a.index; }

Multigraph build_star_graph(const std::vector<Word>& relators, int n) {
    if (n < 1) throw std::invalid_argument("build_star_graph: n must be >= 1");
    std::set<Word> closure;
    for (const Word& r : relators) {
        if (r.rank() != n) throw std::invalid_argument("build_star_graph: relator rank mismatch");
        if (r.empty() || !r.is_cyclically_reduced())
            throw std::invalid_argument("build_star_graph: relators must be non-empty and cyclically reduced");
        Word ri = invert(r);
        for (int s = 0; s < r.length(); ++s) {
            closure.insert(cyclic_permute(r, s));
            closure.insert(cyclic_permute(ri, s));
        }
    }

    Multigraph g = make_star_vertices(n);
    while (!closure.empty()) {
        Word w = *closure.begin();
        Word partner = cyclic_permute(invert(w), w.length() - 2);
        auto it = closure.find(partner);
        if (partner == w || it == closure.end())
            throw std::logic_error("build_star_graph: symmetrized closure is not inverse-paired");
        const Letter& a = w.letter(0);
        Letter b = w.letter(1 % w.length());
        g.add_edge(star_vertex(a, n), star_vertex(inverse(b), n));
        closure.erase(closure.begin());
        closure.erase(it);
    }
    g.finish();
    return g;
}

std::vector<int> DifferenceMultisets::Q() const {
    std::vector<int> q = Qplus;
    q.insert(q.end(), Qminus.begin(), Qminus.end());
    std::sort(q.begin(), q.end());
    return q;
}

DifferenceMultisets difference_multisets(const RedundancyReport& report) {
    if (report.root_power != 1)
        throw std::invalid_argument("difference_multisets: word is a proper power; classify its root");
    DifferenceMultisets ms;
    ms.n = report.n;
    int n = report.n;

    auto scan = [&](const std::vector<Letter>& seq, std::vector<int>& A, std::vector<int>& B,
                    std::vector<int>& Qp, std::vector<int>& Qm) {
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            const Letter& p = seq[i];
            const Letter& q = seq[i + 1];
            int fwd = mod(q.index - p.index, n);
            if (p.sign > 0 && q.sign < 0)
                A.push_back(fwd);
            else if (p.sign < 0 && q.sign > 0)
                B.push_back(fwd);
            else if (p.sign > 0)
                Qp.push_back(fwd);
            else
                Qm.push_back(mod(p.index - q.index, n));
        }
    };

    if (report.kind == RedundancyKind::NonOrientable) {
        ms.flavor = Flavor::NonOrientable;
        const Word& u = report.half_word.value();
        ms.l_u = u.length();
        std::vector<int> qm;  // folded into Qbar below
        scan(u.letters(), ms.Aprime, ms.Bprime, ms.Qbar, qm);
        ms.Qbar.insert(ms.Qbar.end(), qm.begin(), qm.end());
        ms.eps_first = u.letter(0).sign;
        ms.eps_last = u.letter(u.length() - 1).sign;
        ms.Abar = ms.Aprime;
        ms.Bbar = ms.Bprime;
        int half = n / 2;
        if (ms.eps_first == ms.eps_last) {
            ms.Abar.push_back(half);
            ms.Bbar.push_back(half);
        } else if (ms.eps_first > 0) {
            ms.Bbar.push_back(half);
            ms.Bbar.push_back(half);
        } else {
            ms.Abar.push_back(half);
            ms.Abar.push_back(half);
        }
    } else {
        ms.flavor = Flavor::Orientable;
        const Word& u = report.period.u;
        ms.l_u = u.length();
        ms.h = report.period.h;
        std::vector<Letter> seq = u.letters();
        Letter first = u.letter(0);
        seq.push_back(Letter{mod(first.index + ms.h, n), first.sign});
        scan(seq, ms.A, ms.B, ms.Qplus, ms.Qminus);
    }
    for (auto* v : {&ms.A, &ms.B, &ms.Qplus, &ms.Qminus, &ms.Aprime, &ms.Bprime, &ms.Qbar, &ms.Abar, &ms.Bbar})
        std::sort(v->begin(), v->end());
    return ms;
}

Multigraph structural_star_graph(const DifferenceMultisets& ms) {
    int n = ms.n;
    Multigraph g = make_star_vertices(n);
    auto family = [&](const std::vector<int>& entries, int off_a, int off_b) {
        for (int e : entries)
            for (int i = 0; i < n; ++i) g.add_edge(off_a + i, off_b + mod(i + e, n));
    };
    if (ms.flavor == Flavor::Orientable) {
        family(ms.A, 0, 0);
        family(ms.B, n, n);
        family(ms.Q(), 0, n);
    } else {
        family(ms.Aprime, 0, 0);
        family(ms.Bprime, n, n);
        family(ms.Qbar, 0, n);
        int half = n / 2;
        auto half_entries = [&](const std::vector<int>& bar, const std::vector<int>& prime) {
            auto in_bar = std::count(bar.begin(), bar.end(), half);
            auto in_prime = std::count(prime.begin(), prime.end(), half);
            return static_cast<int>(in_bar - in_prime);
        };
        for (int c = half_entries(ms.Abar, ms.Aprime); c > 0; --c)
            for (int i = 0; i < half; ++i) g.add_edge(i, i + half);
        for (int c = half_entries(ms.Bbar, ms.Bprime); c > 0; --c)
            for (int i = 0; i < half; ++i) g.add_edge(n + i, n + i + half);
    }
    g.finish();
    return g;
}

namespace {

Multigraph plain_vertices(int n) {
    Multigraph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i));
    return g;
}

}  // namespace

Multigraph circulant(int n, const std::vector<int>& A) {
    if (n < 1) throw std::invalid_argument("circulant: n must be >= 1");
    Multigraph g = plain_vertices(n);
    for (int a : A)
        for (int i = 0; i < n; ++i) g.add_edge(i, mod(i + a, n));
    g.finish();
    return g;
}

Multigraph circulant_prime(int n, const std::vector<int>& A) {
    if (n < 1 || n % 2 != 0) throw std::invalid_argument("circulant_prime: n must be even");
    Multigraph g = plain_vertices(n);
    int half = n / 2;
    for (int a : A) {
        int r = mod(a, n);
        if (r == half)
            for (int i = 0; i < half; ++i) g.add_edge(i, i + half);
        else
            for (int i = 0; i < n; ++i) g.add_edge(i, mod(i + r, n));
    }
    g.finish();
    return g;
}

Metrics metrics(const Multigraph& g) {
    Metrics m;
    m.degree_sequence = g.degrees();
    std::sort(m.degree_sequence.begin(), m.degree_sequence.end());
    if (!m.degree_sequence.empty() && m.degree_sequence.front() == m.degree_sequence.back())
        m.regular_degree = m.degree_sequence.empty() ? 0 : m.degree_sequence.front();

    auto comp = component_ids(g, m.component_count);
    auto adj = adjacency(g);

    // Bipartiteness: 2-coloring; a loop poisons its component.
    m.bipartite = true;
    {
        std::vector<int> color(static_cast<size_t>(g.vertex_count), -1);
        for (int s = 0; s < g.vertex_count && m.bipartite; ++s) {
            if (color[static_cast<size_t>(s)] != -1) continue;
            color[static_cast<size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && m.bipartite) {
                int v = q.front();
                q.pop();
                for (int w : adj[static_cast<size_t>(v)]) {
                    if (w == v) {
                        m.bipartite = false;
                        break;
                    }
                    if (color[static_cast<size_t>(w)] == -1) {
                        color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                        q.push(w);
                    } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                        m.bipartite = false;
                        break;
                    }
                }
            }
        }
    }

    // Girth: loops, then parallel pairs, then simple-graph girth by
    // per-edge removal + shortest path.
    bool has_loop = false, has_parallel = false;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].first == g.edges[i].second) has_loop = true;
        if (i > 0 && g.edges[i] == g.edges[i - 1]) has_parallel = true;
    }
    if (has_loop)
        m.girth = 1;
    else if (has_parallel)
        m.girth = 2;
    else {
        int best = -1;
        std::vector<std::pair<int, int>> simple = g.edges;
        simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
        for (auto [a, b] : simple) {
            // BFS from a to b avoiding the edge {a,b}.
            std::vector<int> dist(static_cast<size_t>(g.vertex_count), -1);
            dist[static_cast<size_t>(a)] = 0;
            std::queue<int> q;
            q.push(a);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adj[static_cast<size_t>(v)]) {
                    if ((v == a && w == b) || (v == b && w == a)) continue;
                    if (dist[static_cast<size_t>(w)] == -1) {
                        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                        q.push(w);
                    }
                }
            }
            if (dist[static_cast<size_t>(b)] != -1) {
                int cyc = dist[static_cast<size_t>(b)] + 1;
                if (best == -1 || cyc < best) best = cyc;
            }
        }
        if (best != -1) m.girth = best;
    }

    m.diameter_per_component.assign(static_cast<size_t>(m.component_count), 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        auto dist = bfs_dist(adj, v);
        int& dia = m.diameter_per_component[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        for (int w = 0; w < g.vertex_count; ++w)
            if (dist[static_cast<size_t>(w)] > dia) dia = dist[static_cast<size_t>(w)];
    }
    return m;
}

std::vector<Multigraph> components(const Multigraph& g) {
    int count = 0;
    auto comp = component_ids(g, count);
    std::vector<Multigraph> out(static_cast<size_t>(count));
    std::vector<int> local(static_cast<size_t>(g.vertex_count), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        Multigraph& c = out[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        local[static_cast<size_t>(v)] = c.vertex_count++;
        c.labels.push_back(g.labels.empty() ? "" : g.labels[static_cast<size_t>(v)]);
    }
    for (auto [a, b] : g.edges) {
        Multigraph& c = out[static_cast<size_t>(comp[static_cast<size_t>(a)])];
        c.add_edge(local[static_cast<size_t>(a)], local[static_cast<size_t>(b)]);
    }
    for (Multigraph& c : out) c.finish();
    return out;
}

namespace {

// Multiplicity matrix keyed by vertex pair.
std::vector<std::vector<int>> mult_matrix(const Multigraph& g) {
    std::vector<std::vector<int>> m(static_cast<size_t>(g.vertex_count),
                                    std::vector<int>(static_cast<size_t>(g.vertex_count), 0));
    for (auto [a, b] : g.edges) {
        m[static_cast<size_t>(a)][static_cast<size_t>(b)]++;
        if (a != b) m[static_cast<size_t>(b)][static_cast<size_t>(a)]++;
    }
    return m;
}

// Iterated refinement of vertex colors by multiset of (multiplicity, color)
// over neighbors. Returns stable coloring; colors are shared across both
// graphs so classes are comparable.
void refine_colors(const std::vector<std::vector<int>>& ma, const std::vector<std::vector<int>>& mb,
                   std::vector<int>& ca, std::vector<int>& cb) {
    size_t na = ma.size(), nb = mb.size();
    ca.assign(na, 0);
    cb.assign(nb, 0);
    for (;;) {
        using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
        auto signature = [](const std::vector<std::vector<int>>& m, const std::vector<int>& c, size_t v) {
            Sig s{c[v], {}};
            for (size_t w = 0; w < m.size(); ++w)
                if (m[v][w] > 0) s.second.emplace_back(m[v][w], c[w]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::map<Sig, int> ids;
        std::vector<Sig> sa(na), sb(nb);
        for (size_t v = 0; v < na; ++v) {
            sa[v] = signature(ma, ca, v);
            ids.emplace(sa[v], 0);
        }
        for (size_t v = 0; v < nb; ++v) {
            sb[v] = signature(mb, cb, v);
            ids.emplace(sb[v], 0);
        }
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        std::vector<int> ca2(na), cb2(nb);
        for (size_t v = 0; v < na; ++v) ca2[v] = ids[sa[v]];
        for (size_t v = 0; v < nb; ++v) cb2[v] = ids[sb[v]];
        if (ca2 == ca && cb2 == cb) return;
        ca = std::move(ca2);
        cb = std::move(cb2);
    }
}

bool extend_isomorphism(const std::vector<std::vector<int>>& ma, const std::vector<std::vector<int>>& mb,
                        const std::vector<int>& ca, const std::vector<int>& cb, std::vector<int>& map,
                        std::vector<bool>& used, size_t v) {
    size_t n = ma.size();
    if (v == n) return true;
    for (size_t w = 0; w < n; ++w) {
        if (used[w] || cb[w] != ca[v]) continue;
        bool ok = ma[v][v] == mb[w][w];
        for (size_t u = 0; u < v && ok; ++u) ok = ma[v][u] == mb[w][static_cast<size_t>(map[u])];
        if (!ok) continue;
        map[v] = static_cast<int>(w);
        used[w] = true;
        if (extend_isomorphism(ma, mb, ca, cb, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count > 64 || b.vertex_count > 64)
        throw std::invalid_argument("are_isomorphic: vertex cap (64) exceeded");
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
    if (a.vertex_count == 0) return true;

    auto ma = mult_matrix(a), mb = mult_matrix(b);
    std::vector<int> ca, cb;
    refine_colors(ma, mb, ca, cb);
    {
        std::vector<int> ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    std::vector<int> map(static_cast<size_t>(a.vertex_count), -1);
    std::vector<bool> used(static_cast<size_t>(a.vertex_count), false);
    return extend_isomorphism(ma, mb, ca, cb, map, used, 0);
}

std::string Recognition::str() const {
    switch (cls) {
        case GraphClass::CompleteBipartite: return "complete_bipartite(" + std::to_string(parameter) + ")";
        case GraphClass::ProjectivePlaneIncidence:
            return "projective_plane_incidence(" + std::to_string(parameter) + ")";
        case GraphClass::Other: return "other";
    }
    return "other";
}

Recognition recognize(const Multigraph& g) {
    Metrics m = metrics(g);
    if (m.component_count != 1) throw std::invalid_argument("recognize: graph must be connected");

    if (m.bipartite && g.vertex_count % 2 == 0) {
        // 2-color, check complete bipartite with every cross pair exactly once.
        auto adj = adjacency(g);
        std::vector<int> color(static_cast<size_t>(g.vertex_count), -1);
        color[0] = 0;
        std::queue<int> q;
        q.push(0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(v)])
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                }
        }
        int l = g.vertex_count / 2;
        long ones = std::count(color.begin(), color.end(), 1);
        bool complete = ones == l && static_cast<int>(g.edges.size()) == l * l;
        if (complete) {
            std::set<std::pair<int, int>> seen;
            for (auto e : g.edges) {
                if (color[static_cast<size_t>(e.first)] == color[static_cast<size_t>(e.second)] ||
                    !seen.insert(e).second) {
                    complete = false;
                    break;
                }
            }
        }
        if (complete) return {GraphClass::CompleteBipartite, l};
    }

    if (m.bipartite && m.regular_degree && *m.regular_degree >= 3 && m.girth == 6 &&
        m.diameter_per_component == std::vector<int>{3}) {
        int qq = *m.regular_degree - 1;
        if (g.vertex_count == 2 * (qq * qq + qq + 1)) return {GraphClass::ProjectivePlaneIncidence, qq};
    }
    return {GraphClass::Other, 0};
}

std::string to_dot(const Multigraph& g) {
    static const char* palette[] = {"black",  "red",    "blue",   "forestgreen", "darkorange", "purple",
                                    "brown",  "magenta", "teal",  "crimson",     "navy",       "olive"};
    int count = 0;
    auto comp = component_ids(g, count);
    std::string s = "graph stargraph {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        const std::string& lab = g.labels[static_cast<size_t>(v)];
        bool negative = !lab.empty() && lab.back() == '-';
        s += "  \"" + lab + "\" [shape=" + (negative ? "box" : "circle") +
             ",color=" + palette[comp[static_cast<size_t>(v)] % 12] + "];\n";
    }
    for (auto [a, b] : g.edges)
        s += "  \"" + g.labels[static_cast<size_t>(a)] + "\" -- \"" + g.labels[static_cast<size_t>(b)] + "\";\n";
    s += "}\n";
    return s;
}

}  // namespace cycpres

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycpres/presentation.hpp"
#include "cycpres/word.hpp"

namespace cycpres {

// Undirected multigraph with a fixed vertex order and text labels.
// Edges are stored as a sorted multiset of normalized (a <= b) index pairs,
// so equality of two graphs over the same vertex order is structural equality
// of labeled edge multisets.
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::string> labels;             // size vertex_count
    std::vector<std::pair<int, int>> edges;      // normalized, sorted

    void add_edge(int a, int b);
    void finish();                               // sort edge multiset
    std::vector<int> degrees() const;            // loops count twice

    friend bool operator==(const Multigraph& x, const Multigraph& y) {
        return x.vertex_count == y.vertex_count && x.edges == y.edges;
    }
};

// Vertex order for star graphs over n generators: x_0..x_{n-1}, then
// x_0^-1..x_{n-1}^-1. Labels "x3" and "x3-".
Multigraph make_star_vertices(int n);
int star_vertex(const Letter& a, int n);

// Star graph of the given relator set: one edge per inverse pair of distinct
// words in the symmetrized closure (all cyclic permutations of the relators
// and their inverses), read from the first two letters of each word. The
// result is invariant under replacing relators by their roots and under
// removal of freely redundant relators. Relators must be cyclically reduced
// and non-empty.
Multigraph build_star_graph(const std::vector<Word>& relators, int n);

enum class Flavor { Orientable, NonOrientable };

// Subscript difference multisets controlling the star graph.
//
// Orientable, with period w = prod theta^{ih}(u): scan the l(u) adjacent
// pairs of u * theta^h(first letter of u). A pair x_i x_j^-1 puts j-i in A;
// x_i^-1 x_j puts j-i in B; x_i x_j puts j-i in Qplus; x_i^-1 x_j^-1 puts
// i-j in Qminus (all mod n).
//
// Non-orientable, with half word u (rotate w first so w = u*invert(theta^{n/2} u)):
// scan the l(u)-1 adjacent pairs of u alone into Aprime/Bprime/Qbar, then
// augment: both end letters positive or both negative -> Abar = Aprime+{n/2},
// Bbar = Bprime+{n/2}; first positive, last negative -> Bbar gets {n/2,n/2};
// first negative, last positive -> Abar gets {n/2,n/2}.
struct DifferenceMultisets {
    Flavor flavor = Flavor::Orientable;
    int n = 0;
    int l_u = 0;
    int h = 0;                                   // orientable only
    std::vector<int> A, B, Qplus, Qminus;        // orientable (sorted)
    std::vector<int> Aprime, Bprime, Qbar;       // non-orientable (sorted)
    std::vector<int> Abar, Bbar;                 // augmented (sorted)
    int eps_first = +1, eps_last = +1;           // non-orientable end signs

    std::vector<int> Q() const;                  // Qplus + Qminus, sorted
};

// Requires the report's word not to be a proper power (use the root's report).
DifferenceMultisets difference_multisets(const RedundancyReport& report);

// Star graph predicted from the difference multisets alone.
// Orientable: n edges x_i - x_{i+a} per a in A, x_i^-1 - x_{i+b}^-1 per b in B,
// x_i - x_{i+q}^-1 per q in Q. Non-orientable: the same for Aprime/Bprime/Qbar,
// plus n/2 edges x_i - x_{i+n/2} (i < n/2) per n/2 entry of Abar minus Aprime,
// and likewise on negative vertices for Bbar minus Bprime.
Multigraph structural_star_graph(const DifferenceMultisets& ms);

// circ_n(A): vertices v_0..v_{n-1}, edges v_i - v_{i+a} for every i and every
// multiset entry a (entries 0 give loops, entries n/2 give parallel chords).
Multigraph circulant(int n, const std::vector<int>& A);

// Same, but each n/2 entry contributes each chord v_i - v_{i+n/2} once
// instead of twice.
Multigraph circulant_prime(int n, const std::vector<int>& A);

struct Metrics {
    std::optional<int> girth;                    // nullopt = acyclic
    std::vector<int> diameter_per_component;     // component order: min vertex
    int component_count = 0;
    bool bipartite = false;
    std::optional<int> regular_degree;
    std::vector<int> degree_sequence;            // ascending
};

// Girth counts loops as 1-cycles and parallel pairs as 2-cycles.
Metrics metrics(const Multigraph& g);

// Connected components ordered by smallest vertex, vertices keeping their
// relative order and labels.
std::vector<Multigraph> components(const Multigraph& g);

// Label-blind multigraph isomorphism (exact, backtracking with color
// refinement). Throws if either graph has more than 64 vertices.
bool are_isomorphic(const Multigraph& a, const Multigraph& b);

enum class GraphClass { CompleteBipartite, ProjectivePlaneIncidence, Other };

struct Recognition {
    GraphClass cls = GraphClass::Other;
    int parameter = 0;   // l for K_{l,l}, q for a projective plane of order q

    std::string str() const;
};

// Requires a connected graph. CompleteBipartite(l): simple K_{l,l}.
// ProjectivePlaneIncidence(q): bipartite, (q+1)-regular on 2(q^2+q+1)
// vertices with girth 6 and diameter 3, q >= 2.
Recognition recognize(const Multigraph& g);

std::string to_dot(const Multigraph& g);

}  // namespace cycpres

#pragma once

#include "starcalc/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starcalc {

// An oriented Kontsevich graph: m ordered sinks (labels 0..m-1) and n internal
// vertices (labels m..m+n-1), each internal vertex carrying an ordered pair of
// outgoing edge targets (Left, Right).  Sinks have no outgoing edges.  The sign
// is +1 or -1; swapping the (L,R) pair of a wedge flips it.
struct KGraph {
    int sinks = 0;
    std::vector<std::pair<int, int>> wedges; // targets of vertices sinks..sinks+n-1
    int sign = 1;

    int internal() const { return static_cast<int>(wedges.size()); }
    int vertices() const { return sinks + internal(); }

    bool operator==(const KGraph&) const = default;

    // In-degree of each vertex (index 0..vertices()-1).
    std::vector<int> in_degrees() const;
    // In-degrees of the sinks only: the differential orders (p, q, ...).
    std::vector<int> sink_orders() const;
};

// The multiplication graph: m = 2 sinks, no internal vertices.
inline KGraph mu_graph() { return KGraph{2, {}, 1}; }

// The single wedge on two sinks.
inline KGraph wedge_graph() { return KGraph{2, {{0, 1}}, 1}; }

// A Leibniz graph: m sinks, then wedge vertices, then one trivalent vertex
// (last label) carrying an ordered triple of targets.  At hbar-degree k the
// graph has k-2 wedges and 2k-1 edges.
struct LGraph {
    int sinks = 3;
    std::vector<std::pair<int, int>> wedges; // vertices sinks..sinks+w-1
    std::array<int, 3> triple{};             // targets of vertex sinks+w
    int sign = 1;

    int wedge_count() const { return static_cast<int>(wedges.size()); }
    int trivalent_vertex() const { return sinks + wedge_count(); }
    int vertices() const { return sinks + wedge_count() + 1; }
    // hbar-degree of the identity this graph encodes.
    int order() const { return wedge_count() + 2; }

    bool operator==(const LGraph&) const = default;

    std::vector<int> in_degrees() const;
    std::vector<int> sink_orders() const;
};

// Canonical form of a graph: the lexicographically minimal target list over
// all relabelings of internal vertices (with every wedge pair sorted), plus
// the accumulated sign of the L/R swaps needed to reach it.  `zero` is set
// when some relabeling maps the graph to minus itself, i.e. the graph encodes
// the zero operator.
struct Canonical {
    KGraph graph; // representative with sign +1 stored outside
    int sign = 1; // includes the input graph's own sign
    bool zero = false;
};

struct CanonicalL {
    LGraph graph;
    int sign = 1;
    bool zero = false;
};

// --- construction and validation ------------------------------------------

// Throws std::invalid_argument on tadpoles, double edges or range errors.
KGraph make_kgraph(int sinks, std::vector<std::pair<int, int>> wedges, int sign = 1);
LGraph make_lgraph(int sinks, std::vector<std::pair<int, int>> wedges,
                   std::array<int, 3> triple, int sign = 1);

// --- encodings --------------------------------------------------------------

// Parses one encoding line "m n sign  t1L t1R ... tnL tnR  [p/q]".
// The coefficient is absent in plain graph lines.
struct ParsedKGraph {
    KGraph graph;
    std::optional<Rat> coefficient;
};
ParsedKGraph parse_kgraph(std::string_view line);

// Prints "m n sign" + 3 spaces + targets + (4 spaces + coefficient).
// Round-trips parse_kgraph output bit-exactly on standard fixture lines.
std::string print_kgraph(const KGraph& g);
std::string print_kgraph(const KGraph& g, const Rat& coefficient);

// Parses the bracket form "[ab;...;abc]" with exactly one final 3-label group.
// Labels >= 10 are written comma-separated inside a group.
struct ParsedLGraph {
    LGraph graph;
    std::optional<Rat> coefficient;
};
ParsedLGraph parse_lgraph(std::string_view text, int sinks = 3);

std::string print_lgraph(const LGraph& g);

// Bracket form for Kontsevich graphs ("[01;12;43]") used in compact notation;
// sign is not printed.
std::string print_kgraph_brackets(const KGraph& g);
KGraph parse_kgraph_brackets(std::string_view text, int sinks);

// --- canonical forms --------------------------------------------------------

Canonical canonicalize(const KGraph& g);
CanonicalL canonicalize(const LGraph& g);

// Canonical form of a Leibniz graph modulo the full symmetric group on the
// Jacobiator triple (odd permutations contribute -1): the representative used
// to deduplicate generated bases.  Cyclic shifts of the triple cost nothing.
CanonicalL canonicalize_mod_triple(const LGraph& g);

bool is_zero_graph(const KGraph& g);

// Order of the group of internal-vertex relabelings fixing the graph
// (for LGraph only wedge vertices of equal valency may be exchanged).
long automorphism_count(const KGraph& g);
long automorphism_count(const LGraph& g);

// M = (prod #Star(k)!) * n!/#Aut = 2^n n!/#Aut for all-wedge graphs.
Rat multiplicity(const KGraph& g);

} // namespace starcalc

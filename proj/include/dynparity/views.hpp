#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynparity/game.hpp"
#include "dynparity/treedec.hpp"

namespace dynparity {

// One slot of a view: unknown, top, bottom, or an exit (target vertex, max color).
using CellCode = std::uint32_t;

namespace cell {
inline constexpr CellCode unknown = 0;
inline constexpr CellCode top = 1;
inline constexpr CellCode bottom = 2;
inline constexpr CellCode exit(Vertex target, int color) { return 3u + (static_cast<CellCode>(target) << 8) + color; }
inline constexpr bool is_exit(CellCode c) { return c >= 3; }
inline constexpr Vertex target(CellCode c) { return static_cast<Vertex>((c - 3) >> 8); }
inline constexpr int color(CellCode c) { return static_cast<int>((c - 3) & 0xff); }
inline constexpr bool is_final(CellCode c) { return c == top || c == bottom; }
std::string to_string(CellCode c);
} // namespace cell

// Slots follow the sorted bag of the node the view belongs to.
using View = std::vector<CellCode>;
// Canonical (sorted, duplicate free) set of views of one node.
using ViewSet = std::vector<View>;
// Per node of thetas(i), root first: one view (single selector) or a set of views.
using ViewTuple = std::vector<View>;
using ViewVector = std::vector<ViewSet>;

void canonicalize(ViewSet& set);
std::string to_string(const View& view);
std::string to_string(const ViewSet& set);

View unknown_view(const NiceTraversal& trav, NodeId v);
int slot_of(const NiceTraversal& trav, NodeId v, Vertex s); // -1 if s is not in the bag

// Literal simulation of the outcome from every bag vertex.
View view_bruteforce(const ParityGame& game, const NiceTraversal& trav, const Selector& f, int i, NodeId v);
ViewTuple views_bruteforce(const ParityGame& game, const NiceTraversal& trav, const Selector& f, int i);

// Links of a selector at a critical index: where theta goes (if inside the
// bag) and which bag vertices move to theta.
struct Links {
    std::optional<Vertex> out;
    std::vector<Vertex> in;
};
Links links_at(const NiceTraversal& trav, const Selector& f, int i);

ViewTuple initial_views(const NiceTraversal& trav);
// Merge of a child view into its parent's view.
View merge_child(const NiceTraversal& trav, int i, const View& parent_view, const View& child_view);
// f_i(v_i) from f*_i(v_i) at a critical index.
View close_critical(const ParityGame& game, const NiceTraversal& trav, int i, const View& star, const Links& links);
// f_i from f_{i+1}; links are ignored at non-critical indices.
ViewTuple view_step(const ParityGame& game, const NiceTraversal& trav, const ViewTuple& next, int i,
                    const Links& links);
// f_i for every index (entry 0 unused).
std::vector<ViewTuple> view_sweep(const ParityGame& game, const NiceTraversal& trav, const Selector& f);

bool is_compatible(const NiceTraversal& trav, const std::vector<std::pair<NodeId, View>>& views);
bool compatible_pair(const NiceTraversal& trav, NodeId a, const View& va, NodeId b, const View& vb);

// Sets of allowed values for one edge indicator: bit 0 is bottom, bit 1 is top.
using ChoiceSet = std::uint8_t;
inline constexpr ChoiceSet choice_bot = 1;
inline constexpr ChoiceSet choice_top = 2;
inline constexpr ChoiceSet choice_both = 3;
std::string choice_name(ChoiceSet c);

// Options the current edge set leaves for the pair (x, y).
std::vector<ChoiceSet> choice(const ParityGame& game, Vertex x, Vertex y);
// Options over every edge set below the max edges.
std::vector<ChoiceSet> max_choice(const ParityGame& game, Vertex x, Vertex y);

// Entries aligned with the bag of v_i: out[k] for (theta, s_k), in[k] for (s_k, theta).
struct ChoiceVectors {
    std::vector<ChoiceSet> out;
    std::vector<ChoiceSet> in;
    friend bool operator==(const ChoiceVectors&, const ChoiceVectors&) = default;
    friend auto operator<=>(const ChoiceVectors&, const ChoiceVectors&) = default;
};
std::string to_string(const ChoiceVectors& b);

// Vectors induced by a V0-selector under the current edges.
ChoiceVectors choice_vectors_of(const ParityGame& game, const NiceTraversal& trav, const Selector& g, int i);
bool choice_vectors_allowed(const ParityGame& game, const NiceTraversal& trav, int i, const ChoiceVectors& b,
                            bool use_max_edges);

ViewVector initial_omega(const NiceTraversal& trav);
// The intermediate set for v_i at step i (before theta_i is added back).
ViewSet omega_star(const NiceTraversal& trav, const ViewVector& next, int i);
ViewSet omega_critical(const ParityGame& game, const NiceTraversal& trav, int i, const ViewSet& star,
                       const ChoiceVectors& b);
ViewVector omega_step(const ParityGame& game, const NiceTraversal& trav, const ViewVector& next, int i,
                      const ChoiceVectors* b);
// omega_i for every index (entry 0 unused).
std::vector<ViewVector> omega_sweep(const ParityGame& game, const NiceTraversal& trav, const Selector& g);

// Union over extensions of g of the views at step i.
ViewVector omega_bruteforce(const ParityGame& game, const NiceTraversal& trav, const Selector& g, int i,
                            std::uint64_t cap = 1u << 16);
std::uint64_t count_extensions(const ParityGame& game, const Selector& g);
void for_each_extension(const ParityGame& game, const Selector& g, const std::function<void(const Selector&)>& visit);

// Whether theta_i joins the accessibility set at a critical index i >= 2.
bool access_joins(const ParityGame& game, const NiceTraversal& trav, int i, const ViewSet& star,
                  const ChoiceVectors& b, const VertexSet& previous);
VertexSet access_step(const ParityGame& game, const NiceTraversal& trav, int i, const VertexSet& previous,
                      const ViewSet* star, const ChoiceVectors* b);
// alpha_i for every index (entry 0 unused).
std::vector<VertexSet> access_sweep(const ParityGame& game, const NiceTraversal& trav, const Selector& g);
// Vertices some extension of g reaches from sigma.
VertexSet access_bruteforce(const ParityGame& game, const Selector& g);

std::string dump_views(const NiceTraversal& trav, int i, const ViewVector& z);

} // namespace dynparity

#pragma once

#include <vector>

#include "dynparity/game.hpp"
#include "dynparity/treedec.hpp"

namespace dynparity {

// Reductions that turn owner and color changes into edge updates.
//
// ownership: (s, i) for i in {0, 1, 2} is vertex 3s + i; (s, 0) belongs to
// P0, the other copies to P1; (s, 2) moves to (s, owner(s)).
// color: (s, i) for i in {-1, 0, .., C} is vertex s(C + 2) + i + 1 with
// color max(i, 1); (s, -1) offers every color copy, only (s, c(s)) returns
// to (s, 0).
enum class GadgetKind { ownership, color };

struct Gadget {
    GadgetKind kind = GadgetKind::ownership;
    int n = 0;         // vertices of the game above
    int max_color = 1; // colors of the game above

    int tags() const { return kind == GadgetKind::ownership ? 3 : max_color + 2; }
    Vertex copy(Vertex s, int tag) const;
    // Copy the play starts from for s.
    Vertex entry(Vertex s) const { return kind == GadgetKind::ownership ? copy(s, 2) : copy(s, 0); }
    // Copy where a P0 vertex s picks its successor.
    Vertex mover(Vertex s) const { return copy(s, 0); }
    // Copy a move of the game above lands on.
    Vertex landing(Vertex t) const { return kind == GadgetKind::ownership ? copy(t, 2) : copy(t, -1); }
    // Original vertex of a copy.
    Vertex base(Vertex v) const { return v / tags(); }
};

ParityGame reduce_ownership(const ParityGame& game);
ParityGame reduce_colors(const ParityGame& game);
ParityGame reduce(const Gadget& gadget, const ParityGame& game);
Gadget gadget_for(GadgetKind kind, const ParityGame& game);

// Operations on the reduced game equivalent to op on the game above (game is
// the game above, before op). Owner ops under the ownership gadget and color
// ops under the color gadget become one deletion and one insertion.
std::vector<UpdateOp> translate(const Gadget& gadget, const ParityGame& game, const UpdateOp& op);

// Bags T(v) x tags.
TreeDecomposition induced_decomposition(const Gadget& gadget, const TreeDecomposition& td);

// Selector of the game above read off a selector of the reduced game.
Selector lift_selector(const Gadget& gadget, const ParityGame& above, const Selector& reduced);

} // namespace dynparity

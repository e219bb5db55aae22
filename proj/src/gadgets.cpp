#include "dynparity/gadgets.hpp"

#include <algorithm>

namespace dynparity {

Vertex Gadget::copy(Vertex s, int tag) const
{
    return kind == GadgetKind::ownership ? 3 * s + tag : s * (max_color + 2) + tag + 1;
}

Gadget gadget_for(GadgetKind kind, const ParityGame& game) { return Gadget{kind, game.size(), game.max_color()}; }

ParityGame reduce_ownership(const ParityGame& game)
{
    const Gadget gd = gadget_for(GadgetKind::ownership, game);
    ParityGame out(3 * game.size(), game.max_color(), gd.entry(game.sigma()));
    for (Vertex s = 0; s < game.size(); ++s)
        for (int i = 0; i < 3; ++i) {
            out.set_owner(gd.copy(s, i), i == 0 ? Player::p0 : Player::p1);
            out.set_color(gd.copy(s, i), game.color(s));
        }
    for (auto [s, t] : game.max_edges())
        for (int i = 0; i < 2; ++i)
            out.add_max_edge(gd.copy(s, i), gd.landing(t));
    for (auto [s, t] : game.edges())
        for (int i = 0; i < 2; ++i)
            out.add_edge(gd.copy(s, i), gd.landing(t));
    for (Vertex s = 0; s < game.size(); ++s) {
        for (int i = 0; i < 2; ++i)
            out.add_max_edge(gd.copy(s, 2), gd.copy(s, i));
        out.add_edge(gd.copy(s, 2), gd.copy(s, index_of(game.owner(s))));
    }
    return out;
}

ParityGame reduce_colors(const ParityGame& game)
{
    const Gadget gd = gadget_for(GadgetKind::color, game);
    const int c_max = game.max_color();
    ParityGame out(game.size() * gd.tags(), c_max, gd.entry(game.sigma()));
    for (Vertex s = 0; s < game.size(); ++s)
        for (int i = -1; i <= c_max; ++i) {
            out.set_owner(gd.copy(s, i), game.owner(s));
            out.set_color(gd.copy(s, i), std::max(i, 1));
        }
    for (auto [s, t] : game.max_edges())
        out.add_max_edge(gd.copy(s, 0), gd.landing(t));
    for (auto [s, t] : game.edges())
        out.add_edge(gd.copy(s, 0), gd.landing(t));
    for (Vertex s = 0; s < game.size(); ++s)
        for (int i = 1; i <= c_max; ++i) {
            out.add_max_edge(gd.copy(s, -1), gd.copy(s, i));
            out.add_edge(gd.copy(s, -1), gd.copy(s, i));
            out.add_max_edge(gd.copy(s, i), gd.copy(s, 0));
        }
    for (Vertex s = 0; s < game.size(); ++s)
        out.add_edge(gd.copy(s, game.color(s)), gd.copy(s, 0));
    return out;
}

ParityGame reduce(const Gadget& gadget, const ParityGame& game)
{
    return gadget.kind == GadgetKind::ownership ? reduce_ownership(game) : reduce_colors(game);
}

std::vector<UpdateOp> translate(const Gadget& gd, const ParityGame& game, const UpdateOp& op)
{
    validate_update(game, op);
    using K = UpdateOp::Kind;
    std::vector<UpdateOp> out;
    auto edge_op = [&](Vertex u, Vertex v) {
        out.push_back(op.kind == K::ins ? UpdateOp::ins(u, v) : UpdateOp::del(u, v));
    };
    if (gd.kind == GadgetKind::ownership) {
        switch (op.kind) {
        case K::ins:
        case K::del:
            for (int i = 0; i < 2; ++i)
                edge_op(gd.copy(op.a, i), gd.landing(op.b));
            break;
        case K::owner:
            if (index_of(game.owner(op.a)) != op.b) {
                out.push_back(UpdateOp::del(gd.copy(op.a, 2), gd.copy(op.a, 1 - op.b)));
                out.push_back(UpdateOp::ins(gd.copy(op.a, 2), gd.copy(op.a, op.b)));
            }
            break;
        case K::color:
            for (int i = 0; i < 3; ++i)
                out.push_back(UpdateOp::set_color(gd.copy(op.a, i), op.b));
            break;
        }
        return out;
    }
    switch (op.kind) {
    case K::ins:
    case K::del:
        edge_op(gd.copy(op.a, 0), gd.landing(op.b));
        break;
    case K::owner:
        for (int i = -1; i <= gd.max_color; ++i)
            out.push_back(UpdateOp{K::owner, gd.copy(op.a, i), op.b});
        break;
    case K::color:
        if (game.color(op.a) != op.b) {
            out.push_back(UpdateOp::del(gd.copy(op.a, game.color(op.a)), gd.copy(op.a, 0)));
            out.push_back(UpdateOp::ins(gd.copy(op.a, op.b), gd.copy(op.a, 0)));
        }
        break;
    }
    return out;
}

TreeDecomposition induced_decomposition(const Gadget& gd, const TreeDecomposition& td)
{
    TreeDecomposition out;
    out.tree_edges = td.tree_edges;
    const int low = gd.kind == GadgetKind::ownership ? 0 : -1;
    for (const Bag& bag : td.bags) {
        Bag b;
        for (Vertex s : bag)
            for (int i = 0; i < gd.tags(); ++i)
                b.push_back(gd.copy(s, low + i));
        std::sort(b.begin(), b.end());
        out.bags.push_back(std::move(b));
    }
    return out;
}

Selector lift_selector(const Gadget& gd, const ParityGame& above, const Selector& reduced)
{
    Selector out(above.size());
    for (Vertex s = 0; s < above.size(); ++s) {
        if (above.owner(s) != Player::p0 || !reduced.defined(gd.mover(s)))
            continue;
        Vertex t = gd.base(reduced.at(gd.mover(s)));
        if (gd.landing(t) == reduced.at(gd.mover(s)))
            out.set(s, t);
    }
    return out;
}

} // namespace dynparity

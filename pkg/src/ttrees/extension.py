"""Structures extending an elementary tree scope along a defective colour.

For a defective colour alpha and a colour beta missing in the scope W but
unused on the tree, the maximal (alpha,beta)-alternating path from the
W-vertex missing beta must swallow every alpha-edge crossing the boundary;
its first two vertices outside W, and more generally its maximal initial
segment outside W, can be added to W without breaking elementarity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import PartialColouring, is_elementary, missing_at
from .kempe import CYCLE, chain_from
from .multigraph import Multigraph, PreconditionError
from .tashkinov import TashkinovState, build_tree


@dataclass(frozen=True)
class ExtensionResult:
    """The alternating path for one (alpha, beta) choice.

    path_vertices runs from the scope-start vertex (the W-vertex missing
    beta).  w1 and w2 are the first two path vertices outside W, or None
    with b_violation set when the path leaves W fewer than two times.
    q_segment is the maximal run of path vertices outside W starting at w1.
    """

    alpha: int
    beta: int
    path_vertices: tuple[int, ...]
    path_edges: tuple[int, ...]
    w1: int | None
    w2: int | None
    q_segment: tuple[int, ...]
    b_violation: bool


def beta_candidates(state: TashkinovState) -> frozenset[int]:
    """Colours missing in the scope but unused on the tree (M minus U)."""
    return state.missing_union - state.used_colours


def p_path(c: PartialColouring, g: Multigraph, state: TashkinovState,
           alpha: int, beta: int) -> ExtensionResult:
    """The maximal (alpha,beta)-path starting in the scope, with w1, w2, Q."""
    if alpha not in state.defective:
        raise PreconditionError(f"alpha={alpha} is not a defective colour of the scope")
    if beta not in beta_candidates(state):
        raise PreconditionError(f"beta={beta} is not in missing-minus-used for this tree")
    starts = sorted(v for v in state.w_set if beta in missing_at(c, g, v))
    if len(starts) != 1:
        raise PreconditionError(
            f"expected exactly one scope vertex missing beta={beta}, found {len(starts)}"
        )
    start = starts[0]
    comp = chain_from(c, g, start, alpha, beta)
    if comp.kind == CYCLE:
        raise AssertionError("start vertex misses beta, its component cannot be a cycle")
    verts = list(comp.vertices)
    edges = list(comp.edge_ids)
    if verts[0] != start:
        verts.reverse()
        edges.reverse()
    outside = [v for v in verts if v not in state.w_set]
    w1 = outside[0] if len(outside) >= 1 else None
    w2 = outside[1] if len(outside) >= 2 else None
    q: list[int] = []
    if w1 is not None:
        i = verts.index(w1)
        while i < len(verts) and verts[i] not in state.w_set:
            q.append(verts[i])
            i += 1
    return ExtensionResult(
        alpha=alpha,
        beta=beta,
        path_vertices=tuple(verts),
        path_edges=tuple(edges),
        w1=w1,
        w2=w2,
        q_segment=tuple(q),
        b_violation=w2 is None,
    )


def check_b(c: PartialColouring, g: Multigraph, state: TashkinovState,
            res: ExtensionResult) -> bool:
    """Path swallows every defective-alpha boundary edge, and the scope
    plus {w1, w2} stays elementary."""
    if res.b_violation:
        return False
    alpha_boundary = {
        eid for eid in g.boundary_edges(state.w_set) if c.colours[eid] == res.alpha
    }
    if not alpha_boundary <= set(res.path_edges):
        return False
    return is_elementary(c, g, set(state.w_set) | {res.w1, res.w2})


def check_c(c: PartialColouring, g: Multigraph, state: TashkinovState,
            res: ExtensionResult) -> bool:
    """The scope plus the whole outside segment Q stays elementary."""
    return is_elementary(c, g, set(state.w_set) | set(res.q_segment))


def min_used_tree(c: PartialColouring, g: Multigraph, e0: int) -> TashkinovState:
    """Rebuild the tree greedily reusing colours, to shrink the used set
    before computing beta candidates."""
    return build_tree(c, g, e0, "min-colours")

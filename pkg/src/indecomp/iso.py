"""Isomorphism testing for small groups: invariant filters, then a
backtracking search mapping a greedy generating set."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import FiniteGroup
from .lattice import all_subgroups


@dataclass(frozen=True)
class GroupFingerprint:
    """Invariant bundle; isomorphic groups agree on all of it (necessary,
    not sufficient)."""

    order: int
    order_profile: tuple[tuple[int, int], ...]
    subgroup_count_by_order: tuple[tuple[int, int], ...]
    center_size: int
    abelian: bool
    derived_length: int


def _order_profile(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    counts = Counter(int(o) for o in G.element_orders())
    return tuple(sorted(counts.items()))


def _cheap_invariants(G: FiniteGroup) -> tuple:
    """Fingerprint fields that do not require the subgroup lattice."""
    return (
        G.order,
        _order_profile(G),
        G.center().size,
        G.is_abelian(),
        len(G.derived_series()) - 1,
    )


def fingerprint(G: FiniteGroup) -> GroupFingerprint:
    counts = Counter(s.size for s in all_subgroups(G).subgroups)
    order, profile, center_size, abelian, dlen = _cheap_invariants(G)
    return GroupFingerprint(
        order=order,
        order_profile=profile,
        subgroup_count_by_order=tuple(sorted(counts.items())),
        center_size=center_size,
        abelian=abelian,
        derived_length=dlen,
    )


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """Return a table-respecting bijection G -> H (as an index list), or None.

    Cheap invariants gate the search; the backtracker assigns images to a
    greedy generating set of G and grows the partial map by closure, failing
    fast on any product inconsistency.
    """
    if _cheap_invariants(G) != _cheap_invariants(H):
        return None
    n = G.order
    if n == 1:
        return [0]
    tg = G.table.tolist()
    th = H.table.tolist()
    og = [int(x) for x in G.element_orders()]
    oh = [int(x) for x in H.element_orders()]
    gens = G.generating_set()
    gmap = [-1] * n
    hmap = [-1] * n
    gmap[0] = 0
    hmap[0] = 0
    mapped = [0]

    def assign(g: int, h: int) -> list[int] | None:
        """Extend the map with g -> h and close under products; returns the
        list of newly mapped elements, or None on conflict (caller undoes)."""
        added: list[int] = []
        stack = [(g, h)]
        while stack:
            x, y = stack.pop()
            cur = gmap[x]
            if cur != -1:
                if cur != y:
                    return _undo(added)
                continue
            if hmap[y] != -1:
                return _undo(added)
            gmap[x] = y
            hmap[y] = x
            mapped.append(x)
            added.append(x)
            row_gx = tg[x]
            row_hx = th[y]
            for z in mapped:
                w = gmap[z]
                stack.append((row_gx[z], row_hx[w]))
                stack.append((tg[z][x], th[w][y]))
        return added

    def _undo(added: list[int]) -> None:
        for x in added:
            hmap[gmap[x]] = -1
            gmap[x] = -1
            mapped.pop()
        return None

    def candidates(g: int, prior: list[tuple[int, int]]) -> list[int]:
        want = og[g]
        out = []
        for h in range(1, n):
            if oh[h] != want or hmap[h] != -1:
                continue
            ok = True
            for pg, ph in prior:
                if og[tg[g][pg]] != oh[th[h][ph]] or og[tg[pg][g]] != oh[th[ph][h]]:
                    ok = False
                    break
            if ok:
                out.append(h)
        return out

    def backtrack(i: int, prior: list[tuple[int, int]]) -> bool:
        if i == len(gens):
            return len(mapped) == n
        g = gens[i]
        if gmap[g] != -1:
            return backtrack(i + 1, prior + [(g, gmap[g])])
        for h in candidates(g, prior):
            added = assign(g, h)
            if added is not None:
                if backtrack(i + 1, prior + [(g, h)]):
                    return True
                _undo(added)
        return False

    if backtrack(0, []):
        return list(gmap)
    return None

"""Automorphism groups and isomorphism search by generator-image backtracking.

Candidate images are pruned by element order and conjugacy class size;
each complete candidate tuple is verified by exhaustive closure of the
partial map, so accepted maps are genuine isomorphisms.  Searches are
complete and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import max_order
from .errors import DomainError, InternalCheckError, SizeBoundError
from .permutation import Permutation, conjugate
from .permgroup import (
    GroupHom,
    PermGroup,
    Subgroup,
    group_from_elements,
    small_generating_set,
)


@dataclass(frozen=True)
class MarkedPair:
    """A group generated by a marked subgroup P and a marked element s.

    The element must normalize the subgroup and together they must
    generate the whole group.
    """

    group: PermGroup
    subgroup: Subgroup
    element: Permutation

    def __post_init__(self):
        if not self.group.contains(self.element):
            raise DomainError("marked element is not a member of the marked group")
        pset = self.subgroup.element_set()
        for x in self.subgroup.generators:
            if not self.group.contains(x):
                raise DomainError("marked subgroup is not inside the marked group")
            if conjugate(self.element, x) not in pset:
                raise DomainError("marked element does not normalize the subgroup")
        span = self.group.subgroup(
            tuple(self.subgroup.generators)
            + ((self.element,) if not self.element.is_identity() else ())
        )
        if span.order != self.group.order:
            raise DomainError("marked subgroup and element do not generate the group")


def _close_map(A: PermGroup, B: PermGroup, pairs):
    """Extend generator images to a full map, or return None on conflict."""
    m = {A.identity: B.identity}
    frontier = [A.identity]
    while frontier:
        nxt = []
        for x in frontier:
            mx = m[x]
            for g, h in pairs:
                y = x * g
                my = mx * h
                known = m.get(y)
                if known is None:
                    m[y] = my
                    nxt.append(y)
                elif known != my:
                    return None
        frontier = nxt
    if len(m) != A.order or len(set(m.values())) != B.order:
        return None
    return m


def _invariant(group: PermGroup, x: Permutation):
    return (x.order(), group.class_size_of(x))


def _candidate_lists(A, B, sequence, restrictions):
    """Per-generator candidate images in B, filtered by invariants."""
    by_invariant = {}
    for y in B.elements():
        by_invariant.setdefault(_invariant(B, y), []).append(y)
    lists = []
    for i, g in enumerate(sequence):
        pool = by_invariant.get(_invariant(A, g), [])
        if restrictions[i] is not None:
            pool = [y for y in pool if y in restrictions[i]]
        if not pool:
            return None
        lists.append(pool)
    return lists


def _search_maps(A, B, sequence, restrictions, first_only):
    """All (or the first) isomorphisms A -> B respecting the restrictions."""
    if A.order != B.order:
        return []
    if A.order == 1:
        return [{A.identity: B.identity}]
    lists = _candidate_lists(A, B, sequence, restrictions)
    if lists is None:
        return []
    found = []

    def recurse(i, chosen):
        if i == len(sequence):
            m = _close_map(A, B, list(zip(sequence, chosen)))
            if m is not None:
                found.append(m)
                return first_only
            return False
        for cand in lists[i]:
            if recurse(i + 1, chosen + [cand]):
                return True
        return False

    recurse(0, [])
    return found


def _profile(group: PermGroup):
    return sorted((c.rep.order(), c.size) for c in group.conjugacy_data())


def find_group_isomorphism(A: PermGroup, B: PermGroup):
    """An isomorphism A -> B as a GroupHom, or None."""
    if A.order != B.order or _profile(A) != _profile(B):
        return None
    sequence = list(small_generating_set(A.degree, A.elements()))
    maps = _search_maps(A, B, sequence, [None] * len(sequence), first_only=True)
    if not maps:
        return None
    m = maps[0]
    return GroupHom(A, B, [(g, m[g]) for g in sequence] or [(A.identity, B.identity)])


def _pair_sequence(mp: MarkedPair):
    """Generating sequence [s] + generators of P (s omitted when trivial)."""
    seq = [] if mp.element.is_identity() else [mp.element]
    seq.extend(mp.subgroup.generators)
    return seq


def find_pair_isomorphism(a: MarkedPair, b: MarkedPair):
    """An isomorphism f of the marked groups with f(P) = Q and f(s)
    conjugate to t, or None when no such isomorphism exists."""
    if a.group.order != b.group.order:
        return None
    if a.subgroup.order != b.subgroup.order:
        return None
    if a.element.order() != b.element.order():
        return None
    if _profile(a.group) != _profile(b.group):
        return None
    sequence = _pair_sequence(a)
    restrictions = []
    if not a.element.is_identity():
        t_class = b.group.conjugacy_data()[b.group.class_index_of(b.element)]
        restrictions.append(set(t_class.elements))
    qset = b.subgroup.element_set()
    restrictions.extend([qset] * len(a.subgroup.generators))
    maps = _search_maps(a.group, b.group, sequence, restrictions, first_only=True)
    if not maps:
        return None
    m = maps[0]
    pairs = [(g, m[g]) for g in sequence] or [(a.group.identity, b.group.identity)]
    return GroupHom(a.group, b.group, pairs)


def pair_automorphism_maps(mp: MarkedPair):
    """All automorphisms of the marked group sending s to a conjugate of s.

    Returned as full element maps.  Preservation of the marked subgroup is
    asserted afterwards rather than imposed during the search.
    """
    G = mp.group
    if G.order > max_order():
        raise SizeBoundError(
            f"automorphism search refused for order {G.order} > {max_order()}"
        )
    sequence = _pair_sequence(mp)
    restrictions = []
    if not mp.element.is_identity():
        s_class = G.conjugacy_data()[G.class_index_of(mp.element)]
        restrictions.append(set(s_class.elements))
    restrictions.extend([None] * len(mp.subgroup.generators))
    maps = _search_maps(G, G, sequence, restrictions, first_only=False)
    pset = mp.subgroup.element_set()
    for m in maps:
        for x in mp.subgroup.generators:
            if m[x] not in pset:
                raise InternalCheckError(
                    "pair automorphism moved the marked subgroup"
                )
    return maps


@dataclass(frozen=True)
class ElementAction:
    """A group of automorphisms realized as permutations of element labels."""

    group: PermGroup
    labels: tuple
    index: dict

    def perm_from_map(self, m) -> Permutation:
        return Permutation(self.index[m[x]] for x in self.labels)

    def map_from_perm(self, perm: Permutation) -> dict:
        return {x: self.labels[perm.images[i]] for i, x in enumerate(self.labels)}

    def apply(self, perm: Permutation, x: Permutation) -> Permutation:
        return self.labels[perm.images[self.index[x]]]


def action_from_maps(G: PermGroup, maps) -> ElementAction:
    labels = G.elements()
    index = {x: i for i, x in enumerate(labels)}
    perms = sorted(Permutation(index[m[x]] for x in labels) for m in maps)
    group = group_from_elements(len(labels), perms)
    return ElementAction(group=group, labels=labels, index=index)


def automorphism_group(G: PermGroup) -> ElementAction:
    """The full automorphism group acting on the element labels of G."""
    if G.order > max_order():
        raise SizeBoundError(
            f"automorphism search refused for order {G.order} > {max_order()}"
        )
    if G.order == 1:
        return action_from_maps(G, [{G.identity: G.identity}])
    sequence = list(small_generating_set(G.degree, G.elements()))
    maps = _search_maps(G, G, sequence, [None] * len(sequence), first_only=False)
    return action_from_maps(G, maps)


def inner_automorphism_subgroup(G: PermGroup, action: ElementAction) -> Subgroup:
    """Inn(G) inside an automorphism action on the elements of G."""
    perms = [
        action.perm_from_map({x: conjugate(g, x) for x in action.labels})
        for g in G.generators
    ]
    return action.group.subgroup(perms)

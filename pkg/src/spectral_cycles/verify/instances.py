"""Random instances satisfying the hypotheses of the clique-to-set path lemma."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import Graph, bits, mask_of


@dataclass(frozen=True)
class Lemma5Instance:
    graph: Graph
    a: int  # mask of the clique side
    b: int  # mask of the other side
    k: int
    t: int


def lemma5_hypotheses(inst: Lemma5Instance, *, remark: bool = False) -> bool:
    g, a, b, k, t = inst.graph, inst.a, inst.b, inst.k, inst.t
    if a & b or a | b != g.full or a.bit_count() != t or t < 2 or k < 1:
        return False
    if g.edge_count_within(a) != t * (t - 1) // 2:
        return False
    nb = b.bit_count()
    if nb <= k * t:
        return False
    e_ab = g.cross_edges(a, b)
    if remark:
        return e_ab > k * nb
    return e_ab >= k * nb and any((g.adj[x] & a).bit_count() > k for x in bits(b))


def lemma5_instance(
    rng: np.random.Generator,
    k: int,
    t: int,
    nb: int,
    *,
    remark: bool = False,
    inner_p: float | None = None,
) -> Lemma5Instance:
    """A = K_t, |B| = nb, e(A,B) >= k|B| with one B vertex seeing > k of A.

    With ``remark`` the condition is e(A,B) > k|B| instead. Labels are shuffled.
    """
    if not (k >= 1 and t >= max(2, k + 1) and k * t < nb and t + nb <= 64):
        raise ValueError(f"no instance with k={k}, t={t}, |B|={nb}")
    n = t + nb
    perm = rng.permutation(n).tolist()
    a_side = perm[:t]
    b_side = perm[t:]
    rows = [0] * n

    def link(x, y):
        rows[x] |= 1 << y
        rows[y] |= 1 << x

    for i, x in enumerate(a_side):
        for y in a_side[i + 1:]:
            link(x, y)
    q = float(rng.uniform(0.0, 1.0))
    for y in b_side:
        for x in a_side:
            if rng.random() < q:
                link(x, y)
    a = mask_of(a_side)
    heavy = b_side[int(rng.integers(nb))]
    while not remark and (rows[heavy] & a).bit_count() <= k:
        missing = [x for x in a_side if not rows[heavy] >> x & 1]
        link(heavy, missing[int(rng.integers(len(missing)))])
    need = k * nb + (1 if remark else 0)
    while sum((rows[y] & a).bit_count() for y in b_side) < need:
        y = b_side[int(rng.integers(nb))]
        missing = [x for x in a_side if not rows[y] >> x & 1]
        if missing:
            link(y, missing[int(rng.integers(len(missing)))])
    p = float(rng.uniform(0.0, 0.3)) if inner_p is None else inner_p
    for i, x in enumerate(b_side):
        for y in b_side[i + 1:]:
            if rng.random() < p:
                link(x, y)
    return Lemma5Instance(Graph(n, tuple(rows)), a, mask_of(b_side), k, t)


def random_lemma5_instance(rng: np.random.Generator, *, remark: bool = False) -> Lemma5Instance:
    """Draw k <= 3, t <= 6, kt < |B| <= 25 and build an instance."""
    k = int(rng.integers(1, 4))
    t = int(rng.integers(max(2, k + 1), 7))
    nb = int(rng.integers(k * t + 1, 26))
    return lemma5_instance(rng, k, t, nb, remark=remark)

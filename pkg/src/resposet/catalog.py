"""Enumeration of small posets, used for the soundness corpus.

Posets are generated by inserting elements in linear-extension order
(each new element is maximal at insertion time and picks a down-closed
lower set), then deduplicated by a canonical form over all relabelings.
This reaches every isomorphism class; the counts for n = 1..5 are
1, 2, 5, 16, 63.
"""

from itertools import permutations

import numpy as np

from .involution import enumerate_antitone_involutions
from .order import Poset


def _canonical(leq: np.ndarray) -> bytes:
    n = leq.shape[0]
    best = None
    for perm in permutations(range(n)):
        p = list(perm)
        key = leq[np.ix_(p, p)].tobytes()
        if best is None or key < best:
            best = key
    return best


def posets_of_size(n: int):
    """All posets on n labeled elements e1..en, one per isomorphism class."""
    if n == 0:
        return [Poset((), np.zeros((0, 0), dtype=bool))]
    partial = [np.ones((1, 1), dtype=bool)]
    for m in range(2, n + 1):
        grown = []
        for leq in partial:
            k = m - 1
            # choose a down-closed subset of existing elements as the new
            # element's strict lower set
            for mask in range(1 << k):
                lower = np.array([(mask >> i) & 1 for i in range(k)], dtype=bool)
                # down-closed: u <= v and v in lower implies u in lower
                ok = True
                for v in range(k):
                    if lower[v]:
                        if not lower[leq[:, v]].all():
                            ok = False
                            break
                if not ok:
                    continue
                new = np.zeros((m, m), dtype=bool)
                new[:k, :k] = leq
                new[k, k] = True
                new[:k, k] = lower
                grown.append(new)
        partial = grown
    seen = {}
    labels = tuple(f"e{i}" for i in range(1, n + 1))
    for leq in partial:
        key = _canonical(leq)
        if key not in seen:
            seen[key] = Poset(labels, leq)
    return list(seen.values())


def posets_up_to_size(n: int):
    out = []
    for m in range(1, n + 1):
        out.extend(posets_of_size(m))
    return out


def involuted_posets_up_to_size(n: int):
    """(poset, involution) pairs for every small poset admitting one."""
    pairs = []
    for p in posets_up_to_size(n):
        for inv in enumerate_antitone_involutions(p):
            pairs.append((p, inv))
    return pairs

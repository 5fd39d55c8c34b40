"""Residuated structures: data model, axiom verification, derived negation.

A ResiduatedStructure stores both operation tables as dense integer
matrices over the poset's element indices; verification is exhaustive
over all pairs/triples, vectorized with numpy so even the soundness
corpus stays fast.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NoBottom, UnknownLabel
from .order import Poset
from .report import VerificationReport, failed, passed


@dataclass(frozen=True)
class ResiduatedStructure:
    """Poset with unit and total tables for the monoid operation and the residual."""

    poset: Poset
    unit: str
    odot: np.ndarray   # int matrix, odot[i, j] = index of elements[i] (.) elements[j]
    arrow: np.ndarray  # int matrix, arrow[i, j] = index of elements[i] -> elements[j]

    def __post_init__(self):
        self.odot.setflags(write=False)
        self.arrow.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, ResiduatedStructure):
            return NotImplemented
        return (
            self.poset == other.poset
            and self.unit == other.unit
            and np.array_equal(self.odot, other.odot)
            and np.array_equal(self.arrow, other.arrow)
        )

    def __hash__(self):
        return hash(
            (self.poset, self.unit, self.odot.tobytes(), self.arrow.tobytes())
        )

    @property
    def elements(self):
        return self.poset.elements

    def odot_of(self, x, y):
        return self.elements[self.odot[self.poset.index(x), self.poset.index(y)]]

    def arrow_of(self, x, y):
        return self.elements[self.arrow[self.poset.index(x), self.poset.index(y)]]

    def table_as_labels(self, which: str) -> dict:
        """Nested dict {row: {col: value}} in element order; which is 'odot' or 'arrow'."""
        table = self.odot if which == "odot" else self.arrow
        els = self.elements
        return {
            x: {y: els[table[i, j]] for j, y in enumerate(els)}
            for i, x in enumerate(els)
        }


def structure_from_tables(p: Poset, unit: str, odot_map: dict, arrow_map: dict) -> ResiduatedStructure:
    """Build a structure from nested label dicts {row: {col: value}}."""
    n = len(p)
    p.index(unit)
    odot = np.zeros((n, n), dtype=np.int64)
    arrow = np.zeros((n, n), dtype=np.int64)
    for matrix, table in ((odot, odot_map), (arrow, arrow_map)):
        for x in p.elements:
            if x not in table:
                raise UnknownLabel(f"table row for {x!r} is missing")
            row = table[x]
            for y in p.elements:
                if y not in row:
                    raise UnknownLabel(f"table entry ({x!r}, {y!r}) is missing")
                matrix[p.index(x), p.index(y)] = p.index(row[y])
    return ResiduatedStructure(p, unit, odot, arrow)


def verify_residuated(s: ResiduatedStructure) -> VerificationReport:
    """Exhaustively check the residuated-poset axioms.

    Checks, in order: unit-greatest, commutativity, associativity,
    unit-law, adjointness.  A failed check carries the first violating
    tuple in element order.
    """
    p = s.poset
    leq = p.leq_matrix
    O, A = s.odot, s.arrow
    els = p.elements
    u = p.index(s.unit)
    checks = []

    bad = ~leq[:, u]
    checks.append(_verdict("unit-greatest", bad, els))

    bad = O != O.T
    checks.append(_verdict("commutativity", bad, els))

    # (x . y) . z  vs  x . (y . z), as [x, y, z]-indexed cubes
    left = O[O, :]    # [x, y, z] -> O[O[x, y], z]
    right = O[:, O]   # [x, y, z] -> O[x, O[y, z]]
    bad = left != right
    checks.append(_verdict("associativity", bad, els))

    n = len(p)
    bad = O[u, :] != np.arange(n)
    checks.append(_verdict("unit-law", bad, els))

    lhs = leq[O, :]                 # [x, y, z] -> O[x, y] <= z
    rhs = leq[:, A]                 # [x, y, z] -> x <= A[y, z]
    bad = lhs != rhs
    checks.append(_verdict("adjointness", bad, els))

    return VerificationReport(tuple(checks))


def _verdict(name, bad, els):
    if not bad.any():
        return passed(name)
    idx = np.argwhere(bad)[0]
    return failed(name, tuple(els[i] for i in idx))


def derived_negation(s: ResiduatedStructure) -> dict:
    """The map x -> (x -> bottom); requires a least element."""
    bottom, _ = s.poset.bounds()
    if bottom is None:
        raise NoBottom("structure has no least element")
    b = s.poset.index(bottom)
    return {x: s.elements[s.arrow[i, b]] for i, x in enumerate(s.elements)}


def check_lemma1(s: ResiduatedStructure) -> VerificationReport:
    """Properties of the derived negation: x <= x'' and antitonicity."""
    neg = derived_negation(s)
    p = s.poset
    checks = []

    witness = None
    for x in p.elements:
        if not p.leq(x, neg[neg[x]]):
            witness = (x,)
            break
    checks.append(
        passed("double-negation-expansive")
        if witness is None
        else failed("double-negation-expansive", witness)
    )

    witness = None
    for x in p.elements:
        for y in p.elements:
            if p.leq(x, y) and not p.leq(neg[y], neg[x]):
                witness = (x, y)
                break
        if witness:
            break
    checks.append(
        passed("negation-antitone")
        if witness is None
        else failed("negation-antitone", witness)
    )
    return VerificationReport(tuple(checks))


def check_integrality(s: ResiduatedStructure) -> VerificationReport:
    """x . y <= x and x . y <= y for all pairs."""
    p = s.poset
    leq = p.leq_matrix
    O = s.odot
    n = len(p)
    rows = np.arange(n)
    checks = []
    bad = ~leq[O, rows[:, None]]  # [x, y]: O[x, y] <= x
    checks.append(_verdict("integral-left", bad, p.elements))
    bad = ~leq[O, rows[None, :]]  # [x, y]: O[x, y] <= y
    checks.append(_verdict("integral-right", bad, p.elements))
    return VerificationReport(tuple(checks))


def residual_of(p: Poset, odot: np.ndarray, b, c):
    """Greatest a with a . b <= c, or None when the set has no greatest element."""
    j, k = p.index(b), p.index(c)
    mask = p.leq_matrix[odot[:, j], k]
    return p._extreme(mask, upper=True)


def is_monotone(p: Poset, odot: np.ndarray) -> bool:
    """a <= b implies a . c <= b . c, over all triples."""
    leq = p.leq_matrix
    # [a, b, c]: leq[a, b] -> leq[O[a, c], O[b, c]]
    ok = ~leq[:, :, None] | leq[odot[:, None, :], odot[None, :, :]]
    return bool(ok.all())


# Per-check replay predicates: evaluate one axiom instance on a witness
# tuple; a reported witness must make these return False.
REPLAY = {
    "unit-greatest": lambda s, w: s.poset.leq(w[0], s.unit),
    "commutativity": lambda s, w: s.odot_of(w[0], w[1]) == s.odot_of(w[1], w[0]),
    "associativity": lambda s, w: s.odot_of(s.odot_of(w[0], w[1]), w[2])
    == s.odot_of(w[0], s.odot_of(w[1], w[2])),
    "unit-law": lambda s, w: s.odot_of(s.unit, w[0]) == w[0],
    "adjointness": lambda s, w: s.poset.leq(s.odot_of(w[0], w[1]), w[2])
    == s.poset.leq(w[0], s.arrow_of(w[1], w[2])),
    "integral-left": lambda s, w: s.poset.leq(s.odot_of(w[0], w[1]), w[0]),
    "integral-right": lambda s, w: s.poset.leq(s.odot_of(w[0], w[1]), w[1]),
    "double-negation-expansive": lambda s, w: s.poset.leq(
        w[0], derived_negation(s)[derived_negation(s)[w[0]]]
    ),
    "negation-antitone": lambda s, w: (not s.poset.leq(w[0], w[1]))
    or s.poset.leq(derived_negation(s)[w[1]], derived_negation(s)[w[0]]),
}


def replay_check(s: ResiduatedStructure, name: str, witness) -> bool:
    """Re-evaluate the named axiom on a witness tuple; False reproduces the failure."""
    return REPLAY[name](s, tuple(witness))

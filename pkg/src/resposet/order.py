"""Finite posets over string labels.

A poset is stored as an ordered tuple of labels plus a dense boolean
``leq`` matrix (row i, column j set iff element i is below element j).
All structures handled here are tiny (a few dozen elements at most), so
dense matrices and exhaustive pair/triple scans are the right tool.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateLabel,
    SelfCover,
    UnknownLabel,
)

Label = str


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset.

    elements: user-supplied iteration order; every output of this package
    (tables, witnesses, enumerations) follows it.
    leq: boolean |P| x |P| matrix, leq[i, j] iff elements[i] <= elements[j].
    """

    elements: tuple
    leq_matrix: np.ndarray
    _index: dict = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.elements)})
        _frozen(self.leq_matrix)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(
            self.leq_matrix, other.leq_matrix
        )

    def __hash__(self):
        return hash((self.elements, self.leq_matrix.tobytes()))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def index(self, x: Label) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(f"label {x!r} is not an element of this poset") from None

    def leq(self, x: Label, y: Label) -> bool:
        return bool(self.leq_matrix[self.index(x), self.index(y)])

    def lt(self, x: Label, y: Label) -> bool:
        return x != y and self.leq(x, y)

    def covers_matrix(self) -> np.ndarray:
        """Transitive reduction of the strict order, as a boolean matrix."""
        strict = self.leq_matrix & ~np.eye(len(self), dtype=bool)
        return strict & ~(strict @ strict)

    def covers(self) -> list:
        """Cover pairs (x, y) with y covering x, in element order."""
        red = self.covers_matrix()
        return [
            (self.elements[i], self.elements[j])
            for i, j in np.argwhere(red)
        ]

    def meet(self, x: Label, y: Label):
        """Greatest lower bound of x and y, or None when it does not exist."""
        i, j = self.index(x), self.index(y)
        return self._extreme(self.leq_matrix[:, i] & self.leq_matrix[:, j], upper=True)

    def join(self, x: Label, y: Label):
        """Least upper bound of x and y, or None when it does not exist."""
        i, j = self.index(x), self.index(y)
        return self._extreme(self.leq_matrix[i, :] & self.leq_matrix[j, :], upper=False)

    def _extreme(self, mask: np.ndarray, upper: bool):
        # greatest (upper=True) or least (upper=False) element of the masked set
        (idx,) = np.nonzero(mask)
        for g in idx:
            row = self.leq_matrix[idx, g] if upper else self.leq_matrix[g, idx]
            if row.all():
                return self.elements[g]
        return None

    def is_lattice(self) -> bool:
        els = self.elements
        for x in els:
            for y in els:
                if self.meet(x, y) is None or self.join(x, y) is None:
                    return False
        return True

    def is_chain(self) -> bool:
        return bool((self.leq_matrix | self.leq_matrix.T).all())

    def dual(self) -> "Poset":
        """Same elements, reversed order."""
        return Poset(self.elements, self.leq_matrix.T.copy())

    def bounds(self):
        """(bottom, top), each None when absent."""
        bottom = top = None
        col_all = self.leq_matrix.all(axis=1)  # element below everything
        row_all = self.leq_matrix.all(axis=0)  # element above everything
        if col_all.any():
            bottom = self.elements[int(np.argmax(col_all))]
        if row_all.any():
            top = self.elements[int(np.argmax(row_all))]
        return bottom, top

    def downset(self, x: Label) -> list:
        i = self.index(x)
        return [self.elements[j] for j in np.nonzero(self.leq_matrix[:, i])[0]]

    def upset(self, x: Label) -> list:
        i = self.index(x)
        return [self.elements[j] for j in np.nonzero(self.leq_matrix[i, :])[0]]


def _check_labels(elements) -> tuple:
    elements = tuple(elements)
    seen = set()
    for x in elements:
        if x in seen:
            raise DuplicateLabel(f"label {x!r} appears more than once")
        seen.add(x)
    return elements


def poset_from_covers(elements, covers) -> Poset:
    """Build a poset from its Hasse (cover) relation.

    The order is the reflexive-transitive closure of ``covers``.  Raises
    CycleDetected when the closure would violate antisymmetry.
    """
    elements = _check_labels(elements)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    for x, y in covers:
        if x == y:
            raise SelfCover(f"cover ({x!r}, {y!r}) relates a label to itself")
        if x not in index:
            raise UnknownLabel(f"cover endpoint {x!r} is not listed in elements")
        if y not in index:
            raise UnknownLabel(f"cover endpoint {y!r} is not listed in elements")
        rel[index[x], index[y]] = True
    closure = _transitive_closure(rel)
    _check_antisymmetric(elements, closure)
    return Poset(elements, closure)


def poset_from_relation(elements, pairs) -> Poset:
    """Build a poset from an explicitly given order relation.

    ``pairs`` may omit reflexive pairs; the relation is closed and then
    validated exactly as in poset_from_covers.
    """
    elements = _check_labels(elements)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    for x, y in pairs:
        if x not in index:
            raise UnknownLabel(f"pair endpoint {x!r} is not listed in elements")
        if y not in index:
            raise UnknownLabel(f"pair endpoint {y!r} is not listed in elements")
        rel[index[x], index[y]] = True
    closure = _transitive_closure(rel)
    _check_antisymmetric(elements, closure)
    return Poset(elements, closure)


def _transitive_closure(rel: np.ndarray) -> np.ndarray:
    closure = rel.copy()
    while True:
        step = closure | (closure @ closure)
        if np.array_equal(step, closure):
            return closure
        closure = step


def _check_antisymmetric(elements, closure: np.ndarray):
    sym = closure & closure.T & ~np.eye(len(elements), dtype=bool)
    if sym.any():
        i, j = np.argwhere(sym)[0]
        raise CycleDetected(
            f"{elements[i]!r} and {elements[j]!r} are mutually comparable"
        )


def chain_poset(labels) -> Poset:
    """Chain ordered by the given label sequence."""
    labels = tuple(labels)
    return poset_from_covers(labels, list(zip(labels, labels[1:])))

"""Antitone involutions on finite posets: validation and enumeration."""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInvolution, UnknownLabel
from .order import Poset
from .report import Check, VerificationReport, failed, passed


@dataclass(frozen=True)
class Involution:
    """A self-inverse map on a poset carrier, stored as label pairs.

    The pairs follow the element order of the poset the involution was
    built on, so two involutions on the same carrier compare by value.
    """

    pairs: tuple  # ((label, image), ...) in carrier element order

    def __call__(self, x):
        for a, b in self.pairs:
            if a == x:
                return b
        raise UnknownLabel(f"label {x!r} is outside the involution's carrier")

    @property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def __str__(self):
        return "{" + ", ".join(f"{a}->{b}" for a, b in self.pairs) + "}"


def involution_from_mapping(p: Poset, mapping: dict) -> Involution:
    """Wrap a label->label dict as an Involution in p's element order.

    Only totality/label sanity is checked here; use
    check_antitone_involution for the axioms.
    """
    for x, y in mapping.items():
        if x not in p:
            raise UnknownLabel(f"involution key {x!r} is not an element")
        if y not in p:
            raise UnknownLabel(f"involution value {y!r} is not an element")
    missing = [x for x in p.elements if x not in mapping]
    if missing:
        raise UnknownLabel(f"involution is not total; missing {missing[0]!r}")
    return Involution(tuple((x, mapping[x]) for x in p.elements))


def check_antitone_involution(p: Poset, f) -> VerificationReport:
    """Check the two axioms: f(f(x)) = x, and x <= y implies f(y) <= f(x).

    ``f`` may be an Involution or a plain mapping.  Each axiom becomes one
    named check; the first violating tuple in element order is the witness.
    """
    mapping = f.mapping if isinstance(f, Involution) else dict(f)
    inv = involution_from_mapping(p, mapping)
    checks = []

    witness = None
    for x in p.elements:
        if inv(inv(x)) != x:
            witness = (x,)
            break
    checks.append(passed("involutive") if witness is None else failed("involutive", witness))

    witness = None
    for x in p.elements:
        for y in p.elements:
            if p.leq(x, y) and not p.leq(inv(y), inv(x)):
                witness = (x, y)
                break
        if witness:
            break
    checks.append(passed("antitone") if witness is None else failed("antitone", witness))

    return VerificationReport(tuple(checks))


@dataclass(frozen=True)
class InvolutedPoset:
    """A poset bundled with a validated antitone involution."""

    poset: Poset
    involution: Involution

    def __post_init__(self):
        report = check_antitone_involution(self.poset, self.involution)
        if not report.overall:
            bad = report.failed()[0]
            raise InvalidInvolution(
                f"not an antitone involution: {bad}", report=report
            )
        bottom, top = self.poset.bounds()
        if bottom is not None and top is not None:
            # forced: an antitone involution swaps the bounds
            assert self.involution(bottom) == top and self.involution(top) == bottom

    @property
    def elements(self):
        return self.poset.elements


def involuted(p: Poset, mapping) -> InvolutedPoset:
    if not isinstance(mapping, Involution):
        mapping = involution_from_mapping(p, mapping)
    return InvolutedPoset(p, mapping)


def enumerate_antitone_involutions(p: Poset):
    """All antitone involutions on p, lexicographic in p's element order.

    Backtracking over self-inverse pairings: the smallest unassigned
    element is paired (possibly with itself) and the antitone condition
    is enforced incrementally.  Candidate partners must have complementary
    down-set/up-set sizes, which prunes most branches immediately.
    """
    n = len(p)
    leq = p.leq_matrix
    down = leq.sum(axis=0)  # |{u : u <= x}|
    up = leq.sum(axis=1)    # |{u : x <= u}|
    image = [-1] * n
    results = []

    def compatible(i, j):
        # pairing i <-> j; check against every already-assigned pair
        if down[i] != up[j] or up[i] != down[j]:
            return False
        for a in range(n):
            b = image[a]
            if b < 0:
                continue
            if leq[a, i] and not leq[j, b]:
                return False
            if leq[i, a] and not leq[b, j]:
                return False
            if leq[a, j] and not leq[i, b]:
                return False
            if leq[j, a] and not leq[b, i]:
                return False
        # the new pair against itself is always fine: i <= j gives j' = i <= j = i'
        return True

    def backtrack():
        try:
            i = image.index(-1)
        except ValueError:
            results.append(
                Involution(tuple((p.elements[a], p.elements[image[a]]) for a in range(n)))
            )
            return
        for j in range(i, n):
            if image[j] >= 0:
                continue
            if compatible(i, j):
                image[i], image[j] = j, i
                backtrack()
                image[i], image[j] = -1, -1

    backtrack()
    results.sort(key=lambda inv: tuple(p.index(b) for _, b in inv.pairs))
    for inv in results:
        # every emitted involution re-validates against the axioms
        assert check_antitone_involution(p, inv).overall
    return results

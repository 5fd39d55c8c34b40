"""Classification predicates: distributivity, (pseudo-)Kleene identities,
Boolean-algebra recognition."""

from dataclasses import dataclass

from .errors import InvalidInvolution, NotALattice
from .involution import Involution, check_antitone_involution, involution_from_mapping
from .order import Poset
from .report import VerificationReport, failed, passed


@dataclass(frozen=True)
class BooleanAlgebra:
    """A bounded distributive lattice with a complement involution."""

    lattice: Poset
    bottom: str
    top: str
    complement: Involution

    @property
    def elements(self):
        return self.lattice.elements


@dataclass(frozen=True)
class KleeneVerdict:
    report: VerificationReport
    distributive: bool
    pseudo_kleene: bool
    kleene: bool


def is_distributive(L: Poset):
    """(verdict, witness): meet distributes over join on all triples.

    The witness is the first violating (x, y, z) in element order.
    """
    if not L.is_lattice():
        raise NotALattice("distributivity is only defined for lattices")
    for x in L.elements:
        for y in L.elements:
            for z in L.elements:
                lhs = L.meet(x, L.join(y, z))
                rhs = L.join(L.meet(x, y), L.meet(x, z))
                if lhs != rhs:
                    return False, (x, y, z)
    return True, None


def check_pseudo_kleene(L: Poset, inv) -> KleeneVerdict:
    """Check the two pseudo-Kleene identities over all pairs.

    kleene-bound:      x ^ x'  <=  y v y'
    kleene-absorption: x ^ (x' v y)  =  (x ^ x') v (x ^ y)
    """
    if not L.is_lattice():
        raise NotALattice("pseudo-Kleene classification needs a lattice")
    if not isinstance(inv, Involution):
        inv = involution_from_mapping(L, inv)
    if not check_antitone_involution(L, inv).overall:
        raise InvalidInvolution("the given map is not an antitone involution")

    checks = []
    witness = None
    for x in L.elements:
        for y in L.elements:
            if not L.leq(L.meet(x, inv(x)), L.join(y, inv(y))):
                witness = (x, y)
                break
        if witness:
            break
    checks.append(passed("kleene-bound") if witness is None else failed("kleene-bound", witness))

    witness = None
    for x in L.elements:
        for y in L.elements:
            lhs = L.meet(x, L.join(inv(x), y))
            rhs = L.join(L.meet(x, inv(x)), L.meet(x, y))
            if lhs != rhs:
                witness = (x, y)
                break
        if witness:
            break
    checks.append(
        passed("kleene-absorption") if witness is None else failed("kleene-absorption", witness)
    )

    report = VerificationReport(tuple(checks))
    distributive = is_distributive(L)[0]
    pseudo = report.overall
    return KleeneVerdict(report, distributive, pseudo, pseudo and distributive)


def recognize_boolean(L: Poset):
    """BooleanAlgebra view of L, or None when L is not one.

    L qualifies when it is a bounded distributive lattice in which every
    element has a complement; distributivity makes the complement unique.
    """
    if not L.is_lattice():
        return None
    bottom, top = L.bounds()
    if bottom is None or top is None:
        return None
    if not is_distributive(L)[0]:
        return None
    mapping = {}
    for x in L.elements:
        comp = [
            y
            for y in L.elements
            if L.meet(x, y) == bottom and L.join(x, y) == top
        ]
        if not comp:
            return None
        assert len(comp) == 1  # unique by distributivity
        mapping[x] = comp[0]
    complement = involution_from_mapping(L, mapping)
    assert check_antitone_involution(L, complement).overall
    return BooleanAlgebra(L, bottom, top, complement)

"""Extend a poset with antitone involution into a residuated structure.

Run:  python3 demos/02_extension_constructions.py
"""

from resposet import (
    ExtensionMode,
    chain_residuation,
    derived_negation,
    extend_theorem1,
    extend_theorem2,
    extend_theorem3,
    render_tables,
    verify_residuated,
)
from resposet.fixtures import antichain, n5_involuted

print("Adjoining a short chain below and above N5 (bounds reused as the")
print("outer chain pair) yields a 7-element residuated poset:")
result = extend_theorem1(n5_involuted(), ExtensionMode.REUSE_BOUNDS)
print(render_tables(result.structure, "text"))

print("The structure verifies against the full axiom set:")
for line in verify_residuated(result.structure).lines():
    print(f"  {line}")

print()
print("The negation x -> 0 recovers the involution we started from:")
print(f"  {derived_negation(result.structure)}")

print()
print("Every finite chain carries a residuated structure directly:")
print(render_tables(chain_residuation(5).structure, "text"))

print("The generalized adjunction interleaves 2n chain elements; with")
print("n = 2 it coincides with the basic four-element extension:")
a = extend_theorem2(n5_involuted(), 2).structure
b = extend_theorem1(n5_involuted()).structure
print(f"  extend_theorem2(N5, 2) == extend_theorem1(N5): {a == b}")

print()
print("A poset without any involution still embeds: take a disjoint dual")
print("copy, then wrap both in a chain. The 2-antichain with n=2, k=1:")
res = extend_theorem3(antichain(2), 2, 1)
print(f"  elements: {res.structure.elements}")
print(f"  (u1,1) . (u2,1) = {res.structure.odot_of('(u1,1)', '(u2,1)')}")
print(f"  involution of (u1,1): {res.involution('(u1,1)')}")

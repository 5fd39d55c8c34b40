"""Build finite posets, query the order, and enumerate antitone involutions.

Run:  python3 demos/01_posets_and_involutions.py
"""

from resposet import enumerate_antitone_involutions, poset_from_covers
from resposet.fixtures import chain, n5

print("The pentagon lattice N5, given by its covering relation:")
p = n5()
for x, y in p.covers():
    print(f"  {x} -< {y}")

print()
print("Meets and joins of the incomparable pair (a, c):")
print(f"  a ^ c = {p.meet('a', 'c')}")
print(f"  a v c = {p.join('a', 'c')}")
print(f"  lattice: {p.is_lattice()}, chain: {p.is_chain()}")

print()
print("Antitone involutions on N5 (order-reversing, self-inverse):")
for inv in enumerate_antitone_involutions(p):
    print(f"  {inv.mapping}")
print("N5 supports exactly one; it swaps the bounds, swaps a with b,")
print("and fixes c.")

print()
print("On a chain every antitone involution is the flip, so there is")
print("exactly one for every length:")
for n in (2, 3, 4, 5):
    found = enumerate_antitone_involutions(chain(n))
    print(f"  length {n}: {len(found)} involution(s)")

print()
print("The diamond M2 has two: fix both atoms, or swap them.")
diamond = poset_from_covers(
    ["0", "x", "y", "1"], [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]
)
for inv in enumerate_antitone_involutions(diamond):
    print(f"  {inv.mapping}")

"""Boolean algebras, Kleene classification, and the Boolean extension.

Run:  python3 demos/04_boolean_and_kleene.py
"""

from resposet import (
    boolean_residuation,
    check_pseudo_kleene,
    extend_boolean_theorem5,
    recognize_boolean,
    render_tables,
)
from resposet.fixtures import (
    chain,
    letter_cube_boolean,
    kleene_six_involuted,
    n5_involuted,
    pseudo_kleene_nine_involuted,
)

print("Boolean recognition finds the complement map automatically:")
B = letter_cube_boolean()
print(f"  elements: {B.elements}")
print(f"  complement: {B.complement.mapping}")
print(f"  3-chain is Boolean: {recognize_boolean(chain(3)) is not None}")

print()
print("Every Boolean algebra is residuated with x . y = x ^ y and")
print("x -> y = x' v y:")
s = boolean_residuation(B)
print(f"  a -> b = {s.arrow_of('a', 'b')}   (= a' v b)")

print()
print("Kleene classification of three involuted lattices:")
for name, ip in (
    ("six-element", kleene_six_involuted()),
    ("nine-element", pseudo_kleene_nine_involuted()),
    ("pentagon", n5_involuted()),
):
    v = check_pseudo_kleene(ip.poset, ip.involution)
    print(f"  {name}: pseudo-Kleene={v.pseudo_kleene}, Kleene={v.kleene}")

print()
print("Extending the 8-element Boolean algebra with two fresh chain")
print("elements below and above gives a 12-element residuated lattice:")
res = extend_boolean_theorem5(B, 2)
print(render_tables(res.structure, "text"))
print("Restricted to the Boolean block, . is the meet and -> is the")
print("relative complement; only the bounds are renamed.")

# Structure constants, the Lie axioms, and the adjoint representation.
from exactlie.algebra import (
    ad_matrix,
    center_basis,
    derived_ideal_basis,
    is_derivation,
    mult,
    operator_bracket,
    verify_lie,
)
from exactlie.library import load_algebra
from exactlie.scalars import prime_field

for name in ("so3", "sl2", "heisenberg", "gl2"):
    sc = load_algebra(name)
    rep = verify_lie(sc)
    print(f"{name:>10}: dim {sc.dim}, lie={rep.passed}, "
          f"center dim {len(center_basis(sc))}, derived dim {len(derived_ideal_basis(sc))}")

# the same table over F_2, where only the alternating check makes sense
print("sl2 over F_2:", verify_lie(load_algebra("sl2").over(prime_field(2))).passed)

broken = load_algebra("broken")
rep = verify_lie(broken)
print("broken table:", rep.passed, rep.witnesses[0])

# ad is a homomorphism: ad[x,y] = [ad x, ad y]
sc = load_algebra("sl2")
x = sc.element([1, 2, 0])
y = sc.element([0, -1, 3])
lhs = ad_matrix(sc, mult(sc, x, y))
rhs = operator_bracket(ad_matrix(sc, x), ad_matrix(sc, y))
print("ad[x,y] == [ad x, ad y]:", lhs == rhs)
print("ad x is a derivation:", is_derivation(ad_matrix(sc, x), sc))
print(ad_matrix(sc, x))

# Polynomial vector fields and the matrix -> vector field map.
from exactlie.matrices import Matrix, gl_bracket
from exactlie.poly import Polynomial
from exactlie.scalars import rationals
from exactlie.vfields import VectorFieldPoly, euler_field, matrix_to_vf, vf_apply, vf_bracket

Q = rationals()
t1, t2 = Polynomial.var(Q, 2, 1), Polynomial.var(Q, 2, 2)

v = VectorFieldPoly([t2, -t1])          # rotation field
w = VectorFieldPoly([t1 * t1, t2])
f = t1 * t1 * t2 + 3 * t2

print("V =", v)
print("W =", w)
print("V f =", vf_apply(v, f))
br = vf_bracket(v, w)
print("[V, W] =", br)
# the bracket is the commutator of the operators
print("commutator check:", vf_apply(br, f) == vf_apply(v, vf_apply(w, f)) - vf_apply(w, vf_apply(v, f)))

# Euler field multiplies a degree-3 homogeneous polynomial by 3
print("E(t1^2 t2) =", vf_apply(euler_field(Q, 2), t1 * t1 * t2))

# matrices go to linear fields, with a sign flip on brackets
e12, e21 = Matrix.unit(Q, 2, 1, 2), Matrix.unit(Q, 2, 2, 1)
print("A = E12 ->", matrix_to_vf(e12))
print("[E12,E21] ->", matrix_to_vf(gl_bracket(e12, e21)))
print("[vf(E12), vf(E21)] =", vf_bracket(matrix_to_vf(e12), matrix_to_vf(e21)))

# Exact scalars: rationals, F_p, p-adics, quaternions.
from fractions import Fraction

from exactlie.scalars import (
    Quaternion,
    padic_field,
    padic_of_rational,
    prime_field,
    quat_conj,
    quat_inv,
    quat_norm_sq,
    rationals,
)

Q = rationals()
print("Q:", Q.fmt(Fraction(3, 4) + Fraction(1, 6)))

F7 = prime_field(7)
a = F7.coerce(3)
print("F_7: 3^-1 =", F7.inverse(a), " check:", a * F7.inverse(a))

# 1/3 in Q_5 at relative precision 4
x = padic_of_rational(Fraction(1, 3), 5, 4)
print("1/3 in Q_5:", x, " |x| =", x.abs())
y = padic_of_rational(Fraction(2, 25), 5, 4)
print("2/25 in Q_5:", y, " |y| =", y.abs())
print("product:", x * y, " valuation", (x * y).v)

# cancellation leaves nothing at this precision
z = padic_of_rational(1, 5, 3)
w = padic_of_rational(1 + 5**3, 5, 3)
print("1 - (1+125) at N=3 is zero:", (z - w).is_zero)

K5 = padic_field(5, 6)
print("Q_5 field:", K5, " 5 * 5^-1 =", K5.coerce(5) * K5.inverse(K5.coerce(5)))

# quaternions: ij = k, ji = -k
i, j = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0)
print("ij =", i * j, " ji =", j * i)
q = Quaternion(1, Fraction(1, 2), -2, 3)
print("q =", q, " |q|^2 =", quat_norm_sq(q), " q* =", quat_conj(q))
print("q q^-1 =", q * quat_inv(q))

# Truncated power series: inverses and exponentials.
from fractions import Fraction

from exactlie.exp import exp_series
from exactlie.poly import PowerSeries, series_inverse, series_mul
from exactlie.scalars import rationals

Q = rationals()
D = 12
t = PowerSeries.var(Q, 1, D, 1)
one = PowerSeries.constant(Q, 1, D, 1)

print("1/(1-t) =", series_inverse(one - t))
print("1/(2+t) =", series_inverse(one * Fraction(2) + t))

D = 8
s = PowerSeries.var(Q, 2, D, 1)
u = PowerSeries.var(Q, 2, D, 2)
f, g = s + u * u, s * u
print("exp(t1) =", exp_series(s))
lhs = exp_series(f + g)
rhs = series_mul(exp_series(f), exp_series(g))
print("exp(f+g) == exp f exp g:", lhs == rhs)

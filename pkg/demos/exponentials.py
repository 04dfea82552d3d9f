# det(exp A) = exp(tr A) three ways: floats, formal series, p-adics.
import math
import random

import numpy as np

from exactlie import randgen
from exactlie.exp import det_exp_tr_report, exp_complex_matrix, exp_padic, vp_factorial
from exactlie.matrices import Matrix
from exactlie.poly import PowerSeries, SeriesRing
from exactlie.scalars import padic_field, padic_of_rational, rationals

rng = random.Random(0)

# complex floats, Taylor series with a certified tail
a = randgen.complex_unit_disc(rng, (3, 3))
e, terms = exp_complex_matrix(a, return_terms=True)
print(f"float: {terms} terms, |det exp A - e^tr A| = {det_exp_tr_report(a, 'float').difference:.2e}")
rot = exp_complex_matrix(np.array([[0, math.pi / 2], [-math.pi / 2, 0]]))
print("exp of a quarter rotation:\n", np.round(rot.real, 12))

# formal series: entries q * t1 through degree 6
D = 6
ring = SeriesRing(rationals(), 1, D)
t = PowerSeries.var(rationals(), 1, D, 1)
m = Matrix(ring, [[t, t * 2], [t * -1, t * 3]])
rep = det_exp_tr_report(m, "series")
print("series: equal =", rep.equal)
print("  det exp M =", rep.left)

# p-adic: exp converges for v_5(a) >= 1
print("v_5(100!) =", vp_factorial(100, 5), "< 100/4")
x = padic_of_rational(5, 5, 6)
print("exp(5) in Q_5 =", exp_padic(x))
print("exp(5) exp(-5) =", exp_padic(x) * exp_padic(-x))
K = padic_field(5, 6)
mp = randgen.padic_matrix(rng, K, 2, 1)
print("padic: equal =", det_exp_tr_report(mp, "padic").equal)

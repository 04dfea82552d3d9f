# Float p-norms, Neumann series, and ultrametric operator norms.
import math
import random

import numpy as np

from exactlie import randgen
from exactlie.norms import (
    WeightedUltraNorm,
    float_opnorm,
    neumann_inverse,
    neumann_residual_check,
    pnorm,
    pnorm_inequality_check,
    shift_operator,
    ultra_opnorm,
    ultra_opnorm_witness,
)

v = [3.0, -4.0, 1.0]
for p in (1, 1.5, 2, 3, math.inf):
    print(f"|v|_{p} = {pnorm(v, p):.6f}")
print("1 vs inf:", pnorm_inequality_check(v, 1, math.inf).details)

rng = random.Random(1)
x = randgen.complex_unit_disc(rng, (3, 3))
x = x * (0.5 / float_opnorm(x))
s = neumann_inverse(x, 40)
print("|(1 - x) S - 1| =", float_opnorm((np.eye(3) - x) @ s - np.eye(3)))
print("residual check:", neumann_residual_check(x, 40).passed)

# the cyclic shift on Q_5^4: T^4 = 5 I and |T| = 5^(-1/4) in the shift weights
n, p = 4, 5
T = shift_operator(n, p)
print(T)
print("T^4 == 5 I:", T**n == T.ring.coerce(p) * T**0)
w = WeightedUltraNorm.shift_weights(p, n)
res = ultra_opnorm_witness(T, w)
print("weighted |T| =", res.norm, "attained on column", res.witness)
print("unweighted |T| =", ultra_opnorm(T))

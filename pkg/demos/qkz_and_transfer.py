# Inhomogeneous solution of the exchange and cyclicity equations, and the
# transfer matrix eigenvector property at the cube root of unity.
# Run with: python3 demos/qkz_and_transfer.py
import random

from polyqkz import qkz, sixvertex
from polyqkz.sampling import random_z
from polyqkz.scalar import q_root_of_unity, rat, render

rng = random.Random(7)
q = rat(3, 2)
z = random_z(rng, 5, q)
print("z =", [render(x) for x in z])
psi = qkz.psi_vector_inhom(z, q)
for a, v in sorted(psi.entries.items())[:4]:
    print(a, render(v))

print("exchange at i=2:", qkz.check_exchange(z, q, 2, psi=psi))
print("cyclicity:", qkz.check_cyclicity(z, q, psi=psi))

# at q = omega the vector is fixed by the transfer matrix for every y
w = q_root_of_unity(1)
z = random_z(rng, 5, w)
psi = qkz.psi_vector_inhom(z, w)
for y in [rat(0), rat(2), rat(-5, 3)]:
    print("T(%s) psi == psi:" % render(y), sixvertex.transfer_apply(psi, y, z, w) == psi)

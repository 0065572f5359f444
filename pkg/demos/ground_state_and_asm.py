# Homogeneous components at tau = 1 and alternating sign matrix counts.
# Run with: python3 demos/ground_state_and_asm.py
from polyqkz import asm, qkz

# the component table for N = 2n+1 sites, indexed by down-spin positions
table = qkz.psi_table(3, tau=1)
print(len(table), "components for n = 3")
print("smallest:", min(table.values()), "at", min(table, key=table.get))
print("largest: ", max(table.values()), "at", max(table, key=table.get))

# the component with downs at the odd sites counts ASMs
for n in range(1, 7):
    v = qkz.psi_table(n, tau=1)[tuple(range(1, 2 * n, 2))]
    print(n, int(v), asm.asm_count(n))

# keeping tau symbolic gives polynomials
sym = qkz.psi_table(2)
for a in [(1, 2), (1, 3), (1, 4)]:
    print(a, sym[a])

# refined counts come out of a sum over parity sequences one size down
print(asm.refined_sum_poly(5), asm.refined_generating_poly(5))

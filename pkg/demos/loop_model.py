# Temperley-Lieb loop model on 2n points and its link to the spin chain.
# Run with: python3 demos/loop_model.py
from polyqkz import loopmodel, qkz
from polyqkz.verify import even_opening_distribution, theorem3_sides

n = 3
xi = loopmodel.loop_ground_state(n)
for p, v in sorted(xi.entries.items()):
    print(p, v)
print("total", xi.total())

# the rotations of the fully nested pattern carry the weight 1
rainbow = tuple(range(2 * n, 0, -1))
print([xi.entries[loopmodel.rotate_pattern(rainbow, k)] for k in range(2 * n)])

# partial sums over patterns connecting point 1 to an even point
xi4 = loopmodel.loop_ground_state(4)
print([loopmodel.partial_sum_xi(a, xi4) for a in (2, 4, 6, 8)])

# a single moved down spin matches a running partial sum
for k, lhs, partial, closing in theorem3_sides(4):
    print(k, lhs, partial, closing)

# grouping loop weights by the number of even openings
print(even_opening_distribution(5))

# up-spin components one size down as linear combinations of loop weights
bt = qkz.psibar_table(2, tau=1)
for b in [(1, 3, 5), (2, 3, 5), (1, 4, 5)]:
    print(b, bt[b], loopmodel.loop_expansion(b, xi))

"""
Dimensions on the Hecke side
============================

Specht, simple and projective dimensions for hook partitions, and how they
add up to the dimension of R_n.
"""

from math import comb

from cyclotomic_klr.hecke import (hook, hook_dim, projective_dims_hooks, simple_dims_hooks,
                                  verify_identities)

for n in range(2, 9):
    simple = simple_dims_hooks(n)
    proj = projective_dims_hooks(n)
    total = sum(d * p for d, p in zip(simple, proj))
    print(n, simple, proj, total, comb(2 * (n - 1), n - 1))

# (3,1,1) has six standard tableaux
print(hook(5, 2), hook_dim(hook(5, 2)))

print(verify_identities(5))

"""
Projective classes, the quiver and the corner algebra
=====================================================

Group idempotents by their last residue, build the arrows of the
Brauer-line quiver from class representatives, and compare e R_5 e with R_4.
"""

from cyclotomic_klr import morita_partition, quiver_presentation, verify_truncation_iso

n = 5
for k, members in morita_partition(n).items():
    print(k, members)

pres = quiver_presentation(n)
for name, (s, t, x) in pres.arrows.items():
    print(f"{name:8s} {s} -> {t}   {x}")

# gamma_t beta_t is a signed dotted loop; the signs alternate
print(pres.loop_signs)

# relations at the loop vertex are computed rather than assumed
print(pres.junction)

rep = verify_truncation_iso(n)
print(rep.dim_truncated, rep.dim_target, rep.passed)

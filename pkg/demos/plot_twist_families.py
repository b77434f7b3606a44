"""
Quotients of the J_m^+ family
=============================

The second quotient of J_m^+ is the 2-bridge knot with continued fraction
[6, -1, 2m+1, -1, 6]. Its signature decides which m are worth a closer look,
and the 4-move criterion finishes the job.
"""
from equivknot import eval_continued_fraction, normalize, signature_q2_jm, u4_search
from equivknot.signature import goeritz_jm, matrix_signature

###############################################################################
# Fractions
# ---------

for m in range(-6, 4):
    f = eval_continued_fraction([6, -1, 2 * m + 1, -1, 6])
    print(f"m={m:>3}  {str(f):>10}  -> {normalize(f)}")

###############################################################################
# Signatures from the Goeritz matrix
# ----------------------------------
# sigma = sigma(G) - (2m + 3), always inside [-2m - 6, -2m].

for m in (-6, 0, 3):
    g = goeritz_jm(m)
    print(m, matrix_signature(g), signature_q2_jm(m))

small = [m for m in range(-50, 51) if abs(signature_q2_jm(m)) < 6]
print("|sigma| < 6 for m in", small)

###############################################################################
# The 4-move search, with its trace
# ---------------------------------

witness, trace = u4_search(eval_continued_fraction([6, -1, -9, -1, 6]))
print("witness:", witness)
for c in trace:
    print(" ", c)

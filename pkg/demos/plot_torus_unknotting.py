"""
Unknotting torus knots equivariantly
====================================

Every torus knot T(p, q) with p odd closes up an intravergent braid
(sigma_1 ... sigma_{p-1})^q. Walking it down to the trivial braid with
symmetric moves costs exactly (p - 1)(q - 1) / 2.
"""
from equivknot import equivariant_unknot, torus_braid, verify_move_log

###############################################################################
# One knot in detail
# ------------------

b = torus_braid(5, 3)
print(b)
log = equivariant_unknot(b)
for step in log.steps:
    if step.kind != "isotopy":
        print(f"{step.kind:16s} at {step.positions}  cost {step.cost}")
print("total cost", log.total_cost)
print("replay:", verify_move_log(log).message)

###############################################################################
# A small table
# -------------

print(f"{'p':>3} {'q':>3} {'cost':>5} {'moves':>6}")
for p, q in [(3, 2), (3, 4), (3, 5), (5, 2), (5, 4), (7, 2), (7, 3), (9, 4)]:
    log = equivariant_unknot(torus_braid(p, q))
    assert log.total_cost == (p - 1) * (q - 1) // 2
    print(f"{p:>3} {q:>3} {log.total_cost:>5} {len(log.steps):>6}")

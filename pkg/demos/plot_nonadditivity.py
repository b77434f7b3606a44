"""
A sum that costs more than its parts
====================================

K_3 # K_3 with the summed inversion needs at least three equivariant moves,
while each K_3 needs one. The report collects every check behind this.
"""
from equivknot import knot_bounds, load_registry, nonadditivity_report

registry = load_registry()
for name in ("K_3", "K_3#K_3", "4_1#4_1"):
    b = knot_bounds(registry.get(name))
    print(f"{name:8s} type A >= {b.type_A}, type B >= {b.type_B}")

report = nonadditivity_report()
print(report.to_text())

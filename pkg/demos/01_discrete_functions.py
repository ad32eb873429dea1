"""Discrete step and delta functions, and their standard-function disguises.

The whole index calculus rests on two integer functions: a Kronecker delta
and a left-closed Heaviside step. Each can also be computed from ordinary
analysis functions (factorials, J0, cosine, a Hermite polynomial) on small
integer windows; this script prints the truth tables side by side.
"""

from minorform import ReprKind, conformance_report, heav, kron, repr_delta, repr_heav

print("plain functions")
print("  z:      ", *[f"{z:3d}" for z in range(-3, 4)])
print("  kron(z):", *[f"{kron(z):3d}" for z in range(-3, 4)])
print("  heav(z):", *[f"{heav(z):3d}" for z in range(-3, 4)])
print()

print("delta against n = 2, window z in 1..3, all encodings")
for repr_kind in ReprKind:
    row = [repr_delta(z, 2, repr_kind) for z in (1, 2, 3)]
    print(f"  {repr_kind.value:8s} {row}")
print()

print("step at p = 3, window z in 1..3, all encodings")
for repr_kind in ReprKind:
    row = [repr_heav(z, 3, repr_kind) for z in (1, 2, 3)]
    print(f"  {repr_kind.value:8s} {row}")
print()

print("the gamma encoding keeps going past the window (p = 2, z up to 9):")
print("  encoded:", [repr_heav(z, 2, ReprKind.GAMMA) for z in range(1, 10)])
print("  plain:  ", [heav(z - 2) for z in range(1, 10)])
print()

report = conformance_report()
print(f"conformance scan: {report['checked']} points checked, "
      f"{len(report['failures'])} failures, unavailable variants: {report['unavailable']}")

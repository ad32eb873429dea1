"""Vector identities with gamma-generated subscripts.

The curl in orthogonal coordinates and the scalar triple product are 3x3
determinant expansions; factorials of the component index generate the
row/column subscripts, so no permutation table appears anywhere.
"""

from minorform import CurlInput, SplitMix64, curl_components, scalar_triple

print("curl in cylindrical coordinates (h = (1, r, 1) at r = 2):")
# field (0, r, 0): scaled partials d(h_a A_a)/du_b, here d(r^2)/dr = 2r = 4
partials = ((0, 0, 0), (4, 0, 0), (0, 0, 0))
out = curl_components(CurlInput((1.0, 2.0, 1.0), partials))
print(f"  components: ({out[0].real:g}, {out[1].real:g}, {out[2].real:g})")
print("  (the z component is (1/r) d(r A_phi)/dr = 2, as it should be)")
print()

print("unit-box volume and a swap:")
print(f"  e1 . (e2 x e3) = {scalar_triple((1, 0, 0), (0, 1, 0), (0, 0, 1)).real:g}")
print(f"  e2 . (e1 x e3) = {scalar_triple((0, 1, 0), (1, 0, 0), (0, 0, 1)).real:g}")
print()

print("random draws against the hand-expanded forms:")
gen = SplitMix64(99)
worst = 0.0
for _ in range(500):
    a, b, c = (tuple(gen.next_normal() for _ in range(3)) for _ in range(3))
    bc = (
        b[1] * c[2] - b[2] * c[1],
        b[2] * c[0] - b[0] * c[2],
        b[0] * c[1] - b[1] * c[0],
    )
    expected = a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2]
    worst = max(worst, abs(scalar_triple(a, b, c) - expected))
print(f"  worst triple-product disagreement over 500 draws: {worst:.3e}")

"""Vector-calculus applications of the factorial index encoding.

The curl in orthogonal curvilinear coordinates and the scalar triple
product are both 3x3 determinant expansions; here their row/column
subscripts are generated arithmetically from gamma-function values instead
of being written out, so each identity is a two-term sum per component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .discrete import gamma_int
from .errors import DomainError

Vec3 = tuple[complex, complex, complex]


def _index_pair(l: int, j: int) -> tuple[int, int]:
    # row reads the scaled field component, column the coordinate it is
    # differentiated against; gamma(l) = (l-1)! supplies the permutation
    swing = (-1) ** j * gamma_int(l) + j * (l + 2)
    return 2 + swing - l, 4 - swing


@dataclass(frozen=True)
class CurlInput:
    """Scale factors h1..h3 and the 3x3 array of scaled-field partials.

    partials[a-1][b-1] holds the derivative of (h_a A_a) along coordinate b.
    """

    scale_factors: tuple[float, float, float]
    partials: tuple[tuple[complex, complex, complex], ...]

    def __post_init__(self):
        try:
            h = tuple(float(v) for v in self.scale_factors)
            rows = tuple(tuple(complex(v) for v in row) for row in self.partials)
        except (TypeError, ValueError) as exc:
            raise DomainError(f"curl input is not numeric: {exc}") from exc
        if len(h) != 3 or any(not v > 0 for v in h):
            raise DomainError(
                f"scale factors must be three positive reals, got {self.scale_factors!r}"
            )
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise DomainError("partials must form a 3x3 array")
        object.__setattr__(self, "scale_factors", h)
        object.__setattr__(self, "partials", rows)


def curl_components(inp: CurlInput) -> Vec3:
    """Curl components from the two-term gamma-indexed sum."""
    h1, h2, h3 = inp.scale_factors
    volume = h1 * h2 * h3
    out = []
    for l in (1, 2, 3):
        total = 0.0 + 0.0j
        for j in (0, 1):
            row, col = _index_pair(l, j)
            term = inp.partials[row - 1][col - 1]
            total += term if (j + l) % 2 == 0 else -term
        out.append(inp.scale_factors[l - 1] / volume * total)
    return tuple(out)


def scalar_triple(a, b, c) -> complex:
    """Signed volume a . (b x c) via the same gamma-indexed expansion."""
    try:
        a = tuple(complex(v) for v in a)
        b = tuple(complex(v) for v in b)
        c = tuple(complex(v) for v in c)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"vector input is not numeric: {exc}") from exc
    if len(a) != 3 or len(b) != 3 or len(c) != 3:
        raise DomainError("scalar_triple takes three 3-component vectors")
    total = 0.0 + 0.0j
    for l in (1, 2, 3):
        for j in (0, 1):
            row, col = _index_pair(l, j)
            term = a[l - 1] * b[col - 1] * c[row - 1]
            total += term if (j + l) % 2 == 0 else -term
    return total

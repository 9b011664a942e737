"""Self-contained eigensolver for real symmetric tridiagonal matrices.

Implicit-shift QL with accumulated plane rotations, so eigenvalues and an
orthonormal eigenvector set come out of one pass. Off-diagonal entries are
declared negligible with the classic floating-point test
``|e| + (|d_i| + |d_i+1|) == |d_i| + |d_i+1|``, which makes exactly diagonal
input converge immediately and untouched.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import ConvergenceError

MAX_QL_SWEEPS = 50


@dataclass(frozen=True)
class SymTridiag:
    """Real symmetric tridiagonal matrix stored as its two bands."""

    diag: np.ndarray      # shape (n,)
    offdiag: np.ndarray   # shape (n-1,), entry i couples sites i and i+1

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or d.size == 0:
            raise ValueError("diagonal must be a non-empty 1-d array")
        if e.shape != (d.size - 1,):
            raise ValueError(
                f"off-diagonal must have length {d.size - 1}, got {e.shape}"
            )
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        m = np.diag(self.diag)
        idx = np.arange(self.n - 1)
        m[idx, idx + 1] = self.offdiag
        m[idx + 1, idx] = self.offdiag
        return m

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out

    def norm_bound(self) -> float:
        """Infinity-norm upper bound, cheap scale reference for residuals."""
        e = np.concatenate(([0.0], np.abs(self.offdiag), [0.0]))
        return float(np.max(np.abs(self.diag) + e[:-1] + e[1:]))


def eigh_tridiagonal(matrix: SymTridiag) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvector columns.

    Raises ConvergenceError, echoing the matrix bands, if any eigenvalue
    fails to settle within MAX_QL_SWEEPS implicit-shift sweeps.
    """
    n = matrix.n
    d = matrix.diag.copy()
    e = np.zeros(n)
    e[: n - 1] = matrix.offdiag
    z = np.eye(n)

    for l in range(n):
        sweeps = 0
        while True:
            for m in range(l, n - 1):
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
            else:
                m = n - 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_QL_SWEEPS:
                raise ConvergenceError(
                    f"QL failed to converge at eigenvalue {l} after "
                    f"{MAX_QL_SWEEPS} sweeps; diag={matrix.diag!r}, "
                    f"offdiag={matrix.offdiag!r}"
                )
            # implicit shift from the 2x2 block at l
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0 else -r))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                col = z[:, i + 1].copy()
                z[:, i + 1] = s * z[:, i] + c * col
                z[:, i] = c * z[:, i] - s * col
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = np.argsort(d, kind="stable")
    return d[order], z[:, order]

"""Calculus on the boundary circle.

Boundary data lives on a uniform arc-length grid, where tangential
differentiation and antiderivation are exact trigonometric operators. The
DNMatrix container holds a discrete Dirichlet-to-Neumann map together with
lazily cached operator factorizations (derivative, antiderivative,
pseudo-inverse on the mean-zero subspace) that the spectral machinery
reuses. Also owns the analytic unit-disk DN map and DN file I/O.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .mesh_geometry import InvariantError

_UNIFORM_RTOL = 1e-9


@dataclass(eq=False)
class BoundaryGrid:
    n: int
    total_length: float
    arclengths: np.ndarray
    weights: np.ndarray

    @classmethod
    def uniform(cls, n: int, total_length: float) -> "BoundaryGrid":
        h = total_length / n
        return cls(n=n, total_length=total_length,
                   arclengths=h * np.arange(n),
                   weights=np.full(n, h))

    @property
    def spacing(self) -> float:
        """Uniform spacing h; raises if the grid is not uniform."""
        h = self.total_length / self.n
        ds = np.diff(self.arclengths)
        if (np.any(np.abs(ds - h) > _UNIFORM_RTOL * h)
                or np.any(np.abs(self.weights - h) > _UNIFORM_RTOL * h)):
            raise ValueError("operation requires a uniform boundary grid")
        return h


def same_grid(a: BoundaryGrid, b: BoundaryGrid) -> bool:
    return (a.n == b.n
            and abs(a.total_length - b.total_length) <= 1e-12 * a.total_length
            and np.allclose(a.arclengths, b.arclengths, rtol=0, atol=1e-12 * a.total_length)
            and np.allclose(a.weights, b.weights, rtol=1e-12, atol=0))


@dataclass(eq=False)
class BoundaryFn:
    grid: BoundaryGrid
    samples: np.ndarray

    def __post_init__(self):
        self.samples = np.asarray(self.samples)
        if len(self.samples) != self.grid.n:
            raise ValueError("sample count does not match the grid")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("boundary samples must be finite")

    @property
    def mean(self) -> complex:
        return complex(np.sum(self.samples * self.grid.weights)
                       / self.grid.total_length)


def grid_inner(f: BoundaryFn, g: BoundaryFn) -> complex:
    """(f, g)_Γ = ∫ f conj(g) dl by the grid quadrature."""
    if not same_grid(f.grid, g.grid):
        raise ValueError("boundary functions live on different grids")
    return complex(np.sum(f.samples * np.conj(g.samples) * f.grid.weights))


def spectral_diff_matrix(n: int, total_length: float) -> np.ndarray:
    """d/ds on the uniform periodic grid; Nyquist mode zeroed so the
    operator is real-skew and invertible on the resolved mean-zero modes."""
    k = np.fft.fftfreq(n, d=1.0 / n)
    mult = 2j * np.pi * k / total_length
    if n % 2 == 0:
        mult[n // 2] = 0.0
    return np.real(np.fft.ifft(mult[:, None] * np.fft.fft(np.eye(n), axis=0), axis=0))


def antiderivative_matrix(n: int, total_length: float) -> np.ndarray:
    """Mean-zero antiderivative, the (pseudo)inverse of spectral_diff_matrix."""
    k = np.fft.fftfreq(n, d=1.0 / n)
    mult = np.zeros(n, dtype=complex)
    nz = k != 0
    mult[nz] = total_length / (2j * np.pi * k[nz])
    if n % 2 == 0:
        mult[n // 2] = 0.0
    return np.real(np.fft.ifft(mult[:, None] * np.fft.fft(np.eye(n), axis=0), axis=0))


@dataclass(eq=False)
class DNMatrix:
    """Discrete DN map on a boundary grid.

    entries is real symmetric, kills constants, and is PSD up to assembly
    tolerance. Derived operators are cached on first use and keyed to this
    instance, so treat DNMatrix as immutable after construction.
    """

    grid: BoundaryGrid
    entries: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def h(self) -> float:
        return self.grid.spacing

    @property
    def diff(self) -> np.ndarray:
        if "diff" not in self._cache:
            self._cache["diff"] = spectral_diff_matrix(self.n, self.grid.total_length)
        return self._cache["diff"]

    @property
    def diff_inv(self) -> np.ndarray:
        if "diff_inv" not in self._cache:
            self._cache["diff_inv"] = antiderivative_matrix(self.n, self.grid.total_length)
        return self._cache["diff_inv"]

    @property
    def pinv(self) -> np.ndarray:
        """Pseudo-inverse of the symmetrized entries with the (near-)null
        constant mode deflated."""
        if "pinv" not in self._cache:
            A = 0.5 * (self.entries + self.entries.T)
            w, V = np.linalg.eigh(A)
            wmax = np.max(np.abs(w))
            winv = np.where(np.abs(w) > 1e-10 * wmax, 1.0, 0.0)
            wsafe = np.where(np.abs(w) > 1e-10 * wmax, w, 1.0)
            self._cache["pinv"] = (V * (winv / wsafe)) @ V.T
        return self._cache["pinv"]


def validate_dn(dn: DNMatrix) -> None:
    A = dn.entries
    if A.shape != (dn.n, dn.n):
        raise ValueError("DN matrix shape does not match the grid")
    if not np.all(np.isfinite(A)):
        raise ValueError("DN matrix has non-finite entries")
    scale = np.max(np.abs(A)) + 1e-30
    if np.max(np.abs(A - A.T)) > 1e-8 * scale:
        raise InvariantError("DN matrix is not symmetric")
    ones = np.ones(dn.n)
    if np.max(np.abs(A @ ones)) > 1e-6 * scale:
        raise InvariantError("DN matrix does not annihilate constants")
    w = np.linalg.eigvalsh(0.5 * (A + A.T))
    if w[0] < -1e-8 * max(w[-1], 1e-30):
        raise InvariantError("DN matrix quadratic form is not nonnegative")


def d_gamma(f: BoundaryFn) -> BoundaryFn:
    """Tangential derivative along the boundary (spectral)."""
    D = spectral_diff_matrix(f.grid.n, f.grid.total_length)
    f.grid.spacing  # uniformity guard
    return BoundaryFn(f.grid, D @ f.samples)


def d_gamma_inv(f: BoundaryFn, tol: float = 1e-8) -> BoundaryFn:
    """Mean-zero antiderivative; rejects non-integrable (nonzero-mean) input."""
    f.grid.spacing
    m = f.mean
    if abs(m) > tol * (1.0 + float(np.max(np.abs(f.samples)))):
        raise ValueError(f"antiderivative of nonzero-mean input (mean {m:.3e})")
    A = antiderivative_matrix(f.grid.n, f.grid.total_length)
    return BoundaryFn(f.grid, A @ f.samples)


def lambda_inner(dn: DNMatrix, f: BoundaryFn, g: BoundaryFn) -> complex:
    """(f, g)_Λ = (Λf, g)_Γ, the hermitian form induced by the DN map."""
    if not (same_grid(dn.grid, f.grid) and same_grid(dn.grid, g.grid)):
        raise ValueError("DN map and boundary functions live on different grids")
    return complex(np.sum((dn.entries @ f.samples) * np.conj(g.samples)
                          * f.grid.weights))


def disk_dn(n: int) -> DNMatrix:
    """Analytic DN map of the unit disk on an n-point grid: the Fourier
    multiplier |k|, realized as a symmetric circulant."""
    grid = BoundaryGrid.uniform(n, 2 * np.pi)
    k = np.abs(np.fft.fftfreq(n, d=1.0 / n))
    A = np.real(np.fft.ifft(k[:, None] * np.fft.fft(np.eye(n), axis=0), axis=0))
    return DNMatrix(grid=grid, entries=0.5 * (A + A.T))


def save_dn(path: str, dn: DNMatrix) -> None:
    doc = {
        "n": int(dn.n),
        "total_length": float(dn.grid.total_length),
        "arclengths": [float(s) for s in dn.grid.arclengths],
        "weights": [float(w) for w in dn.grid.weights],
        "matrix": [float(x) for x in np.asarray(dn.entries).ravel()],
    }
    with open(path, "w") as f:
        json.dump(doc, f)


def load_dn(path: str) -> DNMatrix:
    with open(path) as f:
        doc = json.load(f)
    for key in ("n", "total_length", "arclengths", "weights", "matrix"):
        if key not in doc:
            raise ValueError(f"DN file missing field '{key}'")
    n = int(doc["n"])
    arcl = np.asarray(doc["arclengths"], dtype=float)
    wts = np.asarray(doc["weights"], dtype=float)
    mat = np.asarray(doc["matrix"], dtype=float)
    if len(arcl) != n or len(wts) != n:
        raise ValueError("field 'arclengths'/'weights' length does not match n")
    if mat.size != n * n:
        raise ValueError(f"field 'matrix' has {mat.size} entries, expected n*n = {n * n}")
    L = float(doc["total_length"])
    if L <= 0 or np.any(wts <= 0):
        raise ValueError("total_length and weights must be positive")
    if np.any(np.diff(arcl) <= 0) or arcl[0] < 0 or arcl[-1] >= L:
        raise ValueError("arclengths must be strictly increasing in [0, L)")
    if abs(np.sum(wts) - L) > 1e-9 * L:
        raise ValueError("weights do not sum to total_length")
    grid = BoundaryGrid(n=n, total_length=L, arclengths=arcl, weights=wts)
    dn = DNMatrix(grid=grid, entries=mat.reshape(n, n))
    validate_dn(dn)
    return dn

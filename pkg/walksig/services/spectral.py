"""Spectral signatures and closed-form spectra.

Two signature backends: exact characteristic polynomials over the integers
(division-free Berkowitz through sympy's DomainMatrix) and characteristic
polynomials over prime fields (Hessenberg reduction with numpy). Floating
eigenvalues are only used to check the closed forms.
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from sympy import ZZ, isprime
from sympy.polys.matrices import DomainMatrix

from walksig.core.config import DEFAULT_PRIMES, DEFAULT_TOLERANCE, EIG_MAX_DIMENSION, EXACT_CUTOFF
from walksig.core.errors import (
    DimensionCutoffError,
    EigenConvergenceError,
    PrimeError,
    SpectrumInputError,
)
from walksig.models.matrices import BinaryMatrix, RationalMatrix
from walksig.models.spectrum import ComplexSpectrum
from walksig.schemas.signature import CharPolySignature

logger = logging.getLogger(__name__)

MatrixLike = Union[np.ndarray, BinaryMatrix, RationalMatrix, Sequence[Sequence[int]]]

# Residues below this bound multiply without leaving int64.
_INT64_PRIME_LIMIT = 2**31


def as_integer_array(matrix: MatrixLike) -> np.ndarray:
    """Square integer matrix (int64 or object dtype) from any supported input."""
    if isinstance(matrix, BinaryMatrix):
        return matrix.to_integer_array()
    if isinstance(matrix, RationalMatrix):
        numerators, denominator = matrix.numerators, matrix.denominator
        if denominator != 1:
            if np.any(numerators % denominator != 0):
                raise ValueError("matrix has non-integral entries")
            numerators = numerators // denominator
        return numerators
    array = np.asarray(matrix)
    if array.dtype != object:
        if array.dtype == bool:
            array = array.astype(np.int64)
        elif not np.issubdtype(array.dtype, np.integer):
            raise TypeError(f"expected an integer matrix, got dtype {array.dtype}")
        else:
            array = array.astype(np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {array.shape}")
    return array


def as_float_array(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, RationalMatrix):
        return matrix.to_float()
    if isinstance(matrix, BinaryMatrix):
        return matrix.data.astype(np.float64)
    array = np.asarray(matrix)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {array.shape}")
    return array.astype(np.float64)


def charpoly_exact(matrix: MatrixLike, cutoff: int = EXACT_CUTOFF) -> CharPolySignature:
    """Exact integer coefficients of det(xI - M), division-free."""
    array = as_integer_array(matrix)
    n = array.shape[0]
    if n > cutoff:
        raise DimensionCutoffError(
            f"dimension {n} exceeds the exact cutoff {cutoff}; use modular signatures"
        )
    if n == 0:
        return CharPolySignature(degree=0, mode="exact", coefficients=(1,))
    rows = [[ZZ(int(x)) for x in row] for row in array.tolist()]
    # sparse Berkowitz; invariant matrices are mostly zeros
    coefficients = DomainMatrix(rows, (n, n), ZZ).to_sparse().charpoly()
    return CharPolySignature(
        degree=n, mode="exact", coefficients=tuple(int(c) for c in coefficients)
    )


def _hessenberg_mod_p(matrix: np.ndarray, prime: int) -> np.ndarray:
    """Similarity-reduce to upper Hessenberg form over GF(prime)."""
    h = matrix
    n = h.shape[0]
    for j in range(n - 2):
        candidates = np.flatnonzero(h[j + 1 :, j] != 0)
        if candidates.size == 0:
            continue
        pivot = j + 1 + int(candidates[0])
        if pivot != j + 1:
            h[[pivot, j + 1], :] = h[[j + 1, pivot], :]
            h[:, [pivot, j + 1]] = h[:, [j + 1, pivot]]
        inverse = pow(int(h[j + 1, j]), prime - 2, prime)
        factors = (h[j + 2 :, j] * inverse) % prime
        if not factors.any():
            continue
        # rows k -= f_k * row(j+1), then column (j+1) += sum_k f_k * column k
        h[j + 2 :, :] = (h[j + 2 :, :] - (factors[:, None] * h[j + 1, :][None, :]) % prime) % prime
        shifted = ((h[:, j + 2 :] * factors[None, :]) % prime).sum(axis=1)
        h[:, j + 1] = (h[:, j + 1] + shifted) % prime
    return h


def charpoly_mod_p(matrix: MatrixLike, prime: int) -> Tuple[int, ...]:
    """Coefficients of det(xI - M) over GF(prime), leading term first."""
    if prime <= 1 or not isprime(prime):
        raise PrimeError(f"{prime} is not a prime")
    array = as_integer_array(matrix)
    n = array.shape[0]
    dtype = np.int64 if prime < _INT64_PRIME_LIMIT else object
    if dtype is object:
        h = np.array([[int(x) % prime for x in row] for row in array.tolist()], dtype=object)
        h = h.reshape(n, n)
    else:
        h = (array % prime).astype(np.int64)
    h = _hessenberg_mod_p(h, prime)

    # p_m(x) = (x - h[m-1,m-1]) p_{m-1}(x)
    #          - sum_{i<m} h[i-1,m-1] * prod_{t=i}^{m-1} h[t,t-1] * p_{i-1}(x)
    polys = np.zeros((n + 1, n + 1), dtype=dtype)
    polys[0, 0] = 1
    for m in range(1, n + 1):
        k = m - 1
        previous = polys[m - 1]
        current = np.zeros(n + 1, dtype=dtype)
        current[1:] = previous[:-1]
        current = (current - (previous * int(h[k, k])) % prime) % prime
        if m > 1:
            weights = np.zeros(m - 1, dtype=dtype)
            product = 1
            for i in range(m - 1, 0, -1):
                product = product * int(h[i, i - 1]) % prime
                if product == 0:
                    break
                weights[i - 1] = int(h[i - 1, k]) * product % prime
            if weights.any():
                correction = ((polys[: m - 1, :m] * weights[:, None]) % prime).sum(axis=0) % prime
                current[:m] = (current[:m] - correction) % prime
        polys[m] = current
    return tuple(int(c) for c in polys[n][::-1])


def signature(
    matrix: MatrixLike,
    mode: str = "modular",
    primes: Sequence[int] = DEFAULT_PRIMES,
    cutoff: int = EXACT_CUTOFF,
) -> CharPolySignature:
    """Canonical signature of an integer matrix in the requested mode."""
    if mode == "exact":
        return charpoly_exact(matrix, cutoff=cutoff)
    if mode != "modular":
        raise ValueError(f"unknown signature mode {mode!r}")
    array = as_integer_array(matrix)
    residues = tuple((int(p), charpoly_mod_p(array, int(p))) for p in primes)
    return CharPolySignature(degree=array.shape[0], mode="modular", residues=residues)


def eig_float(matrix: MatrixLike, max_dimension: int = EIG_MAX_DIMENSION) -> ComplexSpectrum:
    """All eigenvalues of a real matrix.

    numpy delegates to LAPACK's Hessenberg reduction followed by shifted QR
    iteration; real input yields exact conjugate pairs.
    """
    array = as_float_array(matrix)
    n = array.shape[0]
    if n > max_dimension:
        raise DimensionCutoffError(f"dimension {n} exceeds the eigensolver limit {max_dimension}")
    if n == 0:
        return ComplexSpectrum([])
    try:
        values = np.linalg.eigvals(array)
    except np.linalg.LinAlgError as exc:
        raise EigenConvergenceError(f"QR iteration did not converge: {exc}") from exc
    if not np.all(np.isfinite(values)):
        raise EigenConvergenceError("eigensolver returned non-finite values")
    return ComplexSpectrum(values)


def _real_parts(spectrum: ComplexSpectrum, tol: float, what: str) -> np.ndarray:
    values = spectrum.values
    if len(values) and np.abs(values.imag).max() > max(tol, 1e-12) * max(1, len(values)):
        raise SpectrumInputError(f"{what} spectrum is expected to be real")
    return values.real


def spectrum_from_T(
    spectrum_T: ComplexSpectrum, n: int, m: int, tol: float = DEFAULT_TOLERANCE
) -> ComplexSpectrum:
    """Sp(U(G)) from Sp(T(G)): ``l +- i sqrt(1 - l^2)`` per eigenvalue l of T,
    plus m - n copies each of +1 and -1."""
    if len(spectrum_T) != n:
        raise SpectrumInputError(f"expected {n} eigenvalues of T, got {len(spectrum_T)}")
    if m < n:
        raise SpectrumInputError(f"need m >= n, got m={m}, n={n}")
    lambdas = _real_parts(spectrum_T, tol, "T")
    slack = tol * max(1, n)
    if len(lambdas) and np.abs(lambdas).max() > 1 + slack:
        raise SpectrumInputError(
            f"T eigenvalue {lambdas[np.abs(lambdas).argmax()]:.12g} exceeds 1 in magnitude"
        )
    lambdas = np.clip(lambdas, -1.0, 1.0)
    radii = np.sqrt(1.0 - lambdas**2)
    values = np.concatenate(
        [lambdas + 1j * radii, lambdas - 1j * radii, np.ones(m - n), -np.ones(m - n)]
    )
    return ComplexSpectrum(values)


def ihara_split(n: int, m: int) -> Tuple[int, int]:
    """Copies of +1 and -1 beyond the 2n paired eigenvalues of S+(U) for a regular graph."""
    return m - n, m - n


def _check_regular_input(spectrum_M: ComplexSpectrum, n: int, k: int) -> None:
    if k < 3:
        raise SpectrumInputError(f"closed forms need k >= 3, got k={k}")
    if len(spectrum_M) != n:
        raise SpectrumInputError(f"expected {n} adjacency eigenvalues, got {len(spectrum_M)}")
    if (n * k) % 2:
        raise SpectrumInputError(f"no {k}-regular graph has {n} vertices")


def splus_u_spectrum_closed(
    spectrum_M: ComplexSpectrum,
    n: int,
    k: int,
    plus_ones: Optional[int] = None,
    tol: float = DEFAULT_TOLERANCE,
) -> ComplexSpectrum:
    """Sp(S+(U(G))) for k-regular G: ``l/2 +- i sqrt(k-1-l^2/4)`` per adjacency
    eigenvalue l, plus n(k-2) values in {+1, -1}.

    ``plus_ones`` defaults to the Ihara-Bass split (half of the n(k-2)).
    """
    _check_regular_input(spectrum_M, n, k)
    lambdas = _real_parts(spectrum_M, tol, "adjacency")
    remaining = n * (k - 2)
    if plus_ones is None:
        plus_ones = ihara_split(n, n * k // 2)[0]
    if not 0 <= plus_ones <= remaining:
        raise SpectrumInputError(f"plus_ones must lie in [0, {remaining}]")
    discriminant = k - 1 - lambdas**2 / 4
    root = np.sqrt(np.abs(discriminant))
    offset = np.where(discriminant >= 0, 1j * root, root)
    values = np.concatenate(
        [
            lambdas / 2 + offset,
            lambdas / 2 - offset,
            np.ones(plus_ones),
            -np.ones(remaining - plus_ones),
        ]
    )
    return ComplexSpectrum(values)


def splus_u2_spectrum_closed(
    spectrum_M: ComplexSpectrum, n: int, k: int, tol: float = DEFAULT_TOLERANCE
) -> ComplexSpectrum:
    """Sp(S+(U(G)^2)) for k-regular G: ``l^2/2 + 2 - k +- i l sqrt(k-1-l^2/4)``
    per adjacency eigenvalue l, plus n(k-2) copies of 2."""
    _check_regular_input(spectrum_M, n, k)
    lambdas = _real_parts(spectrum_M, tol, "adjacency")
    discriminant = k - 1 - lambdas**2 / 4
    root = np.sqrt(np.abs(discriminant))
    offset = np.where(discriminant >= 0, 1j * lambdas * root, lambdas * root)
    base = lambdas**2 / 2 + 2 - k
    values = np.concatenate([base + offset, base - offset, np.full(n * (k - 2), 2.0)])
    return ComplexSpectrum(values)


def multiset_eq(a: ComplexSpectrum, b: ComplexSpectrum, tol: float = DEFAULT_TOLERANCE) -> bool:
    """One-to-one matching with pairwise distance <= tol.

    Members of ``a`` are visited in lexicographic (real, imag) order and each
    takes the nearest still-unmatched member of ``b``.
    """
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    if len(a) != len(b):
        return False
    remaining = b.values.copy()
    available = np.ones(len(remaining), dtype=bool)
    for value in a.values:
        distances = np.where(available, np.abs(remaining - value), np.inf)
        best = int(np.argmin(distances)) if len(distances) else -1
        if best < 0 or distances[best] > tol:
            return False
        available[best] = False
    return True


def adjacency_spectrum_closed(spectrum_T: ComplexSpectrum, k: int) -> ComplexSpectrum:
    """Sp(M(G)) of a k-regular graph from Sp(T(G)), since T = M / k."""
    if k < 1:
        raise SpectrumInputError(f"degree must be positive, got {k}")
    return ComplexSpectrum(spectrum_T.values * k)

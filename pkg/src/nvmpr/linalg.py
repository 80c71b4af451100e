"""Dense complex Hermitian eigensolver based on cyclic Jacobi rotations.

Written for the tiny matrices this package produces (3x3 and 6x6 spin
Hamiltonians), where a dependency-free solver is simpler to validate than a
LAPACK wrapper and just as accurate. Convergence is declared when the
off-diagonal Frobenius norm drops below 1e-12 times the matrix norm.
"""

import numpy as np

from .errors import ContractViolationError

_OFFDIAG_TOL = 1e-12
_MAX_SWEEPS = 100


def hermiticity_defect(a):
    """max |A - A^dagger| relative to max |A| (0 for the zero matrix)."""
    a = np.asarray(a)
    scale = np.abs(a).max()
    if scale == 0.0:
        return 0.0
    return float(np.abs(a - a.conj().T).max() / scale)


def _offdiag_norm(a):
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(a):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Returns (w, v) with v[:, k] the eigenvector of w[k]. Raises
    ContractViolationError if the input is not Hermitian to 1e-9 relative.
    """
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ContractViolationError(f"expected a square matrix, got shape {a.shape}")
    if hermiticity_defect(a) > 1e-9:
        raise ContractViolationError("matrix is not Hermitian within 1e-9 relative")

    # Work on the exactly Hermitian part so roundoff in the input cannot drift.
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(n), v

    for _ in range(_MAX_SWEEPS):
        if _offdiag_norm(a) <= _OFFDIAG_TOL * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-300:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q

                # Enforce the algebraically exact entries of the rotated block.
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * np.conj(phase) * vec_q
                v[:, q] = s * phase * vec_p + c * vec_q
    else:
        raise ContractViolationError("Jacobi sweeps failed to converge")

    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]

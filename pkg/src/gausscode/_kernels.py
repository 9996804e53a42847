"""Permutation kernels with optional numba acceleration.

Everything hot in this library is an orbit traversal over dense integer
permutations: face counting, connectivity, straight-ahead walks, and the
oracle's sweep over all per-vertex rotation reversals of a premap.  Each
kernel exists twice with identical semantics: a numba ``@njit`` build and
a numpy/Python fallback.  The ``GAUSS_BACKEND`` environment variable
picks the initial backend (``numba`` when importable, else ``numpy``)
and :func:`set_backend` switches at runtime so benchmarks can compare
both in one process.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only when numba is absent
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco


# ---------------------------------------------------------------------------
# numpy / Python fallbacks
# ---------------------------------------------------------------------------


def _orbit_count_py(perm: np.ndarray) -> int:
    p = perm.tolist()
    n = len(p)
    seen = bytearray(n)
    count = 0
    for d in range(n):
        if seen[d]:
            continue
        count += 1
        e = d
        while not seen[e]:
            seen[e] = 1
            e = p[e]
    return count


def _compose_orbit_count_py(tau: np.ndarray, alpha: np.ndarray) -> int:
    if len(alpha) == 0:
        return 0
    return _orbit_count_py(tau[alpha])


def _orbit_sequences_py(perm: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = perm.tolist()
    n = len(p)
    order = [0] * n
    starts = [0]
    seen = bytearray(n)
    k = 0
    for d in range(n):
        if seen[d]:
            continue
        e = d
        while not seen[e]:
            seen[e] = 1
            order[k] = e
            k += 1
            e = p[e]
        starts.append(k)
    return np.asarray(order, dtype=np.int32), np.asarray(starts, dtype=np.int32)


def _dart_components_py(tau: np.ndarray, alpha: np.ndarray) -> tuple[np.ndarray, int]:
    t = tau.tolist()
    a = alpha.tolist()
    n = len(t)
    labels = [-1] * n
    lab = 0
    for d in range(n):
        if labels[d] >= 0:
            continue
        stack = [d]
        labels[d] = lab
        while stack:
            e = stack.pop()
            f = t[e]
            if labels[f] < 0:
                labels[f] = lab
                stack.append(f)
            f = a[e]
            if labels[f] < 0:
                labels[f] = lab
                stack.append(f)
        lab += 1
    return np.asarray(labels, dtype=np.int32), lab


def _face_count_sweep_py(
    tau_f: np.ndarray,
    tau_r: np.ndarray,
    alpha: np.ndarray,
    dart_vertex: np.ndarray,
    n_vertices: int,
) -> np.ndarray:
    n_masks = 1 << n_vertices
    out = np.empty(n_masks, dtype=np.int32)
    if len(alpha) == 0:
        out[:] = 0
        return out
    for mask in range(n_masks):
        bits = (mask >> dart_vertex) & 1
        tau = np.where(bits == 1, tau_r, tau_f)
        out[mask] = _orbit_count_py(tau[alpha])
    return out


# ---------------------------------------------------------------------------
# numba builds
# ---------------------------------------------------------------------------


@njit(cache=True)
def _orbit_count_nb(perm):  # pragma: no cover - numba
    n = perm.shape[0]
    seen = np.zeros(n, dtype=np.uint8)
    count = 0
    for d in range(n):
        if seen[d]:
            continue
        count += 1
        e = d
        while seen[e] == 0:
            seen[e] = 1
            e = perm[e]
    return count


@njit(cache=True)
def _compose_orbit_count_nb(tau, alpha):  # pragma: no cover - numba
    n = alpha.shape[0]
    seen = np.zeros(n, dtype=np.uint8)
    count = 0
    for d in range(n):
        if seen[d]:
            continue
        count += 1
        e = d
        while seen[e] == 0:
            seen[e] = 1
            e = tau[alpha[e]]
    return count


@njit(cache=True)
def _orbit_sequences_nb(perm):  # pragma: no cover - numba
    n = perm.shape[0]
    order = np.empty(n, dtype=np.int32)
    starts = np.empty(n + 1, dtype=np.int32)
    seen = np.zeros(n, dtype=np.uint8)
    k = 0
    nc = 0
    starts[0] = 0
    for d in range(n):
        if seen[d]:
            continue
        e = d
        while seen[e] == 0:
            seen[e] = 1
            order[k] = e
            k += 1
            e = perm[e]
        nc += 1
        starts[nc] = k
    return order, starts[: nc + 1].copy()


@njit(cache=True)
def _dart_components_nb(tau, alpha):  # pragma: no cover - numba
    n = tau.shape[0]
    labels = np.full(n, -1, dtype=np.int32)
    stack = np.empty(n, dtype=np.int32)
    lab = 0
    for d in range(n):
        if labels[d] >= 0:
            continue
        top = 0
        stack[top] = d
        top += 1
        labels[d] = lab
        while top > 0:
            top -= 1
            e = stack[top]
            f = tau[e]
            if labels[f] < 0:
                labels[f] = lab
                stack[top] = f
                top += 1
            f = alpha[e]
            if labels[f] < 0:
                labels[f] = lab
                stack[top] = f
                top += 1
        lab += 1
    return labels, lab


@njit(cache=True)
def _face_count_sweep_nb(tau_f, tau_r, alpha, dart_vertex, n_vertices):  # pragma: no cover
    n = alpha.shape[0]
    n_masks = np.int64(1) << n_vertices
    out = np.empty(n_masks, dtype=np.int32)
    stamp = np.full(n, -1, dtype=np.int64)
    for mask in range(n_masks):
        faces = 0
        for d0 in range(n):
            if stamp[d0] == mask:
                continue
            faces += 1
            e = d0
            while stamp[e] != mask:
                stamp[e] = mask
                a = alpha[e]
                if (mask >> dart_vertex[a]) & 1:
                    e = tau_r[a]
                else:
                    e = tau_f[a]
        out[mask] = faces
    return out


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

_PY_IMPLS = {
    "orbit_count": _orbit_count_py,
    "compose_orbit_count": _compose_orbit_count_py,
    "orbit_sequences": _orbit_sequences_py,
    "dart_components": _dart_components_py,
    "face_count_sweep": _face_count_sweep_py,
}

_NB_IMPLS = {
    "orbit_count": _orbit_count_nb,
    "compose_orbit_count": _compose_orbit_count_nb,
    "orbit_sequences": _orbit_sequences_nb,
    "dart_components": _dart_components_nb,
    "face_count_sweep": _face_count_sweep_nb,
}

_active = dict(_PY_IMPLS)
_backend = "numpy"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAVE_NUMBA else ("numpy",)


def current_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Select the kernel implementation: ``"numba"`` or ``"numpy"``."""
    global _backend
    if name == "numba":
        if not HAVE_NUMBA:
            raise ValueError("numba backend requested but numba is not installed")
        _active.update(_NB_IMPLS)
    elif name == "numpy":
        _active.update(_PY_IMPLS)
    else:
        raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")
    _backend = name


def _as_perm(a) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(a, dtype=np.int32))


def orbit_count(perm) -> int:
    """Number of cycles of a permutation given as an index array."""
    return int(_active["orbit_count"](_as_perm(perm)))


def compose_orbit_count(tau, alpha) -> int:
    """Number of cycles of the composition d -> tau[alpha[d]]."""
    return int(_active["compose_orbit_count"](_as_perm(tau), _as_perm(alpha)))


def orbit_sequences(perm) -> tuple[np.ndarray, np.ndarray]:
    """All cycles of a permutation, concatenated.

    Returns ``(order, starts)`` where ``order[starts[i]:starts[i+1]]`` is the
    i-th cycle, discovered from its least element and listed in traversal
    order.
    """
    return _active["orbit_sequences"](_as_perm(perm))


def dart_components(tau, alpha) -> tuple[np.ndarray, int]:
    """Connected-component labels of darts under the group <tau, alpha>."""
    return _active["dart_components"](_as_perm(tau), _as_perm(alpha))


def face_count_sweep(tau_f, tau_r, alpha, dart_vertex, n_vertices: int) -> np.ndarray:
    """Face counts of all per-vertex reversal variants of a rotation system.

    For every bitmask over the ``n_vertices`` vertices, the rotation used at
    dart ``d`` is ``tau_r``/``tau_f`` according to the bit of the vertex of
    ``d``; the result is the number of orbits of ``tau∘alpha`` per mask.
    """
    return _active["face_count_sweep"](
        _as_perm(tau_f), _as_perm(tau_r), _as_perm(alpha), _as_perm(dart_vertex), n_vertices
    )


_env = os.environ.get("GAUSS_BACKEND", "").strip().lower()
if _env:
    set_backend(_env)
elif HAVE_NUMBA:
    set_backend("numba")
else:
    set_backend("numpy")

"""Exact computations for spherical symplectic reflection algebras of star-shaped type.

Thin wrappers over the C++ core. Rationals are strings "p/q"; class functions
are dicts mapping class labels ("2a", "4a", ...) to rationals. Results are
the same JSON documents the `srt` command prints, decoded into Python objects.
"""

import json

from . import _core
from ._core import InputError, MathError

__all__ = [
    "InputError",
    "MathError",
    "mckay",
    "quiver",
    "weights",
    "hyperplane",
    "qhr_demo",
    "invdim",
    "sra_relators",
    "sra_check_scaling",
    "sra_check_equivariance",
    "orbit_specs",
    "ds_solve",
]


def _c(c):
    return None if c is None else json.dumps({str(k): str(v) for k, v in c.items()})


def _q(x):
    return None if x is None else str(x)


def mckay(group, c=None):
    return json.loads(_core.mckay(group, _c(c)))


def quiver(group, n, k=None, c=None):
    return json.loads(_core.quiver(group, n, _q(k), _c(c)))


def weights(group, n, k, c=None):
    return json.loads(_core.weights(group, n, str(k), _c(c)))


def hyperplane(group, n, k, c=None):
    return json.loads(_core.hyperplane(group, n, str(k), _c(c)))


def qhr_demo(case, degree=5, chi=0):
    return json.loads(_core.qhr_demo(case, degree, str(chi)))


def invdim(rank, weights):
    return _core.invdim(rank, [list(w) for w in weights])


def sra_relators(group, n, t=1, k=0, c=None):
    return json.loads(_core.sra_relators(group, n, str(t), str(k), _c(c)))


def sra_check_scaling(group, n, scales, t=1, k=0, c=None):
    return json.loads(_core.sra_check_scaling(group, n, [str(a) for a in scales], str(t), str(k), _c(c)))


def sra_check_equivariance(group, n, t=1, k=0, c=None):
    return json.loads(_core.sra_check_equivariance(group, n, str(t), str(k), _c(c)))


def orbit_specs(group, n, k, c=None):
    return json.loads(_core.orbit_specs(group, n, str(k), _c(c)))


def ds_solve(specs, seed=1, restarts=8, tol=1e-10, max_iterations=400, threads=0):
    """specs: list of {"r": int, "eigs": [[re, im, mult], ...]}."""
    return json.loads(_core.ds_solve(json.dumps(specs), seed, restarts, tol, max_iterations, threads))

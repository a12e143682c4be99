"""Python bindings for the pentagram spiral engine.

Seeds are plain dicts in the same JSON layout the CLI and the HTTP service use.
"""

import json as _json

from . import _penta

__all__ = [
    "PentaError",
    "validate",
    "step",
    "normalize",
    "spiral_window",
    "invariants",
    "limit_point",
    "limit_point_orbit",
    "winding",
    "log_spiral",
    "lps",
    "periodicity",
    "z_probe",
]


class PentaError(Exception):
    """Raised for any engine error; `code` is the machine-readable name."""

    def __init__(self, payload):
        self.payload = payload
        self.code = payload.get("error", "Error")
        self.violation = payload.get("violation")
        super().__init__(payload.get("message", self.code))


def _call(fn, *args):
    try:
        return _json.loads(fn(*args))
    except _penta.PentaError as e:
        raise PentaError(_json.loads(str(e))) from None


def _seed(seed):
    return seed if isinstance(seed, str) else _json.dumps(seed)


def validate(seed):
    return _call(_penta.validate, _seed(seed))


def step(seed, power=1, inverse=False, force_float=False):
    return _call(_penta.step, _seed(seed), power, inverse, force_float)


def normalize(seed, force_float=False):
    return _call(_penta.normalize, _seed(seed), force_float)


def spiral_window(seed, j_min, j_max):
    return _call(_penta.spiral_window, _seed(seed), j_min, j_max)


def invariants(seed, force_float=False):
    return _call(_penta.invariants, _seed(seed), force_float)


def limit_point(seed, tol=1e-9):
    return _call(_penta.limit_point, _seed(seed), tol)


def limit_point_orbit(seed, m_max, tol=1e-9):
    return _call(_penta.limit_point_orbit, _seed(seed), m_max, tol)


def winding(seed, steps):
    return _call(_penta.winding, _seed(seed), steps)


def log_spiral(n, k):
    return _call(_penta.log_spiral, n, k)


def lps(n, k, tol=1e-11):
    return _call(_penta.lps, n, k, tol)


def periodicity(n, k, order, trials=20, rng_seed=1):
    return _call(_penta.periodicity, n, k, order, trials, rng_seed)


def z_probe(n, k, samples=100, perturbation=0.05, rng_seed=1):
    return _call(_penta.z_probe, n, k, samples, perturbation, rng_seed)

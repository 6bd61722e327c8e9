"""Sharma-Mittal, Renyi, Tsallis and von Neumann entropies of density spectra.

Every functional except von Neumann factors through the moment sum
S_q = sum(p**q). Renyi and von Neumann entropies are returned in bits. The
Sharma-Mittal and Tsallis expressions contain no logarithm and are returned
as the raw formula values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidParameter, NonPositiveQ, ParameterAtLimit
from .spectra import DensitySpectrum, moment_sum

LIMIT_TOL = 1e-9


class Family(Enum):
    SHARMA_MITTAL = "sm"
    RENYI = "renyi"
    TSALLIS = "tsallis"
    VON_NEUMANN = "vn"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower()
        aliases = {"sharma-mittal": cls.SHARMA_MITTAL, "von-neumann": cls.VON_NEUMANN,
                   "vonneumann": cls.VON_NEUMANN, "shannon": cls.VON_NEUMANN}
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise InvalidParameter(f"unknown entropy family {text!r}") from None


@dataclass(frozen=True)
class EntropyParams:
    family: Family = Family.SHARMA_MITTAL
    q: float = 2.0
    r: float = 2.0
    limit_tol: float = LIMIT_TOL

    def __post_init__(self):
        if not self.limit_tol > 0:
            raise InvalidParameter(f"limit_tol must be positive, got {self.limit_tol}")


def _check_q(q: float) -> None:
    if not q > 0:
        raise NonPositiveQ(f"q must be positive, got {q}")


def _near(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol


def sm_from_moment(s_q: float, q: float, r: float) -> float:
    """(S**((1-r)/(1-q)) - 1) / (1-r), evaluated through expm1."""
    return math.expm1((1.0 - r) / (1.0 - q) * math.log(s_q)) / (1.0 - r)


def sharma_mittal(ds: DensitySpectrum, q: float, r: float, limit_tol: float = LIMIT_TOL) -> float:
    _check_q(q)
    if _near(q, 1.0, limit_tol) or _near(r, 1.0, limit_tol):
        raise ParameterAtLimit(f"(q, r) = ({q}, {r}) is at a limit; use entropy() to route")
    return sm_from_moment(moment_sum(ds, q), q, r)


def renyi(ds: DensitySpectrum, q: float, limit_tol: float = LIMIT_TOL) -> float:
    _check_q(q)
    if _near(q, 1.0, limit_tol):
        raise ParameterAtLimit("Renyi entropy at q = 1 is the von Neumann entropy")
    return math.log2(moment_sum(ds, q)) / (1.0 - q)


def tsallis(ds: DensitySpectrum, q: float, limit_tol: float = LIMIT_TOL) -> float:
    _check_q(q)
    if _near(q, 1.0, limit_tol):
        raise ParameterAtLimit("Tsallis entropy at q = 1 is the von Neumann entropy")
    return (moment_sum(ds, q) - 1.0) / (1.0 - q)


def von_neumann(ds: DensitySpectrum) -> float:
    p = ds.probs[ds.probs > 0]
    return float(-np.sum(p * np.log2(p)))


def _sm_q_limit(ds: DensitySpectrum, r: float) -> float:
    # q -> 1 at fixed r: S_q**(1/(1-q)) -> exp(H) with H in nats
    h_nats = von_neumann(ds) * math.log(2.0)
    return math.expm1((1.0 - r) * h_nats) / (1.0 - r)


def entropy(ds: DensitySpectrum, params: EntropyParams) -> float:
    """Evaluate ``params.family``; Sharma-Mittal is routed to its limits.

    Sharma-Mittal parameters within ``limit_tol`` of a singular line go to the
    matching limit: (1, 1) gives von Neumann, r = 1 gives Renyi and r = q
    gives Tsallis. q = 1 with r away from 1 uses the q -> 1 limit of the
    Sharma-Mittal formula.
    """
    fam, q, r, tol = params.family, params.q, params.r, params.limit_tol
    if fam is Family.VON_NEUMANN:
        return von_neumann(ds)
    _check_q(q)
    if fam is Family.RENYI:
        return renyi(ds, q, tol)
    if fam is Family.TSALLIS:
        return tsallis(ds, q, tol)
    if _near(q, 1.0, tol):
        if _near(r, 1.0, tol) or _near(r, q, tol):
            return von_neumann(ds)
        return _sm_q_limit(ds, r)
    if _near(r, 1.0, tol):
        return renyi(ds, q, tol)
    if _near(r, q, tol):
        return tsallis(ds, q, tol)
    return sharma_mittal(ds, q, r, tol)


def all_entropies(ds: DensitySpectrum, q: float, r: float, limit_tol: float = LIMIT_TOL) -> dict:
    """The four values at one (q, r) point. Renyi and Tsallis are read off the
    Sharma-Mittal lines r = 1 and r = q, so q = 1 degrades to von Neumann."""
    sm = lambda rr: entropy(ds, EntropyParams(Family.SHARMA_MITTAL, q, rr, limit_tol))
    return {
        "sharma_mittal": sm(r),
        "renyi": sm(1.0),
        "tsallis": sm(q),
        "von_neumann": von_neumann(ds),
    }

"""Zhukovsky variables, local representation weights and lattice configuration.

x(u) is the root of x + 1/x = u with |x| >= 1 on the principal sheet.  The
general parametrization takes x+ = x(u + hbar/2), x- = 1/x(u - hbar/2); the
alternative variant used for the Essler--Korepin--Schoutens limit keeps both
plain, x+- = x(u -+ ... ) without the inversion.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, replace

from .dual import Dual, dsqrt, dval

GENERAL = "general"
EKS = "EKS"

_DEGEN_TOL = 1e-12


def x_of_u(u):
    """Root of x + 1/x = u with |x| >= 1 (principal square root at ties)."""
    w = dsqrt(u * u - 4.0)
    x = (u + w) * 0.5
    if abs(dval(x)) < 1.0 - 1e-12:
        x = (u - w) * 0.5
    if dval(x) == 0:
        # u at a branch point +-2 collapses to x = +-1
        x = u * 0.5
    return x


@dataclass
class SiteKinematics:
    """Spectral data of one fundamental-representation site."""

    u: complex
    hbar: complex
    xp: complex
    xm: complex
    nu: complex
    gamma: complex
    a: complex
    b: complex
    c: complex
    d: complex
    degenerate: bool = False
    variant: str = GENERAL

    @property
    def cP(self):
        return self.a * self.b

    @property
    def cK(self):
        return self.c * self.d

    @property
    def cC(self):
        return (self.a * self.d + self.b * self.c) * 0.5

    def inverted(self) -> "SiteKinematics":
        """Kinematics with x+ -> 1/x-, x- -> 1/x+ (flips hbar, keeps u)."""
        return from_xpm(1.0 / self.xm, 1.0 / self.xp, variant=self.variant)


def _finish(u, hbar, xp, xm, variant) -> SiteKinematics:
    nu2 = xp / xm
    nu = dsqrt(nu2)
    g2 = nu * (xp - xm)
    degenerate = abs(dval(g2)) < _DEGEN_TOL
    if degenerate:
        gamma = g2 * 0.0
        a = b = c = d = complex("nan")
    else:
        gamma = dsqrt(g2)
        sqh = dsqrt(hbar)
        a = gamma / sqh
        b = (nu2 - 1.0) / (sqh * gamma)
        c = gamma / (sqh * xp)
        d = xp * (nu2 - 1.0) / (sqh * nu2 * gamma)
    return SiteKinematics(u, hbar, xp, xm, nu, gamma, a, b, c, d, degenerate, variant)


def site_kinematics(u, hbar, variant: str = GENERAL) -> SiteKinematics:
    """Build site data from a spectral parameter and the coupling."""
    if variant not in (GENERAL, EKS):
        raise ValueError(f"unknown parametrization variant {variant!r}")
    xp = x_of_u(u + hbar * 0.5)
    xm_root = x_of_u(u - hbar * 0.5)
    xm = xm_root if variant == EKS else 1.0 / xm_root
    return _finish(u, hbar, xp, xm, variant)


def from_xpm(xp, xm, variant: str = GENERAL) -> SiteKinematics:
    """Build site data directly from the pair (x+, x-)."""
    u = (xp + 1.0 / xp + xm + 1.0 / xm) * 0.5
    hbar = xp + 1.0 / xp - xm - 1.0 / xm
    return _finish(u, hbar, xp, xm, variant)


def hubbard_parametrization(theta: complex, h: complex):
    """Trigonometric parametrization (x+, x-, hbar) of the Shastry point."""
    a = cmath.cos(theta)
    b = cmath.sin(theta)
    if abs(a * b) < 1e-14:
        raise ValueError("theta at a multiple of pi/2 degenerates the parametrization")
    xp = 1j * (a / b) * cmath.exp(2.0 * h)
    xm = -1j * (b / a) * cmath.exp(2.0 * h)
    hbar = 2j * cmath.sinh(2.0 * h) / (a * b)
    return xp, xm, hbar


@dataclass(frozen=True)
class LatticeConfig:
    """Immutable lattice data: length, phases, per-site kinematics."""

    L: int
    phi_up: complex
    phi_dn: complex
    kins: tuple
    phase_indices: tuple = ()
    bc: str = "open"

    def __post_init__(self):
        if len(self.kins) != self.L:
            raise ValueError("need one kinematics record per site")
        if not self.phase_indices:
            object.__setattr__(self, "phase_indices", tuple(range(1, self.L + 1)))

    def kin(self, i: int) -> SiteKinematics:
        return self.kins[i - 1]

    def phase_index(self, i: int) -> int:
        return self.phase_indices[i - 1]

    @property
    def hbar(self):
        return self.kins[0].hbar

    def braiding_prefix(self, i: int):
        """nu^(i-1) = product of nu_j over j < i (1-based site index)."""
        out = 1.0 + 0j
        for j in range(1, i):
            out = out * self.kin(j).nu
        return out

    def reflected(self) -> "LatticeConfig":
        """Site-reversed parameter list (phases and indices unchanged)."""
        return replace(self, kins=tuple(reversed(self.kins)))

    def us(self):
        return tuple(k.u for k in self.kins)


def config_from_us(us, hbar, phi_up=0.0, phi_dn=0.0, variant=GENERAL, bc="open") -> LatticeConfig:
    kins = tuple(site_kinematics(u, hbar, variant) for u in us)
    return LatticeConfig(len(kins), phi_up, phi_dn, kins, bc=bc)


def config_from_kins(kins, phi_up=0.0, phi_dn=0.0, bc="open", phase_indices=()) -> LatticeConfig:
    return LatticeConfig(len(kins), phi_up, phi_dn, tuple(kins), tuple(phase_indices), bc)


def homogeneous_config(L, u, hbar, phi_up=0.0, phi_dn=0.0, variant=GENERAL, bc="open") -> LatticeConfig:
    return config_from_us([u] * L, hbar, phi_up, phi_dn, variant, bc)


def extend_with_aux(config: LatticeConfig, aux_kin: SiteKinematics) -> LatticeConfig:
    """Prepend an auxiliary site (phase index 0, so its phases cancel)."""
    return LatticeConfig(
        config.L + 1,
        config.phi_up,
        config.phi_dn,
        (aux_kin,) + config.kins,
        (0,) + config.phase_indices,
        config.bc,
    )


def ppht_config(config: LatticeConfig) -> LatticeConfig:
    """Parameter side of the partial particle-hole map: x -> 1/x-+, phi_dn -> -phi_dn."""
    return replace(
        config,
        kins=tuple(k.inverted() for k in config.kins),
        phi_dn=-config.phi_dn,
    )


# -- random sampling --------------------------------------------------------


def sample_us(rng, n: int, hbar: complex):
    """Sample n spectral parameters from the standard rectangle.

    Points keep 0.1 clearance from the four branch points u = +-2 -+ hbar/2,
    and pairwise weight poles (x-_i = x+_j, 1 = x-_i x-_j) are rejected.
    """
    branch = [2 - hbar / 2, -2 + hbar / 2, 2 + hbar / 2, -2 - hbar / 2]
    for _ in range(10_000):
        us = [
            complex(rng.uniform(-3.0, 3.0), rng.uniform(0.05, 0.3)) for _ in range(n)
        ]
        if any(abs(u - bp) < 0.1 for u in us for bp in branch):
            continue
        kins = [site_kinematics(u, hbar) for u in us]
        if any(k.degenerate for k in kins):
            continue
        ok = all(
            abs(ki.xm - kj.xp) >= 0.05 and abs(1.0 - ki.xm * kj.xm) >= 0.05
            for ki in kins
            for kj in kins
        )
        if ok:
            return us
    raise RuntimeError("could not sample pole-free kinematics")


def dualized(kin: SiteKinematics) -> SiteKinematics:
    """Rebuild a site record with u carrying a unit derivative slot."""
    return site_kinematics(Dual(kin.u, 1.0), kin.hbar, kin.variant)

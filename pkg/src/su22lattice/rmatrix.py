"""The two-site R-matrix in oscillator and 16x16 graded-matrix form.

The oscillator operator is assembled from Boltzmann-weighted fermionic
monomials; its hermitian-conjugate completion exchanges c <-> c^dag,
reverses order and conjugates the explicit phase factors while keeping the
weight coefficients (the unique completion passing the intertwining suite).
The 16x16 closed form is an independent transcription over graded matrix
units, cross-checked entrywise against (pi (x) pi) of the oscillator form.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import fock
from .dual import Dual, DualOp
from .fock import (
    DN,
    UP,
    FockOp,
    GradedMatrix,
    annihilator,
    creator,
    graded_identity,
    graded_permutation,
    graded_tensor,
    graded_unit,
    identity_op,
    number_op,
)
from .kinematics import LatticeConfig, SiteKinematics


@dataclass
class BoltzmannWeights:
    """Scalar coefficient functions of an ordered site pair."""

    s_plus: complex
    s_minus: complex
    s2: complex
    s3: complex
    s4: complex
    s5: complex
    s2_swap: complex  # s2 with the two sites interchanged

    @property
    def s3s2(self):
        return self.s3 * self.s2_swap


def _y(kin_i, kin_j, a: str, b: str):
    xa = kin_i.xp if a == "+" else kin_i.xm
    xb = kin_j.xp if b == "+" else kin_j.xm
    return (xa - xb) / (kin_i.xm - kin_j.xp)


def _s2(kin_i, kin_j):
    num = (kin_i.xp - kin_i.xm) * (kin_j.xp - kin_i.xm * kin_j.xm * kin_i.xp)
    den = (kin_i.xm - kin_j.xp) * (kin_i.xp - kin_i.xm * kin_j.xm * kin_i.xp)
    return num / den


def boltzmann_weights(kin_i: SiteKinematics, kin_j: SiteKinematics) -> BoltzmannWeights:
    """All six weights of the ordered pair (i, j); reports the pole x-_i = x+_j."""
    from .dual import dval

    if abs(dval(kin_i.xm) - dval(kin_j.xp)) < 1e-13:
        raise ValueError("Boltzmann weight pole: x-_i = x+_j")
    ypp = _y(kin_i, kin_j, "+", "+")
    pref = kin_i.gamma * kin_j.gamma / (kin_i.nu**2 * kin_j.nu)
    core = ypp / (1.0 - kin_i.xm * kin_j.xm)
    osc = kin_i.nu * kin_j.nu / (kin_i.xm - kin_j.xp)
    return BoltzmannWeights(
        s_plus=(core + osc) * pref,
        s_minus=(core - osc) * pref,
        s2=_s2(kin_i, kin_j),
        s3=(kin_j.nu / kin_i.nu) * _y(kin_i, kin_j, "+", "-"),
        s4=1.0 - kin_j.nu * _y(kin_i, kin_j, "-", "-"),
        s5=1.0 - _y(kin_i, kin_j, "+", "+") / kin_i.nu,
        s2_swap=_s2(kin_j, kin_i),
    )


def _r_monomials(config: LatticeConfig, si: int, sj: int):
    """Kinematics-independent operator monomials of the R-matrix, in a fixed
    order matching `_r_weight_vector`."""
    L = config.L
    dk = config.phase_index(si) - config.phase_index(sj)
    pu, pd = config.phi_up, config.phi_dn

    def ph(z):
        return cmath.exp(1j * z)

    cu_i, cd_i = annihilator(si, UP, L), annihilator(si, DN, L)
    cu_j, cd_j = annihilator(sj, UP, L), annihilator(sj, DN, L)
    cU_i, cD_i = creator(si, UP, L), creator(si, DN, L)
    cU_j, cD_j = creator(sj, UP, L), creator(sj, DN, L)
    nu_i, nd_i = number_op(si, UP, L), number_op(si, DN, L)
    nu_j, nd_j = number_op(sj, UP, L), number_op(sj, DN, L)
    one = identity_op(L)
    half = 0.5 * one

    pair_fwd = ph((pu + pd) * dk) * (cU_i @ cD_i @ cu_j @ cd_j)
    pair_bwd = ph(-(pu + pd) * dk) * (cD_j @ cU_j @ cd_i @ cu_i)
    exch_fwd = ph((pu - pd) * dk) * (cU_i @ cd_i @ cD_j @ cu_j)
    exch_bwd = ph(-(pu - pd) * dk) * (cU_j @ cd_j @ cD_i @ cu_i)

    docc = (nu_i @ nd_i) + (nu_j @ nd_j)
    diff = (nu_i - nu_j) @ (nd_i - nd_j)
    pot_i = (nu_i - half) @ (nd_i - half)
    pot_j = (nu_j - half) @ (nd_j - half)
    single = ((nu_i - nd_i) @ (nu_i - nd_i)) @ ((nu_j - nd_j) @ (nu_j - nd_j))

    hop = {}
    for alpha, beta in ((UP, DN), (DN, UP)):
        pa = pu if alpha == UP else pd
        ca_i = cu_i if alpha == UP else cd_i
        ca_j = cu_j if alpha == UP else cd_j
        cA_i = cU_i if alpha == UP else cD_i
        cA_j = cU_j if alpha == UP else cD_j
        nb_i = nu_i if beta == UP else nd_i
        nb_j = nu_j if beta == UP else nd_j
        bracket = ph(pa * dk) * (cA_i @ ca_j) - ph(-pa * dk) * (ca_i @ cA_j)
        hop[(alpha, beta, "j")] = bracket @ (nb_j - half)
        hop[(alpha, beta, "i")] = bracket @ (nb_i - half)

    return [
        one,
        pair_fwd,
        pair_bwd,
        exch_fwd,
        exch_bwd,
        docc @ diff,
        (docc - one) @ diff,
        pot_i,
        pot_j,
        single,
        hop[(UP, DN, "j")],
        hop[(UP, DN, "i")],
        hop[(DN, UP, "j")],
        hop[(DN, UP, "i")],
    ]


def _r_weight_vector(w: BoltzmannWeights):
    return [
        1.0 - 0.5 * (w.s4 + w.s5),
        w.s2,
        w.s2,
        -w.s3s2,
        -w.s3s2,
        w.s2,
        w.s3s2,
        2.0 * w.s4,
        2.0 * w.s5,
        w.s3 + w.s4 + w.s5 - 1.0,
        w.s_plus,
        -w.s_minus,
        w.s_plus,
        -w.s_minus,
    ]


def r_oscillator(config: LatticeConfig, si: int, sj: int):
    """Two-site oscillator R-matrix acting on the full lattice.

    Returns a DualOp when the site kinematics carry dual parts.
    """
    if si == sj:
        raise ValueError("R-matrix needs two distinct sites")
    w = boltzmann_weights(config.kin(si), config.kin(sj))
    terms = _r_monomials(config, si, sj)
    coefs = _r_weight_vector(w)
    if any(isinstance(c, Dual) for c in coefs):
        out = DualOp(fock.zero_op(config.L), fock.zero_op(config.L))
    else:
        out = fock.zero_op(config.L)
    for c, t in zip(coefs, terms):
        out = out + t * c
    return out


# -- 16x16 closed form --------------------------------------------------------

_BOS = (1, 4)
_FER = (2, 3)

# grading assigned to an index difference |a-b| (the bar of the appendix sign)
_GRADE_OF_INT = {1: 0, 2: 1, 3: 1}


def _unit2(a: int, b: int, c: int, d: int) -> np.ndarray:
    """E_ab (x) E_cd as a 16x16 matrix in the operator-ordering convention.

    The entry sign (-1)^(deg b * (deg c + deg d)) makes matrix products of
    these units track ordered products of site operators (site i acting
    before its string passes site j), matching the Fock-space realization.
    """
    g = fock.GRADE4
    m = np.zeros((16, 16), dtype=complex)
    sgn = -1.0 if (g[b - 1] & (g[c - 1] ^ g[d - 1])) else 1.0
    m[4 * (a - 1) + (c - 1), 4 * (b - 1) + (d - 1)] = sgn
    return m


def r_matrix16(kin_i: SiteKinematics, kin_j: SiteKinematics) -> GradedMatrix:
    """Closed 16x16 form over graded matrix units (site i first factor).

    Blocks: bosonic diagonal, graded diagonal weights, the graded swap with
    sign (-1)^deg(a), fermionic diagonal, two-particle exchange, and the
    double-transition block with sign (-1)^(grade|a-b| - deg(a)) coupling the
    (1,4) and (2,3) grading pairs.
    """
    w = boltzmann_weights(kin_i, kin_j)
    g = fock.GRADE4

    out = np.zeros((16, 16), dtype=complex)
    for a in _BOS:
        for b in _BOS:
            out += _unit2(a, a, b, b)
    for a in _FER:
        for b in _BOS:
            out += (1.0 - w.s4) * _unit2(a, a, b, b)
    for a in _BOS:
        for b in _FER:
            out += (1.0 - w.s5) * _unit2(a, a, b, b)
    for a in range(1, 5):
        for b in range(1, 5):
            if g[a - 1] != g[b - 1]:
                sgn = -1.0 if g[a - 1] else 1.0
                out += 0.5 * (w.s_plus - w.s_minus) * sgn * _unit2(a, b, b, a)
    for a in _FER:
        for b in _FER:
            out += w.s3 * _unit2(a, a, b, b)
    for a, b in ((1, 4), (4, 1)):
        out += w.s2 * (_unit2(a, a, b, b) - _unit2(a, b, b, a))
    for a, b in ((2, 3), (3, 2)):
        out += w.s3s2 * (_unit2(a, a, b, b) - _unit2(a, b, b, a))
    partner = {1: 4, 4: 1, 2: 3, 3: 2}
    for a in range(1, 5):
        for b in range(1, 5):
            if g[a - 1] == g[b - 1]:
                continue
            sgn = -1.0 if (_GRADE_OF_INT[abs(a - b)] ^ g[a - 1]) else 1.0
            out += 0.5 * (w.s_plus + w.s_minus) * sgn * _unit2(a, b, partner[a], partner[b])
    return GradedMatrix(out, 2)


def permutation16() -> GradedMatrix:
    """Graded permutation in the operator-ordering convention (equals the
    phase-free Fock two-site permutation matrix)."""
    out = np.zeros((16, 16), dtype=complex)
    for a in range(1, 5):
        for b in range(1, 5):
            sgn = -1.0 if fock.GRADE4[b - 1] else 1.0
            out += sgn * _unit2(a, b, b, a)
    return GradedMatrix(out, 2)


# -- identities ---------------------------------------------------------------


def unitarity_residual_osc(config: LatticeConfig, si: int, sj: int) -> float:
    r_ij = r_oscillator(config, si, sj)
    r_ji = r_oscillator(config, sj, si)
    return (r_ij @ r_ji - identity_op(config.L)).norm()


def unitarity_residual_16(kin_i, kin_j) -> float:
    P = permutation16().m
    r = r_matrix16(kin_i, kin_j).m
    rs = r_matrix16(kin_j, kin_i).m
    return float(np.linalg.norm(r @ P @ rs @ P - np.eye(16)))


def _embed3(which: str, kin_a, kin_b) -> np.ndarray:
    """Embed a 16x16 R into legs (which) of the three-fold space.

    R and P have only even entries, so the graded embeddings reduce to plain
    Kronecker products.
    """
    r = r_matrix16(kin_a, kin_b).m
    one = np.eye(4)
    if which == "12":
        return np.kron(r, one)
    if which == "23":
        return np.kron(one, r)
    if which == "13":
        swap = np.kron(one, permutation16().m)
        return swap @ np.kron(r, one) @ swap
    raise ValueError(which)


def ybe_residual_16(kin_i, kin_j, kin_k) -> float:
    r_ij = _embed3("12", kin_i, kin_j)
    r_ik = _embed3("13", kin_i, kin_k)
    r_jk = _embed3("23", kin_j, kin_k)
    return float(np.linalg.norm(r_ij @ r_ik @ r_jk - r_jk @ r_ik @ r_ij))


def ybe_residual_osc(config3: LatticeConfig) -> float:
    r12 = r_oscillator(config3, 1, 2)
    r13 = r_oscillator(config3, 1, 3)
    r23 = r_oscillator(config3, 2, 3)
    return (r12 @ r13 @ r23 - r23 @ r13 @ r12).norm()


def ybe_residual(kin_i, kin_j, kin_k, phi_up=0.0, phi_dn=0.0) -> dict[str, float]:
    """Yang-Baxter residuals in both the oscillator and graded-matrix forms."""
    from .kinematics import config_from_kins

    cfg = config_from_kins([kin_i, kin_j, kin_k], phi_up, phi_dn)
    return {
        "ybe osc": ybe_residual_osc(cfg),
        "ybe 16": ybe_residual_16(kin_i, kin_j, kin_k),
    }


def cross_check_residual(kin_i, kin_j, phi_up=0.0, phi_dn=0.0) -> float:
    """Max entrywise deviation between the closed form and (pi x pi)(R_osc).

    The representation matrices live in the phased site basis, where the
    explicit phase factors of the oscillator form cancel.
    """
    from .kinematics import config_from_kins

    cfg = config_from_kins([kin_i, kin_j], phi_up, phi_dn)
    r_f = fock.to_phased_basis(r_oscillator(cfg, 1, 2), cfg)
    r_m = r_matrix16(kin_i, kin_j).m
    return float(np.max(np.abs(r_f - r_m)))


# -- intertwining --------------------------------------------------------------


def sigma_image(op_builder, config: LatticeConfig) -> FockOp:
    """(eps o sigma) of a configured operator: rebuild on the reflected
    parameter list, then conjugate by the site-reversal unitary."""
    u = fock.parity_reversal_unitary(config)
    return u @ op_builder(config.reflected()) @ fock.invert_unitary(u)


def intertwine_residual(op_builder, config2: LatticeConfig) -> float:
    """|| R J - sigma(J) R || for a two-site lattice configuration."""
    r = r_oscillator(config2, 1, 2)
    J = op_builder(config2)
    Js = sigma_image(op_builder, config2)
    return (r @ J - Js @ r).norm()

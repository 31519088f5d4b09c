"""Lax operator: auxiliary-leg representation of the R-matrix, its explicit
K/P/Q decomposition, inverse, and symmetry identities.

The auxiliary space is realized as an extra lattice site in front of the
quantum sites (phase index 0, so no phase dressing), which turns all graded
matrix bookkeeping into ordinary operator products.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fock
from .fock import DN, UP, FockOp, annihilator, creator, identity_op, number_op
from .kinematics import LatticeConfig, SiteKinematics, config_from_kins, extend_with_aux
from .rmatrix import boltzmann_weights, r_matrix16, r_oscillator
from .dual import dsqrt


@dataclass
class LaxFactors:
    """Scalar data of the K/P/Q decomposition for an (auxiliary, quantum) pair."""

    f: complex
    k_plus: complex
    k_minus: complex
    p_plus: complex
    p_minus: complex
    q_plus: complex
    q_minus: complex
    z: complex
    z_swap: complex


def _z(kin_mu, kin_i):
    return (kin_i.xp / kin_i.nu) * (1.0 - kin_mu.nu**2) / (kin_i.xp * kin_i.xm - kin_mu.nu**2)


def lax_factors(kin_mu: SiteKinematics, kin_i: SiteKinematics) -> LaxFactors:
    w_mi = boltzmann_weights(kin_mu, kin_i)
    w_im = boltzmann_weights(kin_i, kin_mu)
    k_plus = dsqrt(-w_mi.s2)
    k_minus = dsqrt(w_im.s2 * w_mi.s3)
    f = -w_mi.s_plus / (k_plus * k_minus)
    z_mi = _z(kin_mu, kin_i)
    z_im = _z(kin_i, kin_mu)
    one5 = 1.0 - w_mi.s5
    qp_plus_pp = 4.0 * kin_mu.nu * one5 * (1.0 - z_mi * kin_i.nu / kin_i.xp)
    qm_minus_pm = 4.0 * kin_i.nu * one5 * (1.0 - z_im * kin_mu.nu / kin_mu.xp)
    qm_plus_pm = 4.0 * (one5 * z_im + (1.0 - w_mi.s4))
    qp_minus_pp = 4.0 * one5 * (1.0 - z_mi)
    return LaxFactors(
        f=f,
        k_plus=k_plus,
        k_minus=k_minus,
        p_plus=0.5 * (qp_plus_pp - qp_minus_pp),
        p_minus=0.5 * (qm_plus_pm - qm_minus_pm),
        q_plus=0.5 * (qp_plus_pp + qp_minus_pp),
        q_minus=0.5 * (qm_plus_pm + qm_minus_pm),
        z=z_mi,
        z_swap=z_im,
    )


def z_consistency_residual(kin_mu, kin_i) -> float:
    """The z factor has two printed forms; their deviation."""
    w_mi = boltzmann_weights(kin_mu, kin_i)
    w_im = boltzmann_weights(kin_i, kin_mu)
    via_s = ((w_mi.s_plus - w_mi.s_minus) * (w_im.s_plus + w_im.s_minus)) / (
        4.0 * w_im.s2 * (w_mi.s5 - 1.0)
    )
    return abs(via_s - _z(kin_mu, kin_i))


def lax_extended(aux_kin: SiteKinematics, config: LatticeConfig, site: int):
    """pi_mu(R_{mu,site}) as an operator on the auxiliary-extended lattice."""
    ext = extend_with_aux(config, aux_kin)
    return r_oscillator(ext, 1, site + 1)


def lax_blocks(aux_kin: SiteKinematics, config: LatticeConfig, site: int):
    """4x4 array of quantum-lattice operators: the Lax operator entries."""
    ext_op = lax_extended(aux_kin, config, site)
    return [[fock.aux_block(ext_op, a, b) for b in range(1, 5)] for a in range(1, 5)]


_G2 = (0, 1)  # grading of the two-dimensional auxiliary factors


def _lax_two_dim(f, site: int, alpha: str, config: LatticeConfig):
    """2x2 operator-valued Lax block for one spin species.

    Off-diagonal signs absorb a diag(1,-1) auxiliary gauge so the assembled
    decomposition matches pi_mu(R) identically rather than up to similarity.
    """
    L = config.L
    n = number_op(site, alpha, L)
    half = 0.5 * identity_op(L)
    k = config.phase_index(site)
    import cmath

    phi = config.phi_up if alpha == UP else config.phi_dn
    ph = cmath.exp(1j * phi * k)
    diag = f * (n - half)
    finv = 1.0 / f
    return [
        [diag - 0.5 * finv * identity_op(L), -ph * creator(site, alpha, L)],
        [(1.0 / ph) * annihilator(site, alpha, L), diag + 0.5 * finv * identity_op(L)],
    ]


def _tensor2x2(A, B):
    """Graded tensor of two 2x2 operator-valued matrices with the sign rule
    (-1)^(deg(row of A) * entry degree of B)."""
    out = [[None] * 4 for _ in range(4)]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    sgn = -1.0 if (_G2[a] & (_G2[c] ^ _G2[d])) else 1.0
                    out[2 * a + c][2 * b + d] = sgn * (A[a][b] @ B[c][d])
    return out


def lax_decomposition(aux_kin: SiteKinematics, config: LatticeConfig, site: int):
    """Assembled K (L_up (x) L_dn) K + P (n-1/2)(n-1/2) + Q/4 as a 4x4 array."""
    kin_i = config.kin(site)
    fac = lax_factors(aux_kin, kin_i)
    L = config.L
    lu = _lax_two_dim(fac.f, site, UP, config)
    ld = _lax_two_dim(fac.f, site, DN, config)
    core = _tensor2x2(lu, ld)
    kdiag = (fac.k_plus, fac.k_minus, fac.k_minus, fac.k_plus)
    pdiag = (fac.p_plus, fac.p_minus, fac.p_minus, fac.p_plus)
    qdiag = (fac.q_plus, fac.q_minus, fac.q_minus, fac.q_plus)
    pot = (number_op(site, UP, L) - 0.5 * identity_op(L)) @ (
        number_op(site, DN, L) - 0.5 * identity_op(L)
    )
    out = [[kdiag[a] * kdiag[b] * core[a][b] for b in range(4)] for a in range(4)]
    for a in range(4):
        out[a][a] = out[a][a] + pdiag[a] * pot + 0.25 * qdiag[a] * identity_op(L)
    return out


def lax_decomposition_residual(aux_kin: SiteKinematics, config: LatticeConfig, site: int) -> float:
    ref = lax_blocks(aux_kin, config, site)
    dec = lax_decomposition(aux_kin, config, site)
    return max((ref[a][b] - dec[a][b]).norm() for a in range(4) for b in range(4))


def lax_inverse_residual(aux_kin: SiteKinematics, config: LatticeConfig, site: int) -> float:
    """|| L(x) L(x -> 1/x-+) - id || on the extended lattice."""
    fwd = lax_extended(aux_kin, config, site)
    inv_cfg = config_from_kins(
        [k.inverted() for k in config.kins],
        config.phi_up,
        config.phi_dn,
        phase_indices=config.phase_indices,
    )
    bwd = lax_extended(aux_kin.inverted(), inv_cfg, site)
    return (fwd @ bwd - identity_op(config.L + 1)).norm()


def rll_residual(kin_mu: SiteKinematics, kin_lam: SiteKinematics, config1: LatticeConfig) -> float:
    """Fundamental commutation relation with the 16x16 R on the auxiliary legs.

    Lattice layout: [aux mu, aux lam, quantum sites...].
    """
    ext = extend_with_aux(extend_with_aux(config1, kin_lam), kin_mu)
    l_mu = identity_op(ext.L)
    l_lam = identity_op(ext.L)
    for s in range(3, ext.L + 1):
        l_mu = l_mu @ r_oscillator(ext, 1, s)
        l_lam = l_lam @ r_oscillator(ext, 2, s)
    r16 = r_matrix16(kin_mu, kin_lam).m
    import scipy.sparse as sp

    rbig = FockOp(
        ext.L,
        sp.kron(sp.csr_matrix(r16), sp.identity(fock.fock_dim(ext.L - 2), dtype=complex), format="csr"),
    )
    return (rbig @ l_mu @ l_lam - l_lam @ l_mu @ rbig).norm()


# -- symmetry identities -------------------------------------------------------


def lax_bosonic_residual(name: str, aux_kin: SiteKinematics, config: LatticeConfig, site: int) -> float:
    """[L, J_site] = [J_aux, L]  <=>  [L, J_site + J_aux] = 0."""
    from .superalgebra import local_generator

    ext = extend_with_aux(config, aux_kin)
    lax = r_oscillator(ext, 1, site + 1)
    j_q = local_generator(name, site + 1, ext)
    j_aux = local_generator(name, 1, ext)
    tot = j_q + j_aux
    return (lax @ tot - tot @ lax).norm()


def lax_fermionic_residual(
    alpha: str, beta: str, dagger: bool, aux_kin: SiteKinematics, config: LatticeConfig, site: int
) -> float:
    """Braided commutation of a fermionic root vector through the Lax operator:
    nu_mu L Q_i = Q_i L - L Q_mu + Q_mu L nu_i  (inverted braidings for Q^dag).
    """
    from .superalgebra import q_operator

    ext = extend_with_aux(config, aux_kin)
    lax = r_oscillator(ext, 1, site + 1)
    q_i = q_operator(site + 1, alpha, beta, dagger, ext)
    q_mu = q_operator(1, alpha, beta, dagger, ext)
    nu_mu = aux_kin.nu
    nu_i = config.kin(site).nu
    if dagger:
        nu_mu, nu_i = 1.0 / nu_mu, 1.0 / nu_i
    lhs = nu_mu * (lax @ q_i)
    rhs = q_i @ lax - lax @ q_mu + nu_i * (q_mu @ lax)
    return (lhs - rhs).norm()


def hubbard_lax_limit(aux_kin: SiteKinematics, u_quantum: float = 1e6, hbar: complex = 0.8):
    """Lax factors in the large quantum-u limit at phases pi/2.

    Returns (max |p|, max |q|, f^2 deviation, k+^2 deviation, k-^2 deviation)
    against the stated limit coefficients.
    """
    from .kinematics import site_kinematics

    kin_i = site_kinematics(u_quantum, hbar)
    fac = lax_factors(aux_kin, kin_i)
    p_size = max(abs(fac.p_plus), abs(fac.p_minus))
    q_size = max(abs(fac.q_plus), abs(fac.q_minus))
    nu = aux_kin.nu
    f2_dev = abs(fac.f**2 - (nu - 1.0) / (nu + 1.0))
    kp_dev = abs(fac.k_plus**2 - (1.0 - nu**-2))
    km_dev = abs(fac.k_minus**2 - (aux_kin.xp - aux_kin.xm) / nu)
    return p_size, q_size, f2_dev, kp_dev, km_dev

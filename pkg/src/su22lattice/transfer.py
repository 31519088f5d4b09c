"""Monodromy and transfer matrices, their symmetry relations, and
Hamiltonian extraction by dual-number differentiation.

The auxiliary space is an extra site in front of the lattice; the monodromy
is the ordered product of two-site R-matrices sharing that site and the
transfer matrix its graded trace.
"""
from __future__ import annotations

from . import fock
from .dual import Dual, DualOp
from .fock import FockOp, identity_op, shift_product, supertrace_aux
from .kinematics import (
    LatticeConfig,
    SiteKinematics,
    extend_with_aux,
    homogeneous_config,
    site_kinematics,
)
from .rmatrix import r_oscillator
from .superalgebra import local_generator, q_operator


def monodromy(aux_kin: SiteKinematics, config: LatticeConfig):
    """Ordered product R_{mu,1} ... R_{mu,L} on the auxiliary-extended lattice."""
    ext = extend_with_aux(config, aux_kin)
    out = identity_op(ext.L)
    for i in range(1, config.L + 1):
        out = out @ r_oscillator(ext, 1, i + 1)
    return out


def transfer(aux_kin: SiteKinematics, config: LatticeConfig):
    """Supertraced monodromy: an operator on the quantum lattice."""
    t = monodromy(aux_kin, config)
    if isinstance(t, DualOp):
        return DualOp(supertrace_aux(t.val), supertrace_aux(t.eps))
    return supertrace_aux(t)


def transfer_commute_residual(kin_mu, kin_lam, config) -> float:
    """Relative || [tau(u_mu), tau(u_lam)] ||."""
    t1 = transfer(kin_mu, config)
    t2 = transfer(kin_lam, config)
    return (t1 @ t2 - t2 @ t1).norm() / (t1.norm() * t2.norm())


def rtt_residual(kin_mu, kin_lam, config) -> float:
    """R_{mu lam} T_mu T_lam = T_lam T_mu R_{mu lam} on a doubly extended lattice."""
    import numpy as np
    import scipy.sparse as sp

    from .rmatrix import r_matrix16

    ext = extend_with_aux(extend_with_aux(config, kin_lam), kin_mu)
    t_mu = identity_op(ext.L)
    t_lam = identity_op(ext.L)
    for i in range(1, config.L + 1):
        t_mu = t_mu @ r_oscillator(ext, 1, i + 2)
        t_lam = t_lam @ r_oscillator(ext, 2, i + 2)
    r16 = r_matrix16(kin_mu, kin_lam).m
    rbig = FockOp(
        ext.L,
        sp.kron(sp.csr_matrix(r16), sp.identity(fock.fock_dim(config.L), dtype=complex), format="csr"),
    )
    num = (rbig @ t_mu @ t_lam - t_lam @ t_mu @ rbig).norm()
    return num / (t_mu.norm() * t_lam.norm())


def monodromy_bosonic_residual(name: str, aux_kin, config) -> float:
    """[T, J] = [pi(J_aux), T]  <=>  [T, J_quantum + J_aux] = 0."""
    ext = extend_with_aux(config, aux_kin)
    t = monodromy(aux_kin, config)
    tot = fock.zero_op(ext.L)
    for i in range(1, ext.L + 1):
        tot = tot + local_generator(name, i, ext)
    return (t @ tot - tot @ t).norm()


def _sigma_global_q(alpha, beta, dagger, config):
    from .rmatrix import sigma_image
    from .superalgebra import global_q

    return sigma_image(lambda c: global_q(alpha, beta, dagger, c), config)


def monodromy_fermionic_residual(alpha, beta, dagger, aux_kin, config) -> float:
    """nu_mu T sigma(Q) = sigma(Q) T - T Q_aux + Q_aux T nu^(L)."""
    ext = extend_with_aux(config, aux_kin)
    t = monodromy(aux_kin, config)
    sq = fock.promote_quantum(_sigma_global_q(alpha, beta, dagger, config))
    q_aux = q_operator(1, alpha, beta, dagger, ext)
    nu_mu = aux_kin.nu
    nu_L = config.braiding_prefix(config.L + 1)
    if dagger:
        nu_mu, nu_L = 1.0 / nu_mu, 1.0 / nu_L
    lhs = nu_mu * (t @ sq)
    rhs = sq @ t - t @ q_aux + nu_L * (q_aux @ t)
    return (lhs - rhs).norm()


def twisted_fermionic_residual(alpha, beta, dagger, aux_kin, config) -> float:
    """nu_mu tau sigma(Q) - sigma(Q) tau + (1 - nu^(L)) Str(Q_aux T) = 0."""
    ext = extend_with_aux(config, aux_kin)
    t_ext = monodromy(aux_kin, config)
    tau = supertrace_aux(t_ext)
    sq = _sigma_global_q(alpha, beta, dagger, config)
    q_aux = q_operator(1, alpha, beta, dagger, ext)
    twisted = supertrace_aux(q_aux @ t_ext)
    nu_mu = aux_kin.nu
    nu_L = config.braiding_prefix(config.L + 1)
    if dagger:
        nu_mu, nu_L = 1.0 / nu_mu, 1.0 / nu_L
    res = nu_mu * (tau @ sq) - sq @ tau + (1.0 - nu_L) * twisted
    return res.norm()


# -- Hamiltonian extraction -----------------------------------------------------


def hamiltonian_prefactor(kin: SiteKinematics):
    xp, xm = kin.xp, kin.xm
    return (
        kin.hbar
        * (xp - 1.0 / xp)
        * (xm - 1.0 / xm)
        / ((xp + xm) * (1.0 - 1.0 / (xp * xm)))
    )


def hamiltonian_from_transfer(u, hbar, L, phi_up=0.0, phi_dn=0.0, variant="general"):
    """Hamiltonian from the u_mu-derivative of the transfer matrix at the
    homogeneous point, normalized by the inverse shift and the closed-form
    prefactor."""
    config = homogeneous_config(L, u, hbar, phi_up, phi_dn, variant)
    aux = site_kinematics(Dual(u, 1.0), hbar, variant)
    tau = transfer(aux, config)
    shift_inv = fock.invert_unitary(shift_product(config))
    pref = hamiltonian_prefactor(config.kin(1))
    return pref * (shift_inv @ tau.eps)


def transfer_derivative_fd(u, hbar, L, phi_up=0.0, phi_dn=0.0, step=1e-5):
    """Central finite-difference derivative of tau, Richardson-refined."""
    config = homogeneous_config(L, u, hbar, phi_up, phi_dn)

    def tau_at(du):
        return transfer(site_kinematics(u + du, hbar), config)

    d1 = (1.0 / (2 * step)) * (tau_at(step) - tau_at(-step))
    d2 = (1.0 / step) * (tau_at(step / 2) - tau_at(-step / 2))
    return (4.0 / 3.0) * d2 - (1.0 / 3.0) * d1


def extracted_density(u, hbar, config: LatticeConfig, i: int, j: int):
    """Closed-form density route: prefactor * R_ji(u,u) * d_i R_ij(u,u)."""
    from .kinematics import config_from_kins

    kin_dual = site_kinematics(Dual(u, 1.0), hbar)
    kin_plain = site_kinematics(u, hbar)
    kins = list(config.kins)
    kins[i - 1] = kin_dual
    kins[j - 1] = kin_plain
    cfg_dual = config_from_kins(
        kins, config.phi_up, config.phi_dn, phase_indices=config.phase_indices
    )
    r_ij = r_oscillator(cfg_dual, i, j)
    cfg_plain = config_from_kins(
        [kin_plain if s in (i, j) else k for s, k in enumerate(config.kins, start=1)],
        config.phi_up,
        config.phi_dn,
        phase_indices=config.phase_indices,
    )
    r_ji = r_oscillator(cfg_plain, j, i)
    pref = hamiltonian_prefactor(kin_plain)
    return pref * (r_ji @ r_ij.eps)

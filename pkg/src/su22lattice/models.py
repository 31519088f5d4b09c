"""Closed-form Hamiltonian densities of the general model and its named
specializations, Heisenberg densities, the Hubbard Hamiltonians in both
gauges, and the extended symmetry operators of the A and B models.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from .fock import DN, UP, FockOp, annihilator, creator, identity_op, number_op, zero_op
from .kinematics import (
    LatticeConfig,
    SiteKinematics,
    config_from_kins,
    from_xpm,
    homogeneous_config,
)
from .superalgebra import (
    SPIN_PAIRS,
    global_generator,
    global_q,
    local_generator,
    spin_charge_operator,
)
from .yangian import secret_symmetry, yangian_operator

GENERAL, A_MODEL, B_MODEL, EKS_MODEL, HUBBARD = "general", "A", "B", "EKS", "hubbard"


@dataclass
class HamiltonianCoefficients:
    """Density coefficients: kinetic weight, exchange weight, the two
    occupation weights inside the kinetic term, the potential coefficient
    and the additive constant."""

    h1: complex
    h2: complex
    h_plus: complex
    h_minus: complex
    v_coef: complex
    constant: complex


def coefficients_from_kinematics(kin: SiteKinematics) -> HamiltonianCoefficients:
    xp, xm, nu = kin.xp, kin.xm, kin.nu
    h1 = (xp - xm) / (xp + xm)
    h2 = (1.0 - xm * xp) / (xp + xm)
    hp = 1.0 + (1.0 / xp - xp) / (nu - 1.0 / nu)
    hm = 1.0 + (1.0 / xm - xm) / (1.0 / nu - nu)
    return HamiltonianCoefficients(
        h1, h2, hp, hm, h2 + kin.hbar / (2.0 * h1), kin.hbar / (4.0 * h1)
    )


def h_coefficients(variant: str, *, kin: SiteKinematics | None = None, theta=None) -> HamiltonianCoefficients:
    """Density coefficients per model, after the stated normalizations.

    A: overall sign normalization relative to the general formulas (the two
    routes give opposite overall Hamiltonian signs; symmetry statements are
    insensitive).  B: multiplied by (x+ + x-).  EKS: multiplied by 1/u, with
    the finite products h1*h+- quoted in place of the diverging h+-.
    """
    if variant == GENERAL:
        return coefficients_from_kinematics(kin)
    if variant == A_MODEL:
        ct, st = cmath.cos(theta), cmath.sin(theta)
        hbar = 4.0 * ct
        h1 = 1j * ct / st
        h2 = 1j / st
        return HamiltonianCoefficients(
            h1, h2, 1.0 + st / ct, 1.0 - st / ct, h2 + hbar / (2.0 * h1), hbar / (4.0 * h1)
        )
    if variant == B_MODEL:
        ct, st = cmath.cos(theta), cmath.sin(theta)
        h1 = 2j * ct
        h2 = st * st
        hpm = -2.0 * cmath.sin(theta / 2.0) ** 4 / ct
        return HamiltonianCoefficients(h1, h2, hpm, hpm, h2, 0.0)
    if variant == EKS_MODEL:
        # u-normalized values; h1*h+- are the surviving kinetic weights
        return HamiltonianCoefficients(0.0, -0.5, -0.5, 0.5, 0.5, 0.5)
    if variant == HUBBARD:
        return HamiltonianCoefficients(1.0, 0.0, 0.0, 0.0, None, None)
    raise ValueError(f"unknown model variant {variant!r}")


# -- density building blocks ---------------------------------------------------


def _hop_phase(config, i, j, alpha):
    phi = config.phi_up if alpha == UP else config.phi_dn
    return cmath.exp(1j * phi * (config.phase_index(i) - config.phase_index(j)))


def kinetic_density(i: int, j: int, config: LatticeConfig, hp, hm) -> FockOp:
    """Occupation-modulated hopping between two sites."""
    L = config.L
    one = identity_op(L)
    out = zero_op(L)
    for alpha, beta in ((UP, DN), (DN, UP)):
        nb_i = number_op(i, beta, L)
        nb_j = number_op(j, beta, L)
        corr = (hp + hm) * ((nb_i - one) @ (nb_j - one))
        n_p = one - hp * (nb_i + nb_j - one) - corr
        n_m = one - hm * (nb_i + nb_j - one) - corr
        ph = _hop_phase(config, i, j, alpha)
        out = out + ph * (creator(i, alpha, L) @ annihilator(j, alpha, L)) @ n_p
        out = out + (1.0 / ph) * (annihilator(i, alpha, L) @ creator(j, alpha, L)) @ n_m
    return out


def eks_kinetic_density(i: int, j: int, config: LatticeConfig) -> FockOp:
    """Kinetic term with the surviving occupation factors +-1/2(n+n-1)."""
    L = config.L
    one = identity_op(L)
    out = zero_op(L)
    for alpha, beta in ((UP, DN), (DN, UP)):
        half_sum = 0.5 * (number_op(i, beta, L) + number_op(j, beta, L) - one)
        ph = _hop_phase(config, i, j, alpha)
        out = out + ph * (creator(i, alpha, L) @ annihilator(j, alpha, L)) @ half_sum
        out = out - (1.0 / ph) * (annihilator(i, alpha, L) @ creator(j, alpha, L)) @ half_sum
    return out


def potential_density(i: int, j: int, L: int) -> FockOp:
    one = identity_op(L)
    out = zero_op(L)
    for s in (i, j):
        out = out + (number_op(s, UP, L) - 0.5 * one) @ (number_op(s, DN, L) - 0.5 * one)
    return out


def site_potential(i: int, L: int) -> FockOp:
    one = identity_op(L)
    return (number_op(i, UP, L) - 0.5 * one) @ (number_op(i, DN, L) - 0.5 * one)


def heisenberg_density(kind: str, i: int, j: int, config: LatticeConfig) -> FockOp:
    """Spin-spin or charge-charge interaction of two sites."""
    if i == j:
        raise ValueError("two distinct sites required")
    out = zero_op(config.L)
    for a in (1, 2, 3):
        out = out + spin_charge_operator(kind, i, a, config) @ spin_charge_operator(
            kind, j, a, config
        )
    return out


def exchange_density(i: int, j: int, config: LatticeConfig) -> FockOp:
    """Difference of charge and spin Heisenberg densities."""
    return heisenberg_density("ch", i, j, config) - heisenberg_density("sp", i, j, config)


def general_density(i: int, j: int, config: LatticeConfig, include_constant: bool = True) -> FockOp:
    """Closed-form nearest-pair Hamiltonian density of the general model."""
    c = coefficients_from_kinematics(config.kin(i))
    out = (
        c.h1 * kinetic_density(i, j, config, c.h_plus, c.h_minus)
        - 2.0 * c.h2 * exchange_density(i, j, config)
        - c.v_coef * potential_density(i, j, config.L)
    )
    if include_constant:
        out = out + c.constant * identity_op(config.L)
    return out


def model_density(variant: str, i: int, j: int, config: LatticeConfig, theta=None,
                  include_constant: bool = True) -> FockOp:
    """Density of a named specialization in its native phase convention."""
    if variant == GENERAL:
        return general_density(i, j, config, include_constant)
    c = h_coefficients(variant, theta=theta)
    if variant == EKS_MODEL:
        out = eks_kinetic_density(i, j, config) + exchange_density(i, j, config)
        out = out - 0.5 * potential_density(i, j, config.L)
        if include_constant:
            out = out + 0.5 * identity_op(config.L)
        return out
    if variant == HUBBARD:
        out = kinetic_density(i, j, config, 0.0, 0.0) - 0.5 * config.hbar * potential_density(
            i, j, config.L
        )
        if include_constant:
            out = out + 0.25 * config.hbar * identity_op(config.L)
        return out
    out = (
        c.h1 * kinetic_density(i, j, config, c.h_plus, c.h_minus)
        - 2.0 * c.h2 * exchange_density(i, j, config)
        - c.v_coef * potential_density(i, j, config.L)
    )
    if include_constant:
        out = out + c.constant * identity_op(config.L)
    return out


def _bond_list(L: int, bc: str):
    bonds = [(i, i + 1) for i in range(1, L)]
    if bc == "periodic":
        bonds.append((L, 1))
    elif bc != "open":
        raise ValueError("bc must be 'open' or 'periodic'")
    return bonds


def model_hamiltonian(variant: str, config: LatticeConfig, theta=None,
                      include_constant: bool = True) -> FockOp:
    out = zero_op(config.L)
    for i, j in _bond_list(config.L, config.bc):
        out = out + model_density(variant, i, j, config, theta, include_constant)
    return out


# -- Hubbard Hamiltonian ---------------------------------------------------------


def hubbard_hamiltonian(L: int, hbar, bc: str = "open", gauge: str = "phased") -> FockOp:
    """Hubbard Hamiltonian in the phased-density gauge or the plain form
    with the explicit imaginary hopping prefactor and per-site potential."""
    if gauge == "phased":
        cfg = homogeneous_config(L, 0.0, hbar, phi_up=cmath.pi / 2, phi_dn=cmath.pi / 2, bc=bc)
        out = zero_op(L)
        for i, j in _bond_list(L, bc):
            out = out + kinetic_density(i, j, cfg, 0.0, 0.0) - 0.5 * hbar * potential_density(
                i, j, L
            )
        return out
    if gauge == "section1":
        out = zero_op(L)
        for i, j in _bond_list(L, bc):
            for alpha in (UP, DN):
                hop = creator(i, alpha, L) @ annihilator(j, alpha, L)
                hop = hop + creator(j, alpha, L) @ annihilator(i, alpha, L)
                out = out + 1j * hop
        for i in range(1, L + 1):
            out = out + hbar * site_potential(i, L)
        return out
    raise ValueError("gauge must be 'phased' or 'section1'")


def hubbard_gauge_map(L: int) -> FockOp:
    """Diagonal gauge unitary c_j -> i^j c_j."""
    diag = identity_op(L)
    from .fock import parity_vector
    import numpy as np
    import scipy.sparse as sp

    d = 4**L
    phases = np.ones(d, dtype=complex)
    for n in range(d):
        tot = 0
        for site in range(1, L + 1):
            s = (n >> (2 * (L - site))) & 3
            occ = (s >> 1) + (s & 1)
            tot += site * occ
        phases[n] = (-1j) ** (tot % 4)
    return FockOp(L, sp.diags(phases, format="csr"))


# -- A model ---------------------------------------------------------------------


def a_model_config(theta, L: int, bc: str = "open") -> LatticeConfig:
    kin = from_xpm(cmath.exp(1j * theta), -cmath.exp(-1j * theta))
    return config_from_kins([kin] * L, 0.0, 0.0, bc=bc)


def a_model_hamiltonian(theta, L: int, bc: str = "open", include_constant=True) -> FockOp:
    return model_hamiltonian(A_MODEL, a_model_config(theta, L, bc), theta, include_constant)


def a_model_coefficients(theta):
    """The two fermionic-dressing prefactors of the extended symmetries."""
    return 2j * cmath.sin(theta), 2j * (1.0 + cmath.cos(theta) ** 2) / cmath.sin(theta)


def a_model_symmetries(theta, L: int) -> dict[str, FockOp]:
    """Yangian-type operators commuting with the A-model Hamiltonian (up to
    chain ends on open lattices)."""
    cfg = a_model_config(theta, L)
    c_j, c_b = a_model_coefficients(theta)
    out = {}
    for fam in ("E", "F", "H"):
        for a in (1, 3):
            op = yangian_operator(fam, a, cfg)
            J = global_generator(f"{fam}{a}", cfg)
            for alpha, beta in SPIN_PAIRS:
                q = global_q(alpha, beta, False, cfg)
                qd = global_q(alpha, beta, True, cfg)
                op = op + c_j * ((q @ J - J @ q) @ qd + (qd @ J - J @ qd) @ q)
            out[f"{fam}{a}"] = op
    op = secret_symmetry(cfg)
    for alpha, beta in SPIN_PAIRS:
        q = global_q(alpha, beta, False, cfg)
        qd = global_q(alpha, beta, True, cfg)
        op = op + c_b * (q @ qd)
    out["B"] = op
    return out


# -- B model ---------------------------------------------------------------------


def b_model_config(theta, L: int, bc: str = "open") -> LatticeConfig:
    """Hamiltonian-side kinematics and phases of the B model."""
    kin = from_xpm(1j * cmath.cos(theta), -1j * cmath.cos(theta))
    return config_from_kins([kin] * L, -cmath.pi / 2, -cmath.pi / 2, bc=bc)


def b_model_hamiltonian(theta, L: int, bc: str = "open", include_constant=True) -> FockOp:
    return model_hamiltonian(B_MODEL, b_model_config(theta, L, bc), theta, include_constant)


def b_model_symmetry_config(theta, L: int, phi_up, phi_dn) -> LatticeConfig:
    """Generator-side kinematics: x+ = -x- = -i csc(theta), with the phases
    chosen per operator family."""
    kin = from_xpm(-1j / cmath.sin(theta), 1j / cmath.sin(theta))
    return config_from_kins([kin] * L, phi_up, phi_dn)


def b_model_symmetries(theta, L: int) -> dict[str, FockOp]:
    """Bosonic Yangian operators, phase-split fermionic root vectors and the
    secret symmetry evaluated at the B-model generator kinematics."""
    out = {}
    cfg = b_model_symmetry_config(theta, L, cmath.pi / 2, -cmath.pi / 2)
    for fam in ("E", "F", "H"):
        for a in (1, 3):
            out[f"{fam}{a}"] = yangian_operator(fam, a, cfg)
    cfg_diag = b_model_symmetry_config(theta, L, cmath.pi / 2, -cmath.pi / 2)
    cfg_off = b_model_symmetry_config(theta, L, -cmath.pi / 2, cmath.pi / 2)
    for alpha, beta in SPIN_PAIRS:
        c = cfg_diag if alpha == beta else cfg_off
        out[f"Q{alpha}{beta}"] = global_q(alpha, beta, False, c)
        out[f"Qdag{alpha}{beta}"] = global_q(alpha, beta, True, c)
    out["B"] = secret_symmetry(b_model_symmetry_config(theta, L, 0.0, 0.0))
    return out


# -- EKS model --------------------------------------------------------------------


def eks_limit_kinematics(hbar) -> SiteKinematics:
    """Exact limiting site data of the EKS specialization: unit braiding,
    weights (1, 0, 0, 1)."""
    return SiteKinematics(
        u=0.0,
        hbar=hbar,
        xp=0.0,
        xm=0.0,
        nu=1.0,
        gamma=cmath.sqrt(hbar),
        a=1.0,
        b=0.0,
        c=0.0,
        d=1.0,
        degenerate=False,
        variant="EKS",
    )


def eks_config(L: int, hbar, bc: str = "open") -> LatticeConfig:
    return config_from_kins([eks_limit_kinematics(hbar)] * L, 0.0, 0.0, bc=bc)


def eks_hamiltonian(L: int, hbar, bc: str = "open", include_constant=True) -> FockOp:
    return model_hamiltonian(EKS_MODEL, eks_config(L, hbar, bc), include_constant=include_constant)

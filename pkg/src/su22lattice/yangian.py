"""Yangian-level operators: bilocal Z and W combinations, the spin/charge
Yangian family, the secret symmetry, the Uglov-Korepin operators, and the
large-u specializations connecting them.
"""
from __future__ import annotations

import cmath

from . import fock
from .fock import DN, UP, FockOp, annihilator, creator, identity_op, zero_op
from .kinematics import LatticeConfig, homogeneous_config
from .superalgebra import (
    SPIN_PAIRS,
    global_generator,
    global_q,
    local_central,
    local_generator,
    q_operator,
)

_D = {1: 1.0, 3: -1.0}


def z_bilocal(i: int, j: int, config: LatticeConfig) -> FockOp:
    """Quadratic combination of the two bosonic su(2) copies across two sites."""
    if not i < j:
        raise ValueError("bilocal operators require i < j")
    out = zero_op(config.L)
    for a in (1, 3):
        E_i = local_generator(f"E{a}", i, config)
        F_i = local_generator(f"F{a}", i, config)
        H_i = local_generator(f"H{a}", i, config)
        E_j = local_generator(f"E{a}", j, config)
        F_j = local_generator(f"F{a}", j, config)
        H_j = local_generator(f"H{a}", j, config)
        out = out + _D[a] * (E_i @ F_j + F_i @ E_j + 0.5 * (H_i @ H_j))
    return out


def w_bilocal(sign: int, i: int, j: int, config: LatticeConfig) -> FockOp:
    """Braided fermionic bilinears W^+- across an ordered site pair."""
    if not i < j:
        raise ValueError("bilocal operators require i < j")
    ratio = config.braiding_prefix(j) / config.braiding_prefix(i)
    out = zero_op(config.L)
    for alpha, beta in SPIN_PAIRS:
        qd_i = q_operator(i, alpha, beta, True, config)
        q_j = q_operator(j, alpha, beta, False, config)
        q_i = q_operator(i, alpha, beta, False, config)
        qd_j = q_operator(j, alpha, beta, True, config)
        out = out + ratio * (qd_i @ q_j) + float(sign) * (1.0 / ratio) * (q_i @ qd_j)
    return out


def yangian_operator(family: str, a: int, config: LatticeConfig) -> FockOp:
    """Spin (a=3) and charge (a=1) Yangian operators for family E, F or H."""
    if family not in ("E", "F", "H") or a not in (1, 3):
        raise ValueError("family must be E/F/H with label 1 or 3")
    name = f"{family}{a}"
    hbar = config.hbar
    out = zero_op(config.L)
    for j in range(1, config.L + 1):
        out = out + config.kin(j).u * local_generator(name, j, config)
    for i in range(1, config.L + 1):
        for j in range(i + 1, config.L + 1):
            J_i = local_generator(name, i, config)
            zw = z_bilocal(i, j, config) - w_bilocal(-1, i, j, config)
            out = out - 0.5 * hbar * (J_i @ zw - zw @ J_i)
    return out


def secret_symmetry(config: LatticeConfig) -> FockOp:
    """Extra Yangian-level generator with no Lie-superalgebra counterpart."""
    out = zero_op(config.L)
    for j in range(1, config.L + 1):
        kin = config.kin(j)
        den = kin.a * kin.d + kin.b * kin.c
        if abs(den) < 1e-13:
            raise ValueError(f"vanishing central combination ad+bc at site {j}")
        H3 = local_generator("H3", j, config)
        out = out + (kin.u / den) * (H3 @ H3)
    hbar = config.hbar
    for i in range(1, config.L + 1):
        for j in range(i + 1, config.L + 1):
            out = out - 0.5 * hbar * w_bilocal(+1, i, j, config)
    return out


# -- hopping bilinears and Uglov-Korepin operators ---------------------------


def c_hop(i: int, j: int, config: LatticeConfig) -> FockOp:
    """Phase-dressed symmetric hopping bilinear between two sites."""
    L = config.L
    ki, kj = config.phase_index(i), config.phase_index(j)
    out = zero_op(L)
    for alpha in (UP, DN):
        phi = config.phi_up if alpha == UP else config.phi_dn
        fwd = cmath.exp(1j * phi * (ki - kj))
        out = out + fwd * (creator(i, alpha, L) @ annihilator(j, alpha, L))
        out = out + (1.0 / fwd) * (annihilator(i, alpha, L) @ creator(j, alpha, L))
    return out


def uk_shifted(family: str, i: int, shift: int, config: LatticeConfig) -> FockOp:
    """Shifted spin bilinears of the non-local lattice spin symmetry."""
    L = config.L
    j = i + shift
    if not (1 <= i <= L and 1 <= j <= L):
        raise ValueError("shifted bilinear leaves the lattice")
    ki, kj = config.phase_index(i), config.phase_index(j)
    pu, pd = config.phi_up, config.phi_dn
    if family == "E":
        return cmath.exp(1j * (pu * ki - pd * kj)) * (creator(i, UP, L) @ annihilator(j, DN, L))
    if family == "F":
        return cmath.exp(1j * (pd * ki - pu * kj)) * (creator(i, DN, L) @ annihilator(j, UP, L))
    if family == "H":
        # conjugate phases relative to the E/F rows: required by the bracket
        # identity [J_i3, C_ij] = J^(j-i) + J^(i-j) and by the large-u limit
        return cmath.exp(-1j * pd * (kj - ki)) * (creator(i, DN, L) @ annihilator(j, DN, L)) - cmath.exp(
            -1j * pu * (kj - ki)
        ) * (creator(i, UP, L) @ annihilator(j, UP, L))
    raise ValueError("family must be E, F or H")


def uk_operator(family: str, config: LatticeConfig) -> FockOp:
    """Non-local lattice spin-Yangian operator (homogeneous phases pi/2)."""
    L = config.L
    if L < 2:
        raise ValueError("needs at least two sites")
    out = zero_op(L)
    for i in range(1, L):
        out = out + uk_shifted(family, i, +1, config) + uk_shifted(family, i + 1, -1, config)
    hbar = config.hbar
    name = f"{family}3"
    for i in range(1, L + 1):
        for j in range(i + 1, L + 1):
            J_i = local_generator(name, i, config)
            z = z_bilocal(i, j, config)
            out = out + 0.5 * hbar * (J_i @ z - z @ J_i)
    return out


# -- large-u leading forms ----------------------------------------------------


def q_infinity(i: int, alpha: str, beta: str, dagger: bool, config: LatticeConfig) -> FockOp:
    """Leading large-u form of the fermionic root vectors (labels as in the
    bracket construction: the creator/annihilator content is what matters
    for the paired sums)."""
    L = config.L
    k = config.phase_index(i)
    pu, pd = config.phi_up, config.phi_dn
    u = config.kin(i).u
    s = 1.0 / cmath.sqrt(config.hbar)
    key = (alpha, beta, dagger)
    table = {
        (UP, UP, False): (u * s, -pu, annihilator(i, UP, L)),
        (UP, UP, True): (s, pu, creator(i, UP, L)),
        (UP, DN, False): (-u * s, -pd, annihilator(i, DN, L)),
        (UP, DN, True): (-s, pd, creator(i, DN, L)),
        (DN, UP, False): (u * s, pd, creator(i, DN, L)),
        (DN, UP, True): (s, -pd, annihilator(i, DN, L)),
        (DN, DN, False): (-u * s, pu, creator(i, UP, L)),
        (DN, DN, True): (-s, -pu, annihilator(i, UP, L)),
    }
    coef, phi, op = table[key]
    return coef * cmath.exp(1j * phi * k) * op


def w_infinity(sign: int, i: int, j: int, config: LatticeConfig) -> FockOp:
    """Leading large-u form of W^+-: hopping bilinears with power weights."""
    u = config.kin(i).u
    return (1.0 / config.hbar) * (
        u ** (j - i + 1) + float(sign) * u ** (i - j + 1)
    ) * c_hop(i, j, config)


def sum_qqdag_infinity(config: LatticeConfig) -> FockOp:
    """(1/hbar) sum_ij u^(i-j+1) C_ij: the leading form of sum Q Q^dag."""
    u = config.kin(1).u
    out = zero_op(config.L)
    for i in range(1, config.L + 1):
        for j in range(1, config.L + 1):
            if i == j:
                out = out + (2.0 * u / config.hbar) * identity_op(config.L)
            else:
                out = out + (u ** (i - j + 1) / config.hbar) * c_hop_half(i, j, config)
    return out


def c_hop_half(i: int, j: int, config: LatticeConfig) -> FockOp:
    """C_ij for i != j (C_ii = 2 handled by the caller)."""
    return c_hop(i, j, config)


# -- specializations -----------------------------------------------------------


def lim_uk_candidate(family: str, u: float, L: int, hbar: complex) -> FockOp:
    """Finite-u combination whose limit is minus the non-local spin operator."""
    cfg = homogeneous_config(L, u, hbar, phi_up=cmath.pi / 2, phi_dn=cmath.pi / 2)
    out = yangian_operator(family, 3, cfg)
    J3 = global_generator(f"{family}3", cfg)
    for alpha, beta in SPIN_PAIRS:
        q = global_q(alpha, beta, False, cfg)
        qd = global_q(alpha, beta, True, cfg)
        out = out - 0.5 * hbar * ((J3 @ q - q @ J3) @ qd)
    return out


def lim_h_candidate(u: float, L: int, hbar: complex) -> FockOp:
    """Finite-u combination whose limit is minus the Hubbard Hamiltonian."""
    cfg = homogeneous_config(L, u, hbar, phi_up=cmath.pi / 2, phi_dn=cmath.pi / 2)
    usig = fock.parity_reversal_unitary(cfg)
    uinv = fock.invert_unitary(usig)
    inner = secret_symmetry(cfg)
    for alpha, beta in SPIN_PAIRS:
        q = global_q(alpha, beta, False, cfg)
        qd = global_q(alpha, beta, True, cfg)
        inner = inner - 0.5 * hbar * (q @ qd)
    out = usig @ inner @ uinv
    return out + (L * (u - hbar / 4.0)) * identity_op(L)


def richardson(op_at_u, op_at_2u):
    """First-order 1/u extrapolation from two operator evaluations."""
    return 2.0 * op_at_2u - op_at_u

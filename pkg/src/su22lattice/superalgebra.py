"""Local and global (braided) oscillator representations of the centrally
extended su(2|2) superalgebra, its defining relations, the spin/charge su(2)
operators and the partial particle-hole transformation.

Label conventions: nodes 1 and 3 are bosonic (charge and spin su(2) copies),
node 2 is the fermionic root.  Global fermionic operators and central charges
carry the braiding prefix products nu^(i-1).
"""
from __future__ import annotations

import cmath

import numpy as np

from . import fock
from .fock import DN, UP, FockOp, annihilator, creator, identity_op, number_op, zero_op
from .kinematics import LatticeConfig, ppht_config

CARTAN_MATRIX = np.array([[2, -1, 0], [-1, 0, 1], [0, 1, -2]], dtype=np.int64)
CARTAN_D = np.array([1, -1, -1], dtype=np.int64)

BOSONIC_NAMES = ("E1", "F1", "H1", "E3", "F3", "H3", "H2", "C")
CARTAN_NAMES = ("H1", "H2", "H3")


def op_degree(name: str) -> int:
    return 1 if name in ("E2", "F2") else 0


def graded_comm(A: FockOp, B: FockOp, degA: int, degB: int) -> FockOp:
    """[A, B} = AB - (-1)^(degA degB) BA for homogeneous operators."""
    if degA & degB & 1:
        return A @ B + B @ A
    return A @ B - B @ A


def _phase(config, i, coef_up, coef_dn) -> complex:
    k = config.phase_index(i)
    return cmath.exp(1j * k * (coef_up * config.phi_up + coef_dn * config.phi_dn))


def local_generator(name: str, i: int, config: LatticeConfig) -> FockOp:
    """One-site representation of a superalgebra generator."""
    L = config.L
    kin = config.kin(i)
    if name == "E1":
        return _phase(config, i, 1, 1) * (creator(i, UP, L) @ creator(i, DN, L))
    if name == "F1":
        return _phase(config, i, -1, -1) * (annihilator(i, DN, L) @ annihilator(i, UP, L))
    if name == "E3":
        return _phase(config, i, 1, -1) * (creator(i, UP, L) @ annihilator(i, DN, L))
    if name == "F3":
        return _phase(config, i, -1, 1) * (creator(i, DN, L) @ annihilator(i, UP, L))
    if name == "H1":
        return number_op(i, UP, L) + number_op(i, DN, L) - identity_op(L)
    if name == "H3":
        return number_op(i, DN, L) - number_op(i, UP, L)
    if name == "E2":
        cu = annihilator(i, UP, L)
        return _phase(config, i, -1, 0) * (
            (kin.a - kin.b) * (cu @ number_op(i, DN, L)) + kin.b * cu
        )
    if name == "F2":
        cdu = creator(i, UP, L)
        return _phase(config, i, 1, 0) * (
            (kin.d - kin.c) * (cdu @ number_op(i, DN, L)) + kin.c * cdu
        )
    if name == "H2":
        return (
            -local_central("C", i, config) * identity_op(L)
            - 0.5 * local_generator("H1", i, config)
            - 0.5 * local_generator("H3", i, config)
        )
    if name in ("P", "K", "C"):
        return local_central(name, i, config) * identity_op(L)
    raise ValueError(f"unknown generator {name!r}")


def local_central(name: str, i: int, config: LatticeConfig) -> complex:
    kin = config.kin(i)
    if name == "P":
        return kin.cP
    if name == "K":
        return kin.cK
    if name == "C":
        return kin.cC
    raise ValueError(f"unknown central element {name!r}")


def global_central(name: str, config: LatticeConfig) -> complex:
    out = 0j
    for i in range(1, config.L + 1):
        nu = config.braiding_prefix(i)
        if name == "P":
            out += nu**2 * local_central("P", i, config)
        elif name == "K":
            out += nu**-2 * local_central("K", i, config)
        elif name == "C":
            out += local_central("C", i, config)
        else:
            raise ValueError(f"unknown central element {name!r}")
    return out


def global_generator(name: str, config: LatticeConfig) -> FockOp:
    """Braided sum of local generators over the lattice."""
    if name in ("P", "K", "C"):
        return global_central(name, config) * identity_op(config.L)
    out = zero_op(config.L)
    for i in range(1, config.L + 1):
        nu = config.braiding_prefix(i)
        if name == "E2":
            w = nu
        elif name == "F2":
            w = 1.0 / nu
        else:
            w = 1.0
        out = out + w * local_generator(name, i, config)
    return out


# -- fermionic root vectors -------------------------------------------------


def q_operator(i: int, alpha: str, beta: str, dagger: bool, config: LatticeConfig) -> FockOp:
    """Local fermionic root-vector operators Q / Q^dag indexed by two spins.

    The nested double bracket resolves the (dn, dn) entry through the
    (up, dn) operator; the alternative reading fails the intertwining test.
    """

    def g(name):
        return local_generator(name, i, config)

    def comm(A, B):
        return A @ B - B @ A

    if not dagger:
        if (alpha, beta) == (UP, UP):
            return g("E2")
        if (alpha, beta) == (DN, UP):
            return comm(g("E2"), g("E1"))
        if (alpha, beta) == (UP, DN):
            return comm(g("E3"), g("E2"))
        if (alpha, beta) == (DN, DN):
            return comm(g("E1"), comm(g("E3"), g("E2")))
    else:
        if (alpha, beta) == (UP, UP):
            return g("F2")
        if (alpha, beta) == (DN, UP):
            return comm(g("F1"), g("F2"))
        if (alpha, beta) == (UP, DN):
            return comm(g("F2"), g("F3"))
        if (alpha, beta) == (DN, DN):
            return comm(comm(g("F2"), g("F3")), g("F1"))
    raise ValueError(f"bad spin labels ({alpha!r}, {beta!r})")


SPIN_PAIRS = ((UP, UP), (DN, UP), (UP, DN), (DN, DN))


def global_q(alpha: str, beta: str, dagger: bool, config: LatticeConfig) -> FockOp:
    out = zero_op(config.L)
    for i in range(1, config.L + 1):
        nu = config.braiding_prefix(i)
        w = 1.0 / nu if dagger else nu
        out = out + w * q_operator(i, alpha, beta, dagger, config)
    return out


# -- spin and charge su(2) ----------------------------------------------------


def spin_charge_operator(kind: str, i: int, a: int, config: LatticeConfig) -> FockOp:
    """su(2) generators built from the label-3 (spin) / label-1 (charge) copies."""
    lab = "3" if kind == "sp" else "1"
    if kind not in ("sp", "ch"):
        raise ValueError("kind must be 'sp' or 'ch'")
    E = local_generator("E" + lab, i, config)
    F = local_generator("F" + lab, i, config)
    if a == 1:
        return 0.5j * (F - E)
    if a == 2:
        return 0.5 * (F + E)
    if a == 3:
        H = local_generator("H" + lab, i, config)
        return 0.5 * H if kind == "sp" else -0.5 * H
    raise ValueError("component must be 1, 2 or 3")


def total_spin_charge(kind: str, a: int, config: LatticeConfig) -> FockOp:
    out = zero_op(config.L)
    for i in range(1, config.L + 1):
        out = out + spin_charge_operator(kind, i, a, config)
    return out


# -- defining relations -------------------------------------------------------


def defining_relation_residuals(config: LatticeConfig, scope: str = "global", site: int = 1):
    """Frobenius residuals of all su(2|2) defining relations.

    scope = "local" uses the one-site operators at `site`; "global" the
    braided lattice operators.
    """

    if scope == "local":
        def g(name):
            return local_generator(name, site, config)

        cen = {n: local_central(n, site, config) for n in ("P", "K")}
    elif scope == "global":
        def g(name):
            return global_generator(name, config)

        cen = {n: global_central(n, config) for n in ("P", "K")}
    else:
        raise ValueError("scope must be 'local' or 'global'")

    E = {a: g(f"E{a}") for a in (1, 2, 3)}
    F = {a: g(f"F{a}") for a in (1, 2, 3)}
    H = {a: g(f"H{a}") for a in (1, 2, 3)}
    one = identity_op(config.L)
    res = {}

    def deg_E(a):
        return 1 if a == 2 else 0

    for a in (1, 2, 3):
        for b in (1, 2, 3):
            A = CARTAN_MATRIX[a - 1, b - 1]
            res[f"[H{a},E{b}]-A·E"] = (
                graded_comm(H[a], E[b], 0, deg_E(b)) - float(A) * E[b]
            ).norm()
            res[f"[H{a},F{b}]+A·F"] = (
                graded_comm(H[a], F[b], 0, deg_E(b)) + float(A) * F[b]
            ).norm()
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            rhs = float(CARTAN_D[a - 1]) * H[a] if a == b else zero_op(config.L)
            res[f"[E{a},F{b}}}-dDH"] = (
                graded_comm(E[a], F[b], deg_E(a), deg_E(b)) - rhs
            ).norm()
    res["[E1,E3]"] = graded_comm(E[1], E[3], 0, 0).norm()
    res["[F1,F3]"] = graded_comm(F[1], F[3], 0, 0).norm()
    for c in (1, 3):
        res[f"serre E{c}"] = graded_comm(E[c], graded_comm(E[c], E[2], 0, 1), 0, 1).norm()
        res[f"serre F{c}"] = graded_comm(F[c], graded_comm(F[c], F[2], 0, 1), 0, 1).norm()
    EE = graded_comm(
        graded_comm(E[1], E[2], 0, 1), graded_comm(E[3], E[2], 0, 1), 1, 1
    )
    FF = graded_comm(
        graded_comm(F[1], F[2], 0, 1), graded_comm(F[3], F[2], 0, 1), 1, 1
    )
    res["[[E1,E2],[E3,E2]]-P"] = (EE - cen["P"] * one).norm()
    res["[[F1,F2],[F3,F2]]-K"] = (FF - cen["K"] * one).norm()
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            if a < b:
                res[f"[H{a},H{b}]"] = graded_comm(H[a], H[b], 0, 0).norm()
    return res


# -- partial particle-hole transformation -------------------------------------


def ppht_apply(op_builder, config: LatticeConfig) -> FockOp:
    """Image of a constructor under the partial particle-hole map.

    The oscillator side (c_dn -> -c_dn^dag) is a unitary conjugation; the
    parameter side rebuilds the operator on the inverted configuration.
    """
    cfg_t = ppht_config(config)
    w = fock.particle_hole_dn_unitary(config.L)
    return w @ op_builder(cfg_t) @ fock.invert_unitary(w)


def ppht_mapping_residuals(config: LatticeConfig, site: int = 1):
    """Residuals of the stated generator mapping under the particle-hole map.

    The fermionic entries acquire +-i depending on the square-root branches
    of the transformed weights; the branch sign is resolved from E2 and then
    required to be consistent for F2.
    """

    def build(name):
        def b(cfg):
            return local_generator(name, site, cfg)

        return b

    res = {}
    for src, dst, sgn in (
        ("E1", "E3", -1.0),
        ("E3", "E1", -1.0),
        ("F1", "F3", -1.0),
        ("F3", "F1", -1.0),
        ("H1", "H3", -1.0),
        ("H3", "H1", -1.0),
    ):
        img = ppht_apply(build(src), config)
        res[f"{src}->-{dst}"] = (img - sgn * local_generator(dst, site, config)).norm()
    for name in ("P", "K", "C"):
        before = local_central(name, site, config)
        after = local_central(name, site, ppht_config(config))
        res[f"{name}->-{name}"] = abs(after + before)
    img = ppht_apply(build("E2"), config)
    tgt = local_generator("E2", site, config)
    branch = 1.0
    if (img - 1j * tgt).norm() > (img + 1j * tgt).norm():
        branch = -1.0
    res["E2->iE2"] = (img - branch * 1j * tgt).norm()
    img = ppht_apply(build("F2"), config)
    tgt = local_generator("F2", site, config)
    res["F2->iF2"] = (img - branch * 1j * tgt).norm()
    return res, branch

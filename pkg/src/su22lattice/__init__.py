"""Numerical workbench for centrally extended su(2|2) lattice models."""

from .fock import (
    FockOp,
    GradedMatrix,
    annihilator,
    basis_state,
    creator,
    dump_coo,
    fock_dim,
    graded_permutation,
    graded_tensor,
    graded_unit,
    identity_op,
    matrix_unit,
    number_op,
    parity_reversal,
    parity_reversal_unitary,
    supertrace,
    support_sites,
    two_site_permutation,
    vacuum_state,
    zero_op,
)
from .kinematics import (
    LatticeConfig,
    SiteKinematics,
    config_from_kins,
    config_from_us,
    from_xpm,
    homogeneous_config,
    hubbard_parametrization,
    sample_us,
    site_kinematics,
    x_of_u,
)

__all__ = [n for n in dir() if not n.startswith("_")]

"""Exact-arithmetic lab for multipath polymer partition functions, the
geometric Pitman/insertion cascade, and their invariance identities, with
max-plus and semi-discrete degenerations."""

from .lattice import (
    DomainProfile,
    EmptyPathSetError,
    OracleSizeError,
    enumerate_multipaths,
    is_endpoint_pair,
    multipath_count,
    uparrow,
)
from .partition import WeightField, partition_function, partition_half_open, path_weight, set_weight
from .pitman import StairFunction, odot, otimes, s_r, tau, tau_rm, w
from .tropical import HeightField, beta_bridge, check_dzero, lpp_value, w0

__all__ = [
    "DomainProfile",
    "EmptyPathSetError",
    "OracleSizeError",
    "enumerate_multipaths",
    "is_endpoint_pair",
    "multipath_count",
    "uparrow",
    "WeightField",
    "partition_function",
    "partition_half_open",
    "path_weight",
    "set_weight",
    "StairFunction",
    "odot",
    "otimes",
    "tau",
    "tau_rm",
    "s_r",
    "w",
    "HeightField",
    "beta_bridge",
    "check_dzero",
    "lpp_value",
    "w0",
]

"""Symbolic braid group ring identities and tensor-space braidings."""

import json

from . import _tensorbraid
from ._tensorbraid import (
    RingElement,
    assemble,
    beta,
    braid_equal,
    check_rmatrix,
    check_ybe,
    identity_names,
    normal_form,
    omega,
    run_cli,
    shuffle,
    tensor_block,
    unit_pochhammer,
    word_element,
)


def verify(name, params):
    return json.loads(_tensorbraid.verify_record(name, list(params)))


def sweep(name, bound, jobs=1, seed=0):
    return [json.loads(r) for r in _tensorbraid.sweep_records(name, bound, jobs, seed)]


__all__ = [
    "RingElement",
    "assemble",
    "beta",
    "braid_equal",
    "check_rmatrix",
    "check_ybe",
    "identity_names",
    "normal_form",
    "omega",
    "run_cli",
    "shuffle",
    "sweep",
    "tensor_block",
    "unit_pochhammer",
    "verify",
    "word_element",
]

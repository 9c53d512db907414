"""Generalized Weyl-Heisenberg algebras: matrices, phase states, MUBs, coherent states."""
from .errors import *  # noqa: F401,F403
from .fock import (AlgebraParams, ClassificationReport, FockSpace, H0Params, build_ladder_ops,
                   classify, dimension, fock_space, h0_from_ab, hamiltonian, params,
                   structure_function, verify_algebra)
from .report import CheckItem, VerificationReport

__version__ = "0.1.0"

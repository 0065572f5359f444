"""Exact polynomial solution of the qKZ equation at odd size, the XXZ chain
at Delta = -1/2, the Temperley-Lieb loop model and alternating sign matrix
counts.

All arithmetic is exact: rationals are gmpy2 ``mpq`` and the cube root of
unity lives in :class:`~polyqkz.scalar.Cyc3`.
"""
from .asm import asm_count, asm_refined, refined_sum_poly
from .loopmodel import enumerate_link_patterns, loop_ground_state, partial_sum_xi
from .qkz import psi_hom, psi_inhom, psi_table, psi_vector_inhom, psibar_hom, psibar_inhom
from .scalar import Cyc3, q_root_of_unity, rat
from .spinvector import SpinVector
from .sixvertex import transfer_apply, xxz_apply

__version__ = "0.1.0"

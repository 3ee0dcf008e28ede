"""Atoms and atom sumsets in cyclic groups Z_n, and integral circulant graphs."""

from .atoms import AtomSet, DivisorIdeal, PartialAtom, atom, atom_partition, classify, ideal_of
from .decompose import AtomDecomposition, locate_sum, sumset_decompose
from .errors import AtomsumError, InvalidArgument, PreconditionViolation, ResourceLimit
from .icg import ICGraph, LevelReport, build, distance_levels, distance_power
from .numtheory import FactoredInt, divisors, euler_phi, factorize, mobius, phi_star, radical
from .repcount import RepCountBreakdown, count_profile, in_sumset, rep_count

__version__ = "0.1.0"

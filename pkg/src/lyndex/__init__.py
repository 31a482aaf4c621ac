"""Lyndon SLP grammar compression with a locate-capable self-index."""

from lyndex.access import extract, fingerprint, lyndon_array_entry
from lyndex.grammar import (
    AdmissibleGrammar,
    LyndonSlp,
    build_lyndon_slp,
    reduce_r1,
    validate,
)
from lyndex.index import LyndonIndex, enumerate_partition_pairs, locate
from lyndex.kernels import BACKEND
from lyndex.lyndon import duval_factorize, is_lyndon, significant_suffixes
from lyndex.serialize import load, save
from lyndex.tree import LyndonTree, build_lyndon_tree

__version__ = "0.1.0"

__all__ = [
    "AdmissibleGrammar",
    "BACKEND",
    "LyndonIndex",
    "LyndonSlp",
    "LyndonTree",
    "build_lyndon_slp",
    "build_lyndon_tree",
    "duval_factorize",
    "enumerate_partition_pairs",
    "extract",
    "fingerprint",
    "is_lyndon",
    "load",
    "locate",
    "lyndon_array_entry",
    "reduce_r1",
    "save",
    "significant_suffixes",
    "validate",
]

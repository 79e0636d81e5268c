"""Finite groups whose subgroups are all direct-product-indecomposable:
constructors, subgroup lattices, the arithmetic classifier, and the
brute-force oracle it is verified against."""

from .construct import (
    MetacyclicParams,
    SemidirectPQParams,
    abelian,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    metacyclic,
    semidirect_pq,
    symmetric,
)
from .core import FiniteGroup, Subgroup
from .csa import is_commutative_transitive, is_csa, is_malnormal
from .decomp import (
    ClassLabel,
    CyclicPrimePower,
    DecompositionWitness,
    GeneralizedQuaternion,
    MetacyclicPQ,
    NotStronglyIndecomposable,
    check_metacyclic_condition,
    classify,
    is_decomposable,
    is_generalized_quaternion,
    is_strongly_indecomposable,
    label_is_positive,
)
from .iso import GroupFingerprint, are_isomorphic, fingerprint
from .lattice import (
    SubgroupLattice,
    all_subgroups,
    enumerate_by_joins,
    fitting_subgroup,
    lattice_to_dot,
    maximal_abelian_subgroups,
    normal_subgroups,
    sylow_subgroups,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "SubgroupLattice",
    "GroupFingerprint",
    "ClassLabel",
    "CyclicPrimePower",
    "GeneralizedQuaternion",
    "MetacyclicPQ",
    "NotStronglyIndecomposable",
    "DecompositionWitness",
    "MetacyclicParams",
    "SemidirectPQParams",
    "cyclic",
    "generalized_quaternion",
    "metacyclic",
    "semidirect_pq",
    "direct_product",
    "symmetric",
    "dihedral",
    "abelian",
    "all_subgroups",
    "normal_subgroups",
    "sylow_subgroups",
    "fitting_subgroup",
    "maximal_abelian_subgroups",
    "enumerate_by_joins",
    "lattice_to_dot",
    "classify",
    "is_decomposable",
    "is_strongly_indecomposable",
    "is_generalized_quaternion",
    "check_metacyclic_condition",
    "label_is_positive",
    "is_malnormal",
    "is_csa",
    "is_commutative_transitive",
    "fingerprint",
    "are_isomorphic",
]

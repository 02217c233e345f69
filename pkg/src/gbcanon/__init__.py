"""Canonical images of combinatorial objects under permutation groups, by graph backtracking."""

from .canonical import CanonConfig, CanonicalResult, canonical_image, same_orbit
from .digraphs import DigraphStack, LabelledDigraph, act_on_digraph, stack_append
from .grid import grid_group
from .objects import CombinatorialObject
from .partition import (ApproxResult, OrderedPartition, exact_iso, fixed_points, refine_part,
                        stack_compare)
from .perms import (Permutation, PermGroup, StabilizerChain, build_chain, min_image_partial,
                    min_perm_list, orbit, perm_compose, pointwise_stabilizer)
from .refiners import (completion_refiner, equitable_split, forbit, forbital, group_refiner)
from .search import build_tree, nodes_list

__version__ = "0.1.0"

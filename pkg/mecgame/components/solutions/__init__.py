from .solution import Solution
from .reference_solution import ReferenceSolution
from .capped_equal_allocation_solution import CappedEqualAllocationSolution
from .equal_allocation_solution import EqualAllocationSolution
from .proposed_solution import ProposedSolution

__all__ = [
    'CappedEqualAllocationSolution',
    'EqualAllocationSolution',
    'ProposedSolution',
    'ReferenceSolution',
    'Solution',
    ]

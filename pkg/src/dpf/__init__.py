"""Defective parking functions: defect, bijections to two-row tableaux, Kreweras numbers."""

from dpf.core import (
    DefectProfile,
    InvariantError,
    ParkingOutcome,
    PreconditionError,
    PreferenceList,
    decrement_set,
    defect,
    defect_profile,
    fixed_set,
    is_parking_function,
    orbit_size,
    simulate,
    to_catalan_word,
)
from dpf.partitions import Partition

__version__ = "0.1.0"

"""Exact unisingularity checks for Specht modules of the symmetric group."""

__version__ = "0.1.0"

from .partitions import Partition, enumerate_partitions, conjugate, specht_dimension  # noqa: E402
from .charpoly import CycloProduct, charpoly, fixed_space_dim, scan, verdict, verdict_alternating  # noqa: E402

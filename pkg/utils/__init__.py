"""utils package – Disjoint sets, JSON persistence and text formatting."""

from .union_find import UnionFind
from .helpers import banner, format_table

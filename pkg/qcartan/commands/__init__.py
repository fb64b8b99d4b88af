from qcartan.commands import combinatorics, matrices, verification

__all__ = ["combinatorics", "matrices", "verification"]

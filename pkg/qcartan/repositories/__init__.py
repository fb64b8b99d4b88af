from qcartan.repositories.decomposition_repository import DecompositionRepository

__all__ = ["DecompositionRepository"]

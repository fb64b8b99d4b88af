from qcartan.storage.cache import CacheDirectory

__all__ = ["CacheDirectory"]

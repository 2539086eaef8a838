from .misc import ordered_map, max_workers, tempdir

__all__ = ["max_workers", "ordered_map", "tempdir"]

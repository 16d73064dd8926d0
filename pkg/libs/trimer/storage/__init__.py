from .base import Storage
from .in_memory import InMemoryStorage
from .local import LocalFileStorage

__all__ = ["Storage", "InMemoryStorage", "LocalFileStorage"]

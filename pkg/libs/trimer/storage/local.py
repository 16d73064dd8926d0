from pathlib import Path
from typing import Optional, Union


class LocalFileStorage:
    """Filesystem storage; keys are paths, relative ones resolved against ``root``.

    - Parent directories are created on write.
    - Missing keys raise FileNotFoundError, like the other drivers.
    """

    def __init__(self, root: Optional[Union[str, Path]] = None) -> None:
        self.root = Path(root) if root is not None else None

    def _path(self, key: str) -> Path:
        p = Path(key)
        if self.root is not None and not p.is_absolute():
            p = self.root / p
        return p

    def put_bytes(self, key: str, data: bytes) -> None:
        p = self._path(key)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_bytes(data)

    def get_bytes(self, key: str) -> bytes:
        return self._path(key).read_bytes()

    def exists(self, key: str) -> bool:
        return self._path(key).is_file()

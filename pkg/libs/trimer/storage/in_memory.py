from typing import Dict


class InMemoryStorage:
    """Dict-backed storage; the HTTP service stages uploaded chi files here."""

    def __init__(self) -> None:
        self._files: Dict[str, bytes] = {}

    def put_bytes(self, key: str, data: bytes) -> None:
        self._files[key] = bytes(data)

    def get_bytes(self, key: str) -> bytes:
        try:
            return self._files[key]
        except KeyError:
            raise FileNotFoundError(key) from None

    def exists(self, key: str) -> bool:
        return key in self._files

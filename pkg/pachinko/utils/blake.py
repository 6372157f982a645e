from hashlib import blake2b
from pathlib import Path
from typing import (
    Union,
)


def blake_file(path: Union[str, Path]) -> str:
    """Hex digest of a file's content, read in chunks."""
    hasher = blake2b(digest_size=32)
    with open(str(path), 'rb') as f:
        for chunk in iter(lambda: f.read(1 << 16), b''):
            hasher.update(chunk)
    return hasher.hexdigest()

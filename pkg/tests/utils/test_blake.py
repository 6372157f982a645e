from hashlib import blake2b

from pachinko.utils.blake import (
    blake_file,
)


def test_blake_file_matches_in_memory_digest(tmp_path):
    content = b'date,city,event\n' * 10000
    path = tmp_path / 'gsr.csv'
    path.write_bytes(content)

    assert blake_file(path) == blake2b(content, digest_size=32).hexdigest()


import hashlib
import json


def to_bytes(x, charset="utf-8"):
    if isinstance(x, bytes):
        return x
    if isinstance(x, str):
        return x.encode(charset)
    return canonical_json(x).encode(charset)


def canonical_json(data):
    """Serialize with sorted keys so equal data always hashes equally."""
    return json.dumps(data, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def sha256_hex(data):
    """Hex digest of bytes, text, or any JSON-serializable value."""
    return hashlib.sha256(to_bytes(data)).hexdigest()

def make_key(value):
    return str(value)


def to_bytes(value):
    return bytes(value)


def from_bytes(value):
    return list(value)


def clamp(value):
    return max(0, min(value, 100))


def ensure_list(value):
    if isinstance(value, list):
        return value
    return [value]

import hashlib
import json
from pathlib import Path

import numpy as np


def _default(obj):
    # numpy scalars/arrays and sets show up in stage stats
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, Path):
        return str(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def dumps(obj, indent=None) -> str:
    # Sorted keys so that replayed runs produce identical bytes.
    return json.dumps(obj, sort_keys=True, indent=indent, default=_default, ensure_ascii=False)


def dump_json(obj, path, indent=2):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj, indent=indent))
        fh.write("\n")


def load_json(path):
    path = Path(path)
    if path.stat().st_size == 0:
        raise ValueError(f"Empty JSON file: {path.name}")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def read_lines(path):
    # (line_number, stripped_text) for non-blank, non-comment lines
    out = []
    with open(Path(path), "r", encoding="utf-8") as fh:
        for number, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if text:
                out.append((number, text))
    return out


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(Path(path), "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()

"""On-disk enclosure cache: one JSON file, keyed by the canonical request string."""
from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from .evaluation import BallReal, evaluate
from .exact_algebra.functions import FunctionId
from .exact_algebra.polynomial import frac_str

ENV_VAR = "MAHLERLAB_CACHE"


def request_key(f: FunctionId, alpha: Fraction, prec_bits: int) -> str:
    return f"eval|{f.label}|{frac_str(Fraction(alpha))}|{prec_bits}"


class EnclosureCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self.entries: dict[str, dict] = {}
        self.dirty = False
        self.hits = 0
        if self.path.exists():
            text = self.path.read_text()
            self.entries = json.loads(text) if text.strip() else {}

    def evaluate(self, f: FunctionId, alpha, prec_bits: int) -> BallReal:
        key = request_key(f, alpha, prec_bits)
        hit = self.entries.get(key)
        if hit is not None:
            self.hits += 1
            return BallReal.from_json(hit)
        ball = evaluate(f, alpha, prec_bits)
        self.entries[key] = {"mid": frac_str(ball.mid), "rad": frac_str(ball.rad)}
        self.dirty = True
        return ball

    def save(self) -> None:
        if not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(self.entries, fh, sort_keys=True)
            os.replace(tmp, self.path)  # whole-file atomic replace, last writer wins
        except BaseException:
            os.unlink(tmp)
            raise
        self.dirty = False


def resolve_cache_path(flag: str | None) -> str | None:
    """The environment variable takes precedence over the --cache flag."""
    return os.environ.get(ENV_VAR) or flag

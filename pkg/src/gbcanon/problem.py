"""Problem-file and group-file formats."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .canonical import CanonConfig
from .objects import CombinatorialObject, ObjectError
from .perms import Permutation, PermGroup, PermutationError


class ProblemError(ValueError):
    pass


@dataclass
class ProblemFile:
    degree: int
    generators: list[str]
    object: CombinatorialObject | None = None
    config: dict = field(default_factory=dict)

    def group(self) -> PermGroup:
        return PermGroup.from_strings(self.degree, self.generators)

    def canon_config(self) -> CanonConfig:
        return CanonConfig.from_json(self.config)

    def to_json(self) -> dict:
        out = {"degree": self.degree, "generators": list(self.generators)}
        if self.object is not None:
            out["object"] = self.object.to_json()
        if self.config:
            out["config"] = self.config
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data) -> "ProblemFile":
        if not isinstance(data, dict):
            raise ProblemError("problem file must be a JSON object")
        try:
            n = int(data["degree"])
            gens = data.get("generators", [])
            if not isinstance(gens, list):
                raise ProblemError("generators must be a list of cycle strings")
            norm = [str(Permutation.parse(str(g), n)) for g in gens]
            obj = None
            if "object" in data:
                obj = CombinatorialObject.from_json(n, data["object"])
            config = data.get("config", {}) or {}
            if not isinstance(config, dict):
                raise ProblemError("config must be an object")
            CanonConfig.from_json(config)
        except KeyError as exc:
            raise ProblemError(f"missing field {exc}") from exc
        except (PermutationError, ObjectError, TypeError, ValueError) as exc:
            if isinstance(exc, ProblemError):
                raise
            raise ProblemError(str(exc)) from exc
        return cls(n, norm, obj, dict(config))

    @classmethod
    def loads(cls, text: str) -> "ProblemFile":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ProblemError(f"invalid JSON: {exc}") from exc
        return cls.from_json(data)

    @classmethod
    def load(cls, path: str | Path) -> "ProblemFile":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ProblemError(f"cannot read {path}: {exc}") from exc
        return cls.loads(text)


def load_group(source: str) -> PermGroup:
    """A group from a JSON file with ``degree`` and ``generators``, or ``sym:N``."""
    if source.startswith("sym:"):
        try:
            return PermGroup.symmetric(int(source[4:]))
        except ValueError as exc:
            raise ProblemError(f"bad group {source!r}") from exc
    return ProblemFile.load(source).group()

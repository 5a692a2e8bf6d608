"""Strategy certificates: an explicit defender response table that can be checked on its own.

A certificate lists guard configurations (bitmasks of size ``k``) and, for every
configuration ``S`` and unoccupied vertex ``r``, the configuration the defender
moves to. Verification only needs arc lookups and bipartite matching, so it is
independent of the fixed-point solver that usually produces these tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ._bits import bit, iter_bits, mask_of, members
from .errors import CertificateError, FormatError, ParameterError
from .graphs import Digraph
from .matching import multimove_exists

MODES = ("single_move", "multimove")


@dataclass(frozen=True)
class StrategyCertificate:
    digraph: Digraph
    k: int
    configs: tuple[int, ...]
    responses: dict[tuple[int, int], int]
    mode: str = "single_move"
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ParameterError(f"mode must be one of {MODES}, got {self.mode!r}")

    def response(self, config: int, attack: int) -> int:
        """Successor configuration (as a mask) for an attack on ``attack`` at ``config``."""
        i = self.configs.index(config)
        return self.configs[self.responses[(i, attack)]]

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.digraph.n,
            "arcs": [list(a) for a in self.digraph.arcs],
            "k": self.k,
            "mode": self.mode,
            "configs": [members(c) for c in self.configs],
            "responses": [[i, r, j] for (i, r), j in sorted(self.responses.items())],
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "StrategyCertificate":
        try:
            d = Digraph(int(data["n"]), [tuple(a) for a in data["arcs"]])
            configs = tuple(mask_of(c) for c in data["configs"])
            responses = {(int(i), int(r)): int(j) for i, r, j in data["responses"]}
            return cls(d, int(data["k"]), configs, responses, data.get("mode", "single_move"),
                       data.get("label", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed certificate: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "StrategyCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"certificate is not valid JSON: {exc}") from exc
        return cls.from_json(data)


def single_move_ok(d: Digraph, source: int, target: int, attack: int) -> bool:
    """``target`` is ``source`` with one guard moved along an arc onto ``attack``."""
    if not target >> attack & 1 or source >> attack & 1:
        return False
    moved = source & ~target
    if moved.bit_count() != 1 or target & ~source != bit(attack):
        return False
    v = moved.bit_length() - 1
    return d.has_arc(v, attack)


def verify_strategy(cert: StrategyCertificate) -> int:
    """Return ``k`` if the certificate is closed and every response is legal.

    An accepted single-move certificate shows the eternal domination number is
    at most ``k``; a multimove certificate bounds the m-eternal number.
    """
    d = cert.digraph
    n = d.n
    if not cert.configs:
        raise CertificateError("certificate has no configurations")
    if len(set(cert.configs)) != len(cert.configs):
        raise CertificateError("duplicate configurations")
    vmask = d.vertex_mask
    for c in cert.configs:
        if c & ~vmask:
            raise CertificateError(f"configuration {members(c)} uses a vertex outside 0..{n - 1}", c)
        if c.bit_count() != cert.k:
            raise CertificateError(f"configuration {members(c)} does not have {cert.k} guards", c)
    move_cache: dict[tuple[int, int], bool] = {}
    for i, s in enumerate(cert.configs):
        for r in iter_bits(vmask & ~s):
            j = cert.responses.get((i, r))
            if j is None:
                raise CertificateError(f"no response to an attack on {r} at {members(s)}", s, r)
            if not 0 <= j < len(cert.configs):
                raise CertificateError(f"response index {j} out of range at {members(s)}, attack {r}",
                                       s, r)
            t = cert.configs[j]
            if not t >> r & 1:
                raise CertificateError(f"response to attack {r} at {members(s)} leaves {r} empty",
                                       s, r)
            if cert.mode == "single_move":
                legal = single_move_ok(d, s, t, r)
            else:
                key = (i, j)
                if key not in move_cache:
                    move_cache[key] = multimove_exists(d, s, t)
                legal = move_cache[key]
            if not legal:
                raise CertificateError(
                    f"no legal {cert.mode.replace('_', ' ')} from {members(s)} to {members(t)}"
                    f" answering attack {r}", s, r)
    return cert.k

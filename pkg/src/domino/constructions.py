"""Static adversarial families, each emitted in its adversarial order.

All generators are deterministic functions of their parameters.  Vertex
numbering follows arrival order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .errors import ParameterError
from .graph import ArrivalSequence


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def _path_entries(m: int) -> list[list[int]]:
    return [[] if i == 1 else [i - 1] for i in range(1, m + 1)]


def _freeze(entries: list[list[int]], name: str) -> ArrivalSequence:
    return ArrivalSequence(tuple(tuple(e) for e in entries), name=name)


def path_standard(n: int) -> ArrivalSequence:
    """``P_n`` starting at a leaf, each vertex attached to its predecessor."""
    _require(n >= 1, "path_standard: n >= 1")
    return _freeze(_path_entries(n), f"path-n{n}")


def star(n: int, center: str = "first") -> ArrivalSequence:
    """``K_{1,n-1}`` with the centre arriving first, second or last."""
    _require(n >= 2, "star: n >= 2")
    _require(center in ("first", "second", "last"), "star: center in first|second|last")
    if center == "first":
        entries = [[]] + [[1] for _ in range(n - 1)]
    elif center == "second":
        entries = [[], [1]] + [[2] for _ in range(n - 2)]
    else:
        entries = [[] for _ in range(n - 1)] + [list(range(1, n))]
    return _freeze(entries, f"star-n{n}-{center}")


def disjoint_stars(copies: int, delta: int) -> ArrivalSequence:
    """``copies`` stars on ``delta + 1`` vertices, each centre after its leaves."""
    _require(copies >= 1, "disjoint_stars: i >= 1")
    _require(delta >= 1, "disjoint_stars: delta >= 1")
    entries: list[list[int]] = []
    for _ in range(copies):
        base = len(entries)
        entries.extend([] for _ in range(delta))
        entries.append(list(range(base + 1, base + delta + 1)))
    return _freeze(entries, f"disjoint-stars-i{copies}-d{delta}")


def fan(delta: int) -> ArrivalSequence:
    """Path ``P_delta`` in standard order, then an apex joined to all of it."""
    _require(delta >= 2, "fan: delta >= 2")
    entries = _path_entries(delta)
    entries.append(list(range(1, delta + 1)))
    return _freeze(entries, f"fan-d{delta}")


def alternating_fan(k: int, delta: int) -> ArrivalSequence:
    """``k`` fans of degree ``delta``; consecutive fans share a path endpoint.

    Order: fan 1's path, its apex, then the remaining ``delta - 1`` path
    vertices of fan 2, its apex, and so on.  ``n = k(delta+1) - (k-1)``.
    """
    _require(k >= 1, "alternating_fan: k >= 1")
    _require(delta >= 4, "alternating_fan: delta >= 4")
    entries: list[list[int]] = []
    last_path = 0
    for j in range(k):
        section = [last_path] if j > 0 else []
        for _ in range(delta if j == 0 else delta - 1):
            entries.append([last_path] if last_path else [])
            last_path = len(entries)
            section.append(last_path)
        entries.append(sorted(section))
    return _freeze(entries, f"alternating-fan-k{k}-d{delta}")


def modular_bridge(k: int, delta: int) -> ArrivalSequence:
    """Path on ``k(delta-1)`` vertices plus ``k`` chord vertices.

    Chord ``u_i`` is joined to every vertex of section ``i`` and chords are
    matched ``u_{2i-1}``–``u_{2i}``.  Chords arrive after the path, in index
    order.
    """
    _require(k >= 2 and k % 2 == 0, "modular_bridge: k even and >= 2")
    _require(delta >= 2, "modular_bridge: delta >= 2")
    return _bridge(k, delta, link_pairs=False, name=f"modular-bridge-k{k}-d{delta}")


def bridge(k: int, delta: int) -> ArrivalSequence:
    """``modular_bridge(k, delta - 1)`` plus edges ``u_{2i}``–``u_{2i+1}``."""
    _require(k >= 2 and k % 2 == 0, "bridge: k even and >= 2")
    _require(delta >= 3, "bridge: delta >= 3")
    return _bridge(k, delta - 1, link_pairs=True, name=f"bridge-k{k}-d{delta}")


def _bridge(k: int, chord_degree: int, link_pairs: bool, name: str) -> ArrivalSequence:
    width = chord_degree - 1
    m = k * width
    entries = _path_entries(m)
    chord_index = {}
    for i in range(1, k + 1):
        nbrs = list(range((i - 1) * width + 1, i * width + 1))
        if i % 2 == 0:
            nbrs.append(chord_index[i - 1])
        elif link_pairs and i > 1:
            nbrs.append(chord_index[i - 1])
        entries.append(sorted(nbrs))
        chord_index[i] = len(entries)
    return _freeze(entries, name)


def rotor(delta: int) -> ArrivalSequence:
    """Star ``K_{1,delta}`` plus a perfect matching on the leaves.

    Matched leaf pairs arrive consecutively, so ``G_2, G_4, ...`` are perfect
    matchings; the centre arrives last.
    """
    _require(delta >= 2 and delta % 2 == 0, "rotor: delta even and >= 2")
    entries: list[list[int]] = []
    for i in range(1, delta + 1):
        entries.append([] if i % 2 == 1 else [i - 1])
    entries.append(list(range(1, delta + 1)))
    return _freeze(entries, f"rotor-d{delta}")


def two_sided_fan(n: int) -> ArrivalSequence:
    """Path on ``n - 2`` vertices, then two adjacent apexes.

    The first apex joins the even path positions, the second joins the odd
    positions and the first apex.
    """
    _require(n >= 4, "two_sided_fan: n >= 4")
    m = n - 2
    entries = _path_entries(m)
    entries.append([i for i in range(1, m + 1) if i % 2 == 0])
    entries.append([i for i in range(1, m + 1) if i % 2 == 1] + [m + 1])
    return _freeze(entries, f"two-sided-fan-n{n}")


def pendant_hosts(m: int) -> list[int]:
    """Hosts ``v_2, v_5, v_8, ..., v_m`` of :func:`pendant_path`."""
    return list(range(2, m + 1, 3))


def pendant_path(m: int) -> ArrivalSequence:
    """Standard path ``v_1..v_m`` with ``m`` pendants on each of ``v_2, v_5, ..., v_m``.

    Pendants arrive after the path, grouped by host in host order.
    """
    _require(m >= 2 and m % 6 == 2, "pendant_path: m = 2 (mod 6)")
    entries = _path_entries(m)
    for host in pendant_hosts(m):
        entries.extend([host] for _ in range(m))
    return _freeze(entries, f"pendant-path-m{m}")


def ids_pendant_path(n_path: int, delta: int) -> ArrivalSequence:
    """Standard path with ``delta - 2`` pendants on every even path vertex.

    Pendants arrive after the whole path, grouped by host.
    """
    _require(n_path >= 1, "ids_pendant_path: n_path >= 1")
    _require(delta >= 2, "ids_pendant_path: delta >= 2")
    entries = _path_entries(n_path)
    for host in range(2, n_path + 1, 2):
        entries.extend([host] for _ in range(delta - 2))
    return _freeze(entries, f"ids-pendant-path-n{n_path}-d{delta}")


# ---------------------------------------------------------------------------
# name-based dispatch for the CLI and experiment configs

FAMILIES: dict[str, Callable[..., ArrivalSequence]] = {
    "path_standard": path_standard,
    "star": star,
    "disjoint_stars": disjoint_stars,
    "fan": fan,
    "alternating_fan": alternating_fan,
    "modular_bridge": modular_bridge,
    "bridge": bridge,
    "rotor": rotor,
    "two_sided_fan": two_sided_fan,
    "pendant_path": pendant_path,
    "ids_pendant_path": ids_pendant_path,
}

_ALIASES = {"i": "copies", "d": "delta", "Δ": "delta", "center_pos": "center"}
_STRING_PARAMS = {"center"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Mapping[str, int | str] = field(default_factory=dict)

    @classmethod
    def parse(cls, family: str, params: str = "") -> "FamilySpec":
        """``FamilySpec.parse("rotor", "delta=8")``; also accepts ``rotor:delta=8``."""
        if ":" in family and not params:
            family, params = family.split(":", 1)
        family = family.strip().replace("-", "_")
        parsed: dict[str, int | str] = {}
        for item in filter(None, (p.strip() for p in params.split(","))):
            if "=" not in item:
                raise ParameterError(f"bad parameter {item!r}; expected key=value")
            key, value = (s.strip() for s in item.split("=", 1))
            key = _ALIASES.get(key, key)
            if key in _STRING_PARAMS:
                parsed[key] = value
            else:
                try:
                    parsed[key] = int(value)
                except ValueError:
                    raise ParameterError(f"parameter {key} must be an integer") from None
        return cls(family, parsed)


def generate(spec: FamilySpec) -> ArrivalSequence:
    try:
        builder = FAMILIES[spec.family]
    except KeyError:
        raise ParameterError(
            f"unknown family {spec.family!r}; choose from {', '.join(sorted(FAMILIES))}"
        ) from None
    try:
        return builder(**spec.params)
    except TypeError as exc:
        raise ParameterError(f"{spec.family}: {exc}") from None

"""Session configuration: parse and validate category descriptions.

Config schema (JSON):

    {
      "group":  {"type": "cyclic", "n": 3}
              | {"type": "product", "factors": [...]}
              | {"type": "perm", "degree": 3, "generators": [[1,0,2],[1,2,0]]}
              | {"type": "cayley", "table": [[...]], "names": [...]},
      "lambda": {"type": "trivial"} | {"type": "cyclic", "q": 1}
              | {"type": "table", "entries": [[order, exponent], ...]},
      "d":      {"type": "trivial"}
              | {"type": "generators", "values": [[order, exponent], ...]}
              | {"type": "values", "values": [[order, exponent], ...]},
      "genus":  4,
      "format": "json" | "text"
    }

Roots of unity are written [order, exponent] or {"order":..,"exponent":..}.
Invalid configs never reach the computational core.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycles import cocycle_from_config
from .groups import (
    DEFAULT_ORDER_CAP,
    CapExceededError,
    FiniteGroup,
    GroupError,
    GroupHom,
    group_from_config,
    hom_from_generator_values,
    trivial_hom,
)
from .pointed import PointedCategory
from .scalars import RootOfUnity


class ConfigError(ValueError):
    pass


COMMANDS = ("verify", "simples", "spherical", "blocks", "classify", "report")


@dataclass
class SessionConfig:
    category: PointedCategory
    genus: int
    output_format: str
    cap: int


def canonical_generators(cfg: dict, G: FiniteGroup) -> list[int]:
    """Element indices of the config's natural generators, in config order."""
    kind = cfg.get("type")
    if kind == "cyclic":
        return [1] if G.order > 1 else []
    if kind == "product":
        gens: list[int] = []
        offset_groups = [group_from_config(f) for f in cfg["factors"]]
        # element index of a product tuple is mixed-radix over the factors
        radices = [g.order for g in offset_groups]

        def embed(pos: int, elem: int) -> int:
            idx = 0
            for i, g in enumerate(offset_groups):
                digit = elem if i == pos else g.identity
                idx = idx * radices[i] + digit
            return idx

        for pos, (fcfg, g) in enumerate(zip(cfg["factors"], offset_groups)):
            for e in canonical_generators(fcfg, g):
                gens.append(embed(pos, e))
        return gens
    if kind == "perm":
        from .groups import _perm_name

        gens = []
        for p in cfg["generators"]:
            name = _perm_name(tuple(int(x) for x in p))
            try:
                gens.append(G.names.index(name))
            except ValueError as exc:
                raise ConfigError("generator permutation not found in closure") from exc
        return gens
    return []


def parse_root(obj) -> RootOfUnity:
    try:
        return RootOfUnity.from_json(obj)
    except Exception as exc:
        raise ConfigError(f"bad root-of-unity literal {obj!r}: {exc}") from exc


def parse_d(cfg: dict | None, G: FiniteGroup, group_cfg: dict) -> GroupHom:
    if cfg is None or cfg.get("type", "trivial") == "trivial":
        return trivial_hom(G)
    kind = cfg.get("type")
    if kind == "values":
        values = cfg.get("values", [])
        if len(values) != G.order:
            raise ConfigError(f"d needs {G.order} values, got {len(values)}")
        try:
            return GroupHom(G, [parse_root(v) for v in values])
        except GroupError as exc:
            raise ConfigError(f"d is not a homomorphism: {exc}") from exc
    if kind == "generators":
        gens = canonical_generators(group_cfg, G)
        values = cfg.get("values", [])
        if len(values) != len(gens):
            raise ConfigError(
                f"d needs one value per generator ({len(gens)}), got {len(values)}"
            )
        try:
            return hom_from_generator_values(
                G, [(g, parse_root(v)) for g, v in zip(gens, values)]
            )
        except GroupError as exc:
            raise ConfigError(f"d does not extend to a homomorphism: {exc}") from exc
    raise ConfigError(f"unknown d config type {kind!r}")


def parse_session(doc: dict, genus_override: int | None = None, format_override: str | None = None, cap_override: int | None = None) -> SessionConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    if "group" not in doc:
        raise ConfigError("config needs a 'group' section")
    cap = cap_override if cap_override is not None else int(doc.get("cap_group_order", DEFAULT_ORDER_CAP))
    try:
        G = group_from_config(doc["group"], cap=cap)
    except CapExceededError:
        raise
    except GroupError as exc:
        raise ConfigError(f"bad group config: {exc}") from exc
    lam_cfg = doc.get("lambda", {"type": "trivial"})
    lam = cocycle_from_config(G, lam_cfg)  # CocycleError carries the datum
    d = parse_d(doc.get("d"), G, doc["group"])
    genus = genus_override if genus_override is not None else int(doc.get("genus", 3))
    if genus < 0:
        raise ConfigError("genus must be non-negative")
    fmt = format_override if format_override is not None else doc.get("format", "json")
    if fmt not in ("json", "text"):
        raise ConfigError(f"unknown output format {fmt!r}")
    return SessionConfig(
        category=PointedCategory(G, lam, d), genus=genus, output_format=fmt, cap=cap
    )

"""Command-line front end.

    zvect COMMAND CONFIG.json [--genus N] [--format json|text] [--cap-group-order N]

Commands: verify | simples | spherical | blocks | classify | report.
Identical configs produce byte-identical output.  Exit codes: 0 success,
2 config error, 3 unsupported family, 4 size/genus cap violation,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blocks as blocks_mod
from . import classify as classify_mod
from . import gv as gv_mod
from .center import dualizing_object, first_halfbraiding_violation
from .cocycles import CocycleError
from .config import COMMANDS, ConfigError, SessionConfig, parse_session
from .groups import CapExceededError, GroupError
from .pointed import UnsupportedFamilyError, verify_pivotality
from .simples import simples

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_UNSUPPORTED = 3
EXIT_CAP = 4
EXIT_VERIFY = 5


def _error_doc(code: int, kind: str, message: str, detail=None) -> dict:
    doc = {"error": {"code": code, "kind": kind, "message": message}}
    if detail is not None:
        doc["error"]["detail"] = detail
    return doc


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        for line in _as_text(doc, prefix=""):
            sys.stdout.write(line + "\n")


def _blocks_text(doc: dict) -> list[str]:
    width = max(len(str(dim)) for _, dim in doc["table"])
    lines = ["genus  dimension"]
    for g, dim in doc["table"]:
        lines.append(f"{g:>5}  {dim:>{width}}")
    return lines


def _as_text(doc, prefix: str):
    if isinstance(doc, dict):
        for key in sorted(doc):
            val = doc[key]
            if isinstance(val, (dict, list)):
                yield f"{prefix}{key}:"
                yield from _as_text(val, prefix + "  ")
            else:
                yield f"{prefix}{key}: {val}"
    elif isinstance(doc, list):
        for val in doc:
            if isinstance(val, (dict, list)):
                yield f"{prefix}-"
                yield from _as_text(val, prefix + "  ")
            else:
                yield f"{prefix}- {val}"
    else:
        yield f"{prefix}{doc}"


def _theta_json(s) -> dict:
    r = s.theta.as_root_of_unity()
    return r.to_json() if r is not None else s.theta.to_json()


def _simples_doc(C, sims) -> dict:
    return {
        "count": len(sims),
        "simples": [
            {
                "label": s.label,
                "dim": s.dim,
                "invertible": s.invertible,
                "grades": [C.group.names[g] for g in s.grade_support],
                "theta": _theta_json(s),
                "materialized": s.obj is not None,
            }
            for s in sims
        ],
    }


def _verify_doc(C, sims) -> dict:
    piv = verify_pivotality(C)
    if not piv.ok:
        g, h = piv.first()
        raise VerificationFailure(
            "pivotality violated",
            {"pair": [C.group.names[g], C.group.names[h]]},
        )
    failures = []
    for s in sims:
        if s.obj is not None:
            err = first_halfbraiding_violation(s.obj)
            if err is not None:
                failures.append({"label": s.label, "kind": err.kind, "where": list(err.where)})
    kerr = first_halfbraiding_violation(dualizing_object(C))
    if kerr is not None:
        failures.append({"label": "dualizing", "kind": kerr.kind, "where": list(kerr.where)})
    if failures:
        raise VerificationFailure("half-braiding verification failed", {"failures": failures})
    ribbon = gv_mod.verify_ribbon(C, sims)
    if not ribbon.ok:
        raise VerificationFailure(
            "ribbon property failed",
            {"rows": [r for r in ribbon.rows if not r["ribbon_ok"]]},
        )
    return {
        "cocycle_ok": True,
        "pivotality_ok": True,
        "half_braidings_verified": sum(1 for s in sims if s.obj is not None) + 1,
        "ribbon_ok": True,
        "ribbon": ribbon.rows,
    }


class VerificationFailure(Exception):
    def __init__(self, message: str, detail):
        super().__init__(message)
        self.detail = detail


def _spherical_doc(C, sims) -> dict:
    rep = gv_mod.sphericity_report(C, sims)
    K = dualizing_object(C)
    return {
        "conditions": rep.to_json(),
        "spherical": rep.spherical,
        "dualizing_object": K.serialize(),
    }


def _blocks_doc(C, sims, genus: int) -> dict:
    ring = blocks_mod.fusion_ring(C, sims)
    table = blocks_mod.block_table(C, genus, ring, sims)
    return {
        "genus_max": genus,
        "table": [[g, dim] for g, dim in table],
    }


def _classify_doc(C, sims) -> dict:
    md = classify_mod.muger_data(C, sims)
    ext = classify_mod.ribbon_gv_extensions(C, sims)
    doc = md.to_json()
    doc.update(ext.to_json())
    if all(s.invertible for s in sims):
        doc["aut_tensor_id"] = classify_mod.aut_tensor_id(C, sims).to_json()
        doc["caut_tensor_id"] = classify_mod.caut_tensor_id(C, sims).to_json()
    else:
        doc["aut_tensor_id"] = "not computed (non-invertible simples present)"
        doc["caut_tensor_id"] = "not computed (non-invertible simples present)"
    return doc


def run(cfg: SessionConfig, command: str) -> dict:
    C = cfg.category
    sims = simples(C)
    if command == "verify":
        return _verify_doc(C, sims)
    if command == "simples":
        return _simples_doc(C, sims)
    if command == "spherical":
        return _spherical_doc(C, sims)
    if command == "blocks":
        return _blocks_doc(C, sims, cfg.genus)
    if command == "classify":
        return _classify_doc(C, sims)
    if command == "report":
        return {
            "verify": _verify_doc(C, sims),
            "simples": _simples_doc(C, sims),
            "spherical": _spherical_doc(C, sims),
            "blocks": _blocks_doc(C, sims, cfg.genus),
            "classify": _classify_doc(C, sims),
        }
    raise ConfigError(f"unknown command {command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="zvect",
        description="Exact computations in Drinfeld centers of pointed fusion categories",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("config", help="path to a JSON config file")
    parser.add_argument("--genus", type=int, default=None, help="genus bound for block tables")
    parser.add_argument("--format", dest="fmt", choices=("json", "text"), default=None)
    parser.add_argument("--cap-group-order", type=int, default=None)
    args = parser.parse_args(argv)

    fmt = args.fmt or "json"
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _emit(_error_doc(EXIT_CONFIG, "config", f"cannot read config: {exc}"), fmt)
        return EXIT_CONFIG

    try:
        cfg = parse_session(
            doc, genus_override=args.genus, format_override=args.fmt, cap_override=args.cap_group_order
        )
    except CapExceededError as exc:
        _emit(_error_doc(EXIT_CAP, "cap", str(exc)), fmt)
        return EXIT_CAP
    except CocycleError as exc:
        detail = {"kind": exc.kind, "where": list(exc.where)}
        _emit(_error_doc(EXIT_CONFIG, "config", str(exc), detail), fmt)
        return EXIT_CONFIG
    except (ConfigError, GroupError) as exc:
        _emit(_error_doc(EXIT_CONFIG, "config", str(exc)), fmt)
        return EXIT_CONFIG

    fmt = cfg.output_format
    try:
        result = run(cfg, args.command)
    except UnsupportedFamilyError as exc:
        _emit(_error_doc(EXIT_UNSUPPORTED, "unsupported-family", str(exc)), fmt)
        return EXIT_UNSUPPORTED
    except blocks_mod.GenusBoundError as exc:
        _emit(_error_doc(EXIT_CAP, "cap", str(exc)), fmt)
        return EXIT_CAP
    except VerificationFailure as exc:
        _emit(_error_doc(EXIT_VERIFY, "verification", str(exc), exc.detail), fmt)
        return EXIT_VERIFY
    if fmt == "text" and args.command == "blocks":
        for line in _blocks_text(result):
            sys.stdout.write(line + "\n")
        return EXIT_OK
    _emit(result, fmt)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

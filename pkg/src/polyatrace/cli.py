"""Command-line front end.

Every command reads one JSON job document (a file path, ``-`` for stdin, or
inline JSON) and prints one JSON result document.  Output is canonical: the
same job always yields the same bytes unless ``--timing`` is given.

Exit codes: 0 success, 1 usage or parse error, 2 cap exceeded, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from . import __version__
from .checks import run_equivalence
from .enumeration import (CountVector, alt_zeta_from_counts, polya_count, polya_weight_poly,
                          quotient_point_count, series_integers, zeta_from_counts)
from .errors import CapExceededError, OracleMismatchError
from .fields import (brute_force_affine_counts, discriminant_census, discriminant_poly)
from .formulas import (alt_cheah_hodge_series, alt_generating_function, cheah_hodge_series,
                       hodge_quotient, specialize_u, sym_generating_function)
from .graded import GradedMap, betti_to_identity_map, hodge_numbers, hodge_to_map
from .perms import Permutation, PermGroup, cycle_index, group_closure, named_group
from .poly import MultiPoly, parse_poly, parse_rational
from .series import TruncatedSeries

SCHEMA = "polyatrace.result/1"

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3


class JobError(ValueError):
    """Malformed job document; ``path`` locates the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class Caps:
    trunc: int = 10
    group_cap: int = 10**6
    oracle_cap: int = 20_000
    enum_budget: int = 10**7

    ENV = {"trunc": "POLYA_TRUNC", "group_cap": "POLYA_GROUP_CAP",
           "oracle_cap": "POLYA_ORACLE_CAP", "enum_budget": "POLYA_ENUM_BUDGET"}

    @classmethod
    def resolve(cls, args: argparse.Namespace, environ=os.environ) -> "Caps":
        values = {}
        for field, env in cls.ENV.items():
            flag = getattr(args, field, None)
            if flag is not None:
                values[field] = flag
            elif env in environ:
                try:
                    values[field] = int(environ[env])
                except ValueError:
                    raise JobError(env, f"environment value {environ[env]!r} is not an integer") from None
        caps = cls(**values)
        for field in cls.ENV:
            if getattr(caps, field) < 0:
                raise JobError(field, "caps must be nonnegative")
        return caps

    def as_dict(self) -> Dict[str, int]:
        return {"trunc": self.trunc, "group_cap": self.group_cap,
                "oracle_cap": self.oracle_cap, "enum_budget": self.enum_budget}


# -- field readers -------------------------------------------------------------

def _get(doc: Dict, key: str, path: str, default: Any = ..., kind=None):
    if not isinstance(doc, dict):
        raise JobError(path, "expected a JSON object")
    if key not in doc:
        if default is ...:
            raise JobError(_join(path, key), "missing required field")
        return default
    value = doc[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise JobError(_join(path, key), f"expected an integer, got {value!r}")
    if kind is str and not isinstance(value, str):
        raise JobError(_join(path, key), f"expected a string, got {value!r}")
    if kind is list and not isinstance(value, list):
        raise JobError(_join(path, key), f"expected a list, got {value!r}")
    return value


def _join(path: str, key) -> str:
    if isinstance(key, int):
        return f"{path}[{key}]"
    return f"{path}.{key}" if path else key


def _reject_unknown(doc: Dict, allowed, path: str) -> None:
    extra = sorted(set(doc) - set(allowed))
    if extra:
        raise JobError(_join(path, extra[0]), f"unknown field; expected one of {sorted(allowed)}")


def _int_list(values, path: str, minimum: int = 0) -> List[int]:
    if not isinstance(values, list):
        raise JobError(path, "expected a list of integers")
    out = []
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
            raise JobError(_join(path, i), f"expected an integer >= {minimum}, got {v!r}")
        out.append(v)
    return out


def _trunc(doc: Dict, caps: Caps, default: int | None = None) -> int:
    N = _get(doc, "N", "", caps.trunc if default is None else default, int)
    if N < 0:
        raise JobError("N", "truncation order must be nonnegative")
    return N


# -- groups ---------------------------------------------------------------------

GROUP_KINDS = ("symmetric", "alternating", "cyclic", "dihedral", "trivial", "generators")


def parse_group(desc: Dict, caps: Caps, path: str = "group") -> Tuple[PermGroup, Dict]:
    kind = _get(desc, "kind", path, kind=str)
    n = _get(desc, "n", path, kind=int)
    if kind not in GROUP_KINDS:
        raise JobError(_join(path, "kind"), f"unknown group kind {kind!r}; expected one of {list(GROUP_KINDS)}")
    if n < 1:
        raise JobError(_join(path, "n"), "n must be at least 1")
    if kind != "generators":
        _reject_unknown(desc, ("kind", "n"), path)
        try:
            G = named_group(kind, n, caps.group_cap)
        except ValueError as exc:
            raise JobError(path, str(exc)) from None
        return G, {"kind": kind, "n": n}
    _reject_unknown(desc, ("kind", "n", "generators"), path)
    gens = []
    for i, text in enumerate(_get(desc, "generators", path, [], list)):
        where = _join(_join(path, "generators"), i)
        if not isinstance(text, str):
            raise JobError(where, "permutations are given as strings such as \"(1 2)\" or \"[2,1,3]\"")
        try:
            gens.append(Permutation.parse(text, n))
        except ValueError as exc:
            raise JobError(where, str(exc)) from None
    G = group_closure(gens, n, caps.group_cap, name=f"<{', '.join(map(str, gens))}>")
    return G, {"kind": "generators", "n": n, "generators": [str(g) for g in gens]}


# -- graded data ---------------------------------------------------------------

def parse_hodge(doc, path: str) -> Dict[Tuple[int, int], int]:
    if not isinstance(doc, dict):
        raise JobError(path, "Hodge numbers are an object {\"p,q\": h}")
    out = {}
    for key, h in doc.items():
        where = _join(path, key)
        try:
            p, q = (int(s) for s in key.split(","))
        except ValueError:
            raise JobError(where, "keys must look like \"p,q\"") from None
        if p < 0 or q < 0:
            raise JobError(where, "Hodge indices must be nonnegative")
        if not isinstance(h, int) or isinstance(h, bool) or h < 0:
            raise JobError(where, f"expected a nonnegative integer, got {h!r}")
        if (p, q) in out:
            raise JobError(where, "duplicate Hodge index")
        if h:
            out[(p, q)] = h
    return dict(sorted(out.items()))


def hodge_echo(hodge: Dict[Tuple[int, int], int]) -> Dict[str, int]:
    return {f"{p},{q}": h for (p, q), h in sorted(hodge.items())}


def parse_map(blocks, path: str, variables=None) -> GradedMap:
    if not isinstance(blocks, list):
        raise JobError(path, "a graded map is a list of square blocks")
    names: list = list(variables or [])
    texts = []
    for i, block in enumerate(blocks):
        where = _join(path, i)
        if not isinstance(block, list) or any(not isinstance(row, list) or len(row) != len(block) for row in block):
            raise JobError(where, "each block must be a square list of rows")
        rows = []
        for j, row in enumerate(block):
            out_row = []
            for k, e in enumerate(row):
                at = _join(_join(where, j), k)
                if isinstance(e, bool) or not isinstance(e, (int, str)):
                    raise JobError(at, f"entries are integers or strings, got {e!r}")
                text = str(e)
                try:
                    poly = parse_poly(text)
                except (ValueError, ZeroDivisionError) as exc:
                    raise JobError(at, str(exc)) from None
                if variables is None:
                    names.extend(v for v in poly.variables if v not in names)
                elif not set(poly.variables) <= set(names):
                    raise JobError(at, f"uses variables outside {names}")
                out_row.append(text)
            rows.append(out_row)
        texts.append(rows)
    try:
        return GradedMap.from_rows(texts, names)
    except ValueError as exc:
        raise JobError(path, str(exc)) from None


def map_echo(phi: GradedMap) -> Dict:
    return {"blocks": [[[str(e) for e in row] for row in b.rows] for b in phi.blocks],
            "variables": list(phi.variables)}


def parse_data(doc, caps: Caps, path: str = "data") -> Tuple[GradedMap, Dict, str]:
    """One of ``{"betti": [...]}``, ``{"hodge": {...}}``, ``{"map": {"blocks": [...]}}``."""
    if not isinstance(doc, dict) or len(doc) != 1:
        raise JobError(path, "expected exactly one of betti, hodge, map")
    (key, value), = doc.items()
    where = _join(path, key)
    if key == "betti":
        betti = _int_list(value, where)
        return betti_to_identity_map(betti), {"betti": betti}, key
    if key == "hodge":
        hodge = parse_hodge(value, where)
        return hodge_to_map(hodge), {"hodge": hodge_echo(hodge)}, key
    if key == "map":
        if isinstance(value, list):
            value = {"blocks": value}
        if not isinstance(value, dict):
            raise JobError(where, "expected {\"blocks\": [...], \"variables\": [...]}")
        _reject_unknown(value, ("blocks", "variables"), where)
        variables = value.get("variables")
        if variables is not None and (not isinstance(variables, list)
                                      or not all(isinstance(v, str) for v in variables)):
            raise JobError(_join(where, "variables"), "expected a list of names")
        phi = parse_map(_get(value, "blocks", where, kind=list), _join(where, "blocks"), variables)
        return phi, {"map": map_echo(phi)}, key
    raise JobError(where, "expected one of betti, hodge, map")


# -- counts --------------------------------------------------------------------

def parse_counts(doc: Dict, caps: Caps, r_max: int | None) -> Tuple[CountVector, Dict]:
    """Either explicit ``counts`` or ``equations`` with a prime ``q`` (brute-forced)."""
    if "counts" in doc:
        if "equations" in doc:
            raise JobError("equations", "give either counts or equations, not both")
        counts = _int_list(doc["counts"], "counts")
        if not counts:
            raise JobError("counts", "need at least one count")
        echo = {"counts": counts}
        q = _get(doc, "q", "", None, int)
        if q is not None:
            echo["q"] = q
        return CountVector(counts, q), echo
    equations = _get(doc, "equations", "", kind=list)
    q = _get(doc, "q", "", kind=int)
    variables = _get(doc, "variables", "", None, list)
    polys = []
    for i, text in enumerate(equations):
        if not isinstance(text, str):
            raise JobError(_join("equations", i), "equations are polynomial strings")
        try:
            polys.append(parse_poly(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise JobError(_join("equations", i), str(exc)) from None
    if variables is None:
        variables = []
        for p in polys:
            variables.extend(v for v in p.variables if v not in variables)
    try:
        cv = brute_force_affine_counts(polys, q, r_max, variables, caps.enum_budget)
    except ValueError as exc:
        raise JobError("equations", str(exc)) from None
    echo = {"equations": [str(parse_poly(t)) for t in equations], "q": q, "variables": list(variables)}
    return cv, echo


# -- output helpers ---------------------------------------------------------------

def series_strings(series: TruncatedSeries) -> List[str]:
    return [str(c) for c in series]


def hodge_table(poly: MultiPoly) -> Dict[str, int]:
    return hodge_echo(hodge_numbers(poly))


# -- commands -------------------------------------------------------------------

def cmd_cycle_index(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    if isinstance(doc, dict) and "kind" in doc:
        doc = {"group": doc}
    _reject_unknown(doc, ("group",), "")
    G, echo = parse_group(_get(doc, "group", ""), caps)
    return {"group": echo}, {"order": len(G), "cycle_index": str(cycle_index(G))}


FAMILIES = ("symmetric", "alternating")


def _family(doc: Dict) -> str:
    family = _get(doc, "family", "", "symmetric", str)
    if family not in FAMILIES:
        raise JobError("family", f"expected one of {list(FAMILIES)}")
    return family


def _u_value(doc: Dict):
    if "u" not in doc:
        return None
    raw = doc["u"]
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise JobError("u", "expected an integer or rational string")
    try:
        return parse_rational(str(raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise JobError("u", str(exc)) from None


def cmd_quotient_series(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("family", "data", "N", "u"), "")
    family = _family(doc)
    phi, data_echo, _ = parse_data(_get(doc, "data", ""), caps)
    N = _trunc(doc, caps)
    u = _u_value(doc)
    echo = {"family": family, "data": data_echo, "N": N}
    result: Dict[str, Any] = {}
    if family == "symmetric":
        gf = sym_generating_function(phi, N)
        series = gf.expansion
        result["numerator"] = str(gf.numerator)
        result["denominator"] = str(gf.denominator)
    else:
        series = alt_generating_function(phi, N)
    if u is not None:
        echo["u"] = str(u)
        series = specialize_u(series, u)
    result["series"] = series_strings(series)
    return echo, result


def cmd_hodge(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("hodge", "family", "group", "N"), "")
    hodge = parse_hodge(_get(doc, "hodge", ""), "hodge")
    if "group" in doc:
        if "family" in doc or "N" in doc:
            raise JobError("group", "give either a group or a family with N, not both")
        G, gecho = parse_group(doc["group"], caps)
        poly = hodge_quotient(G, hodge)
        return ({"hodge": hodge_echo(hodge), "group": gecho},
                {"hodge_polynomial": str(poly), "hodge_numbers": hodge_table(poly)})
    family = _family(doc)
    N = _trunc(doc, caps)
    series = (cheah_hodge_series if family == "symmetric" else alt_cheah_hodge_series)(hodge, N)
    return ({"hodge": hodge_echo(hodge), "family": family, "N": N},
            {"series": series_strings(series), "hodge_numbers": [hodge_table(c) for c in series]})


def cmd_point_count(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("group", "counts", "equations", "q", "variables"), "")
    G, gecho = parse_group(_get(doc, "group", ""), caps)
    cv, cecho = parse_counts(doc, caps, G.n)
    if len(cv) < G.n:
        raise JobError("counts", f"need {G.n} point counts, got {len(cv)}")
    try:
        value = quotient_point_count(G, cv)
    except ValueError as exc:
        raise JobError("counts", str(exc)) from None
    return {"group": gecho, **cecho}, {"counts": list(cv.counts), "point_count": value}


def _zeta(doc: Dict, caps: Caps, fn: Callable) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("counts", "equations", "q", "variables", "N"), "")
    if "counts" in doc:
        N = _trunc(doc, caps, default=len(doc["counts"]) if isinstance(doc["counts"], list) else None)
    else:
        N = _trunc(doc, caps)
    cv, cecho = parse_counts(doc, caps, N)
    if len(cv) < N:
        raise JobError("counts", f"need {N} point counts, got {len(cv)}")
    try:
        series = fn(cv, N)
    except ValueError as exc:
        raise JobError("counts", str(exc)) from None
    return {**cecho, "N": N}, {"counts": list(cv.counts), "series": series_integers(series)}


def cmd_zeta(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    return _zeta(doc, caps, zeta_from_counts)


def cmd_alt_zeta(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    return _zeta(doc, caps, alt_zeta_from_counts)


def cmd_polya(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("group", "colors"), "")
    G, gecho = parse_group(_get(doc, "group", ""), caps)
    colors = _get(doc, "colors", "", kind=int)
    if colors < 1:
        raise JobError("colors", "need at least one color")
    return ({"group": gecho, "colors": colors},
            {"count": polya_count(G, colors), "weight_polynomial": str(polya_weight_poly(G, colors))})


def cmd_discriminant_census(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("n", "q"), "")
    n = _get(doc, "n", "", kind=int)
    q = _get(doc, "q", "", kind=int)
    if n < 2:
        raise JobError("n", "discriminants need n >= 2")
    try:
        census = discriminant_census(n, q, caps.enum_budget)
    except ValueError as exc:
        raise JobError("q", str(exc)) from None
    return ({"n": n, "q": q},
            {"discriminant": str(discriminant_poly(n)), "zero": census.zero, "qr": census.qr,
             "qnr": census.qnr, "double_cover": census.double_cover})


def cmd_oracle_check(doc: Dict, caps: Caps) -> Tuple[Dict, Dict]:
    _reject_unknown(doc, ("seed", "max_n", "max_dims", "maps_per_group", "random_groups"), "")
    seed = _get(doc, "seed", "", 0, int)
    max_n = _get(doc, "max_n", "", 3, int)
    max_dims = _int_list(_get(doc, "max_dims", "", [1, 1, 1]), "max_dims")
    maps = _get(doc, "maps_per_group", "", 2, int)
    randoms = _get(doc, "random_groups", "", 1, int)
    if max_n < 1 or maps < 0 or randoms < 0:
        raise JobError("", "max_n must be positive and counts nonnegative")
    if not any(max_dims):
        raise JobError("max_dims", "at least one degree must allow a nonzero dimension")
    results = run_equivalence(seed, max_n, max_dims, maps, randoms, caps.oracle_cap)
    passed = sum(r.ok for r in results)
    instances = [{"group": r.group, "n": r.n, "dims": list(r.dims),
                  "status": "PASS" if r.ok else "FAIL"} for r in results]
    summary = f"{'PASS' if passed == len(results) else 'FAIL'} {passed}/{len(results)}"
    echo = {"seed": seed, "max_n": max_n, "max_dims": max_dims, "maps_per_group": maps, "random_groups": randoms}
    return echo, {"summary": summary, "instances": instances}


COMMANDS: Dict[str, Tuple[Callable, str]] = {
    "cycle-index": (cmd_cycle_index, "cycle index of a permutation group"),
    "quotient-series": (cmd_quotient_series, "Lefschetz series of symmetric or alternating powers"),
    "hodge": (cmd_hodge, "Hodge polynomials of symmetric/alternating powers or of a quotient"),
    "point-count": (cmd_point_count, "F_q-points of X^n/G from point counts of X"),
    "zeta": (cmd_zeta, "zeta series from point counts"),
    "alt-zeta": (cmd_alt_zeta, "alternating-power point-count series"),
    "polya": (cmd_polya, "colorings up to symmetry and the weight polynomial"),
    "discriminant-census": (cmd_discriminant_census, "quadratic-character census of the discriminant"),
    "oracle-check": (cmd_oracle_check, "seeded formula-versus-oracle equivalence run"),
}


def run_job(command: str, doc: Any, caps: Caps) -> Dict:
    """Evaluate a job document and return the result document (without timing)."""
    if command not in COMMANDS:
        raise JobError("", f"unknown command {command!r}")
    if isinstance(doc, dict) and doc.get("schema") == SCHEMA and "input" in doc:
        doc = doc["input"]
    if not isinstance(doc, dict):
        raise JobError("", "the job document must be a JSON object")
    echo, result = COMMANDS[command][0](doc, caps)
    return {"schema": SCHEMA, "command": command, "input": echo, "result": result, "caps": caps.as_dict()}


def dumps(document: Dict) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _load(source: str) -> Any:
    if source == "-":
        text, label = sys.stdin.read(), "<stdin>"
    elif source.lstrip().startswith(("{", "[")):
        text, label = source, "<inline>"
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise JobError("", f"cannot read {source}: {exc.strerror}") from None
        label = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError("", f"{label}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyatrace", description="Cycle-index trace formulas and their oracles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("job", nargs="?", default="-",
                       help="JSON job: a file path, '-' for stdin (default) or an inline document")
        p.add_argument("--trunc", type=int, help="default truncation order N (env POLYA_TRUNC, default 10)")
        p.add_argument("--group-cap", type=int, help="largest group to enumerate (env POLYA_GROUP_CAP)")
        p.add_argument("--oracle-cap", type=int, help="largest tensor power for the oracle (env POLYA_ORACLE_CAP)")
        p.add_argument("--enum-budget", type=int, help="finite-field enumeration budget (env POLYA_ENUM_BUDGET)")
        p.add_argument("--timing", action="store_true", help="add wall-clock seconds (breaks byte-stability)")
    return parser


def main(argv: List[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        caps = Caps.resolve(args)
        doc = _load(args.job)
        start = time.perf_counter()
        document = run_job(args.command, doc, caps)
        if args.timing:
            document["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    except JobError as exc:
        print(f"polyatrace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"polyatrace: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OracleMismatchError as exc:
        print(f"polyatrace: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    sys.stdout.write(dumps(document))
    if args.command == "oracle-check" and not document["result"]["summary"].startswith("PASS"):
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

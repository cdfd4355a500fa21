"""Spec analysis records, sweep checks and the search predicate language."""

from __future__ import annotations

import ast
import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable, Iterator

from . import __version__
from .binary import (
    DATABASE_OPTIMALITY,
    InvalidParameters,
    analyze_code,
    gray_image,
    griesmer_check,
    verdicts,
)
from .construction import (
    TYPES,
    DefiningSetSpec,
    LeeDistribution,
    claimed_code_size,
    distribution_bruteforce,
    distribution_closed_form,
    exhaustive_max_m,
    format_enumerator,
    kernel_size,
    lee_enumerator,
    materialize,
)
from .boolean import mask_subset

CHECKS = ("tables", "params", "orthogonality", "minimality", "griesmer", "theta")
MAX_SWEEP_M = 8
MAX_MINIMALITY_M = 4


def per_message_distribution(spec: DefiningSetSpec) -> tuple[LeeDistribution, str]:
    if spec.m <= exhaustive_max_m():
        return distribution_bruteforce(spec, "encode"), "encode"
    return distribution_bruteforce(spec, "formula"), "formula"


def analyze_spec(spec: DefiningSetSpec) -> dict:
    """Everything known about one spec, as a JSON-ready dict without timestamps."""
    ods = materialize(spec)
    per_message, method = per_message_distribution(spec)
    closed = distribution_closed_form(spec)
    kernel = kernel_size(spec)
    per_codeword = per_message.per_codeword(kernel)
    code = gray_image(ods)
    report = analyze_code(code)
    verdict = verdicts(spec, report, closed)
    preview = [str(d) for d in ods.elements[:8]]
    return {
        "spec": spec.to_dict(),
        "defining_set": {"size": len(ods), "size_closed_form": spec.size_closed_form(), "first_elements": preview},
        "code_size": 4**spec.m // kernel,
        "claimed_code_size": claimed_code_size(spec),
        "kernel_size": kernel,
        "distribution_method": method,
        "lee_distribution": {
            "per_message": per_message.to_dict(),
            "per_codeword": per_codeword.to_dict(),
            "closed_form_per_message": closed.to_dict(),
        },
        "tables_match": per_message == closed,
        "lee_enumerator": format_enumerator(lee_enumerator(per_codeword, len(ods))),
        "gray": report.to_dict(),
        "verdicts": verdict.to_dict(),
        "verdicts_ok": verdict.ok,
        "database_optimality": DATABASE_OPTIMALITY,
    }


def catalog_record(spec: DefiningSetSpec, analysis: dict | None = None) -> dict:
    analysis = analysis if analysis is not None else analyze_spec(spec)
    gray = analysis["gray"]
    return {
        "spec": analysis["spec"],
        "lee_enumerator": analysis["lee_enumerator"],
        "params": [gray["n"], gray["k"], gray["d"]],
        "flags": {
            key: gray[key]
            for key in (
                "self_orthogonal", "all_weights_div4", "minimal_exhaustive", "ashikhmin_barg",
                "griesmer_equality", "griesmer_excludes_d_plus_1", "equidistant",
            )
        },
        "num_weights": gray["num_nonzero_weights"],
        "verdicts": analysis["verdicts"],
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def distribution_csv(analysis: dict) -> str:
    dist = analysis["lee_distribution"]
    weights = sorted({int(w) for part in dist.values() for w in part})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "per_message", "per_codeword", "closed_form_per_message"])
    for w in weights:
        key = str(w)
        writer.writerow([
            w,
            dist["per_message"].get(key, 0),
            dist["per_codeword"].get(key, 0),
            dist["closed_form_per_message"].get(key, 0),
        ])
    return buf.getvalue()


@dataclass
class SweepConfig:
    m_values: list[int]
    types: list[str] = field(default_factory=lambda: list(TYPES))
    sides: list[str] = field(default_factory=lambda: ["left", "right"])
    max_subset_size: int | None = None
    checks: list[str] = field(default_factory=lambda: list(CHECKS))

    def __post_init__(self) -> None:
        if not self.m_values:
            raise ValueError("empty m range")
        if min(self.m_values) < 1 or max(self.m_values) > MAX_SWEEP_M:
            raise ValueError(f"m range must lie within [1, {MAX_SWEEP_M}]")
        if "minimality" in self.checks and max(self.m_values) > MAX_MINIMALITY_M:
            raise ValueError(f"minimality checks need m <= {MAX_MINIMALITY_M}")
        for t in self.types:
            if t not in TYPES:
                raise ValueError(f"unknown type {t!r}")
        for s in self.sides:
            if s not in ("left", "right"):
                raise ValueError(f"unknown side {s!r}")
        for c in self.checks:
            if c not in CHECKS:
                raise ValueError(f"unknown check {c!r}")

    def specs(self) -> Iterator[DefiningSetSpec]:
        """Non-degenerate specs in sweep order: m, type, side, then M and N by bitmask."""
        for m in self.m_values:
            for t in self.types:
                for side in self.sides:
                    for mask_m in range(1 << m):
                        if self.max_subset_size is not None and mask_m.bit_count() > self.max_subset_size:
                            continue
                        for mask_n in range(1 << m):
                            if self.max_subset_size is not None and mask_n.bit_count() > self.max_subset_size:
                                continue
                            spec = DefiningSetSpec(m, t, tuple(mask_subset(mask_m)), tuple(mask_subset(mask_n)), side)
                            if not spec.is_degenerate:
                                yield spec


def parse_m_range(text: str) -> list[int]:
    """``"3"``, ``"1..4"`` or ``"1-4"``."""
    text = text.strip()
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            lo_i, hi_i = int(lo), int(hi)
            if lo_i > hi_i:
                raise ValueError(f"empty m range {text!r}")
            return list(range(lo_i, hi_i + 1))
    return [int(text)]


@dataclass
class Mismatch:
    spec: str
    check: str
    detail: str


def check_spec(spec: DefiningSetSpec, checks: Iterable[str]) -> list[Mismatch]:
    """Run the requested checks on one spec; an empty list means everything agreed."""
    checks = set(checks)
    out: list[Mismatch] = []
    closed = distribution_closed_form(spec)
    if "tables" in checks:
        brute = distribution_bruteforce(spec)
        if brute != closed:
            diff = {
                w: (brute.entries.get(w, 0), closed.entries.get(w, 0))
                for w in sorted(set(brute.entries) | set(closed.entries))
                if brute.entries.get(w, 0) != closed.entries.get(w, 0)
            }
            out.append(Mismatch(str(spec), "tables", f"weight: (bruteforce, table) {diff}"))
        kernel = kernel_size(spec)
        if 4**spec.m // kernel != claimed_code_size(spec):
            out.append(Mismatch(str(spec), "tables", f"code size {4**spec.m // kernel} != claimed {claimed_code_size(spec)}"))
    needs_code = checks & {"params", "orthogonality", "minimality", "griesmer", "theta"}
    if not needs_code:
        return out
    report = analyze_code(gray_image(spec))
    verdict = verdicts(spec, report, closed)
    claim_groups = {
        "params": {"length", "dimension", "min_distance", "min_distance_table", "num_weights", "num_weights_table"},
        "orthogonality": {"self_orthogonal"},
        "minimality": {"minimal"},
        "theta": {"theta3_optimal", "theta4_optimal"},
    }
    for group, names in claim_groups.items():
        if group not in checks:
            continue
        for claim in verdict.claims:
            if claim.name in names and not claim.ok:
                out.append(Mismatch(
                    str(spec), group,
                    f"{claim.name}: predicted {_fmt_params(verdict.predicted)} measured {list(verdict.measured)}",
                ))
    if "orthogonality" in checks and report.all_weights_div4 and not report.self_orthogonal:
        out.append(Mismatch(str(spec), "orthogonality", "all weights divisible by 4 but not self-orthogonal"))
    if "minimality" in checks and report.k and report.ashikhmin_barg and report.minimal_exhaustive is False:
        out.append(Mismatch(str(spec), "minimality", "Ashikhmin-Barg holds but code is not minimal"))
    if "griesmer" in checks and report.d is not None:
        try:
            griesmer_check(report.n, report.k, report.d)
        except InvalidParameters as exc:
            out.append(Mismatch(str(spec), "griesmer", str(exc)))
    return out


def _fmt_params(p) -> str:
    return f"[{p[0]}, {p[1]}, {p[2]}]"


# Search predicates -------------------------------------------------------

_ALLOWED_NODES = (
    ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.UnaryOp, ast.Not, ast.Compare,
    ast.Eq, ast.NotEq, ast.Lt, ast.LtE, ast.Gt, ast.GtE, ast.Name, ast.Load, ast.Constant,
)


def predicate_fields(record: dict) -> dict:
    spec = record["spec"]
    flags = record["flags"]
    n, k, d = record["params"]
    claims = record["verdicts"]["claims"]
    return {
        "m": spec["m"], "type": spec["type"], "side": spec["side"],
        "n": n, "k": k, "d": d,
        "num_weights": record["num_weights"],
        "minimal": bool(flags["minimal_exhaustive"]),
        "self_orthogonal": flags["self_orthogonal"],
        "div4": flags["all_weights_div4"],
        "ashikhmin_barg": flags["ashikhmin_barg"],
        "griesmer_equality": flags["griesmer_equality"],
        "griesmer_optimal": flags["griesmer_excludes_d_plus_1"],
        "equidistant": flags["equidistant"],
        "theta3": claims.get("theta3_optimal", {}).get("applies", False),
        "theta4": claims.get("theta4_optimal", {}).get("applies", False),
    }


def compile_predicate(expr: str) -> Callable[[dict], bool]:
    """Compile e.g. ``"num_weights <= 3 and minimal"`` into a record filter.

    Only comparisons, ``and``/``or``/``not``, field names and literals are allowed.
    """
    tree = ast.parse(expr.strip() or "True", mode="eval")
    known = set(predicate_fields(_DUMMY_RECORD))
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise ValueError(f"unsupported syntax in predicate: {type(node).__name__}")
        if isinstance(node, ast.Name) and node.id not in known and node.id not in ("True", "False"):
            raise ValueError(f"unknown field {node.id!r}; known: {sorted(known)}")
    code = compile(tree, "<predicate>", "eval")

    def predicate(record: dict) -> bool:
        return bool(eval(code, {"__builtins__": {}}, predicate_fields(record)))

    return predicate


_DUMMY_RECORD = {
    "spec": {"m": 1, "type": "T1", "side": "left"},
    "flags": {
        "minimal_exhaustive": True, "self_orthogonal": True, "all_weights_div4": True,
        "ashikhmin_barg": True, "griesmer_equality": True, "griesmer_excludes_d_plus_1": True,
        "equidistant": True,
    },
    "params": [0, 0, 0],
    "num_weights": 0,
    "verdicts": {"claims": {}},
}


def records_csv(records: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "type", "side", "M", "N", "n", "k", "d", "num_weights", "minimal",
                     "self_orthogonal", "griesmer_equality", "equidistant", "lee_enumerator"])
    for r in records:
        s, f = r["spec"], r["flags"]
        writer.writerow([
            s["m"], s["type"], s["side"], " ".join(map(str, s["M"])), " ".join(map(str, s["N"])),
            *r["params"], r["num_weights"], f["minimal_exhaustive"], f["self_orthogonal"],
            f["griesmer_equality"], f["equidistant"], r["lee_enumerator"],
        ])
    return buf.getvalue()

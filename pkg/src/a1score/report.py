from __future__ import annotations

from typing import Dict, List

from .catalog import Ranking
from .complexity import to_text
from .comparator import ComparisonVerdict, ProductEquality, ScanRange, Winner, canonical_product
from .metric import A1Config, AlgorithmProfile

KV_KEYS = (
    "winner", "winner_name", "branch", "a1_x", "a1_y", "product_equal", "oracle_winner",
    "oracle_agrees", "crossovers", "scan_gaps", "n", "x_name", "y_name",
)


def _crossover_text(v: ComparisonVerdict) -> str:
    return ";".join(str(c) for c in v.crossovers) or "none"


def verdict_fields(v: ComparisonVerdict) -> Dict[str, str]:
    return {
        "winner": v.winner.value,
        "winner_name": v.winner_name(),
        "branch": v.branch.value,
        "a1_x": repr(v.a1_x),
        "a1_y": repr(v.a1_y),
        "product_equal": v.product_equality.value,
        "oracle_winner": v.oracle_winner.value,
        "oracle_agrees": str(v.oracle_agrees).lower(),
        "crossovers": _crossover_text(v),
        "scan_gaps": str(len(v.scan_gaps)),
        "n": repr(v.n_star),
        "x_name": v.x_name,
        "y_name": v.y_name,
    }


def format_kv(v: ComparisonVerdict) -> str:
    fields = verdict_fields(v)
    return "".join(f"{k}={fields[k]}\n" for k in KV_KEYS)


def parse_kv(text: str) -> Dict[str, str]:
    out = {}
    for line in text.splitlines():
        if "=" in line:
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def format_text(v: ComparisonVerdict, x: AlgorithmProfile, y: AlgorithmProfile,
                config: A1Config, scan_range: ScanRange) -> str:
    lines: List[str] = [
        f"A1-Score comparison at n = {v.n_star:g} (xi = {config.xi:g}, log base {config.eval.log_base:g})",
        "",
    ]
    width = max(len(x.name), len(y.name))
    for label, p, a1 in (("X", x, v.a1_x), ("Y", y, v.a1_y)):
        lines.append(f"  [{label}] {p.name:<{width}}  time = {to_text(p.time)}, space = {to_text(p.space)}")
        lines.append(f"      {'':<{width}}  A1 = {a1:.6f}   time*space = {canonical_product(p)}")
    lines.append("")
    if v.product_equality is ProductEquality.SYMBOLIC:
        lines.append("Products are symbolically equal: equal-product branch, the LOWER A1-Score wins.")
    else:
        lines.append("Products differ: unequal-product branch, the HIGHER A1-Score wins.")
    if v.winner is Winner.INDISTINGUISHABLE:
        lines.append("Verdict: indistinguishable (A1-Scores tie at this n)")
    else:
        lines.append(f"Verdict: {v.winner_name()} is more efficient ({v.branch.value} branch)")
    if v.crossovers:
        spans = ", ".join(f"[{c.lo:.6g}, {c.hi:.6g}]" for c in v.crossovers)
        lines.append(f"Crossovers over n in {scan_range}: A1 ordering flips on {spans}")
    else:
        lines.append(f"Crossovers over n in {scan_range}: none, ordering is stable")
    if v.scan_gaps:
        lines.append(f"  ({len(v.scan_gaps)} scan samples overflowed and were skipped)")
    oracle = v.winner_name(v.oracle_winner)
    if v.oracle_agrees:
        lines.append(f"Product/sum growth oracle: {oracle} (agrees)")
    else:
        lines.append(
            f"WARNING: oracle disagrees: hypothesis picks {v.winner_name()}, "
            f"product/sum growth oracle picks {oracle}"
        )
    return "\n".join(lines) + "\n"


def format_ranking(r: Ranking, n_star: float) -> str:
    names = list(r.names)
    cell = max(max(len(n) for n in names), len("indistinguishable") // 2, 3)
    lines = [f"Pairwise A1-Score verdicts at n = {n_star:g} (pairwise, not guaranteed transitive)", ""]
    lines.append(" " * (cell + 2) + "  ".join(f"{n:<{cell}}" for n in names))
    for a in names:
        row = []
        for b in names:
            if a == b:
                row.append("-")
            else:
                w = r.winner_of(a, b)
                row.append("=" if w == Winner.INDISTINGUISHABLE.value else w)
        lines.append(f"{a:<{cell}}  " + "  ".join(f"{c:<{cell}}" for c in row))
    lines.append("")
    lines.append("('=' marks indistinguishable pairs)")
    lines.append("")
    lines.append("Win counts:")
    for i, name in enumerate(r.order(), 1):
        lines.append(f"  {i}. {name:<{cell}}  wins={r.wins[name]}  ties={r.ties[name]}")
    disagreements = [k for k, v in r.verdicts.items() if not v.oracle_agrees]
    if disagreements:
        pairs = ", ".join(f"{a} vs {b}" for a, b in disagreements)
        lines.append(f"Oracle disagrees on: {pairs}")
    return "\n".join(lines) + "\n"

"""JSON / CSV / text renderings of inequality lists and polytopes.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral) so that
nothing is rounded on the way out.  Reduced words use 1-based Bourbaki
indices.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .horn import Inequality, Kind
from .rootsys import CartanType, parse_group
from .weyl import from_word


def rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> Fraction:
    return Fraction(str(s))


def inequality_to_dict(ineq: Inequality) -> dict:
    return {
        "kind": ineq.kind.value,
        "beta": None if ineq.beta is None else ineq.beta + 1,
        "d": ineq.d,
        "words": ineq.words,
        "lhs": [[rat(x) for x in part] for part in ineq.lhs],
        "rhs": rat(ineq.rhs),
    }


def inequality_from_dict(ct: CartanType, obj: dict) -> Inequality:
    kind = Kind(obj["kind"])
    witnesses = None
    if kind is Kind.HORN:
        witnesses = tuple(from_word(ct, [i - 1 for i in w]) for w in obj["words"])
    return Inequality(
        kind=kind,
        lhs=tuple(tuple(parse_rat(x) for x in part) for part in obj["lhs"]),
        rhs=parse_rat(obj["rhs"]),
        beta=None if obj["beta"] is None else obj["beta"] - 1,
        d=obj["d"],
        witnesses=witnesses,
    )


def inequalities_to_json(group: str, mode: str, ineqs: list[Inequality]) -> str:
    doc = {
        "group": group,
        "mode": mode,
        "count": len(ineqs),
        "inequalities": [inequality_to_dict(i) for i in ineqs],
    }
    return json.dumps(doc, indent=1) + "\n"


def inequalities_from_json(text: str) -> tuple[str, str, list[Inequality]]:
    doc = json.loads(text)
    ct = parse_group(doc["group"])
    ineqs = [inequality_from_dict(ct, o) for o in doc["inequalities"]]
    if len(ineqs) != doc["count"]:
        raise ValueError("count field disagrees with the inequality list")
    return doc["group"], doc["mode"], ineqs


def _word(w) -> str:
    return "".join(f"s{i}" for i in w) or "e"


def inequalities_to_csv(ineqs: list[Inequality]) -> str:
    buf = io.StringIO()
    n = len(ineqs[0].lhs[0]) if ineqs else 0
    header = ["kind", "beta", "d", "w1", "w2", "w3"]
    header += [f"t{s}_{a}" for s in (1, 2, 3) for a in range(1, n + 1)] + ["rhs"]
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(header)
    for ineq in ineqs:
        words = ineq.words
        out.writerow(
            [ineq.kind.value, "" if ineq.beta is None else ineq.beta + 1, "" if ineq.d is None else ineq.d]
            + [_word(w) if ineq.kind is Kind.HORN else "" for w in words]
            + [rat(x) for part in ineq.lhs for x in part]
            + [rat(ineq.rhs)]
        )
    return buf.getvalue()


def _term(c: Fraction, name: str) -> str:
    if c == 1:
        return f"+ {name}"
    if c == -1:
        return f"- {name}"
    sign = "-" if c < 0 else "+"
    return f"{sign} {rat(abs(c))}*{name}"


def inequality_text(ineq: Inequality) -> str:
    terms = [
        _term(c, f"t{s + 1}[{a + 1}]")
        for s, part in enumerate(ineq.lhs)
        for a, c in enumerate(part)
        if c
    ]
    body = " ".join(terms).lstrip("+ ")
    if body.startswith("- "):
        body = "-" + body[2:]
    tag = ineq.kind.value
    if ineq.kind is Kind.HORN:
        ws = ", ".join(_word(w) for w in ineq.words)
        tag = f"HORN beta={ineq.beta + 1} d={ineq.d} ({ws})"
    return f"{body} <= {rat(ineq.rhs)}    [{tag}]"


def inequalities_to_text(group: str, mode: str, ineqs: list[Inequality]) -> str:
    lines = [inequality_text(i) for i in ineqs]
    lines.append(f"# {group} {mode}: {len(ineqs)} inequalities")
    return "\n".join(lines) + "\n"

"""Serialization of scenario reports (JSON, CSV, markdown).

All three writers are deterministic: the report dict is built in a fixed
order and no wall-clock data is included unless asked for.
"""
from __future__ import annotations

import csv
import io
import json

SCHEMA = "hodgelab.report/1"


def to_json(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _hilbert_rows(doc):
    ideals = doc["ideals"]
    table = [("I1", ideals["I1"]["hilbert"]), ("I2", ideals["I2"]["hilbert"]),
             ("I1_cap_I2", ideals["intersection"]["hilbert"]), ("I1_plus_I2", ideals["sum"]["hilbert"])]
    return table


def to_csv(doc):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "name", "key", "value"])
    for name, value in doc["config"].items():
        w.writerow(["config", name, "", value if not isinstance(value, list) else " ".join(map(str, value))])
    for name, vec in _hilbert_rows(doc):
        for t, h in enumerate(vec):
            w.writerow(["hilbert", name, t, h])
    for name, value in doc["tangent"].items():
        w.writerow(["tangent", name, "", value])
    gram = doc.get("gram")
    if gram:
        w.writerow(["gram", "shape", "", f"{gram['shape'][0]}x{gram['shape'][1]}"])
        w.writerow(["gram", "generic_rank", "", gram["generic_rank"]])
        for label, count in gram["census"].items():
            w.writerow(["census", label, "", count])
        for c in gram["critical"]:
            w.writerow(["critical", c["value"] if c["value"] is not None else c["polynomial"], "corank",
                        c["corank"]])
        for smp in doc["excess"]["samples"]:
            w.writerow(["excess", smp["nu"], smp["verdict"], smp["excess"]])
    for ref, res in doc["criterion"].items():
        w.writerow(["criterion", ref, "holds", res["holds"]])
    for c in doc["checks"]:
        w.writerow(["check", c["name"], "passed", c["passed"]])
    return buf.getvalue()


def _md_table(header, rows):
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        out.append("| " + " | ".join(str(x) for x in r) + " |")
    return out


def to_markdown(doc):
    cfg = doc["config"]
    lines = [f"# Scenario {cfg['family']} (k={cfg['k']}, d={cfg['d']})", ""]
    lines.append(f"f = `{doc['hypersurface']['f']}`")
    lines.append("")
    lines.append(f"Pi1 = V({', '.join(doc['planes']['Pi1'])}), Pi2 = V({', '.join(doc['planes']['Pi2'])})")
    lines.append("")
    for note in doc["notes"]:
        lines.append(f"> note: {note}")
        lines.append("")
    lines.append("## Hilbert functions")
    lines.append("")
    table = _hilbert_rows(doc)
    width = max(len(v) for _, v in table)
    header = ["t"] + [name for name, _ in table]
    rows = [[t] + [v[t] if t < len(v) else "" for _, v in table] for t in range(width)]
    lines += _md_table(header, rows)
    lines.append("")
    tan = doc["tangent"]
    lines.append(f"Joint tangent codimension h_(I1 cap I2)(d) = {tan['joint_codim']}")
    lines.append("")
    gram = doc.get("gram")
    if gram:
        lines.append("## Gram matrix of psi_1 + nu psi_2")
        lines.append("")
        lines.append(f"Shape {gram['shape'][0]} x {gram['shape'][1]}, generic rank {gram['generic_rank']}, "
                     f"{gram['zero_rows']} zero rows, {gram['blocks']} blocks.")
        lines.append("")
        lines.append("### Block census")
        lines.append("")
        lines += _md_table(["block", "count"], gram["census"].items())
        lines.append("")
        crit = ", ".join(f"{c['value'] if c['value'] is not None else c['polynomial']} (corank {c['corank']})"
                         for c in gram["critical"]) or "none"
        lines.append(f"Critical nu: {crit}")
        lines.append("")
        lines.append("### Excess by nu")
        lines.append("")
        lines += _md_table(["nu", "rank", "excess", "combined codim", "verdict"],
                           [(s["nu"], s["rank"], s["excess"], s["combined_codim"], s["verdict"])
                            for s in doc["excess"]["samples"]])
        lines.append("")
    lines.append("## Sufficient criterion")
    lines.append("")
    rows = []
    for ref, res in doc["criterion"].items():
        rows.append((ref, f"{res['shape'][0]}x{res['shape'][1]}", res["rank"],
                     "infeasible" if res["infeasible"] else ("holds" if res["holds"] else "fails")))
    lines += _md_table(["reference", "shape", "rank", "result"], rows)
    lines.append("")
    if doc.get("assumptions"):
        lines.append("## Assumptions")
        lines.append("")
        lines += [f"- {a}" for a in doc["assumptions"]]
        lines.append("")
    lines.append("## Checks")
    lines.append("")
    lines += _md_table(["check", "expected", "actual", "passed"],
                       [(c["name"], c["expected"], c["actual"], "yes" if c["passed"] else "NO")
                        for c in doc["checks"]])
    lines.append("")
    return "\n".join(lines)


WRITERS = {"json": to_json, "csv": to_csv, "markdown": to_markdown}


def render(doc, fmt="json"):
    try:
        writer = WRITERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None
    return writer(doc)


def emit_report(doc, fmt="json", path=None):
    text = render(doc, fmt)
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text

"""habitat.pipeline.report.
~~~~~~~~~~~~~~~~~~~~~~~~~

The final run report, checked against the bundled JSON schema and
rendered as JSON and Markdown.
"""

import json
import logging
import os
from dataclasses import dataclass

import jsonschema

from .errors import InvalidReport

log = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "report.schema.json")

_schema = None


def get_report_schema():
    global _schema
    if _schema is None:
        with open(SCHEMA_PATH, encoding="utf-8") as f:
            _schema = json.load(f)
    return _schema


def validate_report(data):
    try:
        jsonschema.validate(data, get_report_schema())
    except jsonschema.ValidationError as error:
        path = "/".join(str(p) for p in error.absolute_path) or "<root>"
        raise InvalidReport(description=f"{path}: {error.message}") from error


@dataclass
class HabitatReport:
    species: dict
    data: dict
    dag: dict
    effects: list
    explanations: list
    summary: dict
    provenance: dict

    def __post_init__(self):
        effect_vars = [e.treatment for e in self.effects]
        explained_vars = [e.variable for e in self.explanations]
        if effect_vars != explained_vars:
            raise InvalidReport(description="effects and explanations are not aligned")

    def to_dict(self):
        return {
            "species": self.species,
            "data": self.data,
            "dag": self.dag,
            "effects": [e.to_dict() for e in self.effects],
            "explanations": [e.to_dict() for e in self.explanations],
            "summary": self.summary,
            "provenance": self.provenance,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_markdown(self):
        return render_markdown(self)


def _fmt(value, spec="+.3f"):
    if value is None:
        return "n/a"
    return format(value, spec)


def render_markdown(report):
    species = report.species
    data = report.data
    names = report.dag["variables"]
    lines = [f"# Habitat report: {species['matched_name']}", ""]

    lines += ["## Species", ""]
    lines.append(f"- Input: {species['input']}")
    lines.append(f"- Matched name: {species['matched_name']} (GBIF key {species['taxon_key']})")
    if species.get("confidence") is not None:
        lines.append(f"- Identification confidence: {species['confidence']:.3f}")
    lines.append("")

    bbox = data["bbox"]
    lines += ["## Data", ""]
    lines.append(f"- Presences: {data['n_presence']}")
    lines.append(f"- Pseudo-absences: {data['n_absence']}")
    lines.append(f"- Dropped on missing climate values: {data['n_dropped_nodata']}")
    lines.append(
        f"- Bounding box: lat {bbox['lat_min']:.3f}..{bbox['lat_max']:.3f}, "
        f"lon {bbox['lon_min']:.3f}..{bbox['lon_max']:.3f}"
    )
    lines.append("")

    lines += ["## Causal graph", ""]
    lines.append(f"Threshold {report.dag['threshold']:.2f}, {len(report.dag['edges'])} edges.")
    lines.append("")
    if report.dag["edges"]:
        lines += ["| From | To | Weight |", "|---|---|---|"]
        for edge in report.dag["edges"]:
            lines.append(f"| {names[edge['from']]} | {names[edge['to']]} | {edge['weight']:+.3f} |")
        lines.append("")

    lines += ["## Effects on presence", ""]
    lines += [
        "| Variable | ATE | 95% CI | Naive | Adjusted for |",
        "|---|---|---|---|---|",
    ]
    for est in report.effects:
        lo, hi = est.ci95
        adjusted = ", ".join(est.adjustment_set) or "-"
        if est.fallback:
            adjusted += " (naive fallback)"
        lines.append(
            f"| {est.treatment} | {_fmt(est.ate)} | [{_fmt(lo)}, {_fmt(hi)}] "
            f"| {_fmt(est.naive_diff)} | {adjusted} |"
        )
    lines.append("")

    lines += ["## Explanations", ""]
    for exp in report.explanations:
        lines.append(f"### {exp.variable}: {exp.long_name}")
        lines.append("")
        lines.append(f"- Rule: {exp.rule_text}")
        if exp.llm_text:
            lines.append(f"- LLM: {exp.llm_text}")
        lines.append("")

    lines += ["## Summary", "", report.summary["rule"], ""]
    if report.summary.get("llm"):
        lines += [f"LLM: {report.summary['llm']}", ""]

    prov = report.provenance
    lines += ["## Provenance", ""]
    lines.append(f"- Run: {prov['run_id']} (seed {prov['seed']})")
    lines.append(f"- Config hash: {prov['config_hash']}")
    lines.append(f"- GBIF queries: {len(prov['query_urls'])}")
    return "\n".join(lines) + "\n"


def write_report(run_dir, report):
    """Validate ``report`` and write ``report.json`` and ``report.md``."""
    data = report.to_dict()
    validate_report(data)
    json_path = os.path.join(run_dir, "report.json")
    md_path = os.path.join(run_dir, "report.md")
    with open(json_path, "w", encoding="utf-8") as f:
        f.write(report.to_json())
    with open(md_path, "w", encoding="utf-8") as f:
        f.write(report.to_markdown())
    log.info("Wrote %s and %s", json_path, md_path)
    return json_path, md_path

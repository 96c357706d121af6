"""Axiom harness reports: a line-oriented text file and a JSON twin."""

import json
from pathlib import Path
from typing import Sequence, Tuple, Union

from .text import format_operand

PathLike = Union[str, Path]


def _expectation(expected) -> str:
    if expected is None:
        return "measured"
    return "must hold" if expected else "counterexample required"


def format_report_text(target: str, reports: Sequence) -> str:
    lines = [f"target: {target}"]
    for r in reports:
        status = "ok" if r.satisfied else "VIOLATED"
        lines.append(f"{r.law}: {r.passes}/{r.trials} passed "
                     f"({r.pass_rate:.2%}, {_expectation(r.expected)}) {status}")
    for r in reports:
        if not r.counterexamples:
            continue
        lines.append("")
        lines.append(f"# {r.law}: first counterexample")
        for i, operand in enumerate(r.counterexamples[0]):
            lines.append(f"# operand {i + 1}")
            lines.append(format_operand(operand))
            lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def report_to_dict(report) -> dict:
    return {
        'law': report.law,
        'trials': report.trials,
        'passes': report.passes,
        'pass_rate': report.pass_rate,
        'required': report.expected,
        'satisfied': report.satisfied,
        'counterexamples': [
            [format_operand(operand) for operand in operands]
            for operands in report.counterexamples
        ],
    }


def write_reports(target: str, reports: Sequence, output_dir: PathLike) -> Tuple[Path, Path]:
    """Write <target>.txt and <target>.json under output_dir."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    text_path = output_dir / f"{target}.txt"
    json_path = output_dir / f"{target}.json"
    text_path.write_text(format_report_text(target, reports))
    payload = {
        'target': target,
        'satisfied': all(r.satisfied for r in reports),
        'reports': [report_to_dict(r) for r in reports],
    }
    json_path.write_text(json.dumps(payload, indent=2) + "\n")
    return text_path, json_path

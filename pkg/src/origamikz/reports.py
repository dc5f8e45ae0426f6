"""Report envelope and canonical JSON serialization.

Every command builds one envelope: toolkit version, command, inputs, named
sections. Each section carries a status flag and a certification tag (exact,
evidence, or monte-carlo) so no numeric claim appears without its epistemic
level. JSON output is canonical (sorted keys, fixed indent, coerced plain
types), which makes parse-and-reserialize the identity on bytes.
"""

import json
from fractions import Fraction

from . import __version__

CERTIFICATIONS = ("exact", "evidence", "monte-carlo")


def envelope(command, inputs):
    return {
        "toolkit_version": __version__,
        "command": command,
        "inputs": inputs,
        "sections": {},
    }


def add_section(env, name, payload, certification="exact", status="ok"):
    assert certification in CERTIFICATIONS
    env["sections"][name] = {
        "status": status,
        "certification": certification,
        "data": payload,
    }


def _coerce(obj):
    """Recursively rewrite a report into JSON-native types: fractions to
    strings, sets to sorted lists, tuples to lists."""
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {str(k): _coerce(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [_coerce(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [_coerce(x) for x in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, float):
        return float(obj)
    if isinstance(obj, str):
        return obj
    if hasattr(obj, "item"):
        return obj.item()
    return str(obj)


def canonical_json(report):
    """Canonical byte representation; loads() then canonical_json() is the
    identity on this output."""
    return json.dumps(_coerce(report), indent=1, sort_keys=True,
                      ensure_ascii=True) + "\n"


def round_trips(text):
    return canonical_json(json.loads(text)) == text


def write_json(report, path):
    text = canonical_json(report)
    with open(path, "w") as f:
        f.write(text)
    return text

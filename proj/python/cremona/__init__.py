"""Exact plane Cremona maps, degree growth and Heisenberg embeddings."""

import json

from ._cremona import compose as _compose_list
from ._cremona import (
    CapExceeded,
    CremonaError,
    DomainError,
    InverseUnavailable,
    ParseError,
    SchemaError,
    ShapeError,
    batch_json,
    commutator,
    degree,
    degree_sequence,
    execute_json,
    inverse,
    map_equal,
    normalize,
    report_version,
    validate_report_json,
)

__version__ = "0.1.0"


def compose(*maps):
    """f1 o f2 o ... o fn: the last map is applied first."""
    return _compose_list(list(maps))


def execute(*words):
    """Run one CLI subcommand; returns (exit_code, report dict)."""
    code, text = execute_json([str(w) for w in words])
    return code, json.loads(text)


def verify(f, g):
    return execute("verify", f, g)[1]


def classify(f, n=None):
    words = ["classify", f] + (["--n", str(n)] if n else [])
    return execute(*words)[1]


def family(text, verify=True):
    """Family text such as 'torus1 delta=1 gamma=2 s=+1 a=x'; quotes group values."""
    if not text.startswith("family "):
        text = "family " + text
    _, out = batch_json(text + (" --verify" if verify else ""))
    return json.loads(out)["results"][0]["document"]


def claim_solve(mu, lambda2, max_deg):
    return execute("claim-solve", "--mu", mu, "--lambda2", lambda2, "--max-deg", str(max_deg))[1]


def batch(content, jobs=1):
    code, text = batch_json(content, jobs)
    return code, json.loads(text)

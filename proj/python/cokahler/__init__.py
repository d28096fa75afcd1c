"""Cohomology of almost contact metric Lie algebras."""

import json as _json

from ._cokahler import (
    Model,
    ParseError,
    RefusedError,
    StructuralError,
    betti,
    classify,
    load_model,
    parse_model,
    run_json,
    run_text,
    serialize_model,
)

__all__ = [
    "Model",
    "ParseError",
    "RefusedError",
    "StructuralError",
    "betti",
    "classify",
    "load_model",
    "parse_model",
    "report",
    "run_json",
    "run_text",
    "serialize_model",
]


def report(command, models, **options):
    """Run a command over models and return the report as a dict."""
    if isinstance(models, Model):
        models = [models]
    return _json.loads(run_json(command, list(models), **options))

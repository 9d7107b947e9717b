"""Exact character theory and depth-two checks for semisimple Hopf algebras.

Structured results come back as plain dicts decoded from the same JSON the
``hopfdepth`` command line tool writes. Scalars inside character tables are
turned into :class:`Cyclotomic` values.
"""

import json

from ._core import (
    CapExceeded,
    Cyclotomic,
    DivisionByZero,
    GroupError,
    HopfdepthError,
    NotNormal,
    ParseError,
    dump_algebra,
    groups,
    subgroups,
)
from . import _core

__all__ = [
    "CapExceeded",
    "Cyclotomic",
    "DivisionByZero",
    "GroupError",
    "HopfdepthError",
    "NotNormal",
    "ParseError",
    "character_table",
    "check",
    "dump_algebra",
    "groups",
    "subgroups",
    "survey",
    "verify_dump",
]


def _scalar(obj):
    return Cyclotomic.from_json(json.dumps(obj))


def character_table(group, dual=False):
    """Irreducible characters of k[G] (or k^G) as values on the basis."""
    table = json.loads(_core.character_table_json(group, dual))
    for chi in table["characters"]:
        chi["values"] = [_scalar(v) for v in chi["values"]]
    return table


def check(group, subgroup, dual=False):
    """Verdict for one pair. ``subgroup`` is an index or cycle-notation generators."""
    return json.loads(_core.check_json(group, str(subgroup), dual))


def survey(groups=None, include_duals=True, jobs=1, corpus=None):
    return json.loads(_core.survey_json(groups, include_duals, jobs, corpus))


def verify_dump(text):
    """Axiom name -> passed, for an algebra dump."""
    return dict(_core.verify_dump(text))

"""Bundled table of small link diagrams.

Classical prime links through seven crossings are stored as planar diagram
codes, the two smallest classical knots and the tabulated virtual knots
through three crossings as signed Gauss codes.  Entries are verified
against their published invariant values by the build tool that generates
the JSON file, so callers can treat names like "L6a4" or "3.2" as fixed
points of reference.
"""

import json
from importlib import resources

from .diagram import parse_gauss, parse_pd

_CACHE = None


def load_catalog():
    """Return the raw table as a list of {name, format, code} dicts."""
    global _CACHE
    if _CACHE is None:
        text = (
            resources.files("knotquiver")
            .joinpath("data/catalog.json")
            .read_text()
        )
        _CACHE = json.loads(text)
    return _CACHE


def catalog_names():
    return [entry["name"] for entry in load_catalog()]


def get_diagram(name):
    """Look up a named diagram.

    Raises KeyError for names not in the table.
    """
    for entry in load_catalog():
        if entry["name"] == name:
            if entry["format"] == "pd":
                return parse_pd(entry["code"], name=name)
            return parse_gauss(entry["code"], name=name)
    raise KeyError(name)


def get_code(name):
    """The stored (format, code) pair for a named diagram."""
    for entry in load_catalog():
        if entry["name"] == name:
            return entry["format"], entry["code"]
    raise KeyError(name)

"""Exact workbench for s-homogeneous algebras and generalized Koszul complexes.

Thin convenience layer over the compiled core: documents are dicts mirroring
the JSON presentation format, reports come back parsed.
"""

import json

from homkoszul._core import (  # noqa: F401
    HomkoszulError,
    __version__,
    canonical_json,
    check_report,
    component_dims,
    corpus,
)


def _as_text(document):
    if isinstance(document, str):
        return document
    return json.dumps(document)


def check(document, hom_bound=6, max_deg=0):
    """s-Koszul verdict, extra condition, distributivity and BS residual."""
    return json.loads(
        check_report(_as_text(document), "check", hom_bound, max_deg, 8, False)
    )


def dual(document):
    """The s-homogeneous dual presentation as a document dict."""
    report = json.loads(check_report(_as_text(document), "dual", 6, 0, 8, False))
    return report["results"][0]["data"]


def triple(document):
    """F(Lambda): components, axioms, splitting, summand witness, G round trip."""
    return json.loads(check_report(_as_text(document), "triple", 6, 0, 8, False))


def hilbert(document, terms=8):
    """Hilbert series coefficients (one D x D matrix per degree)."""
    report = json.loads(
        check_report(_as_text(document), "hilbert", 6, 0, terms, False)
    )
    return report["results"][0]["data"]


def dims(document, up_to):
    """Graded dimensions of the presented algebra."""
    return component_dims(_as_text(document), up_to)


def random_documents(seed, count, **params):
    """Deterministic corpus documents as dicts."""
    return [json.loads(text) for text in corpus(seed, count, **params)]

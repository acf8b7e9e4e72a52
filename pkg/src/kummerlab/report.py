"""JSON report documents.  No floats anywhere; residues are decimal strings."""
from __future__ import annotations

import json
from importlib import resources

from .classify import classify
from .cyclo import CycloElem
from .globalunits import kummer_local_certificate

REPORT_VERSION = "1"


def classification_document(text: str, x: CycloElem, certificate: bool = False) -> dict:
    ctx = x.ctx
    doc = {
        "version": REPORT_VERSION,
        "p": ctx.p,
        "precision": {"k": ctx.k, "N": ctx.N},
        "input": text,
        "coefficients": [str(c) for c in x.coeffs],
        "classification": classify(x).to_dict(),
        "assumptions": [
            "pi-adic precision N = k(p-1); all congruences are decided modulo pi^N",
            "varpi is the root of X^(p-1) + p with varpi/pi = 1 mod pi",
        ],
        "exit_status": 0,
    }
    if certificate:
        doc["certificate"] = kummer_local_certificate(x)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def load_schema() -> dict:
    return json.loads(resources.files("kummerlab").joinpath("schema/report.schema.json").read_text())

"""Semi-invariants, nullcones and b-functions of Dynkin quivers.

Thin wrapper over the compiled ``_qsing`` extension. Every analysis returns
the same JSON document the command-line tool prints with ``--format json``,
decoded into Python objects.
"""

import json
from fractions import Fraction

from . import _qsing
from ._qsing import Error, InvalidInput, NonDynkin, TerminalRuleInapplicable

__all__ = [
    "Error",
    "InvalidInput",
    "NonDynkin",
    "TerminalRuleInapplicable",
    "quiver_text",
    "decompose",
    "nullcone",
    "bfunction",
    "singularities",
    "hom",
    "preset",
    "membership",
    "verify_certificate",
    "run_cli",
]


def quiver_text(vertices, arrows):
    """Quiver file text for ``vertices`` and a list of ``(tail, head)`` pairs."""
    lines = [f"vertices {vertices}"] + [f"arrow {t} {h}" for t, h in arrows]
    return "\n".join(lines) + "\n"


def _quiver(q):
    if isinstance(q, str):
        return q
    if isinstance(q, dict):
        return quiver_text(q["vertices"], q["arrows"])
    vertices, arrows = q
    return quiver_text(vertices, arrows)


def _dim(d):
    return d if isinstance(d, str) else ",".join(str(int(x)) for x in d)


def _analysis(fn, quiver, dim, simples=(), box_bound=6, depth_bound=10):
    return json.loads(fn(_quiver(quiver), _dim(dim), list(simples), box_bound, depth_bound))


def decompose(quiver, dim):
    return _analysis(_qsing.decompose, quiver, dim)


def nullcone(quiver, dim, simples=()):
    return _analysis(_qsing.nullcone, quiver, dim, simples)


def bfunction(quiver, dim, simples=()):
    return _analysis(_qsing.bfunction, quiver, dim, simples)


def singularities(quiver, dim, simples=(), box_bound=6, depth_bound=10):
    return _analysis(_qsing.singularities, quiver, dim, simples, box_bound, depth_bound)


def hom(quiver, source, target=None):
    return json.loads(_qsing.hom(_quiver(quiver), _dim(source), "" if target is None else _dim(target)))


def preset(name, n=1, m=1):
    return json.loads(_qsing.preset(name, n, m))


def membership(family, point, box_bound=6):
    """Membership of ``point`` (ints, Fractions or strings) in the zero set of B~."""
    fam = family if isinstance(family, str) else json.dumps(family)
    return json.loads(_qsing.membership(fam, [str(Fraction(x)) for x in point], box_bound))


def verify_certificate(certificate):
    """Return ``(ok, error)`` for a certificate given as JSON text or a decoded dict."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return _qsing.verify_certificate(text)


def run_cli(args):
    """Run the command-line front end in-process; returns ``(exit_code, stdout, stderr)``."""
    return _qsing.run_cli([str(a) for a in args])

"""Published closed forms, read from the LaTeX source kept in ``data/``."""
from __future__ import annotations

import re
from pathlib import Path

from chern_count.chern_ring import FormalPolynomial

DATA = Path(__file__).parent / "data" / "reference_formulas.tex"

_HEAD = re.compile(r"\\mathcal\{N\}\(((?:\\mathcal\{[A-Z]\}_\d\s*)+)\)\s*&?\s*=")
_SYMBOL = re.compile(r"\\mathcal\{([A-Z])\}_(\d)")
_STOP = re.compile(r"\\quad|provided|\\end\{align")


def load() -> dict[str, FormalPolynomial]:
    src = DATA.read_text(encoding="utf-8")
    heads = list(_HEAD.finditer(src))
    out = {}
    for i, m in enumerate(heads):
        name = "".join(a + b for a, b in _SYMBOL.findall(m.group(1)))
        end = heads[i + 1].start() if i + 1 < len(heads) else len(src)
        body = _STOP.split(src[m.end():end])[0].strip()
        body = body.rstrip("\\ ,\n")
        out[name] = FormalPolynomial.parse(body)
    return out


REFERENCE = load()
ONE_POINT = {k: v for k, v in REFERENCE.items() if len(k) == 2}
TWO_POINT = {k: v for k, v in REFERENCE.items() if len(k) == 4}

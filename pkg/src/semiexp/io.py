"""Plain-text table, generator and catalog files.

A table file holds the order ``n`` on its first line and then ``n`` rows of
``n`` integers. An optional ``generators: a=0 b=3`` line names the generator
map. Lines starting with ``#`` are comments. A catalog concatenates such
entries, separated by blank lines, each preceded by ``# provenance: ...``.
"""
import re
from dataclasses import dataclass
from typing import Optional

from .errors import ShapeError
from .generated import GeneratedSemigroup, with_all_generators
from .semigroup import FiniteSemigroup, from_table

_GEN_RE = re.compile(r"^generators\s*:(.*)$")


@dataclass
class Entry:
    semigroup: FiniteSemigroup
    generated: Optional[GeneratedSemigroup] = None
    provenance: str = ""
    name: str = ""

    def as_generated(self):
        return self.generated if self.generated is not None else with_all_generators(self.semigroup)

    @property
    def label(self):
        return self.name or self.provenance


def _parse_generators(spec, S):
    letters, images = [], []
    for tok in spec.split():
        if "=" not in tok:
            raise ShapeError(f"bad generator token {tok!r}, expected letter=index")
        a, x = tok.split("=", 1)
        if len(a) != 1:
            raise ShapeError(f"generator letters must be single characters, got {a!r}")
        letters.append(a)
        images.append(int(x))
    return GeneratedSemigroup(S, letters, images)


def parse_entry(text):
    provenance = ""
    rows, gen_spec = [], None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*provenance\s*:\s*(.*)$", line)
            if m:
                provenance = m.group(1).strip()
            continue
        m = _GEN_RE.match(line)
        if m:
            gen_spec = m.group(1)
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise ShapeError(f"non-integer entry in line {line!r}") from None
    if not rows or len(rows[0]) != 1:
        raise ShapeError("first line must hold the order n")
    n = rows[0][0]
    if n < 1:
        raise ShapeError("order must be positive")
    if len(rows) - 1 != n or any(len(r) != n for r in rows[1:]):
        raise ShapeError(f"expected {n} rows of {n} entries")
    S = from_table(n, rows[1:])
    gs = _parse_generators(gen_spec, S) if gen_spec is not None else None
    name = provenance.split("fixture(", 1)[1].rstrip(")") if provenance.startswith("fixture(") else ""
    return Entry(S, gs, provenance, name)


def load_entry(path):
    with open(path, encoding="utf-8") as fh:
        return parse_entry(fh.read())


def format_entry(S, generated=None, provenance=None):
    lines = []
    if provenance:
        lines.append(f"# provenance: {provenance}")
    lines.append(str(S.n))
    lines.extend(" ".join(str(x) for x in row) for row in S.tolist())
    if generated is not None:
        lines.append("generators: " + " ".join(f"{a}={int(g)}" for a, g in
                                               zip(generated.alphabet, generated.gens)))
    return "\n".join(lines) + "\n"


def parse_catalog(text):
    blocks = re.split(r"\n\s*\n", text.strip())
    return [parse_entry(b) for b in blocks if b.strip()]


def load_catalog(path):
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def format_catalog(entries):
    return "\n".join(format_entry(e.semigroup, e.generated, e.provenance) for e in entries)

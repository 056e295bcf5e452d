"""Line-oriented text formats for categories, posets, actions and lattices.

All formats are UTF-8 with LF line endings, ``#`` comments and one
declaration per line; parse errors always carry the line number.
"""

from __future__ import annotations

from .actions import ActionError, functor_from_object_map
from .fincat import CatFunctor, FiniteCategory, Poset, PosetError
from .formulas import LabeledLattice


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def parse_category(text: str) -> FiniteCategory:
    """``objects <n>``, then ``mor <id> <src> <tgt>`` (ids >= n, ids below n
    are the implicit identities) and ``comp <f> <g> <h>`` meaning f∘g = h."""
    n = None
    arrows = {}
    comp = {}
    for lineno, toks in _records(text):
        kind, args = toks[0], toks[1:]
        if kind == "objects":
            if n is not None:
                raise ParseError(lineno, "duplicate objects line")
            if len(args) != 1:
                raise ParseError(lineno, "objects takes one count")
            n = _int(args[0], lineno)
        elif kind == "mor":
            if n is None:
                raise ParseError(lineno, "mor before objects")
            if len(args) != 3:
                raise ParseError(lineno, "mor takes id, source, target")
            mid, src, tgt = (_int(a, lineno) for a in args)
            if mid < n:
                raise ParseError(lineno, f"morphism id {mid} collides with an identity")
            if mid in arrows:
                raise ParseError(lineno, f"duplicate morphism id {mid}")
            if not (0 <= src < n and 0 <= tgt < n):
                raise ParseError(lineno, "morphism endpoint out of range")
            arrows[mid] = (src, tgt)
        elif kind == "comp":
            if n is None:
                raise ParseError(lineno, "comp before objects")
            if len(args) != 3:
                raise ParseError(lineno, "comp takes f, g, h")
            f, g, h = (_int(a, lineno) for a in args)
            comp[(f, g)] = h
        else:
            raise ParseError(lineno, f"unknown declaration {kind!r}")
    if n is None:
        raise ParseError(1, "missing objects line")
    expected = set(range(n, n + len(arrows)))
    if set(arrows) != expected:
        missing = min(expected.symmetric_difference(arrows))
        raise ParseError(1, f"morphism ids must be dense: problem near id {missing}")
    ordered = [arrows[i] for i in sorted(arrows)]
    try:
        return FiniteCategory(n, ordered, comp)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def format_category(cat: FiniteCategory) -> str:
    lines = [f"objects {cat.n_objects}"]
    for m in cat.nonidentity():
        lines.append(f"mor {m} {cat.source[m]} {cat.target[m]}")
    for (f, g), h in sorted(cat.comp.items()):
        if cat.is_identity(f) or cat.is_identity(g):
            continue
        lines.append(f"comp {f} {g} {h}")
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """``elements <n>`` followed by ``rel <a> <b>`` meaning a > b; the
    reflexive-transitive closure is taken."""
    n = None
    rels = []
    for lineno, toks in _records(text):
        kind, args = toks[0], toks[1:]
        if kind == "elements":
            if n is not None:
                raise ParseError(lineno, "duplicate elements line")
            if len(args) != 1:
                raise ParseError(lineno, "elements takes one count")
            n = _int(args[0], lineno)
        elif kind == "rel":
            if n is None:
                raise ParseError(lineno, "rel before elements")
            if len(args) != 2:
                raise ParseError(lineno, "rel takes two elements")
            a, b = _int(args[0], lineno), _int(args[1], lineno)
            rels.append((lineno, a, b))
        else:
            raise ParseError(lineno, f"unknown declaration {kind!r}")
    if n is None:
        raise ParseError(1, "missing elements line")
    try:
        return Poset.from_relations(n, [(a, b) for _, a, b in rels])
    except PosetError as exc:
        lineno = rels[0][0] if rels else 1
        raise ParseError(lineno, str(exc)) from None


def format_poset(poset: Poset) -> str:
    lines = [f"elements {poset.n}"]
    for a, b in poset.covers():
        lines.append(f"rel {a} {b}")
    return "\n".join(lines) + "\n"


def parse_generators(text: str, cat: FiniteCategory) -> list[CatFunctor]:
    """``gen obj <images...>`` optionally followed by ``gen mor <images...>``
    per generator; the morphism map is inferred when omitted."""
    pending_obj = None
    pending_line = 0
    gens: list[CatFunctor] = []

    def flush():
        nonlocal pending_obj
        if pending_obj is not None:
            try:
                gens.append(functor_from_object_map(cat, pending_obj))
            except ActionError as exc:
                raise ParseError(pending_line, str(exc)) from None
            pending_obj = None

    for lineno, toks in _records(text):
        if toks[0] != "gen" or len(toks) < 2:
            raise ParseError(lineno, "expected gen obj/mor lines")
        kind, args = toks[1], toks[2:]
        if kind == "obj":
            flush()
            if len(args) != cat.n_objects:
                raise ParseError(lineno, f"object image list needs {cat.n_objects} entries")
            pending_obj = tuple(_int(a, lineno) for a in args)
            pending_line = lineno
        elif kind == "mor":
            if pending_obj is None:
                raise ParseError(lineno, "gen mor without a preceding gen obj")
            if len(args) != cat.n_morphisms:
                raise ParseError(lineno, f"morphism image list needs {cat.n_morphisms} entries")
            gens.append(CatFunctor(pending_obj, tuple(_int(a, lineno) for a in args)))
            pending_obj = None
        else:
            raise ParseError(lineno, f"unknown gen kind {kind!r}")
    flush()
    return gens


def format_generators(gens) -> str:
    lines = []
    for g in gens:
        lines.append("gen obj " + " ".join(str(x) for x in g.obj_map))
        lines.append("gen mor " + " ".join(str(m) for m in g.mor_map))
    return "\n".join(lines) + "\n"


def parse_family(text: str, n_morphisms: int):
    """``sub <morphism-id> <element-ids...>``; omitted morphisms default to
    the trivial subgroup."""
    family = {}
    for lineno, toks in _records(text):
        if toks[0] != "sub" or len(toks) < 2:
            raise ParseError(lineno, "expected sub lines")
        m = _int(toks[1], lineno)
        if not (0 <= m < n_morphisms):
            raise ParseError(lineno, f"morphism id {m} out of range")
        if m in family:
            raise ParseError(lineno, f"duplicate sub line for morphism {m}")
        family[m] = frozenset(_int(tok, lineno) for tok in toks[2:]) | {0}
    return family


def parse_lattice(text: str) -> LabeledLattice:
    """Poset format plus ``dim <element> <value>`` lines, one per element."""
    poset_lines = []
    dims = {}
    n = None
    for lineno, toks in _records(text):
        if toks[0] == "dim":
            if len(toks) != 3:
                raise ParseError(lineno, "dim takes element and value")
            x = _int(toks[1], lineno)
            if x in dims:
                raise ParseError(lineno, f"duplicate dim for element {x}")
            dims[x] = _int(toks[2], lineno)
        else:
            if toks[0] == "elements":
                n = _int(toks[1], lineno) if len(toks) == 2 else None
            poset_lines.append((lineno, toks))
    poset = parse_poset("\n".join(" ".join(t) for _, t in poset_lines))
    if set(dims) != set(range(poset.n)):
        raise ParseError(1, "every element needs exactly one dim line")
    try:
        return LabeledLattice(poset, tuple(dims[x] for x in range(poset.n)))
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None

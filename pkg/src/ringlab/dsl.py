"""A line-oriented language for defining rings, modules, homs, sets and
ideals, and for running the deciders on them.

    ring A = zmod 12
    mset S in A = closure {2}
    ideal I in A = <4, 6>
    check sbezout A S

``parse`` returns a :class:`Program` (or raises :class:`DslError` with a
line and column), ``pretty`` prints it back in canonical form, and
``execute`` yields one JSON-ready record per query.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass

from . import constructions as C
from .deciders import (
    is_P_bezout,
    is_S_bezout,
    is_S_finite,
    is_S_pir,
    is_S_principal,
    is_bezout,
)
from .errors import RingLabError
from .ideals import Ideal, all_ideals, ideal_generated_by, is_principal
from .modhom import FiniteModule, RingHom, identity_hom, make_free_module, make_hom, make_module
from .mulsets import MultiplicativeSet, make_mult_set
from .nonnil import (
    NONNIL_CHAINED_FLAG,
    is_chained,
    is_nonnil_S_bezout,
    is_nonnil_chained,
    nilradical,
    phi_image,
)
from .nonnil import is_phi_ring as _is_phi
from .ring import FiniteRing, make_gf, make_poly_quotient, make_zmod
from .zext import ZExtIdeal, ZExtMultSet, ZExtRing, zx_ideal, zx_is_S_principal


class DslError(RingLabError):
    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)


# -- AST ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Tup:
    items: tuple


@dataclass(frozen=True)
class Vec:
    items: tuple


@dataclass(frozen=True)
class ModSpec:
    """``module((z2)^3, (z4)^1)``: a list of (q, k) factors."""

    parts: tuple


@dataclass(frozen=True)
class RingStmt:
    name: str
    ctor: str
    args: tuple


@dataclass(frozen=True)
class ModuleStmt:
    name: str
    ring: str
    ctor: str
    args: tuple


@dataclass(frozen=True)
class HomStmt:
    name: str
    source: str
    target: str
    ctor: str
    args: tuple


@dataclass(frozen=True)
class MsetStmt:
    name: str
    ring: str
    elems: tuple


@dataclass(frozen=True)
class IdealStmt:
    name: str
    ring: str
    elems: tuple


@dataclass(frozen=True)
class CheckStmt:
    prop: str
    args: tuple


@dataclass(frozen=True)
class Program:
    statements: tuple


# (constructor, argument kinds): N = name, I = integer, V = bracketed vector, M = module spec
RING_CTORS = {
    "zmod": ("I",), "gf": ("I", "I"), "polyquot": ("I", "V"),
    "product": ("N", "N"), "quotient": ("N", "N"), "trivext": ("N", "N"),
    "amalg": ("N", "N", "N", "N"), "dup": ("N", "N"), "localize": ("N", "N"), "zext": ("M",),
}
PAREN_CTORS = {"product", "quotient", "trivext", "amalg", "dup", "localize"}
MODULE_CTORS = {"free": ("I",), "tables": ("V", "V")}
HOM_CTORS = {"map": ("V",), "proj1": (), "proj2": (), "reduce": (), "id": ()}
CHECKS = {
    "bezout": ("ring",), "sbezout": ("ring", "mset", "?mode"), "sprincipal": ("ideal", "mset"),
    "principal": ("ideal",), "sfinite": ("ideal", "mset", "int"), "spir": ("ring", "mset"),
    "pbezout": ("ring", "ideal"), "phi": ("ring",), "nonnil-sbezout": ("ring", "mset"),
    "chained": ("ring",), "nonnil-chained": ("ring",), "homogeneous": ("ideal",),
}
SBEZOUT_MODES = ("all_ideals", "two_generated")


# -- tokenizer ------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<arrow>->)
  | (?P<int>-?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z_][A-Za-z0-9_]*)*)
  | (?P<punct>[()\[\]{}<>,=:^;])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            tokens.append(Token("nl", "\n", line, pos - start + 1))
            line, start = line + 1, m.end()
        elif kind == "punct" and m.group() == ";":
            tokens.append(Token("nl", ";", line, pos - start + 1))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    tokens.append(Token("nl", "", line, pos - start + 1))
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


# -- parser -------------------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        shown = tok.text if tok.text not in ("", "\n") else "end of line"
        raise DslError(f"{msg} at {shown!r}", tok.line, tok.col)

    def take(self, kind=None, text=None):
        tok = self.tok
        if (kind and tok.kind != kind) or (text is not None and tok.text != text):
            want = repr(text) if text is not None else kind
            self.error(f"expected {want}")
        self.i += 1
        return tok

    def accept(self, text):
        if self.tok.text == text and self.tok.kind in ("punct", "arrow", "name"):
            self.i += 1
            return True
        return False

    def name(self):
        return self.take("name").text

    def integer(self):
        return int(self.take("int").text)

    def value(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return int(tok.text)
        if tok.text in ("(", "["):
            close = ")" if tok.text == "(" else "]"
            self.i += 1
            items = []
            if not self.accept(close):
                items.append(self.value())
                while self.accept(","):
                    items.append(self.value())
                self.take("punct", close)
            return Tup(tuple(items)) if close == ")" else Vec(tuple(items))
        if tok.kind == "name":
            self.i += 1
            return Name(tok.text)
        self.error("expected a value")

    def value_list(self, close):
        items = []
        if not self.accept(close):
            items.append(self.value())
            while self.accept(","):
                items.append(self.value())
            self.take("punct", close)
        return tuple(items)

    def modspec(self):
        self.take("name", "module")
        self.take("punct", "(")
        parts = [self._modpart()]
        while self.accept(","):
            parts.append(self._modpart())
        self.take("punct", ")")
        return ModSpec(tuple(parts))

    def _modpart(self):
        self.take("punct", "(")
        tok = self.take("name")
        if not re.fullmatch(r"z\d+", tok.text):
            self.error("expected a cyclic factor like z2", tok)
        self.take("punct", ")")
        self.take("punct", "^")
        return (int(tok.text[1:]), self.integer())

    def args_of(self, kinds, paren):
        out = []
        if paren:
            self.take("punct", "(")
        for j, kind in enumerate(kinds):
            if paren and j:
                self.take("punct", ",")
            if kind == "N":
                out.append(Name(self.name()))
            elif kind == "I":
                out.append(self.integer())
            elif kind == "V":
                v = self.value()
                if not isinstance(v, Vec):
                    self.error("expected a bracketed list")
                out.append(v)
            else:
                out.append(self.modspec())
        if paren:
            self.take("punct", ")")
        return tuple(out)

    def statement(self):
        kw = self.take("name")
        if kw.text == "ring":
            name = self.name()
            self.take("punct", "=")
            ctor_tok = self.take("name")
            if ctor_tok.text not in RING_CTORS:
                self.error("unknown ring constructor", ctor_tok)
            args = self.args_of(RING_CTORS[ctor_tok.text], ctor_tok.text in PAREN_CTORS)
            return RingStmt(name, ctor_tok.text, args)
        if kw.text == "module":
            name = self.name()
            self.take("name", "over")
            ring = self.name()
            self.take("punct", "=")
            ctor_tok = self.take("name")
            if ctor_tok.text not in MODULE_CTORS:
                self.error("unknown module constructor", ctor_tok)
            return ModuleStmt(name, ring, ctor_tok.text, self.args_of(MODULE_CTORS[ctor_tok.text], False))
        if kw.text == "hom":
            name = self.name()
            self.take("punct", ":")
            src = self.name()
            self.take("arrow")
            dst = self.name()
            self.take("punct", "=")
            ctor_tok = self.take("name")
            if ctor_tok.text not in HOM_CTORS:
                self.error("unknown hom constructor", ctor_tok)
            return HomStmt(name, src, dst, ctor_tok.text, self.args_of(HOM_CTORS[ctor_tok.text], False))
        if kw.text == "mset":
            name = self.name()
            self.take("name", "in")
            ring = self.name()
            self.take("punct", "=")
            self.take("name", "closure")
            self.take("punct", "{")
            return MsetStmt(name, ring, self.value_list("}"))
        if kw.text == "ideal":
            name = self.name()
            self.take("name", "in")
            ring = self.name()
            self.take("punct", "=")
            self.take("punct", "<")
            return IdealStmt(name, ring, self.value_list(">"))
        if kw.text == "check":
            prop_tok = self.take("name")
            if prop_tok.text not in CHECKS:
                self.error("unknown check", prop_tok)
            args = []
            while self.tok.kind != "nl":
                args.append(self.integer() if self.tok.kind == "int" else self.name())
            return CheckStmt(prop_tok.text, tuple(args))
        self.error("expected a statement keyword (ring, module, hom, mset, ideal, check)", kw)

    def program(self):
        stmts = []
        while self.tok.kind != "eof":
            if self.tok.kind == "nl":
                self.i += 1
                continue
            i0 = self.i
            stmt = self.statement()
            if self.tok.kind != "nl":
                self.error("expected end of statement")
            stmts.append((stmt, self.toks[i0:self.i]))
        return stmts


_KIND_OF = {RingStmt: "ring", ModuleStmt: "module", HomStmt: "hom", MsetStmt: "mset", IdealStmt: "ideal"}


def _validate(stmts):
    """Names bound once and before use; check arities and argument kinds."""
    kinds = {}

    def at(toks, name):
        """Token of the first use of ``name`` (past a defined name), else the keyword."""
        uses = [t for t in toks[2:] if t.kind == "name" and t.text == name]
        return uses[0] if uses else toks[0]

    def need(name, want, toks):
        tok = at(toks, name)
        if name not in kinds:
            raise DslError(f"unknown name {name!r}", tok.line, tok.col)
        if want and kinds[name] not in want:
            raise DslError(f"{name!r} is a {kinds[name]}, expected {' or '.join(want)}", tok.line, tok.col)

    for stmt, toks in stmts:
        tok = toks[0]
        if isinstance(stmt, RingStmt):
            want = {"product": ("ring", "ring"), "quotient": ("ring", "ideal"), "trivext": ("ring", "module"),
                    "amalg": ("ring", "ring", "hom", "ideal"), "dup": ("ring", "ideal"),
                    "localize": ("ring", "mset")}.get(stmt.ctor, ())
            for arg, w in zip(stmt.args, want):
                need(arg.id, (w,), toks)
        elif isinstance(stmt, ModuleStmt):
            need(stmt.ring, ("ring",), toks)
        elif isinstance(stmt, HomStmt):
            need(stmt.source, ("ring",), toks)
            need(stmt.target, ("ring",), toks)
        elif isinstance(stmt, (MsetStmt, IdealStmt)):
            need(stmt.ring, ("ring",), toks)
        elif isinstance(stmt, CheckStmt):
            spec = CHECKS[stmt.prop]
            required = [k for k in spec if not k.startswith("?")]
            if not len(required) <= len(stmt.args) <= len(spec):
                raise DslError(f"check {stmt.prop} takes {len(required)} argument(s), got {len(stmt.args)}",
                               tok.line, tok.col)
            for arg, k in zip(stmt.args, spec):
                if k == "int":
                    if not isinstance(arg, int):
                        raise DslError(f"check {stmt.prop}: expected an integer", tok.line, tok.col)
                elif k == "?mode":
                    if arg not in SBEZOUT_MODES:
                        raise DslError(f"mode must be one of {', '.join(SBEZOUT_MODES)}", tok.line, tok.col)
                else:
                    if isinstance(arg, int):
                        raise DslError(f"check {stmt.prop}: expected a {k} name", tok.line, tok.col)
                    need(arg, (k,), toks)
        if not isinstance(stmt, CheckStmt):
            if stmt.name in kinds:
                raise DslError(f"duplicate name {stmt.name!r}", toks[1].line, toks[1].col)
            kinds[stmt.name] = _KIND_OF[type(stmt)]


def parse(text):
    stmts = _Parser(text).program()
    _validate(stmts)
    return Program(tuple(s for s, _ in stmts))


# -- pretty printer ----------------------------------------------------------------------


def _fmt(v):
    if isinstance(v, Name):
        return v.id
    if isinstance(v, Tup):
        return "(" + ", ".join(_fmt(x) for x in v.items) + ")"
    if isinstance(v, Vec):
        return "[" + ", ".join(_fmt(x) for x in v.items) + "]"
    if isinstance(v, ModSpec):
        return "module(" + ", ".join(f"(z{q})^{k}" for q, k in v.parts) + ")"
    return str(v)


def pretty_statement(stmt):
    if isinstance(stmt, RingStmt):
        if stmt.ctor in PAREN_CTORS:
            return f"ring {stmt.name} = {stmt.ctor}(" + ", ".join(map(_fmt, stmt.args)) + ")"
        return f"ring {stmt.name} = " + " ".join([stmt.ctor] + [_fmt(a) for a in stmt.args])
    if isinstance(stmt, ModuleStmt):
        return f"module {stmt.name} over {stmt.ring} = " + " ".join([stmt.ctor] + [_fmt(a) for a in stmt.args])
    if isinstance(stmt, HomStmt):
        return (f"hom {stmt.name}: {stmt.source} -> {stmt.target} = "
                + " ".join([stmt.ctor] + [_fmt(a) for a in stmt.args]))
    if isinstance(stmt, MsetStmt):
        return f"mset {stmt.name} in {stmt.ring} = closure {{" + ", ".join(map(_fmt, stmt.elems)) + "}"
    if isinstance(stmt, IdealStmt):
        return f"ideal {stmt.name} in {stmt.ring} = <" + ", ".join(map(_fmt, stmt.elems)) + ">"
    return " ".join(["check", stmt.prop] + [str(a) for a in stmt.args])


def pretty(program):
    return "".join(pretty_statement(s) + "\n" for s in program.statements)


# -- evaluation ---------------------------------------------------------------------------


def _literal(v):
    """AST value -> Python label (tuples for both parenthesized and bracketed forms)."""
    if isinstance(v, (Tup, Vec)):
        return tuple(_literal(x) for x in v.items)
    if isinstance(v, Name):
        raise DslError(f"expected an element literal, got name {v.id!r}")
    return v


def _zext_literal(v):
    if isinstance(v, int):
        return v
    if isinstance(v, Tup) and len(v.items) == 2 and isinstance(v.items[1], Vec):
        return (_literal(v.items[0]), _literal(v.items[1]))
    raise DslError("zext elements are written (a, [m1, ..., mk])")


class Session:
    """Symbol table plus the statement interpreter."""

    def __init__(self, timing=True, verbose=False):
        self.env = {}
        self.failed = set()
        self.timing = timing
        self.verbose = verbose

    def get(self, name):
        if name in self.failed:
            raise DslError(f"{name!r} was not defined because its definition failed")
        return self.env[name]

    # definitions -------------------------------------------------------

    def define_ring(self, st):
        a = st.args
        if st.ctor == "zmod":
            return make_zmod(a[0])
        if st.ctor == "gf":
            return make_gf(a[0], a[1])
        if st.ctor == "polyquot":
            return make_poly_quotient(a[0], [_literal(x) for x in a[1].items])
        if st.ctor == "zext":
            moduli = []
            for q, k in a[0].parts:
                moduli += [q] * k
            return ZExtRing(moduli)
        objs = [self.get(x.id) for x in a]
        if st.ctor == "product":
            return C.product(*objs)
        if st.ctor == "quotient":
            return C.quotient_ring(*objs)[0]
        if st.ctor == "trivext":
            return C.trivial_extension(*objs)
        if st.ctor == "amalg":
            return C.amalgamation(*objs)
        if st.ctor == "dup":
            return C.duplication(*objs)
        L, _ = C.localize(*objs)
        L.require_usable()
        return L

    def define_module(self, st):
        R = self.get(st.ring)
        if st.ctor == "free":
            return make_free_module(R, st.args[0])
        add, action = (list(_literal(v)) for v in st.args)
        return make_module(R, add, action)

    def define_hom(self, st):
        A, B = self.get(st.source), self.get(st.target)
        if st.ctor == "map":
            return make_hom(A, B, [_literal(v) for v in st.args[0].items])
        if st.ctor == "id":
            if A is not B:
                raise DslError("id needs the same source and target")
            return identity_hom(A)
        if st.ctor in ("proj1", "proj2"):
            k = int(st.ctor[-1]) - 1
            if isinstance(A, C.ProductRing) and A.factors[k] is B:
                return A.projection(k)
            if isinstance(A, C.TrivialExtensionRing) and k == 0 and A.base is B:
                return A.projection
            if isinstance(A, C.AmalgamationRing) and (A.A, A.B)[k] is B:
                return A.projection if k == 0 else A.projection_B
            raise DslError(f"{st.ctor} is not a projection from {st.source} onto {st.target}")
        # reduce
        if isinstance(B, C.QuotientRing) and B.parent is A:
            return B.projection
        if A.backend[0] == "zmod" and B.backend[0] == "zmod" and A.order % B.order == 0:
            return make_hom(A, B, [x % B.order for x in range(A.order)])
        raise DslError("reduce needs Z/n -> Z/m with m | n, or R -> R/I")

    def define_mset(self, st):
        R = self.get(st.ring)
        if isinstance(R, ZExtRing):
            gens = [R.index(_zext_literal(v)) for v in st.elems]
            if not gens:
                return ZExtMultSet(R, 1)
            if len(gens) != 1 or any(gens[0].m):
                raise DslError("zext multiplicative sets are closures of one element (b, [0, ..., 0])")
            return ZExtMultSet(R, gens[0].a)
        return make_mult_set(R, [_literal(v) for v in st.elems])

    def define_ideal(self, st):
        R = self.get(st.ring)
        if isinstance(R, ZExtRing):
            return zx_ideal(R, [_zext_literal(v) for v in st.elems])
        return ideal_generated_by(R, [_literal(v) for v in st.elems])

    # queries -------------------------------------------------------------

    def run_check(self, st):
        args = [self.get(a) if isinstance(a, str) and a not in SBEZOUT_MODES else a for a in st.args]
        return _CHECK_IMPL[st.prop](*args)

    def execute_statement(self, st):
        """Run one statement; returns a record or None (silent definition)."""
        start = time.perf_counter()
        if isinstance(st, CheckStmt):
            record = {"query": st.prop, "args": list(st.args)}
            try:
                out = self.run_check(st)
            except (RingLabError, KeyError, ValueError, TypeError) as exc:
                record.update(result=None, error=_message(exc), flags=[])
            else:
                record.update(out)
            if self.timing:
                record["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
            return record
        builder = {RingStmt: self.define_ring, ModuleStmt: self.define_module, HomStmt: self.define_hom,
                   MsetStmt: self.define_mset, IdealStmt: self.define_ideal}[type(st)]
        try:
            obj = builder(st)
        except (RingLabError, KeyError, ValueError, TypeError) as exc:
            self.failed.add(st.name)
            return {"define": st.name, "kind": _KIND_OF[type(st)], "error": _message(exc), "flags": []}
        self.env[st.name] = obj
        if self.verbose:
            return {"define": st.name, "kind": _KIND_OF[type(st)], "summary": _summary(obj), "flags": []}
        return None


def _message(exc):
    if isinstance(exc, KeyError) and exc.args:
        return str(exc.args[0])
    return str(exc)


def _summary(obj):
    if isinstance(obj, (FiniteRing, ZExtRing)):
        return obj.describe() + (f" order {obj.order}" if isinstance(obj, FiniteRing) else "")
    if isinstance(obj, FiniteModule):
        return f"module of order {obj.order}"
    if isinstance(obj, RingHom):
        return f"hom {obj.source.describe()} -> {obj.target.describe()}"
    if isinstance(obj, MultiplicativeSet):
        return f"{len(obj)} elements"
    if isinstance(obj, Ideal):
        return f"{len(obj)} elements"
    return type(obj).__name__


def execute(program, timing=True, verbose=False):
    """Records for the program's queries (and failed or, with verbose, all definitions)."""
    session = Session(timing=timing, verbose=verbose)
    for st in program.statements:
        rec = session.execute_statement(st)
        if rec is not None:
            yield rec


# -- check implementations -----------------------------------------------------------------


def _ideal_json(I):
    R = I.ring
    return {"elements": [R.labels[x] for x in I.elements], "generators": [R.labels[g] for g in I.generators]}


def _lab(R, x):
    return R.labels[x]


def _result(rep, witness=None, counterexample=None):
    out = {"result": rep.verdict if rep.status != "NOT-FOUND" else "NOT-FOUND", "flags": list(rep.flags)}
    if witness is not None:
        out["witness"] = witness
    if counterexample is not None:
        out["counterexample"] = counterexample
    if rep.exhaustion is not None and not rep.verdict:
        out["exhaustion"] = rep.exhaustion
    return out


def _ideal_witnesses(R, rep):
    out = []
    for w in rep.witness:
        entry = {"ideal": {"elements": [R.labels[x] for x in w["ideal"]["elements"]],
                           "generators": [R.labels[x] for x in w["ideal"]["generators"]]}}
        for key in ("s", "a"):
            if key in w:
                entry[key] = R.labels[w[key]]
        out.append(entry)
    return out


def _ring_report(R, rep):
    if rep:
        return _result(rep, witness=_ideal_witnesses(R, rep))
    return _result(rep, counterexample=_ideal_json(rep.counterexample))


def _need_finite(*objs):
    for o in objs:
        if isinstance(o, (ZExtRing, ZExtIdeal, ZExtMultSet)):
            raise DslError("this check is only available for finite rings")


def _check_bezout(R):
    _need_finite(R)
    return _ring_report(R, is_bezout(R))


def _check_sbezout(R, S, mode="all_ideals"):
    _need_finite(R, S)
    return _ring_report(R, is_S_bezout(R, S, mode))


def _check_spir(R, S):
    _need_finite(R, S)
    return _ring_report(R, is_S_pir(R, S))


def _check_pbezout(R, P):
    _need_finite(R, P)
    return _ring_report(R, is_P_bezout(R, P))


def _zx_report(rep):
    w = None
    if rep:
        w = {"s": _zx_json(rep.witness["s"]), "a": _zx_json(rep.witness["a"])}
    return _result(rep, witness=w)


def _zx_json(label):
    a, m = label
    return [a, list(m)]


def _check_sprincipal(I, S):
    if isinstance(I, ZExtIdeal):
        if not isinstance(S, ZExtMultSet) or S.ring is not I.ring:
            raise DslError("ideal and multiplicative set live in different rings")
        return _zx_report(zx_is_S_principal(I, S))
    _need_finite(S)
    R = I.ring
    rep = is_S_principal(I, S)
    w = {"s": _lab(R, rep.witness["s"]), "a": _lab(R, rep.witness["a"])} if rep else None
    return _result(rep, witness=w)


def _check_principal(I):
    if isinstance(I, ZExtIdeal):
        return _zx_report(zx_is_S_principal(I, ZExtMultSet(I.ring, 1)))
    rep = is_principal(I)
    return _result(rep, witness={"a": _lab(I.ring, rep.witness["a"])} if rep else None)


def _check_sfinite(I, S, k):
    _need_finite(I, S)
    R = I.ring
    rep = is_S_finite(I, S, k)
    w = None
    if rep:
        w = {"s": _lab(R, rep.witness["s"]), "generators": [_lab(R, g) for g in rep.witness["generators"]]}
    return _result(rep, witness=w)


def _check_phi(R):
    _need_finite(R)
    nil = nilradical(R)
    ok = _is_phi(R)
    out = {"result": ok, "flags": [], "witness": {"nilradical": _ideal_json(nil)}}
    if ok:
        K, _ = phi_image(R)
        out["witness"]["phi_image_order"] = K.order
    return out


def _check_nonnil_sbezout(R, S):
    _need_finite(R, S)
    rep = is_nonnil_S_bezout(R, S)
    if rep:
        return _result(rep, witness=rep.witness)
    I, P = rep.counterexample
    return _result(rep, counterexample={"I": _ideal_json(I), "P": _ideal_json(P)})


def _check_chained(R):
    _need_finite(R)
    return {"result": is_chained(R), "flags": []}


def _check_nonnil_chained(R):
    _need_finite(R)
    return {"result": is_nonnil_chained(R), "flags": [NONNIL_CHAINED_FLAG]}


def _check_homogeneous(L):
    _need_finite(L)
    ok, I, F = C.is_homogeneous(L.ring, L)
    w = {"I": _ideal_json(I)}
    if F is not None:
        E = F.module
        w["F"] = [E.labels[x] for x in F.elements]
    flags = [] if F is not None else ["proof-derived:amalgamation-homogeneity"]
    return {"result": ok, "witness": w, "flags": flags}


_CHECK_IMPL = {
    "bezout": _check_bezout, "sbezout": _check_sbezout, "sprincipal": _check_sprincipal,
    "principal": _check_principal, "sfinite": _check_sfinite, "spir": _check_spir,
    "pbezout": _check_pbezout, "phi": _check_phi, "nonnil-sbezout": _check_nonnil_sbezout,
    "chained": _check_chained, "nonnil-chained": _check_nonnil_chained, "homogeneous": _check_homogeneous,
}


def list_ideals(program, ring_name):
    """Definitions are executed; then every ideal of ``ring_name`` is described."""
    session = Session(timing=False)
    for st in program.statements:
        if not isinstance(st, CheckStmt):
            session.execute_statement(st)
    R = session.get(ring_name)
    if not isinstance(R, FiniteRing):
        raise DslError(f"{ring_name!r} is not a finite ring")
    for k, I in enumerate(all_ideals(R)):
        yield {"index": k, **_ideal_json(I), "order": len(I), "principal": bool(is_principal(I))}

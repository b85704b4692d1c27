"""A small identity-law language for generalized inverses, with two evaluators.

Law grammar (one law per file, ``#`` comments)::

    law     := [hyps "=>"] concl
    hyps    := eq {"," eq}
    eq      := term "=" term
    concl   := eq | term "in" KIND "(" term ")"
    term    := sum
    sum     := prod {("+" | "-") prod}
    prod    := unary {"*" unary}
    unary   := atom {postfix}
    postfix := "^*" | "^" INT | "^{" KIND "}"
    atom    := VAR | "0" | "1" | "(" term ")"
    KIND    := mp | d | grp | core | pc | rpc | dmp | wd | wdmp

Precedence: postfix > "*" > "+"/"-". There is no unary minus; write "0 - a".
"a^**b" reads as (a^*) * b. Errors carry line/column and an expected set.

Evaluation semantics ("for all elements and all witness choices satisfying
the hypotheses"): variables range over carrier elements possessing every kind
they are decorated with; each (variable, kind) decoration gets one witness
shared across the whole law, iterated over the full witness set; hypotheses
filter bindings; the conclusion must hold on every surviving binding. A
variable's wdmp witness is tied to its wd witness choice as w*a*mp(a); when
the law never mentions that variable's wd inverse, the distinct tied values
are iterated directly, so unique-witness kinds are never multiply counted.

>>> law = parse_law("a*b = 0 => a^{mp} in mp(a)")
>>> print_law(law)
'a*b = 0 => a^{mp} in mp(a)'
>>> [v for v in law.variables]
['a', 'b']
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .engine import (
    InverseKind,
    IndexTooLarge,
    drazin_inverse,
    core_inverse,
    dmp_inverse,
    group_inverse,
    k_used as matrix_k_used,
    mp_inverse,
    pseudo_core_inverse,
    right_pseudo_core_inverse,
    verify_definition,
    wd_family_sample,
)
from .rings import FiniteRing

KIND_NAMES = {
    "mp": InverseKind.MP,
    "d": InverseKind.DRAZIN,
    "grp": InverseKind.GROUP,
    "core": InverseKind.CORE,
    "pc": InverseKind.PSEUDO_CORE,
    "rpc": InverseKind.RIGHT_PSEUDO_CORE,
    "dmp": InverseKind.DMP,
    "wd": InverseKind.WD,
    "wdmp": InverseKind.WDMP,
}

_KIND_ORDER = {kind: i for i, kind in enumerate(InverseKind)}


class LawSyntaxError(ValueError):
    """A parse failure with position information and the expected token set."""

    def __init__(self, message, line, col, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        suffix = f" (expected: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {line}, column {col}: {message}{suffix}")


class UnknownKindError(LawSyntaxError):
    """An inverse-kind name outside the grammar's KIND set."""


# -- tokens ------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    type: str
    value: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, col, i = 1, 1, 0
    n = len(text)

    def error(message, expected=()):
        raise LawSyntaxError(message, line, col, expected)

    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if c == "=" and i + 1 < n and text[i + 1] == ">":
            tokens.append(Token("IMPLIES", "=>", line, start_col))
            i += 2
            col += 2
            continue
        if c in "=+-*,()":
            kind = {
                "=": "EQ",
                "+": "PLUS",
                "-": "MINUS",
                "*": "MUL",
                ",": "COMMA",
                "(": "LPAREN",
                ")": "RPAREN",
            }[c]
            tokens.append(Token(kind, c, line, start_col))
            i += 1
            col += 1
            continue
        if c == "^":
            if i + 1 < n and text[i + 1] == "*":
                tokens.append(Token("POSTSTAR", "^*", line, start_col))
                i += 2
                col += 2
                continue
            if i + 1 < n and text[i + 1] == "{":
                j = i + 2
                while j < n and text[j] not in "}\n":
                    j += 1
                if j >= n or text[j] != "}":
                    error("unterminated '^{' superscript", expected=("}",))
                name = text[i + 2 : j].strip()
                tokens.append(Token("POWKIND", name, line, start_col))
                col += j + 1 - i
                i = j + 1
                continue
            if i + 1 < n and text[i + 1].isdigit():
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                tokens.append(Token("POWINT", text[i + 1 : j], line, start_col))
                col += j - i
                i = j
                continue
            error("malformed superscript after '^'", expected=("*", "{kind}", "integer"))
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            tokens.append(Token("IN" if word == "in" else "VAR", word, line, start_col))
            col += j - i
            i = j
            continue
        error(f"unexpected character {c!r}")
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    span: tuple = field(compare=False, repr=False)


@dataclass(frozen=True)
class Var(Node):
    name: str = ""


@dataclass(frozen=True)
class Lit(Node):
    value: int = 0


@dataclass(frozen=True)
class Add(Node):
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class Sub(Node):
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class Mul(Node):
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class Star(Node):
    operand: Node = None


@dataclass(frozen=True)
class Pow(Node):
    operand: Node = None
    exponent: int = 1


@dataclass(frozen=True)
class Inv(Node):
    operand: Node = None
    kind: InverseKind = InverseKind.MP


@dataclass(frozen=True)
class Eq(Node):
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class Membership(Node):
    candidate: Node = None
    kind: InverseKind = InverseKind.MP
    target: Node = None


@dataclass(frozen=True)
class Law:
    hypotheses: tuple
    conclusion: object
    variables: tuple
    warnings: tuple = ()


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, expected=(), token=None):
        tok = token or self.peek()
        raise LawSyntaxError(message, tok.line, tok.col, expected)

    def expect(self, toktype, expected_label):
        tok = self.peek()
        if tok.type != toktype:
            self.fail(
                f"unexpected {tok.value!r}" if tok.type != "EOF" else "unexpected end of input",
                expected=(expected_label,),
            )
        return self.advance()

    def parse_kind(self, token):
        if token.value not in KIND_NAMES:
            raise UnknownKindError(
                f"unknown inverse kind {token.value!r}",
                token.line,
                token.col,
                expected=tuple(sorted(KIND_NAMES)),
            )
        return KIND_NAMES[token.value]

    def parse_atom(self):
        tok = self.peek()
        if tok.type == "VAR":
            self.advance()
            return Var((tok.line, tok.col), tok.value)
        if tok.type == "INT":
            if tok.value not in ("0", "1"):
                self.fail(
                    f"integer literal {tok.value!r} is not an atom",
                    expected=("0", "1", "variable", "("),
                )
            self.advance()
            return Lit((tok.line, tok.col), int(tok.value))
        if tok.type == "LPAREN":
            self.advance()
            inner = self.parse_term()
            self.expect("RPAREN", ")")
            return inner
        self.fail(
            f"unexpected {tok.value!r}" if tok.type != "EOF" else "unexpected end of input",
            expected=("variable", "0", "1", "("),
        )

    def parse_unary(self):
        node = self.parse_atom()
        while True:
            tok = self.peek()
            if tok.type == "POSTSTAR":
                self.advance()
                node = Star((tok.line, tok.col), node)
            elif tok.type == "POWINT":
                self.advance()
                node = Pow((tok.line, tok.col), node, int(tok.value))
            elif tok.type == "POWKIND":
                self.advance()
                node = Inv((tok.line, tok.col), node, self.parse_kind(tok))
            else:
                return node

    def parse_prod(self):
        node = self.parse_unary()
        while self.peek().type == "MUL":
            tok = self.advance()
            node = Mul((tok.line, tok.col), node, self.parse_unary())
        return node

    def parse_term(self):
        node = self.parse_prod()
        while self.peek().type in ("PLUS", "MINUS"):
            tok = self.advance()
            right = self.parse_prod()
            cls = Add if tok.type == "PLUS" else Sub
            node = cls((tok.line, tok.col), node, right)
        return node

    def parse_statement(self):
        left = self.parse_term()
        tok = self.peek()
        if tok.type == "IN":
            self.advance()
            kind_tok = self.expect("VAR", "inverse kind")
            kind = self.parse_kind(kind_tok)
            self.expect("LPAREN", "(")
            target = self.parse_term()
            self.expect("RPAREN", ")")
            return Membership((tok.line, tok.col), left, kind, target)
        if tok.type == "EQ":
            self.advance()
            return Eq((tok.line, tok.col), left, self.parse_term())
        self.fail(
            f"unexpected {tok.value!r}" if tok.type != "EOF" else "unexpected end of input",
            expected=("=", "in"),
        )


def _collect_vars(node, seen, order):
    if isinstance(node, Var):
        if node.name not in seen:
            seen.add(node.name)
            order.append(node.name)
    elif isinstance(node, (Add, Sub, Mul)):
        _collect_vars(node.left, seen, order)
        _collect_vars(node.right, seen, order)
    elif isinstance(node, (Star, Pow, Inv)):
        _collect_vars(node.operand, seen, order)
    elif isinstance(node, Eq):
        _collect_vars(node.left, seen, order)
        _collect_vars(node.right, seen, order)
    elif isinstance(node, Membership):
        _collect_vars(node.candidate, seen, order)
        _collect_vars(node.target, seen, order)


def parse_law(text):
    """Parse a law; see the module docstring for the grammar.

    A conclusion "t^{wd} = expr" (or wdmp) is rewritten to the membership
    "expr in wd(t)" with a warning: equality conclusions are only meaningful
    for unique inverse kinds.

    >>> law = parse_law("(a+b)^{wd} = a^{wd} + b^{wd}")
    >>> print_law(law)
    'a^{wd} + b^{wd} in wd(a + b)'
    >>> law.warnings[0].startswith("conclusion rewritten")
    True
    """
    parser = _Parser(tokenize(text))
    statements = [parser.parse_statement()]
    while parser.peek().type == "COMMA":
        parser.advance()
        statements.append(parser.parse_statement())
    warnings = []
    if parser.peek().type == "IMPLIES":
        parser.advance()
        for stmt in statements:
            if isinstance(stmt, Membership):
                raise LawSyntaxError(
                    "membership is only allowed as the conclusion",
                    stmt.span[0],
                    stmt.span[1],
                    expected=("equation hypothesis",),
                )
        hypotheses = tuple(statements)
        conclusion = parser.parse_statement()
    elif len(statements) > 1:
        parser.fail("hypothesis list must be followed by '=>'", expected=("=>",))
    else:
        hypotheses = ()
        conclusion = statements[0]
    tok = parser.peek()
    if tok.type != "EOF":
        parser.fail(f"unexpected {tok.value!r} after the conclusion", expected=("end of law",))

    if isinstance(conclusion, Eq):
        left, right = conclusion.left, conclusion.right
        decorated = None
        if isinstance(left, Inv) and left.kind in (InverseKind.WD, InverseKind.WDMP):
            decorated, other = left, right
        elif isinstance(right, Inv) and right.kind in (InverseKind.WD, InverseKind.WDMP):
            decorated, other = right, left
        if decorated is not None:
            warnings.append(
                "conclusion rewritten to membership: "
                f"'{print_term(decorated)} = ...' reads as membership in "
                f"{decorated.kind.value}({print_term(decorated.operand)}) because "
                f"{decorated.kind.value} inverses are not unique"
            )
            conclusion = Membership(
                conclusion.span, other, decorated.kind, decorated.operand
            )

    seen, order = set(), []
    for hyp in hypotheses:
        _collect_vars(hyp, seen, order)
    _collect_vars(conclusion, seen, order)
    return Law(hypotheses, conclusion, tuple(order), tuple(warnings))


# -- printer ------------------------------------------------------------------


def _print_node(node, parent_level):
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, (Star, Pow, Inv)):
        inner = _print_node(node.operand, 3)
        if isinstance(node, Star):
            return f"{inner}^*"
        if isinstance(node, Pow):
            return f"{inner}^{node.exponent}"
        return f"{inner}^{{{node.kind.value}}}"
    if isinstance(node, Mul):
        text = f"{_print_node(node.left, 2)}*{_print_node(node.right, 3)}"
        level = 2
    elif isinstance(node, (Add, Sub)):
        op = " + " if isinstance(node, Add) else " - "
        text = f"{_print_node(node.left, 1)}{op}{_print_node(node.right, 2)}"
        level = 1
    else:
        raise TypeError(f"cannot print {type(node).__name__}")
    if level < parent_level:
        return f"({text})"
    return text


def print_term(term):
    return _print_node(term, 1)


def print_statement(stmt):
    if isinstance(stmt, Eq):
        return f"{print_term(stmt.left)} = {print_term(stmt.right)}"
    if isinstance(stmt, Membership):
        return (
            f"{print_term(stmt.candidate)} in "
            f"{stmt.kind.value}({print_term(stmt.target)})"
        )
    raise TypeError(f"cannot print {type(stmt).__name__}")


def print_law(law):
    """Canonical text of a law: parse(print_law(x)) == x for every AST x."""
    concl = print_statement(law.conclusion)
    if law.hypotheses:
        hyps = ", ".join(print_statement(h) for h in law.hypotheses)
        return f"{hyps} => {concl}"
    return concl


# -- reports ------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Outcome of a law evaluation (or necessity probe) on one carrier."""

    law: str
    carrier: dict
    mode: str
    seed: int
    budget: int
    status: str  # pass | fail | vacuous (law) / nonempty | empty (probe)
    bindings_satisfying: int
    conclusion_failures: int
    counterexamples: list
    warnings: tuple = ()
    budget_exhausted: bool = False
    run_type: str = "law"

    @property
    def passed(self):
        return self.status in ("pass", "vacuous")

    def to_json(self):
        data = {
            "law": self.law,
            "carrier": self.carrier,
            "mode": self.mode,
            "seed": self.seed,
            "budget": self.budget,
            "status": self.status,
            "bindings_satisfying": self.bindings_satisfying,
            "warnings": list(self.warnings),
        }
        if self.run_type == "probe":
            data["hits_found"] = self.conclusion_failures
            data["hits"] = self.counterexamples
        else:
            data["conclusion_failures"] = self.conclusion_failures
            data["counterexamples"] = self.counterexamples
            data["budget_exhausted"] = self.budget_exhausted
        return data


class _NeedWitness(Exception):
    def __init__(self, key, candidates):
        self.key = key
        self.candidates = candidates


# -- algebras (carrier adapters) -----------------------------------------------


class _RingAlgebra:
    exhaustive = True

    def __init__(self, ring):
        self.ring = ring

    def describe(self):
        return {"type": "ring", "spec": self.ring.name, "size": self.ring.size}

    def lit(self, v):
        return self.ring.zero if v == 0 else self.ring.one

    def add(self, x, y):
        return self.ring.add(x, y)

    def sub(self, x, y):
        return self.ring.sub(x, y)

    def mul(self, x, y):
        return self.ring.mul(x, y)

    def star(self, x):
        return self.ring.star(x)

    def power(self, x, n):
        return self.ring.power(x, n)

    def domain(self, kinds):
        return [
            a
            for a in self.ring.elements()
            if all(self.ring.possesses(a, kind) for kind in kinds)
        ]

    def witness_candidates(self, value, kind):
        return self.ring.witness_set(value, kind).witnesses

    def wdmp_from(self, w, value):
        m = self.ring.mp_of(value)
        return self.ring.mul(self.ring.mul(w, value), m)

    def wdmp_candidates(self, value):
        out = []
        for w in self.witness_candidates(value, InverseKind.WD):
            y = self.wdmp_from(w, value)
            if y not in out:
                out.append(y)
        return out

    def membership(self, candidate, kind, target):
        return candidate in self.ring.witness_set(target, kind).witnesses

    def format_value(self, v):
        return v


class _MatrixAlgebra:
    exhaustive = False

    def __init__(self, seed, witness_samples=3, dimension=None, field=None):
        self.seed = seed
        self.witness_samples = witness_samples
        self.dimension = dimension
        self.field = field
        self._witness_cache = {}
        self._mp_cache = {}

    def describe(self):
        return {"type": "matrix"}

    def lit(self, v):
        if self.dimension is None or self.field is None:
            raise ValueError(
                "literals 0/1 need a fixed dimension; this matrix carrier "
                "was built without one"
            )
        from .matrices import ExactMatrix

        if v == 0:
            return ExactMatrix.zeros(self.dimension, self.field)
        return ExactMatrix.identity(self.dimension, self.field)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def star(self, x):
        return x.conj_transpose()

    def power(self, x, n):
        return x.power(n)

    def _mp(self, value):
        if value not in self._mp_cache:
            self._mp_cache[value] = mp_inverse(value).value
        return self._mp_cache[value]

    def possesses(self, value, kind):
        return bool(self.witness_candidates(value, kind))

    def witness_candidates(self, value, kind):
        key = (value, kind)
        if key in self._witness_cache:
            return self._witness_cache[key]
        try:
            if kind is InverseKind.MP:
                out = [self._mp(value)]
            elif kind is InverseKind.DRAZIN:
                out = [drazin_inverse(value).value]
            elif kind is InverseKind.GROUP:
                out = [group_inverse(value).value]
            elif kind is InverseKind.CORE:
                out = [core_inverse(value).value]
            elif kind is InverseKind.PSEUDO_CORE:
                out = [pseudo_core_inverse(value).value]
            elif kind is InverseKind.RIGHT_PSEUDO_CORE:
                out = [right_pseudo_core_inverse(value).value]
            elif kind is InverseKind.DMP:
                out = [dmp_inverse(value).value]
            elif kind is InverseKind.WD:
                out = list(
                    dict.fromkeys(
                        res.value
                        for res in wd_family_sample(
                            value, self.seed, self.witness_samples
                        )
                    )
                )
            elif kind is InverseKind.WDMP:
                out = self.wdmp_candidates(value)
            elif kind is InverseKind.INNER:
                out = [self._mp(value)]
            else:
                raise ValueError(f"unknown inverse kind {kind!r}")
        except IndexTooLarge:
            out = []
        self._witness_cache[key] = out
        return out

    def wdmp_from(self, w, value):
        return w * value * self._mp(value)

    def wdmp_candidates(self, value):
        out = []
        for w in self.witness_candidates(value, InverseKind.WD):
            y = self.wdmp_from(w, value)
            if y not in out:
                out.append(y)
        return out

    def membership(self, candidate, kind, target):
        k = matrix_k_used(target)
        if kind is InverseKind.WDMP:
            d = drazin_inverse(target).value
            m = self._mp(target)
            tk = target.power(k)
            return (
                candidate * target * candidate == candidate
                and target * candidate == target * m
                and candidate * tk == d * tk
            )
        return verify_definition(kind, target, candidate, k)

    def format_value(self, v):
        return v.to_json()


# -- evaluator ------------------------------------------------------------------


def _decoration_map(law):
    """(variable -> sorted kinds) for variable-rooted inverse decorations."""
    kinds = {}

    def walk(node):
        if isinstance(node, Inv) and isinstance(node.operand, Var):
            kinds.setdefault(node.operand.name, set()).add(node.kind)
        if isinstance(node, (Add, Sub, Mul)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, (Star, Pow, Inv)):
            walk(node.operand)
        elif isinstance(node, Eq):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Membership):
            walk(node.candidate)
            walk(node.target)

    for hyp in law.hypotheses:
        walk(hyp)
    walk(law.conclusion)
    return {
        var: sorted(ks, key=lambda k: _KIND_ORDER[k]) for var, ks in kinds.items()
    }


def _statement_requirements(stmt):
    """Variables and variable-rooted witness keys a statement depends on."""
    vars_needed, keys_needed = set(), set()

    def walk(node):
        if isinstance(node, Var):
            vars_needed.add(node.name)
        elif isinstance(node, Inv):
            if isinstance(node.operand, Var):
                vars_needed.add(node.operand.name)
                keys_needed.add((node.operand.name, node.kind))
            else:
                walk(node.operand)
        elif isinstance(node, (Add, Sub, Mul)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, (Star, Pow)):
            walk(node.operand)
        elif isinstance(node, Eq):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Membership):
            walk(node.candidate)
            walk(node.target)

    walk(stmt)
    return vars_needed, keys_needed


def _witness_label(key, algebra):
    if key[0] == "val":
        return f"<{_compact(algebra.format_value(key[1]))}>^{{{key[2].value}}}"
    return f"{key[0]}^{{{key[1].value}}}"


def _compact(value):
    if isinstance(value, dict):
        return ";".join(" ".join(row) for row in value["entries"])
    return str(value)


class _Evaluator:
    def __init__(self, law, algebra, budget, probe=False, count_all=True):
        self.law = law
        self.algebra = algebra
        self.budget = budget
        self.probe = probe
        self.count_all = count_all
        self.var_kinds = _decoration_map(law)
        self.steps = self._plan()
        self.satisfying = 0
        self.failures = 0
        self.records = []
        self.budget_exhausted = False

    def _plan(self):
        """Interleave assignments with the earliest hypothesis checks.

        Value assignments come first so that witness loops only run on
        bindings that already pass every witness-free hypothesis.
        """
        reqs = [_statement_requirements(h) for h in self.law.hypotheses]
        checked = [False] * len(reqs)
        bound_vars, bound_keys = set(), set()
        steps = []

        def schedule():
            for i, (vs, ks) in enumerate(reqs):
                if not checked[i] and vs <= bound_vars and ks <= bound_keys:
                    checked[i] = True
                    steps.append(("hyp", i))

        for var in self.law.variables:
            steps.append(("value", var))
            bound_vars.add(var)
            schedule()
        for var in self.law.variables:
            for kind in self.var_kinds.get(var, ()):
                steps.append(("witness", var, kind))
                bound_keys.add((var, kind))
                schedule()
        for i, flag in enumerate(checked):
            if not flag:  # pragma: no cover - unreachable: all keys get bound
                steps.append(("hyp", i))
        steps.append(("finish",))
        return steps

    # value evaluation ------------------------------------------------------

    def _eval(self, node, env):
        alg = self.algebra
        if isinstance(node, Var):
            return env[node.name]
        if isinstance(node, Lit):
            return alg.lit(node.value)
        if isinstance(node, Add):
            return alg.add(self._eval(node.left, env), self._eval(node.right, env))
        if isinstance(node, Sub):
            return alg.sub(self._eval(node.left, env), self._eval(node.right, env))
        if isinstance(node, Mul):
            return alg.mul(self._eval(node.left, env), self._eval(node.right, env))
        if isinstance(node, Star):
            return alg.star(self._eval(node.operand, env))
        if isinstance(node, Pow):
            return alg.power(self._eval(node.operand, env), node.exponent)
        if isinstance(node, Inv):
            if isinstance(node.operand, Var):
                return env[(node.operand.name, node.kind)]
            value = self._eval(node.operand, env)
            key = ("val", value, node.kind)
            if key in env:
                return env[key]
            if node.kind is InverseKind.WDMP:
                wd_key = ("val", value, InverseKind.WD)
                if wd_key in env:
                    cands = [self.algebra.wdmp_from(env[wd_key], value)]
                else:
                    cands = self.algebra.wdmp_candidates(value)
            else:
                cands = list(self.algebra.witness_candidates(value, node.kind))
            raise _NeedWitness(key, cands)
        raise TypeError(f"cannot evaluate {type(node).__name__}")

    def _statement_holds(self, stmt, env):
        if isinstance(stmt, Eq):
            return self._eval(stmt.left, env) == self._eval(stmt.right, env)
        candidate = self._eval(stmt.candidate, env)
        target = self._eval(stmt.target, env)
        return self.algebra.membership(candidate, stmt.kind, target)

    def _holds_forall(self, stmt, env):
        """All dynamic witness choices satisfy stmt; no choice means failure."""
        try:
            return self._statement_holds(stmt, env)
        except _NeedWitness as nw:
            if not nw.candidates:
                return False
            for cand in nw.candidates:
                env[nw.key] = cand
                ok = self._holds_forall(stmt, env)
                del env[nw.key]
                if not ok:
                    return False
            return True

    # binding enumeration ----------------------------------------------------

    def run(self, value_domains, bindings=None):
        """Scan the binding space.

        Exhaustive mode passes per-variable domains; sampled mode passes an
        iterable of complete variable-value dicts instead.
        """
        if bindings is None:
            self._descend(0, {}, value_domains, False)
        else:
            for binding in bindings:
                if any(
                    not self.algebra.possesses(binding[v], k)
                    for v, ks in self.var_kinds.items()
                    for k in ks
                ):
                    continue
                env = dict(binding)
                self._descend(0, env, None, False)
        return self

    def _descend(self, idx, env, domains, hyp_failed):
        if self.budget_exhausted and not self.algebra.exhaustive:
            return
        step = self.steps[idx]
        tag = step[0]
        if tag == "value":
            var = step[1]
            if domains is None:  # sampled mode: values arrive pre-bound
                self._descend(idx + 1, env, domains, hyp_failed)
                return
            for value in domains[var]:
                env[var] = value
                self._descend(idx + 1, env, domains, hyp_failed)
                del env[var]
            return
        if tag == "witness":
            var, kind = step[1], step[2]
            key = (var, kind)
            value = env[var]
            if kind is InverseKind.WDMP:
                if (var, InverseKind.WD) in env:
                    choices = [self.algebra.wdmp_from(env[(var, InverseKind.WD)], value)]
                else:
                    choices = self.algebra.wdmp_candidates(value)
            else:
                choices = self.algebra.witness_candidates(value, kind)
            for choice in choices:
                env[key] = choice
                self._descend(idx + 1, env, domains, hyp_failed)
                del env[key]
            return
        if tag == "hyp":
            hyp = self.law.hypotheses[step[1]]
            self._check_hyp(hyp, idx, env, domains, hyp_failed)
            return
        self._finish(env, hyp_failed)

    def _check_hyp(self, hyp, idx, env, domains, hyp_failed):
        try:
            ok = self._statement_holds(hyp, env)
        except _NeedWitness as nw:
            for cand in nw.candidates:
                env[nw.key] = cand
                self._check_hyp(hyp, idx, env, domains, hyp_failed)
                del env[nw.key]
            return
        if self.probe:
            self._descend(idx + 1, env, domains, hyp_failed or not ok)
        elif ok:
            self._descend(idx + 1, env, domains, hyp_failed)

    def _finish(self, env, hyp_failed):
        if self.probe:
            if not hyp_failed:
                return
            if self._holds_forall(self.law.conclusion, env):
                self.failures += 1
                if len(self.records) < self.budget:
                    self.records.append(self._snapshot(env, hyp_failed=True))
            return
        self.satisfying += 1
        if not self._holds_forall(self.law.conclusion, env):
            self.failures += 1
            if len(self.records) < self.budget:
                self.records.append(self._snapshot(env))
            else:
                self.budget_exhausted = True

    def _snapshot(self, env, hyp_failed=False):
        alg = self.algebra
        variables = {
            v: alg.format_value(env[v]) for v in self.law.variables if v in env
        }
        witnesses = {
            _witness_label(key, alg): alg.format_value(val)
            for key, val in env.items()
            if isinstance(key, tuple)
        }
        record = {"variables": variables, "witnesses": witnesses}
        if hyp_failed:
            record["failed_hypotheses"] = [
                print_statement(h)
                for h in self.law.hypotheses
                if not self._holds_forall(h, dict(env))
            ]
        return record


def _thread_count():
    try:
        return max(1, int(os.environ.get("GINV_THREADS", "1")))
    except ValueError:
        return 1


def _merge(evaluators, primary):
    for ev in evaluators:
        primary.satisfying += ev.satisfying
        primary.failures += ev.failures
        primary.records.extend(ev.records)
        primary.budget_exhausted = primary.budget_exhausted or ev.budget_exhausted
    primary.records = primary.records[: primary.budget]
    return primary


def evaluate_law(law, carrier, mode="exhaustive", budget=10, samples=200, seed=0):
    """Evaluate a law over a finite ring (exhaustive) or matrix sampler (sampled).

    Returns a VerificationReport with status pass / fail / vacuous; vacuous
    means no binding satisfied the hypotheses, which is reported distinctly
    to prevent false confidence.

    >>> from .rings import ring_build
    >>> report = evaluate_law(parse_law("1^{wd} in wd(1)"), ring_build("Zn:5"))
    >>> report.status, report.bindings_satisfying
    ('pass', 1)
    """
    if isinstance(law, str):
        law = parse_law(law)
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    if mode == "exhaustive":
        if not isinstance(carrier, FiniteRing):
            raise ValueError("exhaustive mode requires a FiniteRing carrier")
        algebra = _RingAlgebra(carrier)
        carrier_desc = algebra.describe()
        base = _Evaluator(law, algebra, budget)
        domains = {
            var: algebra.domain(base.var_kinds.get(var, ()))
            for var in law.variables
        }
        threads = _thread_count()
        if threads > 1 and law.variables:
            first = law.variables[0]
            chunks = [
                {**domains, first: [v]} for v in domains[first]
            ]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(
                    pool.map(
                        lambda d: _Evaluator(law, algebra, budget).run(d), chunks
                    )
                )
            result = _merge(parts, base)
        else:
            result = base.run(domains)
    else:
        algebra = getattr(carrier, "algebra", None)
        if algebra is None or not hasattr(carrier, "bindings"):
            raise ValueError("sampled mode requires a matrix sampler carrier")
        carrier_desc = carrier.describe()
        base = _Evaluator(law, algebra, budget)
        result = base.run(None, bindings=carrier.bindings(law.variables, samples))

    if result.failures:
        status = "fail"
    elif result.satisfying == 0:
        status = "vacuous"
    else:
        status = "pass"
    return VerificationReport(
        law=print_law(law),
        carrier=carrier_desc,
        mode=mode,
        seed=seed,
        budget=budget,
        status=status,
        bindings_satisfying=result.satisfying,
        conclusion_failures=result.failures,
        counterexamples=result.records,
        warnings=law.warnings,
        budget_exhausted=result.budget_exhausted,
    )


def necessity_probe(law, carrier, budget=10):
    """Search for bindings where the conclusion holds but a hypothesis fails.

    A nonempty result certifies the hypotheses are sufficient but not
    necessary. Requires at least one hypothesis and a FiniteRing carrier.
    """
    if isinstance(law, str):
        law = parse_law(law)
    if not law.hypotheses:
        raise ValueError("necessity_probe requires a law with hypotheses")
    if not isinstance(carrier, FiniteRing):
        raise ValueError("necessity_probe requires a FiniteRing carrier")
    algebra = _RingAlgebra(carrier)
    evaluator = _Evaluator(law, algebra, budget, probe=True)
    domains = {
        var: algebra.domain(evaluator.var_kinds.get(var, ()))
        for var in law.variables
    }
    evaluator.run(domains)
    return VerificationReport(
        law=print_law(law),
        carrier=algebra.describe(),
        mode="exhaustive",
        seed=0,
        budget=budget,
        status="nonempty" if evaluator.failures else "empty",
        bindings_satisfying=evaluator.satisfying,
        conclusion_failures=evaluator.failures,
        counterexamples=evaluator.records,
        warnings=law.warnings,
        run_type="probe",
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()

"""Parser for polynomial expressions in catalog files and CLI values.

Grammar (tokens separated by optional whitespace):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/' | '@') factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Names resolve to parameters (scalars) or generators (polynomials); '@'
builds simple tensors.  Scalars commute with everything, generator
products stay in written order.  Errors carry line and column positions
into CatalogParseError.
"""

from __future__ import annotations

from . import scalars as sc
from .errors import AlgebraMismatch, CatalogParseError
from .ncalg import FreePoly, TensorPoly


class Token:
    __slots__ = ("kind", "text", "col")

    def __init__(self, kind, text, col):
        self.kind = kind
        self.text = text
        self.col = col


def tokenize(text, path="<expr>", line=1, col_offset=0):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = col_offset + i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("num", text[i:j], col))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("name", text[i:j], col))
            i = j
        elif ch in "+-*/^@()":
            out.append(Token("op", ch, col))
            i += 1
        else:
            raise CatalogParseError(f"unexpected character {ch!r}", path, line, col)
    out.append(Token("end", "", col_offset + n + 1))
    return out


def _is_scalar(v):
    return isinstance(v, sc.Scalar)


class _Parser:
    def __init__(self, tokens, resolver, tensor_slots, path, line):
        self.tokens = tokens
        self.pos = 0
        self.resolver = resolver
        self.tensor_slots = tensor_slots
        self.path = path
        self.line = line

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise CatalogParseError(message, self.path, self.line, tok.col)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected {tok.text!r} after expression", tok)
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                rhs = self.term()
                value = self.combine_add(value, rhs, tok.text, tok)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/@":
                self.take()
                rhs = self.factor()
                if tok.text == "*":
                    value = self.combine_mul(value, rhs, tok)
                elif tok.text == "/":
                    value = self.combine_div(value, rhs, tok)
                else:
                    value = self.combine_tensor(value, rhs, tok)
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            return -self.factor()
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            exp = self.take()
            if exp.kind != "num":
                self.fail("exponent must be a nonnegative integer", exp)
            return value ** int(exp.text)
        return value

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return sc.ensure_scalar(int(tok.text))
        if tok.kind == "name":
            return self.resolver(tok.text, tok, self)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            close = self.take()
            if close.kind != "op" or close.text != ")":
                self.fail("expected ')'", close)
            return value
        self.fail(f"expected a value, found {tok.text or 'end of input'!r}", tok)

    # -- typed combination ---------------------------------------------

    def combine_add(self, a, b, op, tok):
        if _is_scalar(a) and not _is_scalar(b):
            a = self.promote(a, b, tok)
        elif _is_scalar(b) and not _is_scalar(a):
            b = self.promote(b, a, tok)
        try:
            return a + b if op == "+" else a - b
        except AlgebraMismatch as exc:
            self.fail(str(exc), tok)

    def promote(self, scalar, like, tok):
        if isinstance(like, FreePoly):
            return FreePoly.unit(like.alg, scalar)
        return TensorPoly(like.lalg, like.ralg, {((), ()): scalar})

    def combine_mul(self, a, b, tok):
        if isinstance(a, TensorPoly) and isinstance(b, FreePoly):
            self.fail("cannot multiply a tensor by a bare polynomial", tok)
        if isinstance(b, TensorPoly) and isinstance(a, FreePoly):
            self.fail("cannot multiply a bare polynomial by a tensor", tok)
        try:
            return a * b
        except AlgebraMismatch as exc:
            self.fail(str(exc), tok)

    def combine_div(self, a, b, tok):
        if isinstance(b, FreePoly):
            if b.degree() == 0:
                b = b.constant()
            else:
                self.fail("can only divide by scalars", tok)
        if isinstance(b, TensorPoly):
            self.fail("can only divide by scalars", tok)
        if not b:
            self.fail("division by zero", tok)
        if _is_scalar(a):
            return a / b
        return a.scale(sc.ONE / b)

    def combine_tensor(self, a, b, tok):
        if isinstance(a, TensorPoly) or isinstance(b, TensorPoly):
            self.fail("tensors of more than two factors are not supported", tok)
        slots = self.tensor_slots
        if _is_scalar(a):
            if slots is None:
                self.fail("scalar tensor factor needs a declared tensor target", tok)
            a = FreePoly.unit(slots[0], a)
        if _is_scalar(b):
            if slots is None:
                self.fail("scalar tensor factor needs a declared tensor target", tok)
            b = FreePoly.unit(slots[1], b)
        if slots is not None:
            if a.alg is not slots[0]:
                self.fail(f"left tensor factor must live over {slots[0].id}", tok)
            if b.alg is not slots[1]:
                self.fail(f"right tensor factor must live over {slots[1].id}", tok)
        return TensorPoly.of(a, b)


def parse_value(
    text,
    params=None,
    gens=None,
    tensor_slots=None,
    path="<expr>",
    line=1,
    col_offset=0,
):
    """Parse text into a Scalar, FreePoly or TensorPoly.

    params maps names to scalars, gens maps names to generator
    polynomials; gens win on collision.  tensor_slots, when given, is the
    (left algebra, right algebra) pair that '@' expressions must fit.
    """
    params = params if params is not None else {}
    gens = gens if gens is not None else {}

    def resolver(name, tok, parser):
        if name in gens:
            return gens[name]
        if name in params:
            return params[name]
        parser.fail(f"unknown name {name!r}", tok)

    tokens = tokenize(text, path, line, col_offset)
    parser = _Parser(tokens, resolver, tensor_slots, path, line)
    value = parser.parse()
    return value


def parse_scalar(text, params=None, path="<expr>", line=1, col_offset=0):
    """Parse a pure scalar expression (CLI parameter values)."""
    value = parse_value(
        text, params=params if params is not None else sc.PARAMS,
        path=path, line=line, col_offset=col_offset,
    )
    if not _is_scalar(value):
        raise CatalogParseError("expected a scalar expression", path, line, col_offset + 1)
    return value


def gen_map(alg):
    """name -> generator polynomial map for an algebra."""
    return {name: FreePoly.from_word(alg, (i,)) for i, name in enumerate(alg.gens)}

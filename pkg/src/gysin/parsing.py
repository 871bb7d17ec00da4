"""Parser for the textual polynomial and cohomology-class grammar.

See gysin.cli for the grammar reference.  Round-trips the canonical
printing of gysin.polynomial bit-exactly.
"""

import re

from .errors import ParseError, UnknownVariable
from .polynomial import Polynomial, tvar, uvar, vvar, zvar
from .schur import Partition, schur_poly

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[stuvz])|(?P<sym>[\[\],()+\-*/^]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append((m.group("sym"), m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, validate=None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.validate = validate

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[1]), tok[2])
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input %r" % (tok[1],), tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        sign = 1
        while self.peek()[0] == "-":
            self.next()
            sign = -sign
        p = self.factor()
        while self.peek()[0] == "*":
            self.next()
            p = p * self.factor()
        return p * sign if sign < 0 else p

    def factor(self):
        p = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("int")
            p = p ** tok[1]
        return p

    def atom(self):
        tok = self.next()
        if tok[0] == "int":
            value = tok[1]
            if self.peek()[0] == "/":
                self.next()
                den = self.expect("int")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                from fractions import Fraction

                return Polynomial.constant(Fraction(value, den[1]))
            return Polynomial.constant(value)
        if tok[0] == "(":
            p = self.expr()
            self.expect(")")
            return p
        if tok[0] == "name":
            if tok[1] == "s":
                return self.schur_atom(tok)
            return self.variable_atom(tok)
        raise ParseError("unexpected token %r" % (tok[1],), tok[2])

    def variable_atom(self, tok):
        kind = tok[1]
        pos = tok[2]
        self.expect("[")
        first = self.expect("int")[1]
        second = None
        if self.peek()[0] == ",":
            self.next()
            second = self.expect("int")[1]
        self.expect("]")
        try:
            if kind == "t":
                if second is not None:
                    raise ParseError("t takes one index", pos)
                var = tvar(first)
            elif kind == "u":
                if second is not None:
                    raise ParseError("u takes one index", pos)
                var = uvar(first)
            elif kind == "v":
                if second is None:
                    raise ParseError("v takes two indices", pos)
                var = vvar(first, second)
            else:
                var = zvar(first, second) if second is not None else zvar(1, first)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
        if self.validate is not None:
            self.validate(var, pos)
        return Polynomial.variable(var)

    def schur_atom(self, tok):
        pos = tok[2]
        self.expect("[")
        parts = []
        if self.peek()[0] == "int":
            parts.append(self.next()[1])
            while self.peek()[0] == ",":
                self.next()
                parts.append(self.expect("int")[1])
        self.expect("]")
        self.expect("(")
        name = self.expect("name")
        if name[1] != "z":
            raise ParseError("schur shorthand takes a z-block", name[2])
        block = 0
        if self.peek()[0] == "int":
            block = self.next()[1]
        self.expect(")")
        if self.block_vars is None:
            raise ParseError("schur shorthand needs a space context", pos)
        variables = self.block_vars(block, pos)
        try:
            lam = Partition(parts)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
        if len(lam.trimmed()) > len(variables):
            raise ParseError(
                "partition %s has more parts than block variables" % lam, pos
            )
        return schur_poly(lam, variables)

    block_vars = None


def parse_polynomial(text):
    """Parse free-standing polynomial text (no space context)."""
    return _Parser(text).parse()


def parse_class(text, spec):
    """Parse a cohomology class against a space's variable blocks.

    Raises UnknownVariable when an index exceeds the space's dimensions
    and ParseError on malformed text.
    """
    allowed = set(spec.z_variables()) | set(spec.t_variables())

    def validate(var, pos):
        if var not in allowed:
            raise UnknownVariable(
                "variable %s does not exist on %s" % (var, spec), pos
            )

    def block_vars(block, pos):
        if block == 0:
            block = spec.k
        if not 1 <= block <= spec.k:
            raise UnknownVariable("no z-block %d on %s" % (block, spec), pos)
        return spec.z_variables(block)

    parser = _Parser(text, validate=validate)
    parser.block_vars = block_vars
    return parser.parse()

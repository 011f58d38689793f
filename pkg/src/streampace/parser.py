# Surface-syntax parser and canonical printer.
#
# Grammar (whitespace insignificant, // line comments):
#   spec   := (decl)*
#   decl   := "input" IDENT | "output" IDENT "@" pacing ":=" expr
#   pacing := pterm ("|" pterm)*            left-assoc Or
#   pterm  := patom ("&" patom)*            left-assoc And
#   patom  := "true" | IDENT | "(" pacing ")"
#   expr   := cmp
#   cmp    := sum (("<" | "==") sum)?       non-associative
#   sum    := prod (("+" | "-") prod)*      left-assoc
#   prod   := access ("*" access)*          left-assoc
#   access := atom | IDENT "." ("prev"|"hold") "(" "or" ":" expr ")"
#   atom   := INT | "-" INT | IDENT | "(" expr ")"

from dataclasses import dataclass

from .syntax import (
    And, BinOp, Const, Equation, Hold, In, Or, Prev, Spec, Top, Var,
    RESERVED, validate,
)


@dataclass(frozen=True)
class SourcePos:
    line: int  # 1-based
    column: int  # 1-based

    def __str__(self):
        return f"{self.line}:{self.column}"


class ParseError(Exception):
    def __init__(self, pos: SourcePos, expected: str, found: str):
        self.pos = pos
        self.expected = expected
        self.found = found
        super().__init__(f"{pos}: expected {expected}, found {found}")


_PUNCT = ("==", ":=", "@", ":", "(", ")", "|", "&", "+", "-", "*", "<", ".")


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "int", "punct", "eof"
    text: str
    pos: SourcePos


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        pos = SourcePos(line, col)
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], pos))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], pos))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(_Token("punct", p, pos))
                col += len(p)
                i += len(p)
                break
        else:
            raise ParseError(pos, "a token", repr(c))
    tokens.append(_Token("eof", "", SourcePos(line, col)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def cur(self):
        return self.tokens[self.i]

    def _describe(self, tok):
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def error(self, expected):
        raise ParseError(self.cur.pos, expected, self._describe(self.cur))

    def at_punct(self, text):
        return self.cur.kind == "punct" and self.cur.text == text

    def at_word(self, word):
        return self.cur.kind == "ident" and self.cur.text == word

    def advance(self):
        tok = self.cur
        self.i += 1
        return tok

    def expect_punct(self, text):
        if not self.at_punct(text):
            self.error(repr(text))
        return self.advance()

    def expect_word(self, word):
        if not self.at_word(word):
            self.error(repr(word))
        return self.advance()

    def expect_ident(self):
        if self.cur.kind != "ident" or self.cur.text in RESERVED:
            self.error("an identifier")
        return self.advance()

    # --- declarations ---

    def parse_spec(self):
        inputs = []
        equations = []
        positions = {}
        while self.cur.kind != "eof":
            if self.at_word("input"):
                self.advance()
                tok = self.expect_ident()
                inputs.append(tok.text)
                positions.setdefault(tok.text, tok.pos)
            elif self.at_word("output"):
                self.advance()
                tok = self.expect_ident()
                self.expect_punct("@")
                pacing = self.parse_pacing()
                self.expect_punct(":=")
                body = self.parse_expr()
                equations.append(Equation(tok.text, pacing, body))
                positions.setdefault(tok.text, tok.pos)
            else:
                self.error("'input' or 'output'")
        return Spec(tuple(inputs), tuple(equations)), positions

    # --- pacings ---

    def parse_pacing(self):
        tau = self.parse_pterm()
        while self.at_punct("|"):
            self.advance()
            tau = Or(tau, self.parse_pterm())
        return tau

    def parse_pterm(self):
        tau = self.parse_patom()
        while self.at_punct("&"):
            self.advance()
            tau = And(tau, self.parse_patom())
        return tau

    def parse_patom(self):
        if self.at_word("true"):
            self.advance()
            return Top()
        if self.at_punct("("):
            self.advance()
            tau = self.parse_pacing()
            self.expect_punct(")")
            return tau
        tok = self.expect_ident()
        return In(tok.text)

    # --- expressions ---

    def parse_expr(self):
        return self.parse_cmp()

    def parse_cmp(self):
        lhs = self.parse_sum()
        if self.at_punct("<") or self.at_punct("=="):
            op = self.advance().text
            rhs = self.parse_sum()
            # non-associative: a < b < c is rejected
            if self.at_punct("<") or self.at_punct("=="):
                self.error("end of comparison (comparisons do not chain)")
            return BinOp(op, lhs, rhs)
        return lhs

    def parse_sum(self):
        e = self.parse_prod()
        while self.at_punct("+") or self.at_punct("-"):
            op = self.advance().text
            e = BinOp(op, e, self.parse_prod())
        return e

    def parse_prod(self):
        e = self.parse_access()
        while self.at_punct("*"):
            self.advance()
            e = BinOp("*", e, self.parse_access())
        return e

    def parse_access(self):
        if self.cur.kind == "ident" and self.cur.text not in RESERVED:
            nxt = self.tokens[self.i + 1]
            if nxt.kind == "punct" and nxt.text == ".":
                target = self.advance().text
                self.advance()  # "."
                if self.at_word("prev"):
                    ctor = Prev
                elif self.at_word("hold"):
                    ctor = Hold
                else:
                    self.error("'prev' or 'hold'")
                self.advance()
                self.expect_punct("(")
                self.expect_word("or")
                self.expect_punct(":")
                default = self.parse_expr()
                self.expect_punct(")")
                return ctor(target, default)
        return self.parse_atom()

    def parse_atom(self):
        if self.cur.kind == "int":
            return Const(int(self.advance().text))
        if self.at_punct("-"):
            self.advance()
            if self.cur.kind != "int":
                self.error("an integer literal")
            return Const(-int(self.advance().text))
        if self.at_punct("("):
            self.advance()
            e = self.parse_expr()
            self.expect_punct(")")
            return e
        if self.cur.kind == "ident" and self.cur.text not in RESERVED:
            return Var(self.advance().text)
        self.error("an integer, identifier, or '('")


class SpecError(Exception):
    """A well-formedness violation, located at the offending declaration."""

    def __init__(self, pos: SourcePos, cause):
        self.pos = pos
        self.cause = cause
        super().__init__(f"{pos}: {cause}")


def parse_spec(text: str) -> Spec:
    """Parse a specification; the result always passes validate.

    Raises ParseError on syntax errors and SpecError (wrapping the
    WellFormednessError) on scoping/duplication errors.
    """
    spec, positions = _Parser(_tokenize(text)).parse_spec()
    from .syntax import WellFormednessError
    try:
        validate(spec)
    except WellFormednessError as err:
        pos = positions.get(err.name)
        if pos is None:
            # undeclared name: report at the declaration that uses it
            ctx = err.context
            owner = ctx.rsplit(" ", 1)[-1] if ctx else ""
            pos = positions.get(owner, SourcePos(1, 1))
        raise SpecError(pos, err) from err
    return spec


# --- canonical printing ---

_PREC = {"<": 1, "==": 1, "+": 2, "-": 2, "*": 3}


def print_expr(e, level=0):
    match e:
        case Const(value):
            return str(value)
        case Var(name):
            return name
        case Prev(target, default):
            return f"{target}.prev(or: {print_expr(default)})"
        case Hold(target, default):
            return f"{target}.hold(or: {print_expr(default)})"
        case BinOp(op, lhs, rhs):
            prec = _PREC[op]
            # comparisons are non-associative: parenthesize nested ones
            lhs_level = prec if op not in ("<", "==") else prec + 1
            s = (f"{print_expr(lhs, lhs_level)} {op} "
                 f"{print_expr(rhs, prec + 1)}")
            return f"({s})" if prec < level else s
    raise TypeError(f"not a stream expression: {e!r}")


def print_pacing(tau, level=0):
    match tau:
        case Top():
            return "true"
        case In(name):
            return name
        case Or(lhs, rhs):
            s = f"{print_pacing(lhs, 1)} | {print_pacing(rhs, 2)}"
            return f"({s})" if level > 1 else s
        case And(lhs, rhs):
            s = f"{print_pacing(lhs, 2)} & {print_pacing(rhs, 3)}"
            return f"({s})" if level > 2 else s
    raise TypeError(f"not a pacing annotation: {tau!r}")


def print_spec(spec: Spec) -> str:
    """Emit canonical surface syntax; parse_spec(print_spec(s)) == s."""
    lines = [f"input {name}" for name in spec.inputs]
    for eq in spec.equations:
        lines.append(
            f"output {eq.output} @ {print_pacing(eq.pacing)}"
            f" := {print_expr(eq.body)}")
    return "".join(line + "\n" for line in lines)

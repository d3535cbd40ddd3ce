"""Tiny expression grammar shared by element, polynomial and CLI parsers.

Grammar (left associative, usual precedence)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Parsing produces a small tuple AST which is then folded by an evaluator
object supplying ring operations, so the same front end serves finite
field elements, polynomials in ``y``, rational functions and skew
polynomials in ``t``.
"""

import re


class ParseError(ValueError):
    """Raised on malformed input; ``position`` is a 0-based column."""

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.unary()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return ("neg", self.unary())
        if self.peek()[0] == "op" and self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer", tok)
            node = ("pow", node, tok[1])
        return node

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return ("int", value)
        if kind == "name":
            return ("name", value, tok[2])
        if kind == "op" and value == "(":
            node = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.fail("expected ')'", close)
            return node
        self.fail("unexpected token", tok)


def parse_ast(text):
    return _Parser(text).parse()


def evaluate(text, ev):
    """Parse ``text`` and fold it with evaluator ``ev``.

    ``ev`` must provide ``const(int)``, ``symbol(name)`` (returning None
    for unknown names), ``add``, ``sub``, ``neg``, ``mul``, ``power`` and
    optionally ``div``.
    """
    ast = parse_ast(text)

    def fold(node):
        tag = node[0]
        if tag == "int":
            return ev.const(node[1])
        if tag == "name":
            value = ev.symbol(node[1])
            if value is None:
                raise ParseError(f"unknown symbol {node[1]!r}", text, node[2])
            return value
        if tag == "neg":
            return ev.neg(fold(node[1]))
        if tag == "pow":
            return ev.power(fold(node[1]), node[2])
        a = fold(node[1])
        b = fold(node[2])
        if tag == "add":
            return ev.add(a, b)
        if tag == "sub":
            return ev.sub(a, b)
        if tag == "mul":
            return ev.mul(a, b)
        if tag == "div":
            div = getattr(ev, "div", None)
            if div is None:
                raise ParseError("division is not supported here", text, 0)
            try:
                return div(a, b)
            except ZeroDivisionError as exc:
                raise ParseError(str(exc) or "division by zero", text, 0) from exc
        raise ParseError(f"bad node {tag}", text, 0)

    return fold(ast)


def parse_call(text):
    """Split ``name(arg, ...)`` into the name and raw argument strings."""
    text = text.strip()
    m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*(?:\((.*)\))?", text, re.S)
    if m is None:
        raise ParseError("expected name(args)", text, 0)
    name = m.group(1)
    inner = m.group(2)
    if inner is None:
        return name, []
    args, depth, cur = [], 0, []
    for ch in inner:
        if ch == "," and depth == 0:
            args.append("".join(cur).strip())
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    if cur or args:
        args.append("".join(cur).strip())
    return name, args

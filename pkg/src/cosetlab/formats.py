"""Text formats: presentations, cycle notation, permutation-group files.

Presentation grammar::

    gens <name> ("," <name>)* ";" rels [<wordexpr> ("," <wordexpr>)*] ";"
    wordexpr := factor ("*" factor)*
    factor   := atom ("^" integer)?
    atom     := name | "(" wordexpr ")"

Permutation-group files start with a ``degree: N`` line followed by
generators in cycle notation, separated by top-level commas.  Newlines
inside a generator are ignored, so long cycles may wrap.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .fp import Presentation, free_reduce, inverse_word

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[,;*^()]))")


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                rest = text[pos:]
                if rest.strip() == "":
                    break
                off = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[off]!r}", *_position(text, off))
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, *_position(self.text, tok[2]))

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[1] is not None else "end of input"
            raise self.error(f"expected {want!r}, got {got!r}", tok)
        return tok


def _parse_wordexpr(lex, names):
    letters = _parse_factor(lex, names)
    while lex.peek()[:2] == ("sym", "*"):
        lex.next()
        letters = letters + _parse_factor(lex, names)
    return letters


def _parse_factor(lex, names):
    tok = lex.peek()
    if tok[0] == "name":
        lex.next()
        if tok[1] not in names:
            raise lex.error(f"unknown generator {tok[1]!r}", tok)
        atom = (names[tok[1]],)
    elif tok[:2] == ("sym", "("):
        lex.next()
        atom = _parse_wordexpr(lex, names)
        lex.expect("sym", ")")
    else:
        raise lex.error("expected a generator or '('")
    if lex.peek()[:2] == ("sym", "^"):
        lex.next()
        k = int(lex.expect("int")[1])
        if k < 0:
            atom, k = inverse_word(atom), -k
        atom = atom * k
    return free_reduce(atom)


def _parse_word_list(lex, names, terminator=";"):
    words = []
    if lex.peek()[:2] == ("sym", terminator) or lex.peek()[0] is None:
        return words
    words.append(_parse_wordexpr(lex, names))
    while lex.peek()[:2] == ("sym", ","):
        lex.next()
        words.append(_parse_wordexpr(lex, names))
    return words


def parse_presentation(text) -> Presentation:
    lex = _Lexer(text)
    lex.expect("name", "gens")
    order = [lex.expect("name")[1]]
    while lex.peek()[:2] == ("sym", ","):
        lex.next()
        tok = lex.expect("name")
        if tok[1] in order:
            raise lex.error(f"duplicate generator {tok[1]!r}", tok)
        order.append(tok[1])
    lex.expect("sym", ";")
    lex.expect("name", "rels")
    names = {n: i + 1 for i, n in enumerate(order)}
    rels = _parse_word_list(lex, names)
    lex.expect("sym", ";")
    if lex.peek()[0] is not None:
        raise lex.error("trailing input")
    return Presentation(tuple(order), tuple(rels))


def parse_words(text, p: Presentation):
    """Comma-separated word expressions over ``p``'s generators.

    An optional trailing ``;`` is accepted; empty text means no words.
    """
    lex = _Lexer(text)
    names = {n: i + 1 for i, n in enumerate(p.generator_names)}
    words = _parse_word_list(lex, names)
    if lex.peek()[:2] == ("sym", ";"):
        lex.next()
    if lex.peek()[0] is not None:
        raise lex.error("trailing input")
    return words


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text, degree):
    from .perm import Permutation

    body = text.strip()
    cycles = []
    pos = 0
    compact = re.sub(r"\s+", " ", body)
    while pos < len(compact):
        if compact[pos] == " ":
            pos += 1
            continue
        m = _CYCLE.match(compact, pos)
        if not m:
            raise ParseError(f"malformed cycle notation near {compact[pos:pos + 12]!r}")
        inner = m.group(1).strip()
        if inner:
            pts = [p for p in re.split(r"[\s,]+", inner) if p]
            try:
                cycles.append(tuple(int(p) for p in pts))
            except ValueError:
                raise ParseError(f"non-integer point in {m.group(0)!r}") from None
        pos = m.end()
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if pt in seen:
                raise ParseError(f"point {pt} repeated")
            if not 1 <= pt <= degree:
                raise ParseError(f"point {pt} outside 1..{degree}")
            seen.add(pt)
    return Permutation.from_cycles(cycles, degree)


def split_generators(text):
    """Split at commas that sit outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in parts if p.strip()]


def parse_perm_group(text, degree=None):
    """Parse generators; ``degree`` may come from a ``degree:`` header line."""
    from .perm import PermGroup

    lines = text.splitlines()
    body = []
    for line in lines:
        m = re.match(r"\s*degree\s*:\s*(\d+)\s*$", line)
        if m:
            if degree is not None and int(m.group(1)) != degree:
                raise ParseError("degree header disagrees with the given degree")
            degree = int(m.group(1))
        else:
            body.append(line)
    if degree is None:
        raise ParseError("missing degree")
    gens = [parse_permutation(part, degree) for part in split_generators("\n".join(body))]
    return PermGroup(gens, degree)


def format_perm_group(g) -> str:
    return f"degree: {g.degree}\n" + ",\n".join(str(s) for s in g.generators) + "\n"

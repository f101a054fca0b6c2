"""Low-level s-expression reading with position-aware errors."""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Raised for malformed micro-theory text. Carries a 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Atom:
    """A bare token plus the position where it started."""

    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Form:
    """A parenthesized list of atoms and nested forms."""

    items: tuple
    line: int
    column: int


_DELIMS = "()"


def tokenize(text: str):
    """Yield Atom and '('/')' marker tuples, skipping ';' comments."""
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in _DELIMS:
            yield (ch, line, col)
            col += 1
            i += 1
        else:
            start_line, start_col = line, col
            j = i
            while j < n and text[j] not in " \t\r\n;()":
                j += 1
            yield Atom(text[i:j], start_line, start_col)
            col += j - i
            i = j


def read_forms(text: str) -> list[Form]:
    """Read every top-level form in the text.

    Top-level bare atoms and unbalanced parentheses are rejected.
    """
    stack: list[list] = []
    positions: list[tuple[int, int]] = []
    out: list[Form] = []
    for tok in tokenize(text):
        if isinstance(tok, Atom):
            if not stack:
                raise ParseError(
                    f"bare atom {tok.text!r} outside any form", tok.line, tok.column
                )
            stack[-1].append(tok)
        else:
            ch, line, col = tok
            if ch == "(":
                stack.append([])
                positions.append((line, col))
            else:
                if not stack:
                    raise ParseError("unbalanced closing parenthesis", line, col)
                items = stack.pop()
                oline, ocol = positions.pop()
                form = Form(tuple(items), oline, ocol)
                if stack:
                    stack[-1].append(form)
                else:
                    out.append(form)
    if stack:
        oline, ocol = positions[-1]
        raise ParseError("unclosed parenthesis", oline, ocol)
    return out

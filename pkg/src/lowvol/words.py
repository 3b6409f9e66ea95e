"""Group words over two generators.

A word is a string over ``x, y, X, Y`` with ``X = x^-1`` and ``Y = y^-1``;
no whitespace, and the empty string is the identity.
"""

from __future__ import annotations


class WordError(ValueError):
    pass


def parse_word(word: str, generators: str = "xy") -> list[tuple[int, int]]:
    """Return ``(generator index, +1/-1)`` per letter, left to right."""
    if not isinstance(word, str):
        raise WordError(f"word must be a string, got {type(word).__name__}")
    out = []
    for pos, letter in enumerate(word):
        idx = generators.find(letter.lower())
        if idx < 0 or not letter.isalpha():
            raise WordError(f"letter {letter!r} at position {pos} is not in the alphabet "
                            f"{generators + generators.upper()!r}")
        out.append((idx, 1 if letter.islower() else -1))
    return out


def invert_word(word: str) -> str:
    return word[::-1].swapcase()


def free_reduce(word: str) -> str:
    stack: list[str] = []
    for letter in word:
        if stack and stack[-1] == letter.swapcase():
            stack.pop()
        else:
            stack.append(letter)
    return "".join(stack)

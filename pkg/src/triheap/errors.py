"""Exception types shared across the package.

Each maps to a distinct CLI exit code (see cli.py) and, in the HTTP
service, to a distinct status code.
"""


class ArithmeticRangeError(OverflowError):
    """A value left the supported 64-bit unsigned range."""


class ResourceLimitError(RuntimeError):
    """An enumeration or table build exceeded its configured cap."""


class IllegalMoveError(ValueError):
    """A move violates the game rules.

    ``rule`` names the violated rule in user-facing wording, e.g.
    ``"a subset move may touch at most k-1 heaps"``.
    """

    def __init__(self, rule: str):
        super().__init__(rule)
        self.rule = rule

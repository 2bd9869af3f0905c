"""May-must argumentation frameworks: parsing, labelling semantics, checks."""

from ._core import Framework, MayMustError

__all__ = ["Framework", "MayMustError", "solve_file"]


def solve_file(path, semantics, engine="brute"):
    return Framework.load(str(path)).solve(semantics, engine)

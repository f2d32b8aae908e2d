"""Named example configurations used by the CLI ``gen --example`` flag and the tests."""

from __future__ import annotations

from .configuration import BrauerConfig

__all__ = ["EXAMPLES", "cycle", "example", "self_loop", "square", "two5", "two_gon"]


def square() -> BrauerConfig:
    """Brauer graph on four vertices: a triangle 1-2-3 with a pendant edge 1-4."""
    return BrauerConfig.from_parts(
        {"1": 1, "2": 1, "3": 1, "4": 1},
        {"V1": ["1", "3"], "V2": ["2", "3"], "V3": ["1", "2"], "V4": ["1", "4"]},
        {"1": ["V1", "V3", "V4"], "2": ["V3", "V2"], "3": ["V1", "V2"]},
    )


def cycle(m: int, n: int) -> BrauerConfig:
    """Cycle with ``m >= 2`` edges, multiplicity ``n`` everywhere, ``i: V_{i-1} < V_i``."""
    if m < 2:
        raise ValueError("cycle needs m >= 2; use self_loop for m = 1")
    vertices = {str(i): n for i in range(m)}
    polygons = {f"V{i}": [str(i), str((i + 1) % m)] for i in range(m)}
    orders = {str(i): [f"V{(i - 1) % m}", f"V{i}"] for i in range(m)}
    return BrauerConfig.from_parts(vertices, polygons, orders)


def self_loop(n: int) -> BrauerConfig:
    """One vertex of multiplicity ``n`` and the single polygon ``{1, 1}``."""
    return BrauerConfig.from_parts({"1": n}, {"V": ["1", "1"]}, {"1": ["V", "V"]})


def two5() -> BrauerConfig:
    """One vertex with successor sequence V V V V V W W W W W."""
    return BrauerConfig.from_parts(
        {"a": 1},
        {"V": ["a"] * 5, "W": ["a"] * 5},
        {"a": ["V"] * 5 + ["W"] * 5},
    )


def two_gon(mult: int = 2) -> BrauerConfig:
    """Single 2-gon ``{a, t}`` with ``mu(a) = mult`` and ``t`` truncated."""
    return BrauerConfig.from_parts({"a": mult, "t": 1}, {"V": ["a", "t"]})


EXAMPLES = ("square", "cycle:m,N", "self:N", "two5", "2gon[:N]")


def example(spec: str) -> BrauerConfig:
    """Build a named example from strings like ``square``, ``cycle:3,2``, ``self:4``."""
    name, _, args = spec.partition(":")
    nums = [int(x) for x in args.split(",")] if args else []
    if name == "square" and not nums:
        return square()
    if name == "cycle" and len(nums) == 2:
        return cycle(*nums)
    if name == "self" and len(nums) == 1:
        return self_loop(nums[0])
    if name == "two5" and not nums:
        return two5()
    if name == "2gon" and len(nums) <= 1:
        return two_gon(*nums)
    raise ValueError(f"unknown example {spec!r}; choose from {', '.join(EXAMPLES)}")

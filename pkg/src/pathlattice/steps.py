"""Step sets and nonnegative integer paths with a pointwise order.

A path of length n over a step set S is a height profile h_0..h_n of
nonnegative integers with h_0 = h_n = 0 and every consecutive difference
in S.  Profiles are plain tuples of ints throughout; the pointwise order
and the candidate pointwise min/max live here, lattice machinery does not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

Profile = tuple[int, ...]


@dataclass(frozen=True)
class StepSet:
    """A finite ascending set of integer steps, optionally unbounded above.

    `unbounded_above` means the set also contains every integer larger
    than max(steps) (e.g. down-steps plus all nonnegative rises).  Such
    sets are handled by truncating to the steps usable at a given path
    length; no step larger than the length can occur in a path of that
    length, so all per-length results are exact under the truncation.
    """

    steps: tuple[int, ...]
    unbounded_above: bool = False

    def __post_init__(self):
        if not self.steps:
            raise ValueError("step set must be nonempty")
        if len(set(self.steps)) != len(self.steps):
            raise ValueError(f"duplicate steps in {self.steps}")
        object.__setattr__(self, "steps", tuple(sorted(self.steps)))

    @property
    def min_step(self) -> int:
        return self.steps[0]

    @property
    def max_step(self) -> int:
        """Largest explicit step; for unbounded sets this is only the start
        of the infinite tail and callers must truncate per query."""
        return self.steps[-1]

    @property
    def diameter(self) -> int:
        return self.max_step - self.min_step

    def realized(self, bound: int) -> tuple[int, ...]:
        """Concrete steps usable at path length `bound` (ascending)."""
        if not self.unbounded_above:
            return self.steps
        tail = range(self.max_step + 1, bound + 1)
        return tuple(s for s in self.steps if s <= bound) + tuple(tail)

    def contains(self, s: int) -> bool:
        return s in self.steps or (self.unbounded_above and s > self.max_step)

    def __str__(self):
        body = ",".join(str(s) for s in self.steps)
        return "{%s,...}" % body if self.unbounded_above else "{%s}" % body


def make_step_set(steps: Iterable[int], unbounded_above: bool = False) -> StepSet:
    """Validate and build a StepSet from any iterable of integers."""
    return StepSet(tuple(int(s) for s in steps), unbounded_above)


def is_valid_profile(gamma: StepSet, profile: Iterable[int]) -> bool:
    """True iff `profile` is a path over `gamma`: nonnegative heights,
    both endpoints zero, every consecutive difference a step."""
    p = tuple(profile)
    if len(p) < 1 or p[0] != 0 or p[-1] != 0:
        return False
    if any(h < 0 for h in p):
        return False
    n = len(p) - 1
    allowed = set(gamma.realized(n))
    return all(b - a in allowed for a, b in zip(p, p[1:]))


def enumerate_paths(gamma: StepSet, n: int) -> list[Profile]:
    """All paths of length n over gamma, in lexicographic profile order.

    Depth-first over steps in ascending order (which is lexicographic
    order on profiles), pruning prefixes from which a return to height 0
    is impossible.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return [(0,)]
    steps = gamma.realized(n)
    if not steps:
        return []
    lo, hi = steps[0], steps[-1]
    if hi < 0 or lo > 0:
        return []  # cannot both leave and return to 0
    out: list[Profile] = []
    prefix = [0]

    def extend(h: int, k: int):
        if k == n:
            if h == 0:
                out.append(tuple(prefix))
            return
        rem = n - k - 1
        for s in steps:
            h2 = h + s
            if h2 < 0:
                continue
            if h2 + rem * lo > 0 or h2 + rem * hi < 0:
                continue
            prefix.append(h2)
            extend(h2, k + 1)
            prefix.pop()

    extend(0, 0)
    return out


def iter_paths(gamma: StepSet, n: int) -> Iterator[Profile]:
    """Generator variant of enumerate_paths (same order)."""
    yield from enumerate_paths(gamma, n)


def leq(f: Profile, g: Profile) -> bool:
    """Pointwise order: f <= g iff f(i) <= g(i) for every i."""
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f) - 1} vs {len(g) - 1}")
    return all(a <= b for a, b in zip(f, g))


def area(f: Profile) -> int:
    """Sum of all heights.  Endpoints are zero so the interior sum and the
    full sum coincide; summing everything keeps the rank formula exact."""
    return sum(f)


def pointwise_min(f: Profile, g: Profile) -> Profile:
    """Pointwise minimum profile.  Makes no validity claim."""
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f) - 1} vs {len(g) - 1}")
    return tuple(min(a, b) for a, b in zip(f, g))


def pointwise_max(f: Profile, g: Profile) -> Profile:
    """Pointwise maximum profile.  Makes no validity claim."""
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f) - 1} vs {len(g) - 1}")
    return tuple(max(a, b) for a, b in zip(f, g))


def pointwise_profile_op(f: Profile, g: Profile, which: str) -> Profile:
    """Dispatch form of pointwise_min / pointwise_max (`which` in min/max)."""
    if which == "min":
        return pointwise_min(f, g)
    if which == "max":
        return pointwise_max(f, g)
    raise ValueError(f"which must be 'min' or 'max', got {which!r}")


# --- text forms -------------------------------------------------------------
#
# Compact forms: comma-separated heights ("0,1,2,1,0"), and for paths using
# only unit rises and falls an equivalent U/D word ("UUDD").  Both forms are
# accepted on input.

def profile_text(f: Profile) -> str:
    return ",".join(str(h) for h in f)


def profile_word(f: Profile) -> str:
    """U/D word of a profile whose steps are all +-1."""
    letters = []
    for a, b in zip(f, f[1:]):
        if b - a == 1:
            letters.append("U")
        elif b - a == -1:
            letters.append("D")
        else:
            raise ValueError(f"profile has a non-unit step {b - a}; no U/D word")
    return "".join(letters)


def parse_profile(text: str) -> Profile:
    """Parse either height-list or U/D-word form into a profile."""
    s = text.strip()
    if not s:
        raise ValueError("empty path text")
    if set(s) <= {"U", "D", "u", "d"}:
        heights = [0]
        for c in s.upper():
            heights.append(heights[-1] + (1 if c == "U" else -1))
        return tuple(heights)
    try:
        return tuple(int(tok) for tok in s.split(","))
    except ValueError:
        raise ValueError(f"cannot parse path text {text!r}") from None


def word_or_text(f: Profile) -> str:
    """U/D word when the profile admits one, else the height list."""
    try:
        return profile_word(f)
    except ValueError:
        return profile_text(f)

"""Schroeder paths: unit rises and falls plus double-width horizontals.

Paths are represented by words over R, F, H and compared through their
height profile on every integer abscissa (an H contributes two equal
heights).  A profile is reconstructible iff every maximal run of equal
heights pairs off into H steps, which is what makes the pointwise min and
max of two paths a path again; that closure is asserted at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .posets import FinitePoset, LatticeTables, VerificationError, poset_from_profiles
from .steps import Profile

LATTICE_LIMIT = 6


@dataclass(frozen=True)
class SchroederPath:
    """A word over R (rise), F (fall), H (double horizontal)."""

    word: str

    def __post_init__(self):
        if set(self.word) - set("RFH"):
            raise ValueError(f"invalid step letters in {self.word!r}")
        prof = profile_of_word(self.word)
        if prof[-1] != 0 or min(prof) < 0:
            raise ValueError(f"word does not describe a nonnegative excursion: {self.word!r}")

    @cached_property
    def profile(self) -> Profile:
        return profile_of_word(self.word)

    @property
    def width(self) -> int:
        return len(self.profile) - 1

    @property
    def semilength(self) -> int:
        return self.width // 2


def profile_of_word(word: str) -> Profile:
    heights = [0]
    for c in word:
        if c == "R":
            heights.append(heights[-1] + 1)
        elif c == "F":
            heights.append(heights[-1] - 1)
        elif c == "H":
            heights += [heights[-1], heights[-1]]
        else:
            raise ValueError(f"invalid step letter {c!r}")
    return tuple(heights)


def word_of_profile(profile: Profile) -> str:
    """Reconstruct the step word, pairing equal-height runs into H steps.

    Raises VerificationError when a zero-difference run has odd length,
    i.e. the profile is not a Schroeder path profile.
    """
    diffs = [b - a for a, b in zip(profile, profile[1:])]
    letters = []
    i = 0
    while i < len(diffs):
        d = diffs[i]
        if d == 1:
            letters.append("R")
            i += 1
        elif d == -1:
            letters.append("F")
            i += 1
        elif d == 0:
            if i + 1 >= len(diffs) or diffs[i + 1] != 0:
                raise VerificationError(
                    f"unpairable horizontal run in profile {profile}"
                )
            letters.append("H")
            i += 2
        else:
            raise VerificationError(f"non-unit difference {d} in profile {profile}")
    return "".join(letters)


def is_schroeder_profile(profile: Profile) -> bool:
    if not profile or profile[0] != 0 or profile[-1] != 0 or min(profile) < 0:
        return False
    if len(profile) % 2 == 0:  # width must be even
        return False
    try:
        word_of_profile(profile)
        return True
    except VerificationError:
        return False


def parse_schroeder_word(text: str, semilength: int | None = None) -> SchroederPath:
    """Parse a step word, optionally checking the total width."""
    p = SchroederPath(text.strip().upper())
    if semilength is not None and p.semilength != semilength:
        raise ValueError(
            f"word spans width {p.width}, expected {2 * semilength}"
        )
    return p


def enumerate_schroeder(n: int) -> list[SchroederPath]:
    """All Schroeder paths of width 2n, lexicographic by height profile."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    acc: list[str] = []

    def extend(word: list[str], x: int, h: int):
        if x == 2 * n:
            if h == 0:
                acc.append("".join(word))
            return
        rem = 2 * n - x
        # F first, H second, R last: ascending next-height keeps profiles sorted
        if h > 0 and h - 1 <= rem - 1:
            word.append("F")
            extend(word, x + 1, h - 1)
            word.pop()
        if x + 2 <= 2 * n and h <= rem - 2:
            word.append("H")
            extend(word, x + 2, h)
            word.pop()
        if h + 1 <= rem - 1:
            word.append("R")
            extend(word, x + 1, h + 1)
            word.pop()

    extend([], 0, 0)
    paths = [SchroederPath(w) for w in acc]
    paths.sort(key=lambda p: p.profile)
    return paths


def schroeder_meet_join(f: SchroederPath, g: SchroederPath, which: str) -> SchroederPath:
    """Pointwise min/max of the profiles, reconstructed into a path.

    Reconstruction failure would falsify the closure claim and raises
    VerificationError carrying both operands.
    """
    if f.semilength != g.semilength:
        raise ValueError("semilength mismatch")
    if which == "min":
        prof = tuple(min(a, b) for a, b in zip(f.profile, g.profile))
    elif which == "max":
        prof = tuple(max(a, b) for a, b in zip(f.profile, g.profile))
    else:
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    try:
        return SchroederPath(word_of_profile(prof))
    except VerificationError as exc:
        raise VerificationError(
            f"pointwise {which} of {f.word} and {g.word} gave non-path "
            f"profile {prof}"
        ) from exc


def verify_pointwise_closure(n: int):
    """Exhaustively confirm that pointwise min/max of any two width-2n paths
    is again a path (vectorized sweep over all pairs).

    Returns (True, None) or (False, (word, word)) with a violating pair.
    """
    paths = enumerate_schroeder(n)
    if len(paths) <= 1:
        return True, None
    P = np.asarray([p.profile for p in paths], dtype=np.int16)
    m = len(paths)
    for i in range(m - 1):
        rows = P[i + 1:]
        for op in (np.minimum, np.maximum):
            diffs = np.diff(op(P[i], rows), axis=1)
            # a profile parses iff every zero-difference run has even length
            parity = np.zeros(len(rows), dtype=bool)
            ok = np.abs(diffs).max(axis=1) <= 1
            for col in range(diffs.shape[1]):
                zero = diffs[:, col] == 0
                ok &= zero | ~parity
                parity = np.where(zero, ~parity, False)
            ok &= ~parity
            if not ok.all():
                j = i + 1 + int(np.nonzero(~ok)[0][0])
                return False, (paths[i].word, paths[j].word)
    return True, None


def schroeder_lattice(n: int) -> tuple[FinitePoset, LatticeTables]:
    """Poset and meet/join tables of the width-2n Schroeder paths.

    Tables come from the pointwise operations; the order is the profile
    order, and elements are labeled by their words.
    """
    if not 0 <= n <= LATTICE_LIMIT:
        raise ValueError(f"lattice construction limited to n <= {LATTICE_LIMIT}")
    paths = enumerate_schroeder(n)
    profiles = [p.profile for p in paths]
    poset = poset_from_profiles(profiles, labels=[p.word for p in paths])
    m = len(paths)
    P = np.asarray(profiles, dtype=np.int16)
    rowbytes = P.shape[1] * 2
    lookup = {P[i].tobytes(): i for i in range(m)}
    meet = np.empty((m, m), dtype=np.int32)
    join = np.empty((m, m), dtype=np.int32)
    for x in range(m):
        mn = np.minimum(P[x], P).tobytes()
        mx = np.maximum(P[x], P).tobytes()
        try:
            meet[x] = [lookup[mn[i * rowbytes:(i + 1) * rowbytes]] for i in range(m)]
            join[x] = [lookup[mx[i * rowbytes:(i + 1) * rowbytes]] for i in range(m)]
        except KeyError:
            bad = paths[x].word
            raise VerificationError(
                f"pointwise operation left the path set near {bad}"
            ) from None
    return poset, LatticeTables(poset, meet, join)

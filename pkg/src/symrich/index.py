"""Factor indexing of a finite prefix.

The index materializes, for every length n up to ``n_max``, the factor set
of the text with sorted occurrence lists.  Extension sets are derived from
factor-set membership (a is a left extension of w iff aw is again an indexed
factor), which keeps the classical counting identities exact on any finite
text:

* sum over L_n of (#Lext - 1) = C(n+1) - C(n), likewise for Rext,
* sum over L_n of b(w) = second difference of C,
* P(n+2) = sum of #Pext over fixed factors of length n, per antimorphism.

Occurrence lists are never extended by group closure; closure (when a group
is supplied) only completes the factor sets and records what it added, which
must be nothing on a sufficiently long prefix of a closed word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupError, IndexRangeError
from .symmetry import SymmetryGroup, SymmetryMap
from .words import WordSource


def factor_sets(text: str, n_max: int) -> list[frozenset[str]]:
    """Plain factor sets of ``text`` for lengths 0..n_max (no occurrence data)."""
    if n_max > len(text):
        raise IndexRangeError(f"n_max={n_max} exceeds text length {len(text)}")
    out = [frozenset([""])]
    for n in range(1, n_max + 1):
        out.append(frozenset(text[i:i + n] for i in range(len(text) - n + 1)))
    return out


class LanguageIndex:
    """Occurrence and extension data for all factors of a text up to ``n_max``.

    Extension queries need room above the factor length: Lext/Rext are
    available for n <= n_max - 1 and Bext/Pext for n <= n_max - 2.
    """

    def __init__(self, text: str, n_max: int, group: SymmetryGroup | None = None):
        if n_max < 0:
            raise IndexRangeError(f"n_max must be nonnegative, got {n_max}")
        if n_max > len(text):
            raise IndexRangeError(f"n_max={n_max} exceeds text length {len(text)}")
        self.text = text
        self.n_max = n_max
        self.group = group

        self._occ: list[dict[str, list[int]]] = [{"": list(range(len(text) + 1))}]
        for n in range(1, n_max + 1):
            level: dict[str, list[int]] = {}
            for i in range(len(text) - n + 1):
                level.setdefault(text[i:i + n], []).append(i)
            self._occ.append(level)

        self._sets: list[frozenset[str]] = []
        self.closure_added: dict[int, frozenset[str]] = {}
        for n in range(n_max + 1):
            base = set(self._occ[n])
            if group is not None and n >= 1:
                closed = set(base)
                for w in base:
                    closed.update(group.equivalence_class(w))
                added = frozenset(closed - base)
                if added:
                    self.closure_added[n] = added
                self._sets.append(frozenset(closed))
            else:
                self._sets.append(frozenset(base))

        # extension candidates must cover closure-added letters as well
        letters = set(text)
        if n_max >= 1:
            letters |= set(self._sets[1])
        self.alphabet_glyphs = tuple(sorted(letters))

    # -- basic queries --------------------------------------------------------

    @property
    def g_closed(self) -> bool:
        """True when a group was supplied and closure added no factor."""
        return self.group is not None and not self.closure_added

    def _check_n(self, n: int, *, room: int = 0) -> None:
        if not 0 <= n <= self.n_max - room:
            raise IndexRangeError(
                f"length {n} outside indexed range 0..{self.n_max}"
                + (f" (query needs {room} extra length level(s))" if room else "")
            )

    def factors(self, n: int) -> frozenset[str]:
        self._check_n(n)
        return self._sets[n]

    def sorted_factors(self, n: int) -> tuple[str, ...]:
        return tuple(sorted(self.factors(n)))

    def factor_count(self, n: int) -> int:
        return len(self.factors(n))

    def is_factor(self, w: str) -> bool:
        self._check_n(len(w))
        return w in self._sets[len(w)]

    def occurrences(self, w: str) -> tuple[int, ...]:
        """Sorted start positions of ``w`` in the text (empty for closure-added factors)."""
        self._check_n(len(w))
        return tuple(self._occ[len(w)].get(w, ()))

    def _require_factor(self, w: str) -> None:
        if not self.is_factor(w):
            raise IndexRangeError(f"{w!r} is not an indexed factor")

    # -- extensions -----------------------------------------------------------

    def lext(self, w: str) -> frozenset[str]:
        self._check_n(len(w), room=1)
        self._require_factor(w)
        nxt = self._sets[len(w) + 1]
        return frozenset(a for a in self.alphabet_glyphs if a + w in nxt)

    def rext(self, w: str) -> frozenset[str]:
        self._check_n(len(w), room=1)
        self._require_factor(w)
        nxt = self._sets[len(w) + 1]
        return frozenset(b for b in self.alphabet_glyphs if w + b in nxt)

    def bext(self, w: str) -> frozenset[tuple[str, str]]:
        self._check_n(len(w), room=2)
        self._require_factor(w)
        two_up = self._sets[len(w) + 2]
        return frozenset(
            (a, b)
            for a in self.alphabet_glyphs
            for b in self.alphabet_glyphs
            if a + w + b in two_up
        )

    def bilateral_order(self, w: str) -> int:
        return len(self.bext(w)) - len(self.lext(w)) - len(self.rext(w)) + 1

    def pext(self, theta: SymmetryMap, w: str) -> frozenset[str]:
        """Letters a with a + w + theta(a) again a factor; w must be theta-fixed."""
        if not theta.antimorphic:
            raise GroupError(f"{theta.name} is not an antimorphism")
        if theta.apply(w) != w:
            raise GroupError(f"{w!r} is not fixed by {theta.name}; filter before querying")
        self._check_n(len(w), room=2)
        if w:
            self._require_factor(w)
        two_up = self._sets[len(w) + 2]
        return frozenset(a for a in self.alphabet_glyphs if a + w + theta.image_of(a) in two_up)

    # -- special factors ------------------------------------------------------

    def is_left_special(self, w: str) -> bool:
        return len(self.lext(w)) >= 2

    def is_right_special(self, w: str) -> bool:
        return len(self.rext(w)) >= 2

    def is_special(self, w: str) -> bool:
        return self.is_left_special(w) or self.is_right_special(w)

    def is_bispecial(self, w: str) -> bool:
        return self.is_left_special(w) and self.is_right_special(w)

    def specials(self, n: int) -> tuple[str, ...]:
        self._check_n(n, room=1)
        return tuple(w for w in self.sorted_factors(n) if self.is_special(w))

    def bispecials(self, n: int) -> tuple[str, ...]:
        self._check_n(n, room=1)
        return tuple(w for w in self.sorted_factors(n) if self.is_bispecial(w))

    # -- complexities ---------------------------------------------------------

    def complexities(self) -> list[int]:
        return [len(self._sets[n]) for n in range(self.n_max + 1)]

    def theta_palindromes(self, theta: SymmetryMap, n: int) -> tuple[str, ...]:
        if not theta.antimorphic:
            raise GroupError(f"{theta.name} is not an antimorphism")
        self._check_n(n)
        return tuple(w for w in self.sorted_factors(n) if theta.apply(w) == w)

    def palindromic_complexity(self, theta: SymmetryMap) -> list[int]:
        """P(n) for n = 0..n_max: count of theta-fixed indexed factors."""
        return [len(self.theta_palindromes(theta, n)) for n in range(self.n_max + 1)]

    def complexity(self) -> "ComplexityTable":
        c = self.complexities()
        delta = [c[n + 1] - c[n] for n in range(self.n_max)]
        delta2 = [delta[n + 1] - delta[n] for n in range(self.n_max - 1)]
        p: dict[SymmetryMap, list[int]] = {}
        if self.group is not None:
            for theta in self.group.antimorphisms:
                p[theta] = self.palindromic_complexity(theta)
        return ComplexityTable(n_max=self.n_max, c=c, delta_c=delta, delta2_c=delta2, p_theta=p)


@dataclass(frozen=True)
class ComplexityTable:
    """Factor complexity, its first two differences, and palindromic complexities.

    ``c[n]`` covers 0..n_max, ``delta_c[n]`` 0..n_max-1, ``delta2_c[n]``
    0..n_max-2; ``p_theta`` maps each antimorphism of the indexing group to
    its per-length palindrome counts.
    """

    n_max: int
    c: list[int]
    delta_c: list[int]
    delta2_c: list[int]
    p_theta: dict[SymmetryMap, list[int]]

    def to_csv(self) -> str:
        thetas = sorted(self.p_theta, key=lambda t: t.sort_key)
        header = ["n", "C", "dC", "d2C"] + [f"P[{t.name}]" for t in thetas]
        lines = [",".join(header)]
        for n in range(self.n_max - 1):
            row = [str(n), str(self.c[n]), str(self.delta_c[n]), str(self.delta2_c[n])]
            row += [str(self.p_theta[t][n]) for t in thetas]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def stability_check(source: WordSource, length: int, n_max: int) -> bool | None:
    """Compare factor sets of prefix(length) and prefix(2*length).

    Returns True when they agree for all n <= n_max (the indexed language is
    stable under doubling), False when they differ, and None when the source
    cannot produce the doubled prefix (literal words).
    """
    bound = source.max_prefix()
    if bound is not None and 2 * length > bound:
        return None
    short = factor_sets(source.prefix(length), n_max)
    long_ = factor_sets(source.prefix(2 * length), n_max)
    return short == long_

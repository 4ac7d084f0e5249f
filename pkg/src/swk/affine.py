"""The extended affine symmetric group in window notation.

An element is a bijection w: Z -> Z with w(i + n) = w(i) + n, stored
by its window (w(1), ..., w(n)).  The residues of the window mod n
are a permutation of {1..n}; the window entries themselves are
arbitrary integers.  This group is the semidirect product of the
translation lattice Z^n (mu acts by i |-> i + n*mu_i) with the finite
symmetric group, extended by the length-zero rotation pi: i |-> i - 1,
whose n-th power is the central translation by (-1, ..., -1).

Length is the number of affine inversions
    l(w) = sum_{1 <= i < j <= n} |floor((w(j) - w(i)) / n)|,
which counts the pairs i < j (j over all integers) with w(i) > w(j).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingError

__all__ = ["ExtAffPerm", "finite_perms"]


@dataclass(frozen=True)
class ExtAffPerm:
    """Extended affine permutation, by window.

    >>> w = ExtAffPerm.translation((1, 0))
    >>> w.window, w.length()
    ((3, 2), 1)
    >>> w.to_parts()
    ((1, 0), (1, 2))
    """

    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if sorted(w % n for w in self.window) != list(range(n)):
            raise RingError(f"window {self.window} residues are not a "
                            "permutation mod n")

    @property
    def n(self) -> int:
        return len(self.window)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExtAffPerm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "ExtAffPerm":
        """Simple reflection s_i, 1 <= i <= n-1, and the affine s_0."""
        if i == 0:
            if n == 1:
                raise RingError("s_0 needs n >= 2")
            w = list(range(1, n + 1))
            w[0] = 0
            w[n - 1] = n + 1
            return cls(tuple(w))
        if not 1 <= i <= n - 1:
            raise RingError(f"s_{i} out of range")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def translation(cls, mu) -> "ExtAffPerm":
        """The lattice element acting by i |-> i + n * mu_i."""
        n = len(mu)
        return cls(tuple(i + 1 + n * mu[i] for i in range(n)))

    @classmethod
    def shift(cls, n: int, steps: int = 1) -> "ExtAffPerm":
        """Length-zero rotation i |-> i - steps.

        The positive generator conjugates s_i to s_{i-1} (indices mod
        n), matching the rotation relation of the algebra.
        """
        return cls(tuple(i - steps for i in range(1, n + 1)))

    @classmethod
    def from_parts(cls, mu, sigma) -> "ExtAffPerm":
        """Translation times finite permutation (sigma applied first)."""
        return cls.translation(mu) * cls(tuple(sigma))

    # -- evaluation and composition --------------------------------------------

    def __call__(self, i: int) -> int:
        n = self.n
        r = (i - 1) % n
        return self.window[r] + (i - 1 - r)

    def __mul__(self, other: "ExtAffPerm") -> "ExtAffPerm":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise RingError("rank mismatch")
        return ExtAffPerm(tuple(self(other.window[i])
                                for i in range(self.n)))

    def inverse(self) -> "ExtAffPerm":
        n = self.n
        w = [0] * n
        for i in range(1, n + 1):
            v = self(i)
            r = (v - 1) % n
            # self sends i to v = (r+1) + kn, so the inverse sends r+1
            # to i - kn
            w[r] = i - (v - 1 - r)
        return ExtAffPerm(tuple(w))

    # -- structure ---------------------------------------------------------------

    def to_parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(mu, sigma) with self = translation(mu) * sigma."""
        n = self.n
        sigma = [0] * n
        mu = [0] * n
        for i in range(n):
            v = self.window[i]
            r = (v - 1) % n
            sigma[i] = r + 1
            mu[r] = (v - 1 - r) // n
        return tuple(mu), tuple(sigma)

    def is_finite(self) -> bool:
        return all(1 <= v <= self.n for v in self.window)

    def shift_degree(self) -> int:
        """Total translation: sum(w(i) - i) / n."""
        return (sum(self.window) - self.n * (self.n + 1) // 2) // self.n

    def length(self) -> int:
        n = self.n
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                d = self.window[j] - self.window[i]
                total += abs(d // n)
        return total

    def length_naive(self, span: int | None = None) -> int:
        """Direct inversion count; test oracle for `length`."""
        n = self.n
        if span is None:
            span = n * (1 + max(abs(v) for v in self.window))
        count = 0
        for i in range(1, n + 1):
            wi = self(i)
            for j in range(i + 1, i + span + 1):
                if self(j) < wi:
                    count += 1
        return count

    def right_descents(self) -> list[int]:
        """Indices i in 0..n-1 with l(w s_i) < l(w)."""
        n = self.n
        out = []
        if self.window[n - 1] - n > self.window[0]:
            out.append(0)
        for i in range(1, n):
            if self.window[i - 1] > self.window[i]:
                out.append(i)
        return out

    def mul_simple_right(self, i: int) -> "ExtAffPerm":
        """self * s_i without building the reflection."""
        n = self.n
        w = list(self.window)
        if i == 0:
            w[0], w[n - 1] = self.window[n - 1] - n, self.window[0] + n
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return ExtAffPerm(tuple(w))

    def reduced_word(self) -> tuple[int, "tuple[int, ...]"]:
        """Decompose as shift(steps) * s_{i_1} * ... * s_{i_k}, k = l(w).

        Returns (steps, word).  Greedy descent: repeatedly strip a
        right descent; the length-zero residue is a pure rotation.
        """
        w = self
        word: list[int] = []
        while True:
            ds = w.right_descents()
            if not ds:
                break
            i = ds[0]
            word.append(i)
            w = w.mul_simple_right(i)
        # w is now length zero, hence a rotation shift(steps)
        steps = 1 - w.window[0]
        if w != ExtAffPerm.shift(self.n, steps):
            raise RingError("length-zero residue is not a rotation")
        word.reverse()
        return steps, tuple(word)


def finite_perms(n: int) -> list[tuple[int, ...]]:
    """All of S_n as window tuples, sorted by (length, window)."""
    from itertools import permutations
    perms = [tuple(p) for p in permutations(range(1, n + 1))]
    perms.sort(key=lambda p: (ExtAffPerm(p).length(), p))
    return perms

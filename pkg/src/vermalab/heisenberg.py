"""The integral Heisenberg algebra on a_n, b_m by normal-form rewriting.

Generators a_n and b_m (n, m >= 1) satisfy

    a_n b_m = b_m a_n + b_{m-1} a_{n-1},     a_0 = b_0 = 1,

with the a's commuting among themselves and likewise the b's.  Words
rewrite to integer combinations of normal monomials b...b a...a with
weakly increasing indices.  Each exchange step strictly decreases the
number of (a, b) inversions, so rewriting terminates; confluence is
exercised empirically by running two independent strategies over random
words.

The power-sum elements built from the logarithmic derivative of the
generating series A(t) are provided as an exploratory probe: their
commutators with the b_m are computed exactly and compared against a
frozen fixture rather than asserted wholesale (they reproduce the
delta relation only for m <= n).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "HElem",
    "FockPoly",
    "a_gen",
    "b_gen",
    "normal_form",
    "word_inversions",
    "verify_generating_identity",
    "fock_action",
    "tilde_candidates",
    "tilde_probe",
    "confluence_fuzz",
    "FuzzVerdict",
]


# generators are tagged tuples ("a", n) or ("b", m); a word is a tuple of them


def a_gen(n):
    if n < 1:
        raise ValueError("a-generators are indexed from 1")
    return ("a", n)


def b_gen(m):
    if m < 1:
        raise ValueError("b-generators are indexed from 1")
    return ("b", m)


def word_inversions(word):
    """Number of pairs (i, j), i < j, with an a-letter at i and a b-letter at j."""
    count = 0
    bs_seen_right = 0
    for letter in reversed(word):
        if letter[0] == "b":
            bs_seen_right += 1
        else:
            count += bs_seen_right
    return count


class HElem:
    """Integer combination of normal monomials (b-indices, a-indices)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    x = self.terms.get(mono, 0) + c
                    if x:
                        self.terms[mono] = x
                    else:
                        del self.terms[mono]

    @staticmethod
    def one():
        return HElem({((), ()): 1})

    @staticmethod
    def zero():
        return HElem()

    @staticmethod
    def monomial(b_indices=(), a_indices=(), coeff=1):
        for seq in (b_indices, a_indices):
            if any(i < 1 for i in seq):
                raise ValueError("indices start at 1")
        return HElem({(tuple(sorted(b_indices)), tuple(sorted(a_indices))): coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = HElem({((), ()): other})
        out = dict(self.terms)
        for mono, c in other.terms.items():
            x = out.get(mono, 0) + c
            if x:
                out[mono] = x
            else:
                out.pop(mono, None)
        return HElem(out)

    __radd__ = __add__

    def __neg__(self):
        return HElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HElem({((), ()): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HElem({m: c * other for m, c in self.terms.items()})
        out = HElem.zero()
        for (b1, a1), c in self.terms.items():
            for (b2, a2), d in other.terms.items():
                word = tuple(("b", m) for m in b1) + tuple(("a", n) for n in a1) \
                     + tuple(("b", m) for m in b2) + tuple(("a", n) for n in a2)
                out = out + normal_form(word) * (c * d)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, int):
            other = HElem({((), ()): other})
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (bs, aas), c in sorted(self.terms.items()):
            body = ".".join([f"b{m}" for m in bs] + [f"a{n}" for n in aas]) or "1"
            parts.append(f"{c}*{body}")
        return " + ".join(parts)


def _exchange(n, m):
    """The two replacement words for the adjacent pair a_n b_m."""
    first = (("b", m), ("a", n))
    second = []
    if m - 1 >= 1:
        second.append(("b", m - 1))
    if n - 1 >= 1:
        second.append(("a", n - 1))
    return first, tuple(second)


def _find_inversion(word, strategy):
    positions = [p for p in range(len(word) - 1)
                 if word[p][0] == "a" and word[p + 1][0] == "b"]
    if not positions:
        return None
    return positions[0] if strategy == "leftmost" else positions[-1]


@lru_cache(maxsize=1 << 18)
def _nf_cached(word, strategy):
    pos = _find_inversion(word, strategy)
    if pos is None:
        bs = tuple(sorted(m for kind, m in word if kind == "b"))
        aas = tuple(sorted(n for kind, n in word if kind == "a"))
        return HElem({(bs, aas): 1})
    n, m = word[pos][1], word[pos + 1][1]
    swapped, contracted = _exchange(n, m)
    w1 = word[:pos] + swapped + word[pos + 2:]
    w2 = word[:pos] + contracted + word[pos + 2:]
    base = word_inversions(word)
    assert word_inversions(w1) < base and word_inversions(w2) < base, \
        "rewrite step failed to decrease the inversion measure"
    return _nf_cached(w1, strategy) + _nf_cached(w2, strategy)


def normal_form(word, strategy="leftmost"):
    """Fully rewritten normal form of a word in the generators.

    The strategy picks which adjacent a-before-b pair to exchange first;
    any strategy reaches the same normal form (checked by fuzzing, not
    assumed by the implementation).
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return _nf_cached(tuple(word), strategy)


# ---------------------------------------------------------------------------
# the generating-series identity A(t) B(u) = B(u) A(t) (1 + tu)
# ---------------------------------------------------------------------------

def verify_generating_identity(order):
    """Residual table of a_i b_j against the series side, i, j <= order.

    The right-hand side B(u) A(t) (1 + tu) is expanded as a genuine
    bivariate series whose coefficients are already normal monomials, so
    the comparison pits the rewriting engine against an independent
    construction.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    # coefficient of t^i u^j in B(u) A(t): the normal monomial b_j a_i
    def ba_coeff(i, j):
        bs = (j,) if j >= 1 else ()
        aas = (i,) if i >= 1 else ()
        return HElem({(bs, aas): 1})

    residuals = {}
    for i in range(1, order + 1):
        for j in range(1, order + 1):
            rhs = ba_coeff(i, j) + ba_coeff(i - 1, j - 1)
            lhs = normal_form((("a", i), ("b", j)))
            residuals[i, j] = lhs - rhs
    return residuals


# ---------------------------------------------------------------------------
# Fock representation: b multiplies, a lowers and kills 1
# ---------------------------------------------------------------------------

@dataclass
class FockPoly:
    """Integer polynomial in the commuting b's; terms map sorted index
    tuples to coefficients.  degree_bound caps the total index sum."""

    terms: dict
    degree_bound: int = 10**9

    @staticmethod
    def one(degree_bound=10**9):
        return FockPoly({(): 1}, degree_bound)

    @staticmethod
    def from_indices(indices, degree_bound=10**9):
        return FockPoly({tuple(sorted(indices)): 1}, degree_bound)

    def __eq__(self, other):
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms


def fock_action(h, p):
    """Action of an algebra element on a Fock polynomial.

    b_m multiplies; a-letters are pushed through the b's by the exchange
    rule and annihilate the vacuum, so only the a-free part of the
    normal form survives.  Raises OverflowError past the degree bound.
    """
    out = {}
    for (bs, aas), c in h.terms.items():
        for lam, d in p.terms.items():
            word = tuple(("b", m) for m in bs) + tuple(("a", n) for n in aas) \
                 + tuple(("b", m) for m in lam)
            for (rb, ra), e in normal_form(word).terms.items():
                if ra:
                    continue  # a's annihilate 1
                if sum(rb) > p.degree_bound:
                    raise OverflowError(
                        f"Fock degree {sum(rb)} exceeds bound {p.degree_bound}")
                x = out.get(rb, 0) + c * d * e
                if x:
                    out[rb] = x
                else:
                    del out[rb]
    return FockPoly(out, p.degree_bound)


# ---------------------------------------------------------------------------
# the power-sum probe
# ---------------------------------------------------------------------------

def tilde_candidates(order):
    """Candidates for the renormalized a-generators up to the given order.

    Coefficient of t^{k-1} in A'(-t) A(-t)^{-1}, expanded inside the
    commutative subalgebra generated by the a's; these are the power
    sums of the alphabet whose elementary symmetric functions are the
    a_n, and they have integer coefficients.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    # series coefficients are maps (sorted a-index tuple) -> Fraction
    a_minus = [{(): Fraction(1)}]
    for j in range(1, order + 1):
        a_minus.append({(j,): Fraction(-1) ** j})
    a_prime = [{(j + 1,): Fraction(-1) ** j * (j + 1)} for j in range(order)]

    def cmul(x, y):
        out = {}
        for mx, cx in x.items():
            for my, cy in y.items():
                key = tuple(sorted(mx + my))
                v = out.get(key, Fraction(0)) + cx * cy
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    # power series inverse of A(-t) modulo t^order
    inv = [{(): Fraction(1)}]
    for k in range(1, order):
        acc = {}
        for j in range(1, k + 1):
            if j < len(a_minus):
                for mono, c in cmul(a_minus[j], inv[k - j]).items():
                    v = acc.get(mono, Fraction(0)) + c
                    if v:
                        acc[mono] = v
                    else:
                        acc.pop(mono, None)
        inv.append({m: -c for m, c in acc.items()})

    tildes = []
    for k in range(1, order + 1):
        acc = {}
        for j in range(k):
            if j < len(a_prime):
                for mono, c in cmul(a_prime[j], inv[k - 1 - j]).items():
                    v = acc.get(mono, Fraction(0)) + c
                    if v:
                        acc[mono] = v
                    else:
                        acc.pop(mono, None)
        terms = {}
        for mono, c in acc.items():
            if c.denominator != 1:
                raise AssertionError(f"power-sum coefficient not integral: {c}")
            terms[((), mono)] = int(c)
        tildes.append(HElem(terms))
    return tildes


def tilde_probe(n, degree_bound):
    """Exact commutators of the n-th power-sum candidate with the b_m.

    Returns the candidate and the residual table
    [a~_n, b_m] - delta_{n,m} for m <= degree_bound.  The residuals are
    frozen as a regression fixture; they vanish for m <= n but not in
    general.
    """
    if degree_bound < n:
        raise ValueError("degree bound must reach n")
    cand = tilde_candidates(n)[n - 1]
    residuals = []
    for m in range(1, degree_bound + 1):
        comm = cand.commutator(HElem.monomial(b_indices=(m,)))
        delta = HElem.one() if m == n else HElem.zero()
        residuals.append((n, m, comm - delta))
    return cand, residuals


# ---------------------------------------------------------------------------
# confluence fuzzing
# ---------------------------------------------------------------------------

@dataclass
class FuzzVerdict:
    trials: int
    mismatches: list
    negative_coefficient_words: list

    @property
    def ok(self):
        return not self.mismatches and not self.negative_coefficient_words


def confluence_fuzz(trials, seed, max_len=8, max_index=6):
    """Rewrite random words under both strategies and compare.

    Also checks that every normal form of a product of generators has
    nonnegative integer coefficients.  Per-trial randomness derives from
    the master seed, so runs are reproducible.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    mismatches = []
    negatives = []
    for t in range(trials):
        rng = random.Random((seed * 1_000_003 + t) & 0xFFFFFFFF)
        length = rng.randint(0, max_len)
        word = tuple(
            (rng.choice("ab"), rng.randint(1, max_index)) for _ in range(length)
        )
        left = normal_form(word, "leftmost")
        right = normal_form(word, "rightmost")
        if left != right:
            mismatches.append(word)
        if any(c < 0 for c in left.terms.values()):
            negatives.append(word)
    return FuzzVerdict(trials=trials, mismatches=mismatches,
                       negative_coefficient_words=negatives)

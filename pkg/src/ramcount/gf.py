"""Exact arithmetic in small finite fields GF(p^n).

A field is pinned down by its canonical modulus: the lexicographically
smallest monic irreducible polynomial of degree n over F_p, comparing
coefficient vectors constant term first.  Elements are dense coefficient
vectors over F_p.  Every value is immutable, so fields and elements can be
shared freely across threads.

Besides the four field operations the module provides the Frobenius map
x -> x^p, the Artin-Schreier operator x -> x^p - x, a deterministic
transversal of its image (always containing 0), and deterministic ring
embeddings between compatible fields.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .errors import (
    DegreeTooLargeError,
    MixedFieldsError,
    NonPrimeError,
    NotASubfieldError,
)

MAX_DEGREE = 24

# element-count cap below which per-field tables (element list, transversal)
# are materialised eagerly instead of recomputed
_TABLE_CAP = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# dense polynomials over F_p, constant term first
# ---------------------------------------------------------------------------

def _trim(cs) -> tuple[int, ...]:
    k = len(cs)
    while k and cs[k - 1] == 0:
        k -= 1
    return tuple(cs[:k])


def _poly_rem(a, b, p) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial b, coefficients mod p."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for j in range(db):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _trim(r)


@lru_cache(maxsize=None)
def _irreducibles(p: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducibles of exactly this degree, in lexicographic order."""
    found = []
    for tail in product(range(p), repeat=degree):
        cand = tail + (1,)
        if _is_irreducible(cand, p):
            found.append(cand)
    return tuple(found)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by irreducibles of degree <= deg/2."""
    degree = len(poly) - 1
    if degree == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, degree // 2 + 1):
        for q in _irreducibles(p, d):
            if not _poly_rem(poly, q, p):
                return False
    return True


def _canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return (0, 1)
    # the constant term must be nonzero, which prunes the first p^(n-1)
    # candidates wholesale
    for c0 in range(1, p):
        for tail in product(range(p), repeat=n - 1):
            cand = (c0,) + tail + (1,)
            if _is_irreducible(cand, p):
                return cand
    raise AssertionError(f"no irreducible of degree {n} over F_{p}")


# ---------------------------------------------------------------------------
# descriptors and elements
# ---------------------------------------------------------------------------

_FIELDS: dict[tuple[int, int], "FieldDescriptor"] = {}


def make_field(p: int, n: int) -> "FieldDescriptor":
    """Return the canonical descriptor for GF(p^n); deterministic and cached."""
    key = (p, n)
    field = _FIELDS.get(key)
    if field is not None:
        return field
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if not 1 <= n <= MAX_DEGREE:
        raise DegreeTooLargeError(f"extension degree {n} outside [1, {MAX_DEGREE}]")
    field = FieldDescriptor(p, n, _canonical_modulus(p, n))
    _FIELDS[key] = field
    return field


def field_for_order(q: int, p: int | None = None) -> "FieldDescriptor":
    """Return GF(q) for a prime power q, optionally checking the characteristic."""
    if q < 2:
        raise NonPrimeError(f"{q} is not a prime power")
    base = q
    d = 2
    while d * d <= base:
        if base % d == 0:
            base = d
            break
        d += 1
    n = 0
    m = q
    while m % base == 0 and m > 1:
        m //= base
        n += 1
    if m != 1 or not is_prime(base):
        raise NonPrimeError(f"{q} is not a prime power")
    if p is not None and base != p:
        raise MixedFieldsError(f"{q} is not a power of {p}")
    return make_field(base, n)


class FieldDescriptor:
    """GF(p^n) presented as F_p[x] modulo the canonical irreducible modulus."""

    __slots__ = ("p", "n", "modulus", "q", "zero", "one", "gen",
                 "_xpow", "_elements", "_transversal", "_image", "_coset_rep")

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.modulus = modulus
        self.q = p ** n
        self.zero = FieldElement(self, (0,) * n)
        one = (1,) + (0,) * (n - 1)
        self.one = FieldElement(self, one)
        gen = tuple(1 if i == 1 else 0 for i in range(n)) if n > 1 else one
        self.gen = FieldElement(self, gen)
        # x^k mod modulus for k in [n, 2n-2], used to fold products back
        rows = []
        cur = _poly_rem(tuple(1 if i == n else 0 for i in range(n + 1)), modulus, p)
        for _ in range(n, 2 * n - 1):
            rows.append(tuple(cur[i] if i < len(cur) else 0 for i in range(n)))
            cur = _poly_rem(tuple(0 for _ in range(1)) + cur, modulus, p)
        self._xpow = tuple(rows)
        self._elements: tuple[FieldElement, ...] | None = None
        self._transversal: tuple[FieldElement, ...] | None = None
        self._image: frozenset[FieldElement] | None = None
        self._coset_rep: dict[FieldElement, FieldElement] | None = None

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FieldDescriptor)
                and self.p == other.p and self.n == other.n
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.n))

    def __reduce__(self):
        return (make_field, (self.p, self.n))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n})"

    def element(self, coeffs: Iterable[int]) -> "FieldElement":
        cs = tuple(int(c) % self.p for c in coeffs)
        if len(cs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(cs)}")
        return FieldElement(self, cs)

    def from_prime(self, k: int) -> "FieldElement":
        """Image of the integer k under F_p -> GF(p^n)."""
        return FieldElement(self, (k % self.p,) + (0,) * (self.n - 1))

    def iter_elements(self) -> Iterator["FieldElement"]:
        """All field elements in lexicographic coefficient order."""
        for cs in product(range(self.p), repeat=self.n):
            yield FieldElement(self, cs)

    def elements(self) -> tuple["FieldElement", ...]:
        if self._elements is None:
            if self.q > _TABLE_CAP:
                raise DegreeTooLargeError(
                    f"refusing to materialise all {self.q} elements")
            self._elements = tuple(self.iter_elements())
        return self._elements

    def from_digits(self, text: str) -> "FieldElement":
        """Parse an element from its base-p digit string, constant digit first."""
        if len(text) != self.n or not all(ch.isdigit() for ch in text):
            raise ValueError(f"expected {self.n} base-{self.p} digits, got {text!r}")
        return self.element(int(ch) for ch in text)

    def digits(self, a: "FieldElement") -> str:
        return "".join(str(c) for c in a.coeffs)


class FieldElement:
    """An element of GF(p^n) as a reduced coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field and self.field != other.field:
            raise MixedFieldsError(f"{self.field} vs {other.field}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        f = self.field
        p, n = f.p, f.n
        a, b = self.coeffs, other.coeffs
        if n == 1:
            return FieldElement(f, ((a[0] * b[0]) % p,))
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        for k in range(2 * n - 2, n - 1, -1):
            c = conv[k]
            if c:
                row = f._xpow[k - n]
                for i in range(n):
                    if row[i]:
                        conv[i] += c * row[i]
        return FieldElement(f, tuple(conv[i] % p for i in range(n)))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.field.q - 2)

    def frobenius(self) -> "FieldElement":
        """The absolute Frobenius x -> x^p."""
        return self ** self.field.p

    def artin_schreier(self) -> "FieldElement":
        """x -> x^p - x; the kernel on GF(p^n) is exactly F_p."""
        return self.frobenius() - self

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.coeffs == other.coeffs and self.field == other.field)

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.n))

    def __repr__(self):
        return f"{self.field}:{''.join(str(c) for c in self.coeffs)}"


# ---------------------------------------------------------------------------
# Artin-Schreier cosets
# ---------------------------------------------------------------------------

def artin_schreier_image(field: FieldDescriptor) -> frozenset[FieldElement]:
    """The image of x -> x^p - x on GF(p^n); an index-p additive subgroup."""
    if field._image is None:
        field._image = frozenset(a.artin_schreier() for a in field.iter_elements())
    return field._image


def wp_transversal(field: FieldDescriptor) -> tuple[FieldElement, ...]:
    """Deterministic coset representatives for the Artin-Schreier image.

    Elements are scanned in lexicographic coefficient order, keeping one per
    coset; the scan starts at 0, so 0 always represents the image itself.
    """
    if field._transversal is None:
        image = artin_schreier_image(field)
        seen: set[frozenset] = set()
        reps = []
        for a in field.iter_elements():
            coset = frozenset(a + b for b in image)
            if coset not in seen:
                seen.add(coset)
                reps.append(a)
            if len(reps) == field.p:
                break
        field._transversal = tuple(reps)
    return field._transversal


def coset_representative(a: FieldElement) -> FieldElement:
    """The transversal element representing a's Artin-Schreier coset."""
    field = a.field
    if field._coset_rep is None:
        image = artin_schreier_image(field)
        rep_map = {}
        for r in wp_transversal(field):
            for b in image:
                rep_map[r + b] = r
        field._coset_rep = rep_map
    return field._coset_rep[a]


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

_EMBEDDINGS: dict[tuple[tuple[int, int], tuple[int, int]],
                  tuple[FieldElement, ...]] = {}


def _generator_powers(src: FieldDescriptor, dst: FieldDescriptor):
    key = ((src.p, src.n), (dst.p, dst.n))
    pows = _EMBEDDINGS.get(key)
    if pows is None:
        root = None
        for cand in dst.iter_elements():
            acc = dst.zero
            for c in reversed(src.modulus):
                acc = acc * cand + dst.from_prime(c)
            if not acc:
                root = cand
                break
        assert root is not None, "target too small for the source modulus"
        cur = dst.one
        images = []
        for _ in range(src.n):
            images.append(cur)
            cur = cur * root
        pows = tuple(images)
        _EMBEDDINGS[key] = pows
    return pows


def embed(a: FieldElement, target: FieldDescriptor) -> FieldElement:
    """Deterministic ring embedding GF(p^m) -> GF(p^(md)) fixing F_p.

    The source generator is sent to the lexicographically first root of the
    source modulus in the target.  Being a ring homomorphism, the embedding
    automatically commutes with Frobenius and with x -> x^p - x.
    """
    src = a.field
    if src == target:
        return a
    if src.p != target.p or target.n % src.n != 0:
        raise NotASubfieldError(f"{src} does not embed into {target}")
    pows = _generator_powers(src, target)
    acc = target.zero
    for c, img in zip(a.coeffs, pows):
        if c:
            acc = acc + target.from_prime(c) * img
    return acc

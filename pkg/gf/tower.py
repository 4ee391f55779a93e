"""Field tower F_2 ⊆ F_q ⊆ F_{q^s} with q = 2^b.

F_q is a galois field class; an element of F_{q^s} is the length-s vector of
its coordinates over F_q in the power basis 1, x, ..., x^{s-1} of the
extension modulus. Arrays of extension elements therefore carry a trailing
axis of size s, so F_q-linear maps (projections, F_q-rank) act on
coordinate slices.
"""
import logging

import galois
import numpy as np
from django.conf import settings

from cbpir_lab.exceptions import FieldArithmeticError, FieldConstructionError

logger = logging.getLogger(__name__)


def _search_cap():
    return settings.CBPIR.get('IRREDUCIBLE_SEARCH_CAP', 10_000)


def _as_int_coeffs(poly):
    """Descending integer coefficients of a galois Poly or a plain sequence."""
    if isinstance(poly, galois.Poly):
        return [int(c) for c in poly.coeffs.view(np.ndarray)]
    return [int(c) for c in poly]


def random_irreducible(field, degree, rng, cap=None):
    """Seeded search for a monic irreducible polynomial of `degree` over `field`."""
    cap = cap or _search_cap()
    for attempt in range(1, cap + 1):
        coeffs = field.Random(degree + 1, seed=rng)
        coeffs[0] = 1
        if coeffs[-1] == 0:
            continue
        candidate = galois.Poly(coeffs, field=field)
        if candidate.is_irreducible():
            logger.debug("irreducible degree-%d polynomial over GF(%d) after %d draws",
                         degree, field.order, attempt)
            return candidate
    raise FieldConstructionError(
        f"no irreducible polynomial of degree {degree} over GF({field.order}) in {cap} draws"
    )


class FieldTower:
    """Concrete F_q and F_{q^s} with verified irreducible moduli."""

    def __init__(self, b, s, base_modulus, ext_modulus):
        if b < 1:
            raise ValueError("b must be at least 1")
        if s < 2:
            raise ValueError("extension degree s must be at least 2")
        self.b = b
        self.s = s
        self.q = 2 ** b

        base = galois.Poly(_as_int_coeffs(base_modulus), field=galois.GF2)
        if base.degree != b or not base.is_irreducible():
            raise FieldConstructionError(f"base modulus {base} is not an irreducible degree-{b} polynomial")
        self.base_modulus = base
        self.field = galois.GF2 if b == 1 else galois.GF(2 ** b, irreducible_poly=base)

        ext = galois.Poly(_as_int_coeffs(ext_modulus), field=self.field)
        if ext.degree != s:
            raise FieldConstructionError(f"extension modulus must have degree {s}, got {ext.degree}")
        if ext.coeffs[0] != 1:
            ext = galois.Poly(ext.coeffs / ext.coeffs[0], field=self.field)
        if not ext.is_irreducible():
            raise FieldConstructionError(f"extension modulus {ext} is reducible over GF({self.q})")
        self.ext_modulus = ext

        # x^s = sum(low[i] x^i) in characteristic 2
        low = ext.coeffs[::-1][:s]
        powers = self.field.Zeros((2 * s - 1, s))
        powers[0, 0] = 1
        for e in range(1, 2 * s - 1):
            prev = powers[e - 1]
            shifted = self.field.Zeros(s)
            shifted[1:] = prev[:-1]
            powers[e] = shifted + prev[s - 1] * low
        self._powers = powers

    @classmethod
    def from_seed(cls, b, s, seed=0):
        """Deterministic tower: both moduli found by a search seeded with `seed`."""
        if b < 1 or s < 2:
            raise ValueError("field tower needs b >= 1 and s >= 2")
        rng = np.random.default_rng(seed)
        if b == 1:
            base = galois.Poly([1, 1])
        else:
            base = random_irreducible(galois.GF2, b, rng)
        field = galois.GF2 if b == 1 else galois.GF(2 ** b, irreducible_poly=base)
        ext = random_irreducible(field, s, rng)
        logger.info("field tower q=2^%d, s=%d, base %s, extension %s", b, s, base, ext)
        return cls(b, s, base, ext)

    def __eq__(self, other):
        if not isinstance(other, FieldTower):
            return NotImplemented
        return self.describe() == other.describe()

    def __hash__(self):
        return hash((self.b, self.s, tuple(self.describe()['ext_modulus'])))

    def __repr__(self):
        return f"FieldTower(q=2^{self.b}, s={self.s}, ext={self.ext_modulus})"

    def describe(self):
        return {
            'b': self.b,
            's': self.s,
            'base_modulus': _as_int_coeffs(self.base_modulus),
            'ext_modulus': _as_int_coeffs(self.ext_modulus),
        }

    @property
    def order(self):
        return self.q ** self.s

    # Element construction

    def zeros(self, shape=()):
        return self.field.Zeros(tuple(shape) + (self.s,))

    def one(self):
        element = self.zeros()
        element[0] = 1
        return element

    def element(self, coords):
        coords = self.field(coords)
        if coords.shape[-1] != self.s:
            raise ValueError(f"extension elements need {self.s} coordinates")
        return coords

    def embed(self, scalars):
        """F_q scalars as constant elements of F_{q^s}."""
        scalars = self.field(scalars)
        out = self.zeros(scalars.shape)
        out[..., 0] = scalars
        return out

    def random(self, shape, rng):
        return self.field.Random(tuple(shape) + (self.s,), seed=rng)

    def random_scalars(self, shape, rng, nonzero=False):
        return self.field.Random(tuple(shape), low=1 if nonzero else 0, seed=rng)

    # Arithmetic

    def transform(self, x, matrix):
        """Apply an s×s F_q matrix on the coordinate axis: x ↦ x·matrix."""
        flat = x.reshape(-1, self.s)
        if flat.shape[0] == 0:
            return x.copy()
        return (flat @ matrix).reshape(x.shape)

    def add(self, a, c):
        return a + c

    def scale(self, a, scalars):
        """Multiply extension elements by F_q scalars (broadcast over leading axes)."""
        return a * self.field(scalars)[..., np.newaxis]

    def mul(self, a, c):
        shape = np.broadcast_shapes(a.shape[:-1], c.shape[:-1])
        s = self.s
        conv = self.field.Zeros(shape + (2 * s - 1,))
        for i in range(s):
            conv[..., i:i + s] = conv[..., i:i + s] + a[..., i:i + 1] * c
        flat = conv.reshape(-1, 2 * s - 1)
        if flat.shape[0] == 0:
            return self.zeros(shape)
        return (flat @ self._powers).reshape(shape + (s,))

    def multiplication_matrices(self, a):
        """Matrices R(a) with coords(u·a) = coords(u) @ R(a); shape (..., s, s)."""
        s = self.s
        flat = a.reshape(-1, s)
        out = self.field.Zeros((flat.shape[0], s, s))
        for i in range(s):
            out[:, i, :] = flat @ self._powers[i:i + s]
        return out.reshape(a.shape[:-1] + (s, s))

    def inv(self, a):
        if a.shape != (self.s,):
            raise ValueError("inv expects a single extension element")
        if not np.any(a):
            raise FieldArithmeticError("inversion of zero in F_{q^s}")
        inverse = np.linalg.inv(self.multiplication_matrices(a))
        return inverse[0].copy()

    def is_zero(self, a):
        return not np.any(a)

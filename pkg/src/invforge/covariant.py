"""Degree-three covariants of a binary form and the membership test for
the power-of-a-quadratic cone.

For a binary form F of even degree d = 2e the covariants

    U(i,j) = ((F,F)_{2i}, F)_j

of order 3d-4i-2j, the rational constants mu_{i,j}, and the combinations

    Phi(i,j,i',j') = mu_{i',j'} U(i,j) - mu_{i,j} U(i',j')

assemble into a set S whose common vanishing characterizes the forms that
are e-th powers of quadratics.  membership() evaluates that set on a given
form and reports the first non-vanishing element as a witness.
"""

from fractions import Fraction

from .arith import factorial
from .closedform import n2
from .transvect import BinaryForm, _omega_diagonal


def in_range(d: int, i: int, j: int) -> bool:
    """The index window in which U(i,j) is not forced to vanish:
    0 <= i <= d/2 and 0 <= j <= min(d, 2d-4i)."""
    return 0 <= 2 * i <= d and 0 <= j <= min(d, 2 * d - 4 * i)


def u_cov(d: int, i: int, j: int, F: BinaryForm) -> BinaryForm:
    """The covariant ((F,F)_{2i}, F)_j of a degree-d form, exactly.

    Outside the index window this is the zero form.  Both transvectants
    are computed unnormalized and the rational scale is applied once at
    the end, so integer coefficients stay integer until the last step.
    """
    if d % 2:
        raise ValueError(f"u_cov needs even degree, got d={d}")
    if F.degree != d:
        raise ValueError(f"form has degree {F.degree}, expected {d}")
    order = max(3 * d - 4 * i - 2 * j, 0)
    if not in_range(d, i, j):
        return BinaryForm.zero_like(F, order)
    return _u_cov_ranged(d, i, j, F, {})


def _u_cov_ranged(d, i, j, F, cache) -> BinaryForm:
    # cache maps i -> unnormalized (F,F)_{2i}; callers share it across j's
    if i in cache:
        hraw = cache[i]
    else:
        hraw = _omega_diagonal(F.poly, F.poly, 2 * i, F.xpair)
        cache[i] = hraw
    u = 2 * d - 4 * i
    raw = _omega_diagonal(hraw, F.poly, j, F.xpair)
    scale = Fraction(factorial(d - 2 * i) ** 2, factorial(d) ** 2) * Fraction(
        factorial(u - j) * factorial(d - j), factorial(u) * factorial(d)
    )
    return BinaryForm(raw * scale, F.xpair, 3 * d - 4 * i - 2 * j)


def mu(e: int, i: int, j: int) -> Fraction:
    """mu_{i,j} = (-1)^(i+k) n2(e,e,i) n2(2e-2i,e,k) for j = 2k."""
    if j % 2:
        raise ValueError(f"mu needs even j, got j={j}")
    if not in_range(2 * e, i, j):
        raise ValueError(f"mu indices out of range: e={e}, i={i}, j={j}")
    k = j // 2
    sign = -1 if (i + k) % 2 else 1
    return sign * n2(e, e, i) * n2(2 * e - 2 * i, e, k)


def phi(d: int, i: int, j: int, i2: int, j2: int, F: BinaryForm) -> BinaryForm:
    """mu_{i2,j2} U(i,j) - mu_{i,j} U(i2,j2), for pairs with equal 2i+j and
    both j's even."""
    _check_phi_indices(d, i, j, i2, j2)
    e = d // 2
    a = u_cov(d, i, j, F)
    b = u_cov(d, i2, j2, F)
    combo = a.poly * mu(e, i2, j2) - b.poly * mu(e, i, j)
    return BinaryForm(combo, F.xpair, a.degree)


def _check_phi_indices(d, i, j, i2, j2):
    if d % 2:
        raise ValueError(f"phi needs even degree, got d={d}")
    if j % 2 or j2 % 2:
        raise ValueError(f"phi needs even orders, got j={j}, j2={j2}")
    if 2 * i + j != 2 * i2 + j2:
        raise ValueError(
            f"phi needs 2i+j = 2i2+j2, got {2 * i + j} != {2 * i2 + j2}"
        )
    if not (in_range(d, i, j) and in_range(d, i2, j2)):
        raise ValueError(f"phi indices out of range: {(i, j, i2, j2)}")


class CovariantExpr:
    """A named element of the defining set: a single U(i,j) or a
    difference Phi(i,j,i2,j2)."""

    __slots__ = ("kind", "d", "indices")

    def __init__(self, kind: str, d: int, indices: tuple):
        if kind not in ("U", "Phi"):
            raise ValueError(f"unknown covariant kind {kind!r}")
        if kind == "U" and len(indices) != 2:
            raise ValueError("U takes two indices")
        if kind == "Phi" and len(indices) != 4:
            raise ValueError("Phi takes four indices")
        self.kind = kind
        self.d = d
        self.indices = tuple(indices)

    def name(self) -> str:
        return f"{self.kind}({','.join(str(t) for t in self.indices)})"

    @property
    def order(self) -> int:
        i, j = self.indices[0], self.indices[1]
        return 3 * self.d - 4 * i - 2 * j

    def evaluate(self, F: BinaryForm, cache: dict = None) -> BinaryForm:
        """Evaluate on a form of degree d.  A shared cache dict memoizes
        the inner transvectants (F,F)_{2i} across set members."""
        if F.degree != self.d:
            raise ValueError(f"form has degree {F.degree}, expected {self.d}")
        if cache is None:
            cache = {}
        if self.kind == "U":
            i, j = self.indices
            if not in_range(self.d, i, j):
                return BinaryForm.zero_like(F, max(self.order, 0))
            return _u_cov_ranged(self.d, i, j, F, cache)
        i, j, i2, j2 = self.indices
        e = self.d // 2
        a = _u_cov_ranged(self.d, i, j, F, cache)
        b = _u_cov_ranged(self.d, i2, j2, F, cache)
        combo = a.poly * mu(e, i2, j2) - b.poly * mu(e, i, j)
        return BinaryForm(combo, F.xpair, a.degree)

    def __repr__(self):
        return f"CovariantExpr({self.name()}, d={self.d})"

    def __eq__(self, other):
        if not isinstance(other, CovariantExpr):
            return NotImplemented
        return (self.kind, self.d, self.indices) == (
            other.kind,
            other.d,
            other.indices,
        )

    def __hash__(self):
        return hash((self.kind, self.d, self.indices))


def set_S(d: int) -> list:
    """The defining covariant set for degree d:

      - every U(i,j) with j odd inside the index window, and
      - Phi over consecutive pairs (by ascending i) of even-order indices
        sharing the same value of 2i+j.

    Order is canonical: the odd U's sorted by (j, i), then the Phi's by
    (2i+j, i).  Determinism of the membership witness relies on it.
    """
    if d % 2 or d < 4:
        raise ValueError(f"set_S needs even d >= 4, got {d}")
    e = d // 2
    exprs = []
    for j in range(1, d + 1, 2):
        for i in range(e + 1):
            if j <= min(d, 2 * d - 4 * i):
                exprs.append(CovariantExpr("U", d, (i, j)))

    by_s = {}
    for i in range(e + 1):
        for j in range(0, min(d, 2 * d - 4 * i) + 1, 2):
            by_s.setdefault(2 * i + j, []).append((i, j))
    for s in sorted(by_s):
        group = sorted(by_s[s])
        for (i, j), (i2, j2) in zip(group, group[1:]):
            exprs.append(CovariantExpr("Phi", d, (i, j, i2, j2)))
    return exprs


def membership(F: BinaryForm) -> tuple:
    """Decide whether a binary form of even degree d = 2e is the e-th
    power of some quadratic, by evaluating the defining covariant set.

    Returns (True, None) on membership, else (False, name) where name
    labels the first set element (in canonical order) that does not
    vanish on F.  Works for symbolic coefficients too, in which case
    True means the identity holds for every specialization.
    """
    d = F.degree
    if d % 2:
        raise ValueError(f"membership needs even degree, got {d}")
    if d < 2:
        raise ValueError(f"membership needs degree >= 2, got {d}")
    if F.is_zero() or d == 2:
        # the zero form is the e-th power of the zero quadratic, and
        # every binary quadratic is trivially its own first power
        return True, None
    cache = {}
    for expr in set_S(d):
        if not expr.evaluate(F, cache).is_zero():
            return False, expr.name()
    return True, None


def octavic_preset() -> list:
    """A short list of degree-8 covariants whose common vanishing still
    cuts out the fourth powers of quadratics: three odd U's, two Phi's,
    and U(3,3)."""
    return [
        CovariantExpr("U", 8, (0, 3)),
        CovariantExpr("U", 8, (0, 5)),
        CovariantExpr("U", 8, (0, 7)),
        CovariantExpr("Phi", 8, (0, 6, 1, 4)),
        CovariantExpr("Phi", 8, (0, 8, 1, 6)),
        CovariantExpr("U", 8, (3, 3)),
    ]

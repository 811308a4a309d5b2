"""Products, coproducts and series operations of the q-stuffle algebra.

The q-stuffle of two words follows the recursion

    y_s u * y_t v = y_s (u * y_t v) + y_t (y_s u * v) + q y_{s+t} (u * v)

with the empty word as unit; q is the formal generator of the coefficient
ring.  Dropping the contraction term gives the plain shuffle, kept as a
separate implementation so the q=0 specialization is a genuine check.
The concatenation bialgebra carries the dual coproduct (on letters:
y_s ox 1 + 1 ox y_s + q sum y_{s1} ox y_{s2} over s1+s2=s), with the
deconcatenation coproduct on the stuffle side.
"""

from fractions import Fraction
from functools import lru_cache

from .coeff import QPoly
from .ncpoly import NCPoly, Tensor2, tensor_outer, word_poly
from .words import all_words_up_to, weight, word_key, words_of_weight
from .report import Report

_Q = QPoly.q()


def stuffle(u, v):
    """q-stuffle of two words, as an NCPoly with QPoly coefficients."""
    u, v = tuple(u), tuple(v)
    if word_key(v) < word_key(u):  # commutative; canonical cache key
        u, v = v, u
    return _stuffle(u, v)


@lru_cache(maxsize=None)
def _stuffle(u, v):
    if not u:
        return word_poly(v)
    if not v:
        return word_poly(u)
    s, t = u[0], v[0]
    out = stuffle(u[1:], v).prepend_letter(s)
    out = out + stuffle(u, v[1:]).prepend_letter(t)
    out = out + stuffle(u[1:], v[1:]).prepend_letter(s + t).scale(_Q)
    return out


@lru_cache(maxsize=None)
def shuffle(u, v):
    """Plain shuffle (no contraction term); independent recursion."""
    if not u:
        return word_poly(v)
    if not v:
        return word_poly(u)
    out = shuffle(u[1:], v).prepend_letter(u[0])
    return out + shuffle(u, v[1:]).prepend_letter(v[0])


def _bilinear(word_prod, p, q):
    acc = NCPoly.zero()
    for u, cu in p._terms.items():
        for v, cv in q._terms.items():
            acc = acc + word_prod(u, v).scale(cu * cv)
    return acc


def stuffle_poly(p, q):
    """Bilinear extension of the q-stuffle to polynomials."""
    return _bilinear(stuffle, p, q)


def shuffle_poly(p, q):
    return _bilinear(shuffle, p, q)


def conc_poly(p, q):
    return p * q


def stuffle_power_divided(p, k):
    """k-th stuffle power divided by k!."""
    out = NCPoly.one()
    for _ in range(k):
        out = stuffle_poly(out, p)
    return out.scale(Fraction(1, _factorial(k)))


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def _deconcat_word(w):
    return Tensor2({(w[:i], w[i:]): 1 for i in range(len(w) + 1)})


def deconcat_coproduct(p):
    """Sum over all splittings w = uv of u ox v, extended linearly."""
    if isinstance(p, tuple):
        p = word_poly(p)
    acc = Tensor2.zero()
    for w, c in p._terms.items():
        acc = acc + _deconcat_word(w).scale(c)
    return acc


@lru_cache(maxsize=None)
def _stuffle_coproduct_letter(s):
    data = {((s,), ()): QPoly.one(), ((), (s,)): QPoly.one()}
    for s1 in range(1, s):
        data[((s1,), (s - s1,))] = _Q
    return Tensor2(data)


@lru_cache(maxsize=None)
def _stuffle_coproduct_word(w):
    out = Tensor2.one()
    for s in w:
        out = out.mul(_stuffle_coproduct_letter(s))
    return out


def stuffle_coproduct(p):
    """Dual coproduct of the q-stuffle; a conc-morphism on words."""
    if isinstance(p, tuple):
        p = word_poly(p)
    acc = Tensor2.zero()
    for w, c in p._terms.items():
        acc = acc + _stuffle_coproduct_word(w).scale(c)
    return acc


def counit(p):
    """Coefficient of the empty word."""
    return p.constant_term()


def reduced_stuffle_coproduct(p):
    """Coproduct minus the two unit terms; defined on proper polynomials."""
    if not p.is_proper():
        raise ValueError("reduced coproduct needs a proper polynomial")
    return stuffle_coproduct(p) - tensor_outer(p, NCPoly.one()) \
        - tensor_outer(NCPoly.one(), p)


def _primitive_by_coproduct(p, n):
    pt = p.truncate(n)
    expected = tensor_outer(pt, NCPoly.one()) + tensor_outer(NCPoly.one(), pt)
    return stuffle_coproduct(pt).truncate(n) == expected.truncate(n)


def _primitive_by_pairing(p, n):
    pt = p.truncate(n)
    for total in range(2, n + 1):
        for a in range(1, total):
            for u in words_of_weight(a):
                for v in words_of_weight(total - a):
                    if stuffle(u, v).pairing(pt):
                        return False
    return True


def is_primitive(p, n):
    """Friedrichs test up to weight n, evaluated both through the coproduct
    and through the pairing criterion; the two must agree."""
    by_cop = _primitive_by_coproduct(p, n)
    by_pair = _primitive_by_pairing(p, n)
    if by_cop != by_pair:
        raise RuntimeError(
            "primitivity criteria disagree on %r (coproduct=%s, pairing=%s)"
            % (p, by_cop, by_pair))
    return by_cop


def is_grouplike(s, n):
    """True iff <S|u*v> = <S|u><S|v> for nonempty u, v with total weight <= n.

    Requires constant term 1 (the truncated-series normalization).
    """
    if s.constant_term() != QPoly.one():
        raise ValueError("group-like test needs constant term 1")
    st = s.truncate(n)
    for total in range(2, n + 1):
        for a in range(1, total):
            for u in words_of_weight(a):
                cu = st.coeff(u)
                for v in words_of_weight(total - a):
                    lhs = stuffle(u, v).pairing(st)
                    if lhs != cu * st.coeff(v):
                        return False
    return True


def exp_proper(p, mul=conc_poly, n=None):
    """Truncated exponential of a proper polynomial w.r.t. the given product."""
    if n is None:
        raise ValueError("a weight bound is required")
    p = p.truncate(n)
    if not p.is_proper():
        raise ValueError("exp needs a proper polynomial")
    acc = NCPoly.one()
    power = NCPoly.one()
    for k in range(1, n + 1):
        power = mul(power, p).truncate(n)
        if not power:
            break
        acc = acc + power.scale(Fraction(1, _factorial(k)))
    return acc


def log_one_plus(s, mul=conc_poly, n=None):
    """Truncated logarithm of a series with constant term 1."""
    if n is None:
        raise ValueError("a weight bound is required")
    if s.constant_term() != QPoly.one():
        raise ValueError("log needs constant term 1")
    x = s.proper_part().truncate(n)
    acc = NCPoly.zero()
    power = NCPoly.one()
    for k in range(1, n + 1):
        power = mul(power, x).truncate(n)
        if not power:
            break
        acc = acc + power.scale(Fraction((-1) ** (k - 1), k))
    return acc


def verify_axioms(n):
    """Bialgebra axioms at desk scale: commutativity and associativity of the
    q-stuffle for total weight <= n, coassociativity of both coproducts, and
    the product/coproduct duality pairings."""
    rep = Report("axioms (N=%d)" % n)

    pairs = [(u, v) for a in range(1, n) for b in range(1, n - a + 1)
             for u in words_of_weight(a) for v in words_of_weight(b)]
    bad = sum(1 for u, v in pairs if stuffle(u, v) != stuffle(v, u))
    rep.add("stuffle commutativity (%d pairs)" % len(pairs), bad == 0)

    triples = [(u, v, w)
               for a in range(1, n - 1) for b in range(1, n - a)
               for c in range(1, n - a - b + 1)
               for u in words_of_weight(a) for v in words_of_weight(b)
               for w in words_of_weight(c)]
    bad = 0
    for u, v, w in triples:
        lhs = stuffle_poly(stuffle(u, v), word_poly(w))
        rhs = stuffle_poly(word_poly(u), stuffle(v, w))
        if lhs != rhs:
            bad += 1
    rep.add("stuffle associativity (%d triples)" % len(triples), bad == 0)

    bad = 0
    words = all_words_up_to(n)
    for w in words:
        for cop in (stuffle_coproduct, deconcat_coproduct):
            if not _coassociative_on(cop, w):
                bad += 1
    rep.add("coassociativity of both coproducts (%d words)" % len(words),
            bad == 0)

    bad = 0
    checked = 0
    for u, v in pairs:
        w_total = weight(u) + weight(v)
        for w in words_of_weight(w_total):
            checked += 1
            if stuffle(u, v).coeff(w) != \
                    stuffle_coproduct(w).pairing(word_poly(u), word_poly(v)):
                bad += 1
            if (1 if u + v == w else 0) != \
                    deconcat_coproduct(w).pairing(word_poly(u), word_poly(v)):
                bad += 1
    rep.add("product/coproduct duality (%d pairings)" % checked, bad == 0)
    return rep


def _coassociative_on(cop, w):
    left = {}
    right = {}
    for (u, v), c in cop(w)._terms.items():
        for (x, y), d in cop(u)._terms.items():
            key = (x, y, v)
            left[key] = left.get(key, QPoly.zero()) + c * d
        for (x, y), d in cop(v)._terms.items():
            key = (u, x, y)
            right[key] = right.get(key, QPoly.zero()) + c * d
    left = {k: c for k, c in left.items() if c}
    right = {k: c for k, c in right.items() if c}
    return left == right


"""The primitive projector, its adjoint, and the log of the diagonal series.

The projector sends a word w to

    w + sum_{k>=2} ((-1)^(k-1)/k) sum <w | u_1 * ... * u_k> u_1 ... u_k

(* the q-stuffle, concatenation on the right), the degree-preserving
logarithm-of-the-identity map whose image consists of primitives.  The
adjoint replaces the roles of the two products.  Three computations of the
projector are provided: the defining sum over tuples of words, the closed
formula on letters, and the convolution-logarithm recursion; they agree and
the agreement is a standing test.
"""

from fractions import Fraction
from functools import lru_cache

from .coeff import QPoly
from .ncpoly import NCPoly, Tensor2, tensor_outer, word_poly
from .ops import reduced_stuffle_coproduct, stuffle, stuffle_poly, _factorial
from .words import weight, words_of_weight


@lru_cache(maxsize=None)
def _word_tuples(n):
    """Ordered tuples of nonempty words with total weight n, each paired
    with its iterated q-stuffle."""
    out = []
    for a in range(1, n + 1):
        for u in words_of_weight(a):
            if a == n:
                out.append(((u,), word_poly(u)))
            else:
                for tup, prod in _word_tuples(n - a):
                    out.append(((u,) + tup, stuffle_poly(word_poly(u), prod)))
    return tuple(out)


@lru_cache(maxsize=None)
def primitive_projector(w):
    """Defining tuple-sum formula."""
    if not w:
        raise ValueError("the projector is defined on nonempty words")
    acc = word_poly(w)
    for tup, prod in _word_tuples(weight(w)):
        k = len(tup)
        if k < 2:
            continue
        c = prod.coeff(w)
        if c:
            cat = sum(tup, ())
            acc = acc + word_poly(cat).scale(c * Fraction((-1) ** (k - 1), k))
    return acc


@lru_cache(maxsize=None)
def primitive_projector_letter(s):
    """Closed formula on letters: the contraction corrections only."""
    acc = word_poly((s,))
    for l in range(2, s + 1):
        c = QPoly.q(l - 1, Fraction((-1) ** (l - 1), l))
        for w in words_of_weight(s):
            if len(w) == l:
                acc = acc + word_poly(w).scale(c)
    return acc


@lru_cache(maxsize=None)
def primitive_projector_convolution(w):
    """Convolution-log route: fold the reduced coproduct, reconcatenate."""
    if not w:
        raise ValueError("the projector is defined on nonempty words")
    acc = NCPoly.zero()
    for k in range(1, weight(w) + 1):
        term = _fold_k(word_poly(w), k)
        if not term:
            break
        acc = acc + term.scale(Fraction((-1) ** (k - 1), k))
    return acc


def _fold_k(p, k):
    """conc o (reduced coproduct)^(k-1) applied to a proper polynomial."""
    if k == 1:
        return p
    acc = NCPoly.zero()
    for (u, v), c in reduced_stuffle_coproduct(p)._terms.items():
        rest = _fold_k(word_poly(v), k - 1)
        if rest:
            acc = acc + word_poly(u).scale(c) * rest
    return acc


def primitive_projector_poly(p):
    """Linear extension of the projector to proper polynomials."""
    acc = NCPoly.zero()
    for w, c in p._terms.items():
        if not w:
            raise ValueError("linear extension needs a proper polynomial")
        acc = acc + primitive_projector(w).scale(c)
    return acc


@lru_cache(maxsize=None)
def primitive_projector_adjoint(w):
    """Adjoint: sum over deconcatenations, iterated stuffle on the right."""
    if not w:
        raise ValueError("the adjoint projector is defined on nonempty words")
    acc = NCPoly.zero()
    for k in range(1, len(w) + 1):
        for blocks in _block_splits(w, k):
            prod = word_poly(blocks[0])
            for b in blocks[1:]:
                prod = stuffle_poly(prod, word_poly(b))
            acc = acc + prod.scale(Fraction((-1) ** (k - 1), k))
    return acc


def _block_splits(w, k):
    """Splittings of w into k nonempty contiguous blocks."""
    if k == 1:
        yield (w,)
        return
    for i in range(1, len(w) - k + 2):
        for rest in _block_splits(w[i:], k - 1):
            yield (w[:i],) + rest


def diagonal_series(n):
    """Sum of w ox w over all words of weight <= n, including the empty word."""
    data = {((), ()): QPoly.one()}
    for k in range(1, n + 1):
        for w in words_of_weight(k):
            data[(w, w)] = QPoly.one()
    return Tensor2(data)


def log_diagonal(n):
    """Truncated log of the diagonal series in the mixed tensor algebra
    (q-stuffle on the left slot, concatenation on the right)."""
    plus = diagonal_series(n) - Tensor2.one()
    acc = Tensor2.zero()
    power = Tensor2.one()
    for k in range(1, n + 1):
        power = power.combine(plus, left_mul=stuffle, max_total=2 * n)
        if not power:
            break
        acc = acc + power.scale(Fraction((-1) ** (k - 1), k))
    return acc


def log_diagonal_left_form(n):
    """Closed form: sum of w ox projector(w)."""
    acc = Tensor2.zero()
    for k in range(1, n + 1):
        for w in words_of_weight(k):
            acc = acc + tensor_outer(word_poly(w), primitive_projector(w))
    return acc


def log_diagonal_right_form(n):
    """Closed form: sum of adjoint-projector(w) ox w."""
    acc = Tensor2.zero()
    for k in range(1, n + 1):
        for w in words_of_weight(k):
            acc = acc + tensor_outer(primitive_projector_adjoint(w), word_poly(w))
    return acc


def reconstruct(w):
    """Rebuild w as sum_k (1/k!) sum <w|u_1*...*u_k> P(u_1)...P(u_k) where P
    is the projector.  Contract: the result equals w."""
    w = tuple(w)
    if not w:
        return NCPoly.one()
    acc = NCPoly.zero()
    for tup, prod in _word_tuples(weight(w)):
        c = prod.coeff(w)
        if not c:
            continue
        term = NCPoly.one()
        for u in tup:
            term = term * primitive_projector(u)
        acc = acc + term.scale(c * Fraction(1, _factorial(len(tup))))
    return acc


def reconstruct_adjoint(w):
    """Rebuild w as sum_k (1/k!) sum over deconcatenations of the iterated
    stuffle of adjoint-projector values."""
    w = tuple(w)
    if not w:
        return NCPoly.one()
    acc = NCPoly.zero()
    for k in range(1, len(w) + 1):
        c = Fraction(1, _factorial(k))
        for blocks in _block_splits(w, k):
            prod = primitive_projector_adjoint(blocks[0])
            for b in blocks[1:]:
                prod = stuffle_poly(prod, primitive_projector_adjoint(b))
            acc = acc + prod.scale(c)
    return acc


def letter_reconstruct(s):
    """The letter identity: y_s as the q-weighted sum over compositions of s
    of products of projected letters."""
    acc = NCPoly.zero()
    for w in words_of_weight(s):
        k = len(w)
        prod = NCPoly.one()
        for j in w:
            prod = prod * primitive_projector_letter(j)
        acc = acc + prod.scale(QPoly.q(k - 1, Fraction(1, _factorial(k))))
    return acc

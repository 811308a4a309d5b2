"""Dual bases of the q-stuffle algebra and their verification suites.

Four graded families indexed by words:

  * pbw_element       -- bracketed Lyndon elements and their decreasing
                         products (unit upper triangular, "pi" kind);
  * dual_pbw_*        -- the dual family (unit lower triangular, "sigma"),
                         computed either by an exact triangular solve per
                         weight class (the oracle) or by the recursive
                         formulas (divided stuffle powers on the Lyndon
                         factors, converse derivation trees on Lyndon words);
  * lyndon_stuffle_element -- divided stuffle powers of the raw Lyndon
                         factors ("chi", unit lower triangular);
  * its dual ("xi", unit upper triangular, primitive on Lyndon words).

The triangular solve is the authority for the dual family; the recursive
computations must agree with it and any mismatch is reported as a hard
error by `verify_methods` and by the CLI's both-methods mode.
"""

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from ._version import __version__
from .coeff import QPoly
from .eulerian import primitive_projector_letter, diagonal_series
from .lyndon import (cfl_grouped, converse_tree, is_lyndon, lyndon_up_to,
                     standard_factorization)
from .ncpoly import NCPoly, Tensor2, tensor_outer, word_poly
from .ops import (is_primitive, stuffle, stuffle_poly, stuffle_power_divided,
                  _factorial)
from .report import Report
from .words import (all_words_up_to, weight, word_key, word_latex, word_leq,
                    word_to_str, words_of_weight)


@lru_cache(maxsize=None)
def pbw_element(w):
    """Basis element of the concatenation algebra attached to w: the
    projected letter for a letter, the bracket of the standard factors for
    a longer Lyndon word, the product over the decreasing Lyndon
    factorization in general."""
    w = tuple(w)
    if not w:
        return NCPoly.one()
    if is_lyndon(w):
        if len(w) == 1:
            return primitive_projector_letter(w[0])
        left, right = standard_factorization(w)
        a, b = pbw_element(left), pbw_element(right)
        return a * b - b * a
    acc = NCPoly.one()
    for factor, mult in cfl_grouped(w):
        acc = acc * pbw_element(factor).conc_pow(mult)
    return acc


def pi_of_sequence(seq):
    """Concatenation product of the basis elements of a sequence of words."""
    acc = NCPoly.one()
    for l in seq:
        acc = acc * pbw_element(l)
    return acc


class GradedBasis:
    """A graded family word -> NCPoly for all words of weight <= max_weight."""

    TRIANGULAR_UP = {"pi", "xi"}
    TRIANGULAR_DOWN = {"sigma", "chi"}

    def __init__(self, kind, max_weight, entries):
        if kind not in self.TRIANGULAR_UP | self.TRIANGULAR_DOWN:
            raise ValueError("unknown basis kind %r" % kind)
        self.kind = kind
        self.max_weight = max_weight
        self.entries = dict(entries)

    def entry(self, w):
        return self.entries[tuple(w)]

    def words(self):
        return all_words_up_to(self.max_weight, include_empty=True)

    def check_triangular(self):
        """Unit triangularity and weight homogeneity; raises on violation."""
        up = self.kind in self.TRIANGULAR_UP
        if self.entries[()] != NCPoly.one():
            raise ValueError("entry at the empty word must be 1")
        for w in self.words():
            if not w:
                continue
            p = self.entries[w]
            if p.coeff(w) != QPoly.one():
                raise ValueError("%s entry at %s lacks unit leading term"
                                 % (self.kind, word_to_str(w)))
            for v in p.support():
                if weight(v) != weight(w):
                    raise ValueError("%s entry at %s is not homogeneous"
                                     % (self.kind, word_to_str(w)))
                if v == w:
                    continue
                if up != (word_key(v) > word_key(w)):
                    raise ValueError("%s entry at %s breaks triangularity at %s"
                                     % (self.kind, word_to_str(w),
                                        word_to_str(v)))

    def to_json(self):
        return {
            "kind": self.kind,
            "max_weight": self.max_weight,
            "generator_version": "qstuffle %s" % __version__,
            "entries": {word_to_str(w): self.entries[w].to_json()
                        for w in self.words()},
        }

    def latex_rows(self):
        macro = {"pi": "\\Pi", "sigma": "\\Sigma", "chi": "\\chi",
                 "xi": "\\xi"}[self.kind]
        rows = []
        for w in self.words():
            if not w:
                continue
            rows.append("%s_{%s} &=& %s\\\\" %
                        (macro, word_latex(w), self.entries[w].latex()))
        return rows


def pi_basis(n):
    entries = {(): NCPoly.one()}
    for w in all_words_up_to(n):
        entries[w] = pbw_element(w)
    basis = GradedBasis("pi", n, entries)
    basis.check_triangular()
    return basis


def _invert_unit_upper(m):
    """Inverse of a unit upper triangular matrix of QPolys (no division)."""
    size = len(m)
    inv = [[QPoly.zero()] * size for _ in range(size)]
    for i in range(size):
        inv[i][i] = QPoly.one()
    for j in range(size):
        for i in range(j - 1, -1, -1):
            acc = QPoly.zero()
            for k in range(i + 1, j + 1):
                if m[i][k] and inv[k][j]:
                    acc = acc + m[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


def _dual_by_triangular_solve(elements, n, kind):
    """Entries dual to `elements` (a map word -> NCPoly), built per weight
    class by inverting the unit triangular coefficient matrix."""
    upper = kind in GradedBasis.TRIANGULAR_UP
    entries = {(): NCPoly.one()}
    for k in range(1, n + 1):
        ws = list(words_of_weight(k))
        if not upper:
            ws.reverse()  # present the lower triangular case as upper
        index = {w: i for i, w in enumerate(ws)}
        size = len(ws)
        m = [[QPoly.zero()] * size for _ in range(size)]
        for i, w in enumerate(ws):
            p = elements[w]
            for v, c in p._terms.items():
                j = index.get(v)
                if j is None or j < i:
                    raise ValueError(
                        "family is not unit triangular at %s (term %s)"
                        % (word_to_str(w), word_to_str(v)))
                m[i][j] = c
            if m[i][i] != QPoly.one():
                raise ValueError("family lacks unit diagonal at %s"
                                 % word_to_str(w))
        inv = _invert_unit_upper(m)
        # dual of row family with matrix M is given by columns of M^-1
        for j, w in enumerate(ws):
            data = {}
            for i in range(j + 1):
                if inv[i][j]:
                    data[ws[i]] = inv[i][j]
            entries[w] = NCPoly(data)
    return entries


def dual_pbw_oracle(n):
    """The dual family of the PBW elements via exact triangular solve."""
    elements = {w: pbw_element(w) for w in all_words_up_to(n)}
    basis = GradedBasis("sigma", n, _dual_by_triangular_solve(elements, n, "pi"))
    basis.check_triangular()
    return basis


def sigma_from_cfl(w, sigma_of):
    """Dual element of a word from the divided stuffle powers of the dual
    elements of its decreasing Lyndon factorization."""
    w = tuple(w)
    if not w:
        return NCPoly.one()
    acc = NCPoly.one()
    for factor, mult in cfl_grouped(w):
        acc = stuffle_poly(acc, stuffle_power_divided(sigma_of(factor), mult))
    return acc


def sigma_increasing(w, sigma_of):
    """Dual element of a Lyndon word with weakly increasing letters
    (weakly decreasing indices): peel letter prefixes with the contraction
    coefficient q^(i-1)/i!."""
    w = tuple(w)
    if not is_lyndon(w):
        raise ValueError("needs a Lyndon word")
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError("letters are not weakly increasing")
    acc = NCPoly.zero()
    for i in range(1, len(w) + 1):
        coeff = QPoly.q(i - 1, Fraction(1, _factorial(i)))
        head = word_poly((sum(w[:i]),)).scale(coeff)
        acc = acc + head * sigma_of(w[i:])
    return acc


def sigma_lyndon_general(w, sigma_of):
    """Dual element of any Lyndon word via the converse derivation tree.

    Every node occurrence T (occurrences count derivation paths) splits as a
    letters-prefix of length i >= 1 followed by a weakly decreasing tail of
    Lyndon words; each split contributes q^(i-1)/i! times the contracted
    letter times the dual element of the concatenated tail.
    """
    w = tuple(w)
    if not is_lyndon(w):
        raise ValueError("needs a Lyndon word")
    acc = NCPoly.zero()
    for node in converse_tree((w,)).nodes():
        seq = node.seq
        for i in range(1, len(seq) + 1):
            if len(seq[i - 1]) != 1:
                break
            tail = seq[i:]
            if any(not word_leq(tail[t + 1], tail[t])
                   for t in range(len(tail) - 1)):
                continue
            coeff = QPoly.q(i - 1, Fraction(1, _factorial(i)))
            head = word_poly((sum(x[0] for x in seq[:i]),)).scale(coeff)
            acc = acc + head * sigma_of(sum(tail, ()))
    return acc


@lru_cache(maxsize=None)
def dual_pbw_element(w):
    """Recursive dual element: divided stuffle powers over the Lyndon
    factorization, converse derivation trees on Lyndon words."""
    w = tuple(w)
    if not w:
        return NCPoly.one()
    if is_lyndon(w):
        if len(w) == 1:
            return word_poly(w)
        return sigma_lyndon_general(w, dual_pbw_element)
    return sigma_from_cfl(w, dual_pbw_element)


@lru_cache(maxsize=None)
def lyndon_stuffle_element(w):
    """Divided stuffle powers of the raw Lyndon factors of w ("chi")."""
    w = tuple(w)
    if not w:
        return NCPoly.one()
    acc = NCPoly.one()
    for factor, mult in cfl_grouped(w):
        acc = stuffle_poly(acc, stuffle_power_divided(word_poly(factor), mult))
    return acc


def chi_basis(n):
    entries = {(): NCPoly.one()}
    for w in all_words_up_to(n):
        entries[w] = lyndon_stuffle_element(w)
    basis = GradedBasis("chi", n, entries)
    basis.check_triangular()
    return basis


def xi_basis(n):
    """Dual of the chi family via triangular solve; Lyndon entries are
    primitive."""
    elements = {w: lyndon_stuffle_element(w) for w in all_words_up_to(n)}
    basis = GradedBasis("xi", n, _dual_by_triangular_solve(elements, n, "chi"))
    basis.check_triangular()
    return basis


def basis_by_kind(kind, n, sigma_method="oracle"):
    if kind == "pi":
        return pi_basis(n)
    if kind == "chi":
        return chi_basis(n)
    if kind == "xi":
        return xi_basis(n)
    if kind == "sigma":
        if sigma_method == "recursive":
            entries = {(): NCPoly.one()}
            for w in all_words_up_to(n):
                entries[w] = dual_pbw_element(w)
            basis = GradedBasis("sigma", n, entries)
            basis.check_triangular()
            return basis
        return dual_pbw_oracle(n)
    raise ValueError("unknown basis kind %r" % kind)


def verify_duality(n):
    """<dual(v) | pbw(u)> is 1 exactly when u = v, for weights <= n."""
    rep = Report("duality (N=%d)" % n)
    sigma = dual_pbw_oracle(n)
    for k in range(1, n + 1):
        bad = 0
        for u in words_of_weight(k):
            pu = pbw_element(u)
            for v in words_of_weight(k):
                expected = QPoly.one() if u == v else QPoly.zero()
                if sigma.entry(v).pairing(pu) != expected:
                    bad += 1
        rep.add("weight %d (%d pairs)" % (k, len(words_of_weight(k)) ** 2),
                bad == 0)
    cross_bad = cross_total = 0
    words = all_words_up_to(n)
    for u in words:
        for v in words:
            if weight(u) == weight(v):
                continue
            cross_total += 1
            if sigma.entry(v).pairing(pbw_element(u)):
                cross_bad += 1
    rep.add("cross-weight pairs vanish (%d pairs)" % cross_total,
            cross_bad == 0)
    return rep


def verify_primitivity(n):
    """Lyndon PBW elements and projected words are primitive up to n."""
    rep = Report("primitivity (N=%d)" % n)
    from .eulerian import primitive_projector
    lyndons = lyndon_up_to(n)
    bad = [l for l in lyndons if not is_primitive(pbw_element(l), n)]
    rep.add("pbw elements of Lyndon words (%d)" % len(lyndons), not bad,
            "failures: %s" % [word_to_str(l) for l in bad] if bad else "")
    words = all_words_up_to(n)
    bad = [w for w in words if not is_primitive(primitive_projector(w), n)]
    rep.add("projected words (%d)" % len(words), not bad,
            "failures: %s" % [word_to_str(w) for w in bad] if bad else "")
    return rep


def _exp_tensor(t, bound):
    """Exponential in the mixed tensor algebra (stuffle left, conc right)."""
    acc = Tensor2.one()
    power = Tensor2.one()
    k = 1
    while True:
        power = power.combine(t, left_mul=stuffle, max_total=bound)
        if not power:
            break
        acc = acc + power.scale(Fraction(1, _factorial(k)))
        k += 1
    return acc


def factorization_forms(n):
    """The three truncated expressions: the diagonal series, the dual-pair
    sum, and the decreasing product of exponentials over Lyndon words."""
    diag = diagonal_series(n)
    sigma = dual_pbw_oracle(n)
    mid = Tensor2.one()
    for w in all_words_up_to(n):
        mid = mid + tensor_outer(sigma.entry(w), pbw_element(w))
    bound = 2 * n
    prod = Tensor2.one()
    for l in sorted(lyndon_up_to(n), key=word_key, reverse=True):
        factor = _exp_tensor(tensor_outer(sigma.entry(l), pbw_element(l)),
                             bound)
        prod = prod.combine(factor, left_mul=stuffle, max_total=bound)
    return diag, mid, prod


def verify_factorization(n):
    rep = Report("factorization (N=%d)" % n)
    diag, mid, prod = factorization_forms(n)
    rep.add("dual-pair sum equals the diagonal series", mid == diag)
    rep.add("decreasing product of exponentials equals the diagonal series",
            prod == diag)
    return rep


def verify_methods(n):
    """Recursive dual elements against the triangular-solve oracle; any
    mismatch is reported (and is treated as a hard failure by callers)."""
    rep = Report("method equivalence (N=%d)" % n)
    sigma = dual_pbw_oracle(n)
    words = all_words_up_to(n)
    bad = []
    for w in words:
        if dual_pbw_element(w) != sigma.entry(w):
            bad.append(w)
    rep.add("recursive vs oracle (%d words)" % len(words), not bad,
            "mismatches: %s" % [word_to_str(w) for w in bad] if bad else "")
    increasing = [w for w in words
                  if is_lyndon(w)
                  and all(w[i] >= w[i + 1] for i in range(len(w) - 1))]
    bad = [w for w in increasing
           if sigma_increasing(w, dual_pbw_element) != sigma.entry(w)]
    rep.add("increasing-letter recursion vs oracle (%d words)"
            % len(increasing), not bad)
    return rep


def verify_lemma3(n, seed=20260810):
    """Pairings of stuffles of proper series with products of primitives:
    more stuffle factors than primitives pair to zero, and equal counts give
    the permanent of the pairing matrix."""
    rep = Report("primitive pairing lemma (N=%d)" % n)
    rng = random.Random(seed)
    lyndons = lyndon_up_to(n)
    sigma = dual_pbw_oracle(n)

    def random_proper():
        words = all_words_up_to(n)
        picks = rng.sample(words, k=min(3, len(words)))
        acc = NCPoly.zero()
        for w in picks:
            acc = acc + word_poly(w).scale(Fraction(rng.randint(1, 5)))
        return acc

    ok = True
    for _ in range(8):
        m = rng.randint(1, 2)
        prims = [pbw_element(rng.choice(lyndons)) for _ in range(m)]
        target = NCPoly.one()
        for p in prims:
            target = target * p
        series = [random_proper() for _ in range(m + 1)]
        prod = series[0]
        for s in series[1:]:
            prod = stuffle_poly(prod, s)
        if prod.pairing(target):
            ok = False
    rep.add("more stuffle factors than primitives pair to zero (8 samples)",
            ok)

    ok = True
    for _ in range(8):
        m = rng.randint(1, 2)
        prims = [pbw_element(rng.choice(lyndons)) for _ in range(m)]
        target = NCPoly.one()
        for p in prims:
            target = target * p
        series = [random_proper() for _ in range(m)]
        prod = series[0]
        for s in series[1:]:
            prod = stuffle_poly(prod, s)
        perm = QPoly.zero()
        for assignment in itertools.permutations(range(m)):
            term = QPoly.one()
            for i, j in enumerate(assignment):
                term = term * series[i].pairing(prims[j])
            perm = perm + term
        if prod.pairing(target) != perm:
            ok = False
    rep.add("equal counts give the permanent of the pairing matrix "
            "(8 samples)", ok)

    ok = True
    for u in all_words_up_to(min(n, 4)):
        grouped = cfl_grouped(u)
        factors = []
        for f, mult in grouped:
            factors.extend([f] * mult)
        prod = sigma.entry(factors[0])
        for f in factors[1:]:
            prod = stuffle_poly(prod, sigma.entry(f))
        for v in words_of_weight(weight(u)):
            vf = []
            for f, mult in cfl_grouped(v):
                vf.extend([f] * mult)
            if len(vf) != len(factors):
                continue
            target = NCPoly.one()
            for f in vf:
                target = target * pbw_element(f)
            perm = QPoly.zero()
            for assignment in itertools.permutations(range(len(factors))):
                term = QPoly.one()
                for i, j in enumerate(assignment):
                    term = term * (QPoly.one()
                                   if factors[i] == vf[j] else QPoly.zero())
                perm = perm + term
            if prod.pairing(target) != perm:
                ok = False
    rep.add("dual elements instantiate the permanent formula", ok)
    return rep

"""Free associative algebra with confluent rewriting to PBW normal form.

Generators are triples (level, row, col); native tuple comparison gives the
canonical (level, row, col) lexicographic order, and signed indices order
naturally as integers.  A pluggable commutation rule supplies the commutator
of two generators as a normal-ordered correction; two rules are provided:

* YangianRule — [T_ij^(p), T_kl^(q)] =
      sum_{r=1}^{min(p,q)} (T_kj^(r-1) T_il^(p+q-r) - T_kj^(p+q-r) T_il^(r-1)),
  with the level-0 symbol T^(0)_ab = delta_ab folded into scalars;
* GlRule — enveloping algebra of gl, [E_ij, E_kl] = d_jk E_il - d_li E_kj,
  every generator at level 1;
* FreeRule — no rewriting at all (plain words), used for formal S-words.

Elements are sparse dicts {monomial tuple: rational}; monomials of an
element under a commuting rule are always non-decreasing tuples of
generators.
"""
from __future__ import annotations

from .indices import IndexSet
from .rationals import ONE, Q, ZERO


class CommutationRule:
    """Base class: caches generator brackets and monomial-times-generator
    products, which dominate the cost of normal ordering."""

    orders = True  # whether monomials get sorted (False for the free rule)

    def __init__(self, index_set: IndexSet):
        self.index_set = index_set
        self._bracket_cache: dict = {}
        self._mtg_cache: dict = {}

    # -- generator construction -------------------------------------------

    def gen(self, row: int, col: int, level: int = 1) -> tuple:
        self.index_set.check(row)
        self.index_set.check(col)
        if level < 1:
            raise ValueError("generator level must be >= 1")
        return (level, row, col)

    def element(self, row: int, col: int, level: int = 1) -> "AlgebraElement":
        return AlgebraElement(self, {(self.gen(row, col, level),): ONE})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(): ONE})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    # -- rule-specific data -------------------------------------------------

    def raw_bracket(self, a: tuple, b: tuple):
        """[a, b] as a list of (coefficient, word) with words possibly
        unordered; scalar delta factors already folded."""
        raise NotImplementedError

    # -- normal ordering ----------------------------------------------------

    def bracket_terms(self, a: tuple, b: tuple) -> dict:
        """Normal form of the commutator [a, b] as {monomial: coeff}."""
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        acc: dict = {}
        for coeff, word in self.raw_bracket(a, b):
            for m, c in self.order_word(word).items():
                v = acc.get(m, ZERO) + coeff * c
                if v:
                    acc[m] = v
                elif m in acc:
                    del acc[m]
        self._bracket_cache[key] = acc
        self._bracket_cache[(b, a)] = {m: -c for m, c in acc.items()}
        return acc

    def mono_times_gen(self, m: tuple, g: tuple) -> dict:
        """Normal form of (normal monomial m) * (generator g)."""
        if not self.orders or not m or m[-1] <= g:
            return {m + (g,): ONE}
        key = (m, g)
        hit = self._mtg_cache.get(key)
        if hit is not None:
            return hit
        head, a = m[:-1], m[-1]
        acc: dict = {}
        # m*g = (head*g)*a + head*[a, g]
        for m1, c1 in self.mono_times_gen(head, g).items():
            for m2, c2 in self.mono_times_gen(m1, a).items():
                v = acc.get(m2, ZERO) + c1 * c2
                if v:
                    acc[m2] = v
                elif m2 in acc:
                    del acc[m2]
        for mb, cb in self.bracket_terms(a, g).items():
            for m2, c2 in self.mono_times_mono(head, mb).items():
                v = acc.get(m2, ZERO) + cb * c2
                if v:
                    acc[m2] = v
                elif m2 in acc:
                    del acc[m2]
        self._mtg_cache[key] = acc
        return acc

    def mono_times_mono(self, m1: tuple, m2: tuple) -> dict:
        acc = {m1: ONE}
        for g in m2:
            nxt: dict = {}
            for m, c in acc.items():
                for mm, cc in self.mono_times_gen(m, g).items():
                    v = nxt.get(mm, ZERO) + c * cc
                    if v:
                        nxt[mm] = v
                    elif mm in nxt:
                        del nxt[mm]
            acc = nxt
        return acc

    def order_word(self, word: tuple) -> dict:
        return self.mono_times_mono((), word)


class YangianRule(CommutationRule):
    """Defining commutation relations of the Yangian of gl_N."""

    def raw_bracket(self, a, b):
        (p, i, j), (q, k, l) = a, b
        out = []
        for r in range(1, min(p, q) + 1):
            out += self._pair(k, j, r - 1, i, l, p + q - r, ONE)
            out += self._pair(k, j, p + q - r, i, l, r - 1, -ONE)
        return out

    def _pair(self, k, j, s, i, l, t, sign):
        # T_kj^(s) T_il^(t) with T^(0)_ab = delta_ab folded in
        if s == 0 and t == 0:
            return [(sign, ())] if (k == j and i == l) else []
        if s == 0:
            return [(sign, ((t, i, l),))] if k == j else []
        if t == 0:
            return [(sign, ((s, k, j),))] if i == l else []
        return [(sign, ((s, k, j), (t, i, l)))]


class GlRule(CommutationRule):
    """Enveloping algebra of gl: [E_ij, E_kl] = d_jk E_il - d_li E_kj."""

    def gen(self, row, col, level=1):
        if level != 1:
            raise ValueError("gl generators live at level 1")
        return super().gen(row, col, 1)

    def raw_bracket(self, a, b):
        (_, i, j), (_, k, l) = a, b
        out = []
        if j == k:
            out.append((ONE, ((1, i, l),)))
        if l == i:
            out.append((-ONE, ((1, k, j),)))
        return out


class FreeRule(CommutationRule):
    """No rewriting: words multiply by concatenation (formal S-words)."""

    orders = False

    def raw_bracket(self, a, b):
        raise ValueError("the free rule has no commutation data")


class AlgebraElement:
    """Noncommutative polynomial in PBW normal form: {monomial: rational}."""

    __slots__ = ("rule", "terms")

    def __init__(self, rule: CommutationRule, terms: dict):
        self.rule = rule
        self.terms = {m: Q(c) for m, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.rule is not other.rule:
            raise ValueError("elements under different commutation rules")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement(self.rule, {(): Q(other)})
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = acc.get(m, ZERO) + c
            if v:
                acc[m] = v
            elif m in acc:
                del acc[m]
        return AlgebraElement(self.rule, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.rule, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, AlgebraElement) else -Q(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            c = Q(other)
            return AlgebraElement(self.rule, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        rule = self.rule
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in rule.mono_times_mono(m1, m2).items():
                    v = acc.get(m, ZERO) + c12 * c
                    if v:
                        acc[m] = v
                    elif m in acc:
                        del acc[m]
        return AlgebraElement(rule, acc)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.rule is other.rule and self.terms == other.terms
        return self.terms == ({(): Q(other)} if other else {})

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            word = "*".join(f"g[{r},{i},{j}]" for (r, i, j) in m) or "1"
            bits.append(f"({self.terms[m]})*{word}")
        return " + ".join(bits)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Normal form of ab - ba."""
    if a.rule is not b.rule:
        raise ValueError("elements under different commutation rules")
    return a * b - b * a


def monomial_degree(m: tuple) -> int:
    return sum(g[0] for g in m)


def filtration_degree(a: AlgebraElement) -> int:
    """Max over monomials of the total generator level."""
    if a.is_zero():
        raise ValueError("the zero element has no filtration degree")
    return max(monomial_degree(m) for m in a.terms)


def _inversions(word: tuple) -> int:
    return sum(
        1 for i in range(len(word)) for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def normal_order(word, rule: CommutationRule, coeff=ONE, strategy: str = "left",
                 trace: list | None = None) -> AlgebraElement:
    """Rewrite a word of generators into PBW normal form.

    Independent of the two reduction strategies ('left' resolves the
    leftmost adjacent inversion first, 'right' the rightmost); this is the
    confluence property the cached engine relies on.  When `trace` is a
    list, every rewrite step appends ((degree, inversions) before, after)
    and the strict lexicographic decrease is asserted.
    """
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    word = tuple(word)
    for g in word:
        rule.gen(g[1], g[2], g[0])  # validates indices and level
    pending = [(Q(coeff), word)]
    done: dict = {}
    while pending:
        c, w = pending.pop()
        spots = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not spots:
            v = done.get(w, ZERO) + c
            if v:
                done[w] = v
            elif w in done:
                del done[w]
            continue
        pos = spots[0] if strategy == "left" else spots[-1]
        a, b = w[pos], w[pos + 1]
        pre, suf = w[:pos], w[pos + 2:]
        before = (monomial_degree(w), _inversions(w))
        outs = [(c, pre + (b, a) + suf)]
        for mb, cb in rule.bracket_terms(a, b).items():
            outs.append((c * cb, pre + mb + suf))
        for cc, ww in outs:
            after = (monomial_degree(ww), _inversions(ww))
            if trace is not None:
                trace.append((before, after))
                assert after < before, "rewrite step failed to decrease"
            pending.append((cc, ww))
    return AlgebraElement(rule, done)


def symbol(a: AlgebraElement, d: int, context=None):
    """Image of a degree-<=d element in the degree-d graded component.

    Monomials of total level d map to products of commuting variables
    indexed like the generators; strictly lower monomials map to zero.
    """
    from .poisson import PoissonContext, PoissonPoly

    if context is None:
        context = PoissonContext("plain", a.rule.index_set, max(d, 1))
    terms = {}
    for m, c in a.terms.items():
        deg = monomial_degree(m)
        if deg > d:
            raise ValueError("filtration degree exceeds the requested grade")
        if deg == d:
            key = tuple(sorted(m))
            terms[key] = terms.get(key, ZERO) + c
    return PoissonPoly(context, terms)


def serialize_element(a: AlgebraElement) -> dict:
    """JSON-ready encoding: terms as [[row, col, level], ...] word arrays
    with "p/q" coefficients, in sorted monomial order."""
    from .rationals import format_rat

    return {
        "terms": [
            {"word": [[i, j, r] for (r, i, j) in m], "coeff": format_rat(c)}
            for m, c in sorted(a.terms.items())
        ]
    }


def deserialize_element(data: dict, rule: CommutationRule) -> AlgebraElement:
    from .rationals import parse_rat

    terms = {}
    for row in data["terms"]:
        m = tuple((r, i, j) for (i, j, r) in row["word"])
        terms[m] = parse_rat(row["coeff"])
    return AlgebraElement(rule, terms)

"""Degree-graded rewriting engine for finitely presented algebras.

Relations are oriented into rules lhs -> rhs where lhs is the graded-lex
leading word and every rhs word is strictly smaller; with that shape a
reduction step never raises the degree, so reduction terminates on its
own.  Completion examines every overlap and inclusion ambiguity between
rule left sides up to a degree cap, adds the oriented residuals that do
not already reduce to zero, and records the examined ambiguities as a
certificate.  When no ambiguity was skipped the system is marked closed:
the final rule set has the diamond property everywhere, so normal forms
of arbitrary degree are well defined and unique.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import scalars as sc
from .errors import (
    AlgebraMismatch,
    DegreeCapExceeded,
    NonTerminating,
    NotOrientable,
)
from .ncalg import Algebra, FreePoly, Word, all_words, substitute_poly


@dataclass(frozen=True)
class MonomialOrder:
    """Graded lexicographic order from a generator precedence.

    By default the precedence is the algebra's own generator order
    (lowest first); pass an explicit permutation of generator names to
    experiment with other orientations.
    """

    alg: Algebra
    precedence: tuple = None

    def __post_init__(self):
        if self.precedence is not None:
            names = tuple(self.precedence)
            if sorted(names) != sorted(self.alg.gens):
                raise ValueError("precedence must permute the generator names")
            ranks = [0] * len(names)
            for rank, name in enumerate(names):
                ranks[self.alg.index(name)] = rank
            object.__setattr__(self, "_ranks", tuple(ranks))
        else:
            object.__setattr__(self, "_ranks", None)

    def key(self, word: Word):
        r = self._ranks
        if r is None:
            return (len(word), word)
        return (len(word), tuple(r[g] for g in word))

    def leading(self, p: FreePoly):
        """(word, coeff) of the largest term of a nonzero polynomial."""
        w = max(p.terms, key=self.key)
        return w, p.terms[w]


def deglex(alg: Algebra) -> MonomialOrder:
    return MonomialOrder(alg)


@dataclass(frozen=True)
class RewriteRule:
    """Monic oriented rule: the word lhs rewrites to the polynomial rhs."""

    lhs: Word
    rhs: FreePoly

    def poly(self) -> FreePoly:
        """The relation lhs - rhs this rule encodes."""
        return FreePoly.from_word(self.rhs.alg, self.lhs) - self.rhs


def orient(order: MonomialOrder, relation: FreePoly, lhs: Word = None) -> RewriteRule:
    """Turn a nonzero relation into a monic rule at its leading word.

    An explicit lhs may be suggested; it is rejected (NotOrientable) when
    some other word of the relation would not decrease under the order.
    """
    if relation.is_zero():
        raise ValueError("cannot orient the zero relation")
    lead, lc = order.leading(relation)
    if lhs is None:
        lhs = lead
    elif tuple(lhs) != lead:
        if tuple(lhs) not in relation.terms:
            raise NotOrientable(f"suggested lhs {lhs} does not occur in the relation")
        raise NotOrientable(
            f"word {relation.alg.render_word(lead)} exceeds the suggested lhs"
        )
    if not lhs:
        raise NotOrientable("relation is a nonzero constant (inconsistent system)")
    rest = FreePoly(relation.alg, {w: c for w, c in relation.terms.items() if w != lhs})
    return RewriteRule(tuple(lhs), (-rest).scale(sc.ONE / lc))


@dataclass(frozen=True)
class Ambiguity:
    """One critical situation between two rules: their left sides meet
    inside overlap_word (right rule entering at offset)."""

    left_lhs: Word
    right_lhs: Word
    overlap_word: Word
    offset: int
    kind: str  # "overlap" or "inclusion"
    resolved: bool = False
    residual: str = "0"


class RewriteSystem:
    """An oriented rule set with memoized normal forms."""

    def __init__(self, order: MonomialOrder, rules, completed_through=0, closed=False):
        self.order = order
        self.alg = order.alg
        self.rules = sorted(rules, key=lambda r: order.key(r.lhs))
        self._by_lhs = {r.lhs: r for r in self.rules}
        if len(self._by_lhs) != len(self.rules):
            raise ValueError("duplicate rule left sides")
        self._lengths = sorted({len(r.lhs) for r in self.rules})
        self._memo = {}
        self.completed_through = completed_through
        self.closed = closed
        self.certificate: list[Ambiguity] = []
        self.relations: list[FreePoly] = []

    # -- matching ----------------------------------------------------

    def find_redex(self, word: Word):
        """Leftmost, shortest match of a rule left side inside word."""
        by_lhs = self._by_lhs
        n = len(word)
        for pos in range(n):
            for L in self._lengths:
                if pos + L > n:
                    break
                rule = by_lhs.get(word[pos : pos + L])
                if rule is not None:
                    return pos, rule
        return None

    def is_normal(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def normal_words(self, max_degree: int):
        for w in all_words(self.alg, max_degree):
            if self.is_normal(w):
                yield w

    # -- reduction ---------------------------------------------------

    def nf_word(self, word: Word) -> FreePoly:
        """Normal form of a single word, memoized bottom-up."""
        memo = self._memo
        cached = memo.get(word)
        if cached is not None:
            return cached
        stack = [word]
        while stack:
            w = stack[-1]
            if w in memo:
                stack.pop()
                continue
            hit = self.find_redex(w)
            if hit is None:
                memo[w] = FreePoly.from_word(self.alg, w)
                stack.pop()
                continue
            pos, rule = hit
            head, tail = w[:pos], w[pos + len(rule.lhs) :]
            children = [head + u + tail for u in rule.rhs.terms]
            pending = [u for u in children if u not in memo]
            if pending:
                stack.extend(pending)
                continue
            acc = FreePoly.zero(self.alg)
            for u, c in rule.rhs.terms.items():
                acc = acc + memo[head + u + tail].scale(c)
            memo[w] = acc
            stack.pop()
        return memo[word]

    def normal_form(self, p: FreePoly) -> FreePoly:
        if p.alg is not self.alg:
            raise AlgebraMismatch(f"polynomial over {p.alg.id}, system over {self.alg.id}")
        if not self.closed and p.degree() > self.completed_through:
            raise DegreeCapExceeded(
                f"degree {p.degree()} input, system only completed through "
                f"{self.completed_through} and not closed"
            )
        out = FreePoly.zero(self.alg)
        for w, c in p.terms.items():
            out = out + self.nf_word(w).scale(c)
        return out

    def reduces_to_zero(self, p: FreePoly) -> bool:
        return self.normal_form(p).is_zero()

    def clear_cache(self):
        self._memo = {}

    def reduce_with_trace(self, p: FreePoly):
        """Slow single-step reduction that records its ideal bookkeeping.

        Returns (nf, steps) where steps is a list of (coeff, left word,
        rule, right word) and p - nf equals the sum of
        coeff * left * (lhs - rhs) * right expanded in the free algebra.
        """
        steps = []
        cur = p
        while True:
            target = None
            for w, c in sorted(
                cur.terms.items(), key=lambda t: self.order.key(t[0]), reverse=True
            ):
                hit = self.find_redex(w)
                if hit is not None:
                    target = (w, c, hit)
                    break
            if target is None:
                return cur, steps
            w, c, (pos, rule) = target
            head, tail = w[:pos], w[pos + len(rule.lhs) :]
            replaced = (
                FreePoly.from_word(self.alg, head)
                * rule.rhs
                * FreePoly.from_word(self.alg, tail)
            )
            cur = cur - FreePoly.from_word(self.alg, w, c) + replaced.scale(c)
            steps.append((c, head, rule, tail))

    # -- certificates ------------------------------------------------

    def verify_certificate(self) -> bool:
        """Recheck the recorded ambiguities against the current rules and
        confirm they cover everything the degree cap admits."""
        want = {
            (a.left_lhs, a.right_lhs, a.offset): a
            for a in enumerate_ambiguities(self.rules)
            if len(a.overlap_word) <= self.completed_through
        }
        have = {(a.left_lhs, a.right_lhs, a.offset): a for a in self.certificate}
        if set(want) != set(have):
            return False
        for key, amb in want.items():
            if self._ambiguity_resolves(amb) is not None:
                return False
            if not have[key].resolved:
                return False
        return True

    def _ambiguity_resolves(self, amb: Ambiguity) -> FreePoly | None:
        left = self._by_lhs[amb.left_lhs]
        right = self._by_lhs[amb.right_lhs]
        w = amb.overlap_word
        head = FreePoly.from_word(self.alg, w[: amb.offset])
        tail_l = FreePoly.from_word(self.alg, w[len(left.lhs) :])
        tail_r = FreePoly.from_word(self.alg, w[amb.offset + len(right.lhs) :])
        branch_l = left.rhs * tail_l
        branch_r = head * right.rhs * tail_r
        residual = FreePoly.zero(self.alg)
        for q, c in (branch_l - branch_r).terms.items():
            residual = residual + self.nf_word(q).scale(c)
        return residual if not residual.is_zero() else None


def enumerate_ambiguities(rules):
    """All overlap and inclusion ambiguities among the rule left sides,
    deterministically ordered.  The left rule always matches at offset 0
    of overlap_word; the right rule enters at offset > 0 (overlap) or
    sits strictly inside (inclusion)."""
    rules = sorted(rules, key=lambda r: (len(r.lhs), r.lhs))
    out = []
    for ri in rules:
        a = ri.lhs
        for rj in rules:
            b = rj.lhs
            for off in range(1, len(a)):
                if off + len(b) <= len(a):
                    if a[off : off + len(b)] == b:
                        out.append(Ambiguity(a, b, a, off, "inclusion"))
                else:
                    t = len(a) - off
                    if a[off:] == b[:t]:
                        out.append(Ambiguity(a, b, a + b[t:], off, "overlap"))
    return out


def _monic(order: MonomialOrder, p: FreePoly) -> FreePoly:
    _, lc = order.leading(p)
    return p.scale(sc.ONE / lc)


def interreduce(order: MonomialOrder, relations, max_rounds: int = 200) -> list:
    """Reduce each relation by the others until stable; returns monic
    rules with pairwise irreducible left sides."""
    polys = [_monic(order, p) for p in relations if not p.is_zero()]
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_rounds:
            raise NonTerminating(f"interreduction did not stabilize over {order.alg.id}")
        seen = set()
        unique = []
        for p in polys:
            key = frozenset(p.terms.items())
            if key not in seen:
                seen.add(key)
                unique.append(p)
        polys = unique
        stable = True
        for i in range(len(polys)):
            if polys[i].is_zero():
                continue
            others = []
            taken = set()
            for j, q in enumerate(polys):
                if j == i or q.is_zero():
                    continue
                rule = orient(order, q)
                if rule.lhs not in taken:
                    taken.add(rule.lhs)
                    others.append(rule)
            sys_i = RewriteSystem(order, others, closed=True)
            red = sys_i.normal_form(polys[i])
            if red != polys[i]:
                stable = False
                polys[i] = _monic(order, red) if not red.is_zero() else red
        polys = [p for p in polys if not p.is_zero()]
        if stable:
            return [orient(order, p) for p in polys]


def complete(
    order: MonomialOrder,
    relations,
    max_degree: int = 6,
    max_rules: int = 128,
) -> RewriteSystem:
    """Knuth-Bendix style completion under a degree cap.

    Residuals of unresolved ambiguities are adjoined as rules and the set
    is re-interreduced until every examinable ambiguity resolves.  The
    returned system carries the certificate; closed means nothing was
    skipped for degree, which makes the diamond property global.
    """
    relations = list(relations)
    rules = interreduce(order, relations)
    while True:
        sys = RewriteSystem(order, rules, completed_through=max_degree, closed=True)
        record = []
        fresh = []
        skipped = False
        for amb in enumerate_ambiguities(rules):
            if len(amb.overlap_word) > max_degree:
                skipped = True
                continue
            residual = sys._ambiguity_resolves(amb)
            if residual is None:
                record.append(
                    Ambiguity(
                        amb.left_lhs, amb.right_lhs, amb.overlap_word, amb.offset,
                        amb.kind, resolved=True,
                    )
                )
            else:
                fresh.append(residual)
        if fresh:
            if len(rules) + len(fresh) > max_rules:
                raise NonTerminating(
                    f"completion exceeded {max_rules} rules over {order.alg.id}"
                )
            rules = interreduce(order, [r.poly() for r in rules] + fresh)
            continue
        sys.certificate = record
        sys.closed = not skipped
        sys.relations = relations
        return sys


def specialize(system: RewriteSystem, bindings, max_degree=None) -> RewriteSystem:
    """Re-complete the original presentation under a parameter binding."""
    subbed = []
    for p in system.relations:
        q = substitute_poly(p, bindings)
        if not q.is_zero():
            subbed.append(q)
    return complete(
        system.order,
        subbed,
        max_degree=max_degree if max_degree is not None else system.completed_through,
    )

"""Fox calculus over free groups and exact group-ring arithmetic.

The fundamental group of a diagram is presented on the beta-curve duals with
one relation per closed alpha curve.  Its abelianization is computed by an
integer Smith normal form; group-ring elements are finitely supported integer
maps on the normal-form coordinates (free exponents first, then torsion
residues).  Determinants are taken by memoized Laplace expansion, which stays
valid over group rings with zero divisors.

Fox derivatives are computed by the closed occurrence formula

    dw/dx = sum_j m_j (A_j x^{-eps_j})

over the occurrences x^{m_j} in w, with A_j the prefix before the j-th
occurrence and eps_j = 0 for a positive, 1 for a negative occurrence.  The
recursive product rule lives in the test suite as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cyclotomic import CyclotomicScalar
from .diagram import FreeWord, alpha_word
from .errors import (GroupMismatchError, InvalidCharacterError,
                     NonSquareError, NotDivisibleError, UnknownGeneratorError)


# ---------------------------------------------------------------------------
# Fox derivative
# ---------------------------------------------------------------------------

def fox_derivative(word, gen):
    """List of (prefix word, sign): one signed word per occurrence of
    gen^{+-1}.  For a positive occurrence the word is the bare prefix; for a
    negative one the prefix times gen^{-1}."""
    out = []
    for j, (g, e) in enumerate(word.letters):
        if g != gen:
            continue
        if e == 1:
            out.append((FreeWord(word.letters[:j]), 1))
        else:
            out.append((FreeWord(word.letters[:j + 1]), -1))
    return out


def augmentation(word_terms):
    """Augmentation of a signed-word list (or of a FreeWord, which is 1)."""
    if isinstance(word_terms, FreeWord):
        return 1
    return sum(s for _, s in word_terms)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(rows, ncols):
    """Return (diag, V, Vinv) with U*R*V = D for unimodular U, V.

    Only the column transform is kept: V maps original coordinates to
    normal-form coordinates (x -> x V), and Vinv sections them back.
    ``diag`` lists the invariant factors d_1 | d_2 | ... (zeros trimmed).
    """
    m = len(rows)
    n = ncols
    a = [list(r) + [0] * (n - len(r)) for r in rows]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op(j, k, q):
        # col_k -= q * col_j  on a and v;  row_j += q * row_k on vinv
        for r in a:
            r[k] -= q * r[j]
        for r in v:
            r[k] -= q * r[j]
        for t in range(n):
            vinv[j][t] += q * vinv[k][t]

    def col_swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    def col_neg(j):
        for r in a:
            r[j] = -r[j]
        for r in v:
            r[j] = -r[j]
        for t in range(n):
            vinv[j][t] = -vinv[j][t]

    def row_op(i, k, q):
        for t in range(n):
            a[k][t] -= q * a[i][t]

    t = 0
    while t < min(m, n):
        # find a pivot
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i, j = piv
        if i != t:
            a[t], a[i] = a[i], a[t]
        if j != t:
            col_swap(t, j)
        # clear row and column t
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(t, i, q)
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(t, j, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        if a[t][t] < 0:
            col_neg(t)
        t += 1

    # enforce the divisibility chain by 2x2 repairs
    rank = t
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            if a[i + 1][i + 1] % a[i][i] != 0:
                col_op(i + 1, i, -1)   # col_i += col_{i+1}
                while a[i][i + 1] or a[i + 1][i]:
                    if a[i + 1][i]:
                        q = a[i + 1][i] // a[i][i]
                        row_op(i, i + 1, q)
                        if a[i + 1][i]:
                            a[i], a[i + 1] = a[i + 1], a[i]
                    if a[i][i + 1]:
                        q = a[i][i + 1] // a[i][i]
                        col_op(i, i + 1, q)
                        if a[i][i + 1]:
                            col_swap(i, i + 1)
                if a[i][i] < 0:
                    col_neg(i)
                if a[i + 1][i + 1] < 0:
                    col_neg(i + 1)
                changed = True
    diag = [a[i][i] for i in range(rank) if a[i][i] != 0]
    return diag, v, vinv


# ---------------------------------------------------------------------------
# abelian groups and group rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/d_1 + ... in normal-form coordinates (free part first).

    ``gens`` are the generator tokens (beta-curve ids); ``projection`` sends
    a generator-exponent vector to normal form, ``section`` lifts a normal
    form back to a representative exponent vector.
    """

    gens: tuple
    rank: int
    torsion: tuple
    projection: tuple    # rows: one per gen, length rank + len(torsion)
    section: tuple       # rows: one per normal coordinate, length len(gens)

    @property
    def ncoords(self):
        return self.rank + len(self.torsion)

    def normalize(self, coords):
        out = list(coords)
        for k, d in enumerate(self.torsion):
            out[self.rank + k] %= d
        return tuple(out)

    def project(self, exponents):
        """Normal form of a generator-exponent vector."""
        coords = [0] * self.ncoords
        for g, e in zip(range(len(self.gens)), exponents):
            if e:
                for t in range(self.ncoords):
                    coords[t] += e * self.projection[g][t]
        return self.normalize(coords)

    def project_word(self, word):
        exps = [0] * len(self.gens)
        pos = {g: i for i, g in enumerate(self.gens)}
        for g, e in word.letters:
            if g not in pos:
                raise UnknownGeneratorError(g)
            exps[pos[g]] += e
        return self.project(exps)

    def lift(self, coords):
        """A representative generator-exponent vector of a normal form."""
        out = [0] * len(self.gens)
        for t, c in enumerate(coords):
            if c:
                for g in range(len(self.gens)):
                    out[g] += c * self.section[t][g]
        return tuple(out)

    def identity(self):
        return tuple([0] * self.ncoords)

    def same_shape(self, other):
        return self.rank == other.rank and self.torsion == other.torsion


def presented_group(gens, relation_rows):
    """The abelian group on the given generators modulo the relation rows,
    in Smith normal form (free coordinates first, then torsion)."""
    n = len(gens)
    diag_factors, v, vinv = smith_normal_form(relation_rows, n)
    free_cols = list(range(len(diag_factors), n))
    torsion_cols = [k for k, d in enumerate(diag_factors) if d > 1]
    torsion = tuple(diag_factors[k] for k in torsion_cols)
    keep = free_cols + torsion_cols
    projection = tuple(tuple(v[g][c] for c in keep) for g in range(n))
    section = tuple(tuple(vinv[c][g] for g in range(n)) for c in keep)
    return AbelianGroup(tuple(gens), len(free_cols), torsion,
                        projection, section)


def homology(diag):
    """H_1 presented on the beta duals with one relation per closed alpha."""
    gens = diag.beta_generators()
    pos = {g: i for i, g in enumerate(gens)}
    rows = []
    for c in diag.closed_alphas:
        row = [0] * len(gens)
        for g, e in alpha_word(diag, c.id).letters:
            row[pos[g]] += e
        rows.append(row)
    return presented_group(gens, rows)


class GroupRingElement:
    """Finitely supported integer combination of group elements in normal
    form.  Immutable once built; zero coefficients are never stored."""

    __slots__ = ("group", "terms")

    def __init__(self, group, terms=None):
        self.group = group
        clean = {}
        for k, c in (terms or {}).items():
            if c:
                kk = group.normalize(k)
                clean[kk] = clean.get(kk, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def zero(cls, group):
        return cls(group, {})

    @classmethod
    def one(cls, group):
        return cls(group, {group.identity(): 1})

    @classmethod
    def monomial(cls, group, coords, coeff=1):
        return cls(group, {tuple(coords): coeff})

    def _check(self, other):
        if self.group is not other.group and not (
                self.group.same_shape(other.group)
                and self.group.gens == other.group.gens):
            raise GroupMismatchError("elements live in different groups")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return GroupRingElement(self.group, terms)

    def __neg__(self):
        return GroupRingElement(self.group,
                                {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(
                self.group, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                k = self.group.normalize(k)
                out[k] = out.get(k, 0) + c1 * c2
        return GroupRingElement(self.group, out)

    __rmul__ = __mul__

    def translate(self, coords, sign=1):
        out = {}
        for k, c in self.terms.items():
            kk = self.group.normalize(
                tuple(a + b for a, b in zip(k, coords)))
            out[kk] = out.get(kk, 0) + sign * c
        return GroupRingElement(self.group, out)

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement)
                and self.group.same_shape(other.group)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def augmentation(self):
        return sum(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        return render_group_ring(self)

    __repr__ = __str__


def abelianize(word_or_terms, group):
    """Image in Z[H_1] of a FreeWord (a single monomial) or of a signed-word
    list as produced by :func:`fox_derivative`."""
    if isinstance(word_or_terms, FreeWord):
        return GroupRingElement.monomial(
            group, group.project_word(word_or_terms))
    out = GroupRingElement.zero(group)
    for word, sign in word_or_terms:
        out = out + GroupRingElement.monomial(
            group, group.project_word(word), sign)
    return out


def render_group_ring(el):
    """Deterministic text form.  Single-generator groups use the variable
    ``t``; otherwise free generators are t1, t2, ... and torsion generators
    s1, s2, ... with torsion exponents bracketed."""
    g = el.group
    single = g.ncoords == 1
    if not el.terms:
        return "0"
    parts = []
    for key, coeff in el.sorted_terms():
        frees = []
        for i in range(g.rank):
            e = key[i]
            if e:
                nm = "t" if single else f"t{i + 1}"
                frees.append(nm if e == 1 else f"{nm}^{e}")
        tors = []
        for k in range(len(g.torsion)):
            e = key[g.rank + k]
            if e:
                nm = "t" if single else f"s{k + 1}"
                piece = nm if e == 1 else f"{nm}^{e}"
                tors.append(piece if single else f"[{piece}]")
        mono = " ".join(frees + tors)
        if not mono:
            body = f"{abs(coeff)}"
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{abs(coeff)} {mono}"
        parts.append(("-" if coeff < 0 else "+", body))
    sign, first = parts[0]
    text = ("-" if sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# Fox matrix, determinant, multipoint expansion
# ---------------------------------------------------------------------------

def fox_matrix(diag, group=None):
    """Matrix of abelianized Fox derivatives: rows the closed alpha words,
    columns the closed beta duals, entries in Z[H_1]."""
    group = group or homology(diag)
    rows = []
    for a in diag.closed_alphas:
        w = alpha_word(diag, a.id)
        row = [abelianize(fox_derivative(w, b.id), group)
               for b in diag.closed_betas]
        rows.append(row)
    return rows


def determinant(mat):
    """Laplace expansion with memoized minors; valid over any commutative
    ring (group rings with torsion have zero divisors, so no elimination)."""
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise NonSquareError(f"{len(row)} columns in a {n}-row matrix")
    if n == 0:
        raise NonSquareError("empty matrix has no ring context here")
    group = mat[0][0].group
    memo = {}

    def minor(row, cols):
        if not cols:
            return GroupRingElement.one(group)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = GroupRingElement.zero(group)
        for t, j in enumerate(cols):
            sub = minor(row + 1, cols[:t] + cols[t + 1:])
            term = mat[row][j] * sub
            acc = acc + (term if t % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def fox_determinant(diag, group=None):
    """det of the Fox matrix; the empty (d = 0) determinant is 1."""
    group = group or homology(diag)
    if not diag.closed_alphas:
        return GroupRingElement.one(group)
    return determinant(fox_matrix(diag, group))


def multipoint_expansion(diag, group=None):
    """Sum over multipoints of sign times the abelianized prefix product.

    The prefix of a pick runs from the curve's basepoint up to the pick's
    own basepoint: the pick letter itself is excluded at a positive pick and
    included at a negative one.
    """
    from .diagram import enumerate_multipoints, multipoint_sign
    group = group or homology(diag)
    xmap = {x.id: x for x in diag.crossings}
    total = GroupRingElement.zero(group)
    for mp in enumerate_multipoints(diag):
        exps = [0] * len(group.gens)
        pos = {g: i for i, g in enumerate(group.gens)}
        for xid in mp.picks:
            x = xmap[xid]
            order = diag.curve(x.alpha).order
            upto = order.index(xid) + (0 if x.sign > 0 else 1)
            for t in range(upto):
                y = xmap[order[t]]
                exps[pos[y.beta]] += y.sign
        total = total + GroupRingElement.monomial(
            group, group.project(exps), multipoint_sign(diag, mp))
    return total


# ---------------------------------------------------------------------------
# characters and evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """A homomorphism H_1 -> Z/N given by exponents on the normal-form
    generators; torsion generators must satisfy d_k * e_k = 0 mod N."""

    group: AbelianGroup
    order: int
    exps: tuple

    def __post_init__(self):
        if len(self.exps) != self.group.ncoords:
            raise InvalidCharacterError(
                f"{len(self.exps)} exponents for {self.group.ncoords} "
                "generators")
        for k, d in enumerate(self.group.torsion):
            if (self.exps[self.group.rank + k] * d) % self.order != 0:
                raise InvalidCharacterError(
                    f"torsion generator {k} of order {d} mapped to "
                    f"exponent {self.exps[self.group.rank + k]} mod "
                    f"{self.order}")

    def exponent(self, coords):
        return sum(e * c for e, c in zip(self.exps, coords)) % self.order

    def on_generator(self, gen):
        """Exponent assigned to a beta-dual generator."""
        i = self.group.gens.index(gen)
        return self.exponent(self.group.project(
            [1 if t == i else 0 for t in range(len(self.group.gens))]))

    def is_trivial(self):
        return all(e % self.order == 0 for e in self.exps)


def all_characters(group, order):
    """Every character of the group into Z/order, deterministic order."""
    choices = []
    for _ in range(group.rank):
        choices.append(range(order))
    for d in group.torsion:
        step = order // _gcd(d, order)
        choices.append(range(0, order, step))
    out = []
    for exps in itertools.product(*choices):
        out.append(Character(group, order, tuple(exps)))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def evaluate(el, chi):
    """Ring-homomorphic evaluation of a group-ring element into the
    cyclotomic ring of the character's order."""
    if not el.group.same_shape(chi.group):
        raise GroupMismatchError("character on a different group")
    out = CyclotomicScalar.zero(chi.order)
    for key, coeff in el.sorted_terms():
        out = out + coeff * CyclotomicScalar.root_power(
            chi.exponent(key), chi.order)
    return out


# ---------------------------------------------------------------------------
# invariant classes (up to +- group element)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantClass:
    """A group-ring element modulo +-(group element), stored canonically."""

    representative: GroupRingElement

    @property
    def group(self):
        return self.representative.group

    def __str__(self):
        return str(self.representative)


def _free_shift(el):
    """Translate so the minimum exponent in each free coordinate is 0."""
    g = el.group
    if not el.terms:
        return el
    shift = [0] * g.ncoords
    for i in range(g.rank):
        shift[i] = -min(k[i] for k in el.terms)
    return el.translate(tuple(shift))


def canonical_class(el):
    """Among all +-g*el, fix the free translate by the minimum-exponent
    shift, then pick the torsion translate and sign whose flattened
    (key, coefficient) sequence is lexicographically extremal with a
    positive leading coefficient."""
    g = el.group
    if el.is_zero():
        return InvariantClass(el)
    candidates = []
    torsion_ranges = [range(d) for d in g.torsion]
    for tshift in itertools.product(*torsion_ranges):
        coords = tuple([0] * g.rank + list(tshift))
        shifted = _free_shift(el.translate(coords))
        for sign in (1, -1):
            cand = shifted * sign
            flat = cand.sorted_terms()
            if flat[0][1] > 0:
                candidates.append((tuple(c for _, c in flat),
                                   tuple(k for k, _ in flat), cand))
    candidates.sort(key=lambda t: (t[0], t[1]), reverse=True)
    return InvariantClass(candidates[0][2])


def class_equal(a, b):
    if not a.group.same_shape(b.group):
        raise GroupMismatchError(
            f"rank/torsion ({a.group.rank}, {a.group.torsion}) vs "
            f"({b.group.rank}, {b.group.torsion})")
    return a.representative.terms == b.representative.terms


# ---------------------------------------------------------------------------
# exact division in the Laurent ring (torsion-free groups)
# ---------------------------------------------------------------------------

def divide_by_element_minus_one(el, g_coords):
    """Exact division by (g - 1) in Z[Z^rank] for an infinite-order group
    element g; NotDivisible on any remainder.  Verified by re-multiplication.

    Terms are consumed from the top of the linear functional v -> <g, v>,
    which strictly decreases, so the loop terminates once the leading value
    passes below the original support.
    """
    group = el.group
    if group.torsion:
        raise NotDivisibleError("division requires a torsion-free group")
    if all(c == 0 for c in g_coords):
        raise NotDivisibleError("meridian has finite order")
    if el.is_zero():
        return el

    def height(key):
        return sum(a * b for a, b in zip(g_coords, key))

    floor = min(height(k) for k in el.terms)
    work = dict(el.terms)
    quotient = {}
    while work:
        key = max(work, key=lambda k: (height(k),) + k)
        if height(key) < floor:
            raise NotDivisibleError("remainder after division")
        c = work.pop(key)
        low = tuple(a - b for a, b in zip(key, g_coords))
        # c*x^key = c*(x^g - 1)*x^low + c*x^low
        quotient[low] = quotient.get(low, 0) + c
        work[low] = work.get(low, 0) + c
        if work[low] == 0:
            del work[low]
    q = GroupRingElement(group, quotient)
    unit = GroupRingElement(group, {tuple(g_coords): 1,
                                    group.identity(): -1})
    if q * unit != el:
        raise NotDivisibleError("remainder after division")
    return q

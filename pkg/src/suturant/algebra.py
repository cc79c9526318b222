"""Finite-dimensional involutive Hopf superalgebras given by structure constants.

An algebra is presented by an integer basis: multiplication, comultiplication,
antipode and counit are sparse integer structure-constant tables, and every
axiom is checked exhaustively over basis tuples (dimensions stay small, at
most a few dozen).  Two families ship with the package:

* ``build_hn(n)`` -- the 2n-dimensional superalgebra on K, X with K^n = 1,
  X^2 = 0, |K| = 0, |X| = 1, together with its relative integral (onto the
  group-like span of K) and relative cointegral.  The cointegral is stored
  unnormalized, (1 + K + ... + K^{n-1})X, with the rational prefactor 1/n
  carried separately so all structure constants stay integral.
* ``build_cyclic_group_algebra(m)`` -- the group algebra of Z/m, purely even
  and unimodular, with integral "coefficient of the identity" and cointegral
  the sum of all group elements.

Elements are dicts ``{basis index: integer coefficient}``; tensors are dicts
keyed by index tuples.  The Koszul sign convention is
``tau(v (x) w) = (-1)^{|v||w|} w (x) v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .report import Report


def _add_term(d, key, coeff):
    if coeff == 0:
        return
    c = d.get(key, 0) + coeff
    if c:
        d[key] = c
    else:
        del d[key]


@dataclass(frozen=True)
class PresentedAlgebra:
    """A Hopf superalgebra presented by integer structure constants."""

    dim: int
    basis_labels: tuple
    parity: tuple
    mul_sc: dict          # (i, j) -> {k: c}   expansion of e_i * e_j
    comul_sc: dict        # i -> {(j, k): c}   expansion of Delta(e_i)
    antipode_sc: dict     # i -> {j: c}
    counit_vec: tuple
    unit_index: int
    coeff_modulus: int = 0   # 0 means coefficients in Z

    # -- elementwise operations -------------------------------------------

    def unit(self):
        return {self.unit_index: 1}

    def mul(self, x, y):
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, c in self.mul_sc.get((i, j), {}).items():
                    _add_term(out, k, ci * cj * c)
        return out

    def comul(self, x):
        out = {}
        for i, ci in x.items():
            for jk, c in self.comul_sc.get(i, {}).items():
                _add_term(out, jk, ci * c)
        return out

    def antipode(self, x):
        out = {}
        for i, ci in x.items():
            for j, c in self.antipode_sc.get(i, {}).items():
                _add_term(out, j, ci * c)
        return out

    def counit(self, x):
        return sum(c * self.counit_vec[i] for i, c in x.items())

    def elem_parity(self, x):
        """Parity of a homogeneous element; None for 0 or mixed."""
        ps = {self.parity[i] for i in x}
        if len(ps) == 1:
            return ps.pop()
        return None

    def label(self, i):
        return self.basis_labels[i]


@dataclass(frozen=True)
class RelativeIntegralData:
    """A relative right integral (B, i_B, pi_B, mu) with distinguished b.

    ``b_basis`` lists the H-basis indices spanning B; maps in and out of B
    use positions into that list.  ``b_dlog`` records the discrete log of
    each B-basis element with respect to the group-like ``b`` (character
    evaluation assumes B is the group algebra of the cyclic group <b>,
    which holds for every shipped package).
    """

    b_basis: tuple
    i_b: dict        # b_pos -> {h_idx: c}
    pi_b: dict       # h_idx -> {b_pos: c}
    mu: dict         # h_idx -> {b_pos: c}
    glike_b: int     # position of b in b_basis
    glike_b_order: int
    b_dlog: tuple
    mu_parity: int

    def apply(self, table, x):
        out = {}
        for i, ci in x.items():
            for j, c in table.get(i, {}).items():
                _add_term(out, j, ci * c)
        return out


@dataclass(frozen=True)
class RelativeCointegralData:
    """A relative right cointegral (A, pi_A, i_A, iota) with character a*.

    ``iota`` is stored with integer coefficients; ``iota_prefactor`` is the
    exact rational applied once per cointegral at contraction time.  The
    character a* is an exponent functional: a*(e_pos) = zeta^astar_exps[pos]
    in a cyclic group of order ``astar_order``.
    """

    a_basis: tuple
    pi_a: dict       # h_idx -> {a_pos: c}
    i_a: dict        # a_pos -> {h_idx: c}
    iota: dict       # a_pos -> {h_idx: c}
    astar_exps: tuple
    astar_order: int
    iota_prefactor: Fraction
    iota_parity: int

    def apply(self, table, x):
        out = {}
        for i, ci in x.items():
            for j, c in table.get(i, {}).items():
                _add_term(out, j, ci * c)
        return out

    @property
    def astar_trivial(self):
        return all(e % self.astar_order == 0 for e in self.astar_exps)


@dataclass(frozen=True)
class HopfPackage:
    algebra: PresentedAlgebra
    integral: RelativeIntegralData
    cointegral: RelativeCointegralData
    name: str


# ---------------------------------------------------------------------------
# shipped instances
# ---------------------------------------------------------------------------

def build_hn(n):
    """The 2n-dimensional quotient with basis K^i, K^i X for 0 <= i < n.

    Coproducts: Delta(K) = K (x) K and Delta(X) = K (x) X + X (x) 1;
    antipode S(X) = -K^{-1} X; relative integral mu(K^i X) = K^i,
    mu(K^i) = 0 with b = K; cointegral (1 + K + ... + K^{n-1}) X over the
    trivial A, prefactor 1/n, a* = counit.  n = 1 is the exterior algebra
    on one odd generator.
    """
    if n < 1:
        raise ValueError("n must be >= 1 (the n = 0 Borel is infinite "
                         "dimensional and handled by the Fox engine)")
    dim = 2 * n
    # indices: i -> K^i  (even), n + i -> K^i X  (odd)
    labels = []
    for i in range(n):
        labels.append("1" if i == 0 else ("K" if i == 1 else f"K^{i}"))
    for i in range(n):
        labels.append("X" if i == 0 else ("KX" if i == 1 else f"K^{i}X"))
    parity = tuple([0] * n + [1] * n)

    mul_sc = {}
    for i in range(n):
        for j in range(n):
            k = (i + j) % n
            mul_sc[(i, j)] = {k: 1}
            mul_sc[(i, n + j)] = {n + k: 1}
            mul_sc[(n + i, j)] = {n + k: 1}
            mul_sc[(n + i, n + j)] = {}   # X^2 = 0

    comul_sc = {}
    for i in range(n):
        comul_sc[i] = {(i, i): 1}
        # Delta(K^i X) = K^{i+1} (x) K^i X + K^i X (x) K^i
        comul_sc[n + i] = {((i + 1) % n, n + i): 1, (n + i, i): 1}

    antipode_sc = {}
    for i in range(n):
        antipode_sc[i] = {(-i) % n: 1}
        antipode_sc[n + i] = {n + ((-i - 1) % n): -1}

    counit_vec = tuple([1] * n + [0] * n)
    alg = PresentedAlgebra(dim, tuple(labels), parity, mul_sc, comul_sc,
                           antipode_sc, counit_vec, unit_index=0)

    b_basis = tuple(range(n))
    i_b = {pos: {pos: 1} for pos in range(n)}
    pi_b = {i: {i: 1} for i in range(n)}       # kills the X half
    mu = {n + i: {i: 1} for i in range(n)}     # mu(K^i X) = K^i, mu(K^i) = 0
    integral = RelativeIntegralData(
        b_basis=b_basis, i_b=i_b, pi_b=pi_b, mu=mu,
        glike_b=1 % n, glike_b_order=n, b_dlog=tuple(range(n)), mu_parity=1)

    cointegral = RelativeCointegralData(
        a_basis=(0,),
        pi_a={i: {0: counit_vec[i]} for i in range(dim) if counit_vec[i]},
        i_a={0: {0: 1}},
        iota={0: {n + i: 1 for i in range(n)}},
        astar_exps=(0,), astar_order=1,
        iota_prefactor=Fraction(1, n), iota_parity=1)

    return HopfPackage(alg, integral, cointegral, name="hn")


def build_cyclic_group_algebra(m):
    """Group algebra of Z/m: basis g^i, all even, integral delta_e,
    cointegral the sum of all group elements, trivial A = B = k."""
    if m < 1:
        raise ValueError("m must be >= 1")
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g^{i}")
                   for i in range(m))
    mul_sc = {(i, j): {(i + j) % m: 1} for i in range(m) for j in range(m)}
    comul_sc = {i: {(i, i): 1} for i in range(m)}
    antipode_sc = {i: {(-i) % m: 1} for i in range(m)}
    counit_vec = tuple([1] * m)
    alg = PresentedAlgebra(m, labels, tuple([0] * m), mul_sc, comul_sc,
                           antipode_sc, counit_vec, unit_index=0)

    integral = RelativeIntegralData(
        b_basis=(0,), i_b={0: {0: 1}},
        pi_b={i: {0: counit_vec[i]} for i in range(m)},
        mu={0: {0: 1}},                       # mu(g^i) = [i == 0]
        glike_b=0, glike_b_order=1, b_dlog=(0,), mu_parity=0)

    cointegral = RelativeCointegralData(
        a_basis=(0,),
        pi_a={i: {0: 1} for i in range(m)},
        i_a={0: {0: 1}},
        iota={0: {i: 1 for i in range(m)}},
        astar_exps=(0,), astar_order=1,
        iota_prefactor=Fraction(1, 1), iota_parity=0)

    return HopfPackage(alg, integral, cointegral, name="cyclic-group-algebra")


# ---------------------------------------------------------------------------
# iterated coproduct
# ---------------------------------------------------------------------------

def coproduct_power(pkg, x, k):
    """Expansion of Delta^{(k)}(x) as a list of (coefficient, index tuple).

    Delta^{(0)} is the counit (empty tuples), Delta^{(1)} the identity.
    Terms are merged and returned in a deterministic order.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    alg = pkg.algebra
    if isinstance(x, int):
        x = {x: 1}
    if k == 0:
        c = alg.counit(x)
        return [(c, ())] if c else []
    terms = {(i,): c for i, c in x.items() if c}
    for _ in range(k - 1):
        nxt = {}
        for key, c in terms.items():
            head, last = key[:-1], key[-1]
            for (j, l), d in alg.comul_sc.get(last, {}).items():
                _add_term(nxt, head + (j, l), c * d)
        terms = nxt
    return sorted(((c, key) for key, c in terms.items()),
                  key=lambda t: t[1])


# ---------------------------------------------------------------------------
# exhaustive axiom verification
# ---------------------------------------------------------------------------

def _b_coords(pkg, x):
    """Express an H-element supported on b_basis in B coordinates."""
    pos_of = {h: p for p, h in enumerate(pkg.integral.b_basis)}
    out = {}
    for i, c in x.items():
        if i not in pos_of:
            return None
        _add_term(out, pos_of[i], c)
    return out


def _a_coords(pkg, x):
    pos_of = {h: p for p, h in enumerate(pkg.cointegral.a_basis)}
    out = {}
    for i, c in x.items():
        if i not in pos_of:
            return None
        _add_term(out, pos_of[i], c)
    return out


def _tensor_of_pair(x, y, sign=1):
    out = {}
    for i, ci in x.items():
        for j, cj in y.items():
            _add_term(out, (i, j), sign * ci * cj)
    return out


def check_axioms(pkg):
    """Run every Hopf, relative-(co)integral, compatibility and handleslide
    identity exhaustively over the basis.  Failures carry a witness tuple."""
    alg = pkg.algebra
    rep = Report()
    D = alg.dim
    idx = range(D)
    par = alg.parity

    def basis(i):
        return {i: 1}

    # parity compatibility of the structure maps
    ok, wit = True, ""
    for i in idx:
        for j in idx:
            for k, c in alg.mul_sc.get((i, j), {}).items():
                if c and par[k] != (par[i] + par[j]) % 2:
                    ok, wit = False, f"m({alg.label(i)},{alg.label(j)})"
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            if c and (par[j] + par[k]) % 2 != par[i]:
                ok, wit = False, f"Delta({alg.label(i)})"
        for j, c in alg.antipode_sc.get(i, {}).items():
            if c and par[j] != par[i]:
                ok, wit = False, f"S({alg.label(i)})"
        if par[i] == 1 and alg.counit_vec[i] != 0:
            ok, wit = False, f"eps({alg.label(i)})"
    rep.add("parity-compatibility", ok, wit)

    # associativity / unitality
    ok, wit = True, ""
    for i in idx:
        for j in idx:
            for k in idx:
                lhs = alg.mul(alg.mul(basis(i), basis(j)), basis(k))
                rhs = alg.mul(basis(i), alg.mul(basis(j), basis(k)))
                if lhs != rhs:
                    ok, wit = False, f"({alg.label(i)},{alg.label(j)},{alg.label(k)})"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("associativity", ok, wit)

    ok = all(alg.mul(alg.unit(), basis(i)) == basis(i)
             and alg.mul(basis(i), alg.unit()) == basis(i) for i in idx)
    rep.add("unitality", ok)

    # coassociativity / counitality
    ok, wit = True, ""
    for i in idx:
        lhs, rhs = {}, {}
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            for (a, b), d in alg.comul_sc.get(j, {}).items():
                _add_term(lhs, (a, b, k), c * d)
            for (a, b), d in alg.comul_sc.get(k, {}).items():
                _add_term(rhs, (j, a, b), c * d)
        if lhs != rhs:
            ok, wit = False, alg.label(i)
            break
    rep.add("coassociativity", ok, wit)

    ok, wit = True, ""
    for i in idx:
        left, right = {}, {}
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            _add_term(left, k, c * alg.counit_vec[j])
            _add_term(right, j, c * alg.counit_vec[k])
        if left != basis(i) or right != basis(i):
            ok, wit = False, alg.label(i)
            break
    rep.add("counitality", ok, wit)

    # bialgebra axiom with the Koszul sign:
    # Delta(xy) = sum (-1)^{|x2||y1|} x1*y1 (x) x2*y2
    ok, wit = True, ""
    for i in idx:
        for j in idx:
            lhs = alg.comul(alg.mul(basis(i), basis(j)))
            rhs = {}
            for (i1, i2), c in alg.comul_sc.get(i, {}).items():
                for (j1, j2), d in alg.comul_sc.get(j, {}).items():
                    sign = -1 if par[i2] and par[j1] else 1
                    first = alg.mul(basis(i1), basis(j1))
                    second = alg.mul(basis(i2), basis(j2))
                    for (a, ca) in first.items():
                        for (b, cb) in second.items():
                            _add_term(rhs, (a, b), sign * c * d * ca * cb)
            if lhs != rhs:
                ok, wit = False, f"({alg.label(i)},{alg.label(j)})"
                break
        if not ok:
            break
    rep.add("bialgebra", ok, wit)

    # counit and unit are (co)algebra morphisms
    ok = all(alg.counit(alg.mul(basis(i), basis(j)))
             == alg.counit_vec[i] * alg.counit_vec[j]
             for i in idx for j in idx)
    ok = ok and alg.comul(alg.unit()) == {(alg.unit_index, alg.unit_index): 1}
    ok = ok and alg.counit(alg.unit()) == 1
    rep.add("unit/counit morphisms", ok)

    # antipode axiom and involutivity
    ok, wit = True, ""
    for i in idx:
        left, right = {}, {}
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            for (a, ca) in alg.antipode(basis(j)).items():
                for b, cb in alg.mul(basis(a), basis(k)).items():
                    _add_term(left, b, c * ca * cb)
            for (a, ca) in alg.antipode(basis(k)).items():
                for b, cb in alg.mul(basis(j), basis(a)).items():
                    _add_term(right, b, c * ca * cb)
        target = {alg.unit_index: alg.counit_vec[i]} if alg.counit_vec[i] else {}
        if left != target or right != target:
            ok, wit = False, alg.label(i)
            break
    rep.add("antipode", ok, wit)

    ok, wit = True, ""
    for i in idx:
        if alg.antipode(alg.antipode(basis(i))) != basis(i):
            ok, wit = False, alg.label(i)
            break
    rep.add("involutivity S^2 = id", ok, wit)

    _check_integral(pkg, rep)
    _check_cointegral(pkg, rep)
    _check_compatibility(pkg, rep)
    _check_handleslide_identities(pkg, rep)
    return rep


def _check_integral(pkg, rep):
    alg, integ = pkg.algebra, pkg.integral
    D, par = alg.dim, alg.parity
    nb = len(integ.b_basis)

    ok = all(_b_coords(pkg, integ.apply(integ.i_b, {p: 1})) is not None
             for p in range(nb))
    ok = ok and all(
        integ.apply(integ.pi_b, integ.apply(integ.i_b, {p: 1})) == {p: 1}
        for p in range(nb))
    rep.add("pi_B o i_B = id_B", ok)

    # centrality of i_B(B):  i_B(b) x = (-1)^{|b||x|} x i_B(b)
    ok, wit = True, ""
    for p in range(nb):
        eb = integ.apply(integ.i_b, {p: 1})
        pb = alg.elem_parity(eb) or 0
        for i in range(D):
            sign = -1 if pb and par[i] else 1
            lhs = alg.mul(eb, {i: 1})
            rhs = {k: sign * c for k, c in alg.mul({i: 1}, eb).items()}
            if lhs != rhs:
                ok, wit = False, f"(b_{p},{alg.label(i)})"
                break
        if not ok:
            break
    rep.add("i_B(B) central", ok, wit)

    # B-linearity:  mu(i_B(b) x) = b * mu(x) in B
    ok, wit = True, ""
    for p in range(nb):
        eb = integ.apply(integ.i_b, {p: 1})
        for i in range(D):
            lhs = integ.apply(integ.mu, alg.mul(eb, {i: 1}))
            rhs = {}
            for q, c in integ.apply(integ.mu, {i: 1}).items():
                prod = alg.mul(eb, integ.apply(integ.i_b, {q: 1}))
                bc = _b_coords(pkg, prod)
                if bc is None:
                    ok, wit = False, "product left B"
                    break
                for r, d in bc.items():
                    _add_term(rhs, r, c * d)
            if not ok or lhs != rhs:
                ok = ok and lhs == rhs
                wit = wit or f"(b_{p},{alg.label(i)})"
                break
        if not ok:
            break
    rep.add("mu is B-linear", ok, wit)

    # relative integral relation: (mu (x) id) Delta = (id (x) i_B) Delta_B mu
    ok, wit = True, ""
    for i in range(D):
        lhs = {}
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            for q, d in integ.apply(integ.mu, {j: 1}).items():
                _add_term(lhs, (q, k), c * d)
        rhs = {}
        for q, c in integ.apply(integ.mu, {i: 1}).items():
            hb = integ.apply(integ.i_b, {q: 1})
            for (j, k), d in alg.comul(hb).items():
                jb = _b_coords(pkg, {j: 1})
                if jb is None:
                    ok, wit = False, "Delta_B left B (x) B"
                    break
                for r, e in jb.items():
                    _add_term(rhs, (r, k), c * d * e)
        if not ok or lhs != rhs:
            ok = ok and lhs == rhs
            wit = wit or pkg.algebra.label(i)
            break
    rep.add("relative integral relation", ok, wit)


def _check_cointegral(pkg, rep):
    alg, coint = pkg.algebra, pkg.cointegral
    D = alg.dim
    na = len(coint.a_basis)

    ok = all(
        coint.apply(coint.pi_a, coint.apply(coint.i_a, {p: 1})) == {p: 1}
        for p in range(na))
    rep.add("pi_A o i_A = id_A", ok)

    # cocentrality: (pi_A (x) id) Delta = (pi_A (x) id) Delta^op
    ok, wit = True, ""
    for i in range(D):
        lhs, rhs = {}, {}
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            for p, d in coint.apply(coint.pi_a, {j: 1}).items():
                _add_term(lhs, (p, k), c * d)
            sign = -1 if alg.parity[j] and alg.parity[k] else 1
            for p, d in coint.apply(coint.pi_a, {k: 1}).items():
                _add_term(rhs, (p, j), sign * c * d)
        if lhs != rhs:
            ok, wit = False, alg.label(i)
            break
    rep.add("pi_A cocentral", ok, wit)

    # A-colinearity: (pi_A (x) id) Delta iota = (id (x) iota) Delta_A
    ok, wit = True, ""
    for p in range(na):
        lhs = {}
        for i, c in coint.apply(coint.iota, {p: 1}).items():
            for (j, k), d in alg.comul_sc.get(i, {}).items():
                for q, e in coint.apply(coint.pi_a, {j: 1}).items():
                    _add_term(lhs, (q, k), c * d * e)
        rhs = {}
        ha = coint.apply(coint.i_a, {p: 1})
        for (j, k), c in alg.comul(ha).items():
            ja = _a_coords(pkg, {j: 1})
            ka = _a_coords(pkg, {k: 1})
            if ja is None or ka is None:
                ok, wit = False, "Delta_A left A (x) A"
                break
            for q, d in ja.items():
                for r, e in ka.items():
                    for h, f in coint.apply(coint.iota, {r: 1}).items():
                        _add_term(rhs, (q, h), c * d * e * f)
        if not ok or lhs != rhs:
            ok = ok and lhs == rhs
            wit = wit or f"a_{p}"
            break
    rep.add("iota is A-colinear", ok, wit)

    # relative cointegral relation: iota(a) x = iota(a * pi_A(x))
    ok, wit = True, ""
    for p in range(na):
        ia = coint.apply(coint.iota, {p: 1})
        for i in range(D):
            lhs = alg.mul(ia, {i: 1})
            rhs = {}
            ea = coint.apply(coint.i_a, {p: 1})
            for q, c in coint.apply(coint.pi_a, {i: 1}).items():
                prod = alg.mul(ea, coint.apply(coint.i_a, {q: 1}))
                ac = _a_coords(pkg, prod)
                if ac is None:
                    ok, wit = False, "product left A"
                    break
                for r, d in ac.items():
                    for h, e in coint.apply(coint.iota, {r: 1}).items():
                        _add_term(rhs, h, c * d * e)
            if not ok or lhs != rhs:
                ok = ok and lhs == rhs
                wit = wit or f"(a_{p},{alg.label(i)})"
                break
        if not ok:
            break
    rep.add("relative cointegral relation", ok, wit)


def _delta_astar(pkg, x):
    """Delta_{a*}(x) = sum a*(pi_A(x_(1))) x_(2), as {(exponent, idx): c}.

    The a*-value is kept as a formal exponent in Z/astar_order, so the
    comparison stays integer-exact.
    """
    alg, coint = pkg.algebra, pkg.cointegral
    out = {}
    for i, ci in x.items():
        for (j, k), c in alg.comul_sc.get(i, {}).items():
            for p, d in coint.apply(coint.pi_a, {j: 1}).items():
                e = coint.astar_exps[p] % coint.astar_order
                _add_term(out, (e, k), ci * c * d)
    return out


def _check_compatibility(pkg, rep):
    alg, integ, coint = pkg.algebra, pkg.integral, pkg.cointegral
    D, par = alg.dim, alg.parity
    eb = integ.apply(integ.i_b, {integ.glike_b: 1})

    def s_b(x):
        bc = _b_coords(pkg, alg.antipode(integ.apply(integ.i_b, x)))
        return bc

    # (1)  mu(b x) = (-1)^{deg mu} S_B mu S_H(x)
    ok, wit = True, ""
    sign = -1 if integ.mu_parity else 1
    for i in range(D):
        lhs = integ.apply(integ.mu, alg.mul(eb, {i: 1}))
        rhs0 = integ.apply(integ.mu, alg.antipode({i: 1}))
        rhs = s_b(rhs0)
        if rhs is None:
            ok, wit = False, "S_B left B"
            break
        rhs = {k: sign * c for k, c in rhs.items()}
        if lhs != rhs:
            ok, wit = False, alg.label(i)
            break
    rep.add("compatibility (1): mu o m_b = (-1)^{|mu|} S_B mu S_H", ok, wit)

    # (2)  Delta_{a*} iota = (-1)^{deg iota} S_H iota S_A     (maps A -> H)
    ok, wit = True, ""
    sign = -1 if coint.iota_parity else 1
    for p in range(len(coint.a_basis)):
        lhs = _delta_astar(pkg, coint.apply(coint.iota, {p: 1}))
        sa = _a_coords(pkg, alg.antipode(coint.apply(coint.i_a, {p: 1})))
        if sa is None:
            ok, wit = False, "S_A left A"
            break
        rhs = {}
        for q, c in sa.items():
            for h, d in alg.antipode(coint.apply(coint.iota, {q: 1})).items():
                _add_term(rhs, (0, h), sign * c * d)
        if lhs != rhs:
            ok, wit = False, f"a_{p}"
            break
    rep.add("compatibility (2): Delta_a* iota = (-1)^{|iota|} S iota S_A",
            ok, wit)

    # (3)  mu m^op = mu m (id (x) Delta_{a*})     (maps H (x) H -> B)
    ok, wit = True, ""
    for i in range(D):
        for j in range(D):
            sgn = -1 if par[i] and par[j] else 1
            lhs = {(0, k): sgn * c for k, c in
                   integ.apply(integ.mu, alg.mul({j: 1}, {i: 1})).items()}
            rhs = {}
            for (e, k), c in _delta_astar(pkg, {j: 1}).items():
                for q, d in integ.apply(integ.mu,
                                        alg.mul({i: 1}, {k: 1})).items():
                    _add_term(rhs, (e, q), c * d)
            if lhs != rhs:
                ok, wit = False, f"({alg.label(i)},{alg.label(j)})"
                break
        if not ok:
            break
    rep.add("compatibility (3): trace property of mu", ok, wit)

    # (4)  Delta^op iota = (id (x) m_b) Delta iota    (maps A -> H (x) H)
    ok, wit = True, ""
    for p in range(len(coint.a_basis)):
        it = coint.apply(coint.iota, {p: 1})
        lhs, rhs = {}, {}
        for i, ci in it.items():
            for (j, k), c in alg.comul_sc.get(i, {}).items():
                sgn = -1 if par[j] and par[k] else 1
                _add_term(lhs, (k, j), sgn * ci * c)
                for q, d in alg.mul(eb, {k: 1}).items():
                    _add_term(rhs, (j, q), ci * c * d)
        if lhs != rhs:
            ok, wit = False, f"a_{p}"
            break
    rep.add("compatibility (4): cotrace property of iota", ok, wit)

    # (5)  pi_B i_A = eta_B eps_A
    ok, wit = True, ""
    for p in range(len(coint.a_basis)):
        lhs = integ.apply(integ.pi_b, coint.apply(coint.i_a, {p: 1}))
        ea = alg.counit(coint.apply(coint.i_a, {p: 1}))
        unit_b = _b_coords(pkg, alg.unit())
        rhs = {k: ea * c for k, c in unit_b.items()} if ea else {}
        if lhs != rhs:
            ok, wit = False, f"a_{p}"
            break
    rep.add("compatibility (5): pi_B i_A = eta_B eps_A", ok, wit)

    # (6)  eps_B mu iota eta_A = 1   (with the iota prefactor applied)
    unit_a = 0   # position of 1_A: i_A(pos) = unit of H
    for p in range(len(coint.a_basis)):
        if coint.apply(coint.i_a, {p: 1}) == alg.unit():
            unit_a = p
            break
    val = 0
    for q, c in integ.apply(
            integ.mu, coint.apply(coint.iota, {unit_a: 1})).items():
        val += c * alg.counit(integ.apply(integ.i_b, {q: 1}))
    rep.add("compatibility (6): eps_B mu iota eta_A = 1",
            val * coint.iota_prefactor == 1,
            f"value {val * coint.iota_prefactor}")


def _check_handleslide_identities(pkg, rep):
    """The three identities behind curve-curve, arc-curve and arc-arc
    handlesliding, checked on all pairs of A-basis elements."""
    alg, coint = pkg.algebra, pkg.cointegral
    na = len(coint.a_basis)

    def f_map(tag):
        return coint.iota if tag == "iota" else coint.i_a

    for tag1, tag2 in (("iota", "iota"), ("iota", "i_A"), ("i_A", "i_A")):
        f1, f2 = f_map(tag1), f_map(tag2)
        ok, wit = True, ""
        for p in range(na):
            for q in range(na):
                lhs = {}
                x1 = coint.apply(f1, {p: 1})
                for i, ci in coint.apply(f2, {q: 1}).items():
                    for (j, k), c in alg.comul_sc.get(i, {}).items():
                        for h, d in alg.mul(x1, {j: 1}).items():
                            _add_term(lhs, (h, k), ci * c * d)
                rhs = {}
                ha = coint.apply(coint.i_a, {q: 1})
                for (j, k), c in alg.comul(ha).items():
                    ja, ka = _a_coords(pkg, {j: 1}), _a_coords(pkg, {k: 1})
                    if ja is None or ka is None:
                        ok, wit = False, "Delta_A left A (x) A"
                        break
                    for r, d in ja.items():
                        prod = alg.mul(coint.apply(coint.i_a, {p: 1}),
                                       coint.apply(coint.i_a, {r: 1}))
                        pa = _a_coords(pkg, prod)
                        if pa is None:
                            ok, wit = False, "m_A left A"
                            break
                        for s, e in pa.items():
                            for h, f in coint.apply(f1, {s: 1}).items():
                                for t, g in ka.items():
                                    for h2, f2c in coint.apply(
                                            f2, {t: 1}).items():
                                        _add_term(rhs, (h, h2),
                                                  c * d * e * f * g * f2c)
                if not ok or lhs != rhs:
                    ok = ok and lhs == rhs
                    wit = wit or f"(a_{p},a_{q})"
                    break
            if not ok:
                break
        rep.add(f"handleslide identity ({tag1},{tag2})", ok, wit)

"""Combinatorial generators of the extended Heegaard moves.

Each move is a small dataclass; ``apply_move`` returns a new diagram and
raises ``IllegalMoveError`` with a reason when the parameters do not describe
a legal instance.  Moves that touch the beta family change how the fixed
manifold classes are expressed in the diagram's dual generators, so every
move also exposes ``generator_map`` (old beta dual -> combination of new
beta duals) and ``orientation_flip`` (the induced sign on the ordered,
oriented curve basis); invariance tests compare classes through these.

Conventions fixed here, each one geometric realization among the legal ones:
a finger inserts its two crossings in the same sequence order on both curves;
a handleslide appends the travelling finger, then parallel copies of the
over-curve's crossings in the over-curve's order (each copy lands in its
other-family order immediately after the copied crossing), then the reversed
finger with flipped signs.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, replace

from .diagram import Crossing, Curve
from .errors import IllegalMoveError, ParseError


@dataclass(frozen=True)
class ReorderCurves:
    family: str
    topology: str
    new_order: tuple      # curve ids of the block, permuted


@dataclass(frozen=True)
class ReverseCurve:
    curve_id: str


@dataclass(frozen=True)
class FingerIsotopy:
    alpha_id: str
    beta_id: str
    alpha_pos: int
    beta_pos: int
    plus_first: bool = True
    single: bool = False    # endpoint slide: one crossing, both curves arcs


@dataclass(frozen=True)
class CancelFinger:
    first: str
    second: str


@dataclass(frozen=True)
class Stabilize:
    pass


@dataclass(frozen=True)
class Destabilize:
    alpha_id: str
    beta_id: str


@dataclass(frozen=True)
class HandleslideCurve:
    slid: str
    over: str
    delta: tuple = ()     # of (other-family curve id, position, sign)


@dataclass(frozen=True)
class AddTrivialHandles:
    count: int


Move = (ReorderCurves, ReverseCurve, FingerIsotopy, CancelFinger,
        Stabilize, Destabilize, HandleslideCurve, AddTrivialHandles)


# ---------------------------------------------------------------------------
# id generation
# ---------------------------------------------------------------------------

def _fresh_ids(diag, prefix, count):
    taken = {c.id for c in diag.curves} | {x.id for x in diag.crossings}
    top = 0
    for name in taken:
        m = re.fullmatch(r"[A-Za-z_]*(\d+)", name)
        if m:
            top = max(top, int(m.group(1)))
    out = []
    n = top + 1
    while len(out) < count:
        cand = f"{prefix}{n}"
        if cand not in taken:
            out.append(cand)
        n += 1
    return out


def _replace_curve(diag, cid, **changes):
    return diag.with_curves(
        replace(c, **changes) if c.id == cid else c for c in diag.curves)


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------

def apply_move(diag, move):
    if isinstance(move, ReorderCurves):
        new = _apply_reorder(diag, move)
    elif isinstance(move, ReverseCurve):
        new = _apply_reverse(diag, move)
    elif isinstance(move, FingerIsotopy):
        new = _apply_finger(diag, move)
    elif isinstance(move, CancelFinger):
        new = _apply_cancel(diag, move)
    elif isinstance(move, Stabilize):
        new = _apply_stabilize(diag)
    elif isinstance(move, Destabilize):
        new = _apply_destabilize(diag, move)
    elif isinstance(move, HandleslideCurve):
        new = _apply_handleslide(diag, move)
    elif isinstance(move, AddTrivialHandles):
        new = _apply_trivial_handles(diag, move)
    else:
        raise IllegalMoveError(f"unknown move {move!r}")
    return replace(new, named_multipoints=_transport_named(diag, new, move))


def _transport_named(old, new, move):
    """Carry named multipoints through a move: stabilization extends every
    multipoint by the new crossing, destabilization strips it, and
    multipoints through a cancelled crossing are dropped."""
    from .diagram import Multipoint
    named = dict(old.named_multipoints)
    if isinstance(move, Stabilize):
        fresh = ({x.id for x in new.crossings}
                 - {x.id for x in old.crossings}).pop()
        return {nm: Multipoint(tuple(sorted(mp.picks + (fresh,))))
                for nm, mp in named.items()}
    if isinstance(move, Destabilize):
        gone = {x.id for x in old.crossings} - {x.id for x in new.crossings}
        return {nm: Multipoint(tuple(p for p in mp.picks if p not in gone))
                for nm, mp in named.items()}
    if isinstance(move, CancelFinger):
        gone = {move.first, move.second}
        return {nm: mp for nm, mp in named.items()
                if not gone & set(mp.picks)}
    return named


def _apply_reorder(diag, move):
    block = [c for c in diag.curves
             if c.family == move.family and c.topology == move.topology]
    ids = [c.id for c in block]
    if sorted(move.new_order) != sorted(ids):
        raise IllegalMoveError(
            f"reorder block mismatch: {move.new_order} vs {ids}")
    by_id = {c.id: c for c in block}
    queue = [by_id[i] for i in move.new_order]
    out = []
    for c in diag.curves:
        if c.family == move.family and c.topology == move.topology:
            out.append(queue.pop(0))
        else:
            out.append(c)
    return diag.with_curves(out)


def _apply_reverse(diag, move):
    c = diag.curve(move.curve_id)
    on_curve = set(c.order)
    xs = tuple(replace(x, sign=-x.sign) if x.id in on_curve else x
               for x in diag.crossings)
    new = replace(diag, crossings=xs)
    return _replace_curve(new, c.id, order=tuple(reversed(c.order)))


def _insert(order, pos, items):
    if pos < 0 or pos > len(order):
        raise IllegalMoveError(f"insertion position {pos} out of range")
    return order[:pos] + tuple(items) + order[pos:]


def _apply_finger(diag, move):
    a = diag.curve(move.alpha_id)
    b = diag.curve(move.beta_id)
    if a.family != "alpha" or b.family != "beta":
        raise IllegalMoveError("finger needs one alpha and one beta curve")
    if move.single:
        if a.closed or b.closed:
            raise IllegalMoveError("endpoint slide needs two arcs")
        if move.alpha_pos not in (0, len(a.order)) or \
                move.beta_pos not in (0, len(b.order)):
            raise IllegalMoveError("endpoint slide must happen at an end")
        (nid,) = _fresh_ids(diag, "x", 1)
        sign = 1 if move.plus_first else -1
        xs = diag.crossings + (Crossing(nid, a.id, b.id, sign),)
        new = replace(diag, crossings=xs)
        new = _replace_curve(new, a.id,
                             order=_insert(a.order, move.alpha_pos, [nid]))
        return _replace_curve(new, b.id,
                              order=_insert(b.order, move.beta_pos, [nid]))
    n1, n2 = _fresh_ids(diag, "x", 2)
    s = 1 if move.plus_first else -1
    xs = diag.crossings + (Crossing(n1, a.id, b.id, s),
                           Crossing(n2, a.id, b.id, -s))
    new = replace(diag, crossings=xs)
    new = _replace_curve(new, a.id,
                         order=_insert(a.order, move.alpha_pos, [n1, n2]))
    return _replace_curve(new, b.id,
                          order=_insert(b.order, move.beta_pos, [n1, n2]))


def _adjacent_pair(curve, first, second):
    """True when (first, second) appear consecutively in this sequence
    order (cyclically for closed curves)."""
    k = len(curve.order)
    for i, xid in enumerate(curve.order):
        if xid != first:
            continue
        j = i + 1
        if j == k:
            if not curve.closed:
                return False
            j = 0
        if curve.order[j] == second:
            return True
    return False


def _apply_cancel(diag, move):
    x = diag.crossing(move.first)
    y = diag.crossing(move.second)
    if x.alpha != y.alpha or x.beta != y.beta:
        raise IllegalMoveError("pair lies on different curve pairs")
    if x.sign + y.sign != 0:
        raise IllegalMoveError("pair is not oppositely signed")
    a, b = diag.curve(x.alpha), diag.curve(x.beta)
    ok = ((_adjacent_pair(a, x.id, y.id) and _adjacent_pair(b, x.id, y.id))
          or (_adjacent_pair(a, y.id, x.id) and _adjacent_pair(b, y.id, x.id)))
    if not ok:
        raise IllegalMoveError("pair is not adjacent in matching order")
    gone = {x.id, y.id}
    xs = tuple(z for z in diag.crossings if z.id not in gone)
    new = replace(diag, crossings=xs)
    new = _replace_curve(new, a.id,
                         order=tuple(i for i in a.order if i not in gone))
    return _replace_curve(new, b.id,
                          order=tuple(i for i in b.order if i not in gone))


def _apply_stabilize(diag):
    aid, bid = _fresh_ids(diag, "c", 2)
    (xid,) = _fresh_ids(diag, "x", 1)
    new_a = Curve(aid, "alpha", "closed", (xid,))
    new_b = Curve(bid, "beta", "closed", (xid,))
    curves = []
    for fam in ("alpha", "beta"):
        curves.extend(c for c in diag.curves
                      if c.family == fam and c.closed)
        curves.append(new_a if fam == "alpha" else new_b)
        curves.extend(c for c in diag.curves
                      if c.family == fam and not c.closed)
    xs = diag.crossings + (Crossing(xid, aid, bid, 1),)
    return replace(diag, curves=tuple(curves), crossings=xs)


def _apply_destabilize(diag, move):
    a = diag.curve(move.alpha_id)
    b = diag.curve(move.beta_id)
    if not (a.closed and b.closed):
        raise IllegalMoveError("destabilize needs closed curves")
    if len(a.order) != 1 or a.order != b.order:
        raise IllegalMoveError("pair interacts with other curves")
    xid = a.order[0]
    xs = tuple(x for x in diag.crossings if x.id != xid)
    curves = tuple(c for c in diag.curves if c.id not in (a.id, b.id))
    return replace(diag, curves=curves, crossings=xs)


def _apply_handleslide(diag, move):
    slid = diag.curve(move.slid)
    over = diag.curve(move.over)
    if slid.id == over.id:
        raise IllegalMoveError("cannot slide a curve over itself")
    if slid.family != over.family:
        raise IllegalMoveError("handleslide stays within one family")
    if slid.closed and not over.closed:
        raise IllegalMoveError("a closed curve cannot slide over an arc")
    fam = slid.family
    other_side = "beta" if fam == "alpha" else "alpha"

    xmap = {x.id: x for x in diag.crossings}
    n_delta = len(move.delta)
    copies = list(over.order)
    fresh = _fresh_ids(diag, "x", 2 * n_delta + len(copies))
    d_out = fresh[:n_delta]
    d_ret = fresh[n_delta:2 * n_delta]
    c_new = fresh[2 * n_delta:]

    def crossing_for(cid, other_id, sign):
        if fam == "alpha":
            return Crossing(cid, slid.id, other_id, sign)
        return Crossing(cid, other_id, slid.id, sign)

    new_xs = []
    for t, (other_id, _pos, sign) in enumerate(move.delta):
        oc = diag.curve(other_id)
        if oc.family != other_side:
            raise IllegalMoveError(
                f"delta curve {other_id} is not in the {other_side} family")
        if sign not in (1, -1):
            raise IllegalMoveError("delta sign must be +-1")
        new_xs.append(crossing_for(d_out[t], other_id, sign))
        new_xs.append(crossing_for(d_ret[t], other_id, -sign))
    for t, orig_id in enumerate(copies):
        x = xmap[orig_id]
        other_id = x.beta if fam == "alpha" else x.alpha
        new_xs.append(crossing_for(c_new[t], other_id, x.sign))

    new = replace(diag, crossings=diag.crossings + tuple(new_xs))

    slid_order = (slid.order + tuple(d_out) + tuple(c_new)
                  + tuple(reversed(d_ret)))
    new = _replace_curve(new, slid.id, order=slid_order)

    # travelling finger: adjacent out/return pair on each delta curve
    for t, (other_id, pos, _sign) in enumerate(move.delta):
        oc = new.curve(other_id)
        new = _replace_curve(new, other_id,
                             order=_insert(oc.order, pos,
                                           [d_out[t], d_ret[t]]))
    # Parallel copies sit on a fixed side of the over-curve, so along the
    # crossed curve the copy lands just after the original at a positive
    # crossing and just before it at a negative one; only this sign rule is
    # the free-group substitution over -> over * slid on every dual word.
    for t, orig_id in enumerate(copies):
        x = xmap[orig_id]
        other_id = x.beta if fam == "alpha" else x.alpha
        oc = new.curve(other_id)
        at = oc.order.index(orig_id) + (1 if x.sign > 0 else 0)
        new = _replace_curve(new, other_id,
                             order=_insert(oc.order, at, [c_new[t]]))
    return new


def _apply_trivial_handles(diag, move):
    if move.count < 0:
        raise IllegalMoveError("count must be >= 0")
    ids = _fresh_ids(diag, "h", 2 * move.count)
    curves = list(diag.curves)
    for t in range(move.count):
        curves.append(Curve(ids[2 * t], "alpha", "arc", ()))
        curves.append(Curve(ids[2 * t + 1], "beta", "arc", ()))
    # keep closed-before-arcs: arcs appended at the end are fine, but the
    # alpha arc must sit in the alpha block
    alphas = [c for c in curves if c.family == "alpha" and c.closed] + \
             [c for c in curves if c.family == "alpha" and not c.closed]
    betas = [c for c in curves if c.family == "beta" and c.closed] + \
            [c for c in curves if c.family == "beta" and not c.closed]
    return diag.with_curves(alphas + betas)


# ---------------------------------------------------------------------------
# homology bookkeeping
# ---------------------------------------------------------------------------

def generator_map(diag, move):
    """How the old beta duals read in the new diagram's duals, as
    ``{old id: [(new id, coefficient), ...]}``; identity entries omitted."""
    if isinstance(move, ReverseCurve):
        c = diag.curve(move.curve_id)
        if c.family == "beta":
            return {c.id: [(c.id, -1)]}
        return {}
    if isinstance(move, Destabilize):
        # the removed beta dual is killed by the removed relation
        return {move.beta_id: []}
    if isinstance(move, HandleslideCurve):
        slid = diag.curve(move.slid)
        if slid.family == "beta":
            # after sliding j over i, the old class i* reads i* j*
            return {move.over: [(move.over, 1), (move.slid, 1)]}
        return {}
    return {}


def orientation_flip(diag, move):
    """Sign change of the ordered, oriented closed-curve basis."""
    if isinstance(move, ReverseCurve):
        return -1 if diag.curve(move.curve_id).closed else 1
    if isinstance(move, ReorderCurves):
        if move.topology != "closed":
            return 1
        block = [c.id for c in diag.family(move.family, "closed")]
        perm = [block.index(i) for i in move.new_order]
        sgn = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    sgn = -sgn
        return sgn
    return 1


def transfer_exponents(exps, gens_old, gens_new, gmap):
    """Push a generator-exponent vector through a composed generator map."""
    pos_new = {g: i for i, g in enumerate(gens_new)}
    out = [0] * len(gens_new)
    for g, e in zip(gens_old, exps):
        if not e:
            continue
        image = gmap.get(g, [(g, 1)])
        for h, c in image:
            out[pos_new[h]] += e * c
    return tuple(out)


def compose_generator_maps(first, second):
    """first then second, both ``{gen: [(gen, coeff)]}`` with identity
    defaults."""
    out = {}
    keys = set(first) | set(second)
    for g in keys:
        acc = {}
        for h, c in first.get(g, [(g, 1)]):
            for k, d in second.get(h, [(h, 1)]):
                acc[k] = acc.get(k, 0) + c * d
        out[g] = [(k, v) for k, v in sorted(acc.items()) if v]
    return out


# ---------------------------------------------------------------------------
# random legal sequences
# ---------------------------------------------------------------------------

def _cancellable_pairs(diag):
    out = []
    seen = set()
    for a in diag.family("alpha"):
        k = len(a.order)
        for i in range(k if a.closed else k - 1):
            x = diag.crossing(a.order[i])
            y = diag.crossing(a.order[(i + 1) % k])
            if x.id == y.id:
                continue
            if x.beta != y.beta or x.sign + y.sign != 0:
                continue
            b = diag.curve(x.beta)
            if _adjacent_pair(b, x.id, y.id):
                key = (x.id, y.id)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


def _trivial_pairs(diag):
    out = []
    for a in diag.closed_alphas:
        if len(a.order) != 1:
            continue
        x = diag.crossing(a.order[0])
        b = diag.curve(x.beta)
        if b.closed and b.order == a.order:
            out.append((a.id, b.id))
    return out


def random_move_sequence(diag, seed, length):
    """A deterministic sequence of legal moves; applying them in order
    never raises.  Growth is kept modest so invariants stay cheap."""
    rng = random.Random(seed)
    moves = []
    cur = diag
    for _ in range(length):
        options = ["reverse", "reorder", "finger", "finger",
                   "cancel", "cancel", "stabilize", "handleslide"]
        if len(cur.crossings) > 30:
            options = ["reverse", "reorder", "cancel", "cancel",
                       "destabilize"]
        mv = None
        rng.shuffle(options)
        for kind in options:
            mv = _propose(cur, rng, kind)
            if mv is not None:
                break
        if mv is None:
            mv = Stabilize()
        moves.append(mv)
        cur = apply_move(cur, mv)
    return moves


def _propose(diag, rng, kind):
    if kind == "reverse":
        cs = [c for c in diag.curves]
        return ReverseCurve(rng.choice(cs).id) if cs else None
    if kind == "reorder":
        blocks = [(f, t) for f in ("alpha", "beta")
                  for t in ("closed", "arc")
                  if len(diag.family(f, t)) > 1]
        if not blocks:
            return None
        f, t = rng.choice(blocks)
        ids = [c.id for c in diag.family(f, t)]
        rng.shuffle(ids)
        return ReorderCurves(f, t, tuple(ids))
    if kind == "finger":
        alphas = diag.family("alpha")
        betas = diag.family("beta")
        if not alphas or not betas:
            return None
        a = rng.choice(alphas)
        b = rng.choice(betas)
        return FingerIsotopy(a.id, b.id,
                             rng.randint(0, len(a.order)),
                             rng.randint(0, len(b.order)),
                             plus_first=rng.random() < 0.5)
    if kind == "cancel":
        pairs = _cancellable_pairs(diag)
        if not pairs:
            return None
        x, y = rng.choice(pairs)
        return CancelFinger(x, y)
    if kind == "stabilize":
        return Stabilize()
    if kind == "destabilize":
        pairs = _trivial_pairs(diag)
        if not pairs:
            return None
        a, b = rng.choice(pairs)
        return Destabilize(a, b)
    if kind == "handleslide":
        for fam in rng.sample(("alpha", "beta"), 2):
            closed = diag.family(fam, "closed")
            if len(closed) >= 2:
                slid, over = rng.sample(list(closed), 2)
                if len(over.order) > 6:
                    continue
                return HandleslideCurve(slid.id, over.id, ())
            arcs = diag.family(fam, "arc")
            if len(arcs) >= 2:
                slid, over = rng.sample(list(arcs), 2)
                if len(over.order) > 6:
                    continue
                return HandleslideCurve(slid.id, over.id, ())
        return None
    return None


# ---------------------------------------------------------------------------
# move scripts
# ---------------------------------------------------------------------------

def parse_move_script(text):
    """One move per line; ``#`` comments.  Grammar mirrors the CLI docs."""
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        try:
            if head == "reverse":
                moves.append(ReverseCurve(tok[2]))
            elif head == "reorder":
                if tok[3] != ":":
                    raise IndexError
                moves.append(ReorderCurves(tok[1], tok[2], tuple(tok[4:])))
            elif head == "stabilize":
                moves.append(Stabilize())
            elif head == "destabilize":
                moves.append(Destabilize(tok[1], tok[2]))
            elif head == "finger":
                a_id, a_pos = tok[1].split("@")
                b_id, b_pos = tok[2].split("@")
                pattern = tok[3]
                if pattern in ("+-", "-+"):
                    moves.append(FingerIsotopy(
                        a_id, b_id, int(a_pos), int(b_pos),
                        plus_first=pattern == "+-"))
                elif pattern in ("+", "-"):
                    moves.append(FingerIsotopy(
                        a_id, b_id, int(a_pos), int(b_pos),
                        plus_first=pattern == "+", single=True))
                else:
                    raise IndexError
            elif head == "cancel":
                moves.append(CancelFinger(tok[1], tok[2]))
            elif head == "handleslide":
                if tok[2] != "over":
                    raise IndexError
                delta = []
                for m in re.finditer(r"\(([^)@\s]+)@(\d+)\s+([+-])\)", line):
                    delta.append((m.group(1), int(m.group(2)),
                                  1 if m.group(3) == "+" else -1))
                moves.append(HandleslideCurve(tok[1], tok[3], tuple(delta)))
            elif head == "trivial-handles":
                moves.append(AddTrivialHandles(int(tok[1])))
            else:
                raise ParseError(lineno, f"unknown move {head!r}")
        except (IndexError, ValueError):
            raise ParseError(lineno, f"malformed move line: {line!r}")
    return moves

"""Skein categories of parallel wall strands (ladder and annular).

Objects are tuples of wall simples, one per strand.  A basis morphism is a
tuple of bulk strings, one per active sector, attached to the neighbouring
strands; strand i transforms by the pair (inverse of the string before it,
string after it) acting through its wall.  Composition is string-wise
multiplication with a scalar given by the walls' module cocycles, so
associativity follows from the wall coherence.

The same data structure covers the two geometries used here:
  * strip ("ladder"): the outer sectors carry no strings,
  * cyclic ("annular"): all sectors carry strings, sector k = sector 0.
Orientation: strands pointing out of the region are passed through
BimoduleData.flip() by the callers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .bimodule import BimoduleData
from .cyclo import CyclotomicNumber, cyclo, zeta
from .groups import phase

__all__ = ["StrandCategory", "FaceMismatch", "annular_category",
           "ladder_category"]


class FaceMismatch(ValueError):
    pass


def _phase_cyclo(q: Fraction) -> CyclotomicNumber:
    q = phase(q)
    if q == 0:
        return cyclo(1)
    return zeta(q.denominator, q.numerator)


class StrandCategory:
    def __init__(self, walls, cyclic: bool):
        self.walls = list(walls)
        self.cyclic = cyclic
        k = len(walls)
        self.k = k
        # sector j sits after strand j (1-based strands); sector 0 before
        # strand 1.  In the cyclic case sector 0 is identified with sector k.
        for i in range(k - 1):
            if walls[i].right_cat.group != walls[i + 1].left_cat.group:
                raise FaceMismatch(
                    f"strand {i}: {walls[i].right_cat} vs {walls[i+1].left_cat}")
        if cyclic and k and walls[-1].right_cat.group != walls[0].left_cat.group:
            raise FaceMismatch("cyclic face labels do not close up")
        if cyclic:
            self.active = list(range(k))       # sector j = after strand j+1?
        else:
            self.active = list(range(1, k))    # interior sectors only
        # sector_group[j] for j in 0..k (strip) with wraparound in cyclic case
        self.sector_groups = {}
        for j in self.active:
            grp = walls[j % k].left_cat.group if j < k else None
            # sector j lies after strand j (strands 1..k); its bulk is the
            # right category of strand j = left category of strand j+1
            self.sector_groups[j] = walls[j - 1].right_cat.group if j >= 1 \
                else walls[0].left_cat.group
        if cyclic:
            # sector 0 = sector k: bulk after the last strand
            self.sector_groups[0] = walls[-1].right_cat.group
        # object set
        self.obj_shapes = [w.n_simples() for w in walls]
        self.objects = list(itertools.product(*[range(n) for n in self.obj_shapes]))
        self.obj_index = {o: i for i, o in enumerate(self.objects)}
        # per-strand gamma lookup: (x_prev, x_next) -> gamma index
        self._pair = []
        for i, w in enumerate(walls):
            gp = {}
            prev_grp = self._sector_group_of(i)       # sector before strand i+1
            next_grp = self._sector_group_of(i + 1)
            np_, nn = (prev_grp.order if prev_grp else 1,
                       next_grp.order if next_grp else 1)
            for xp in range(np_):
                a = w.left_cat.group.inv(xp) if prev_grp else 0
                ga = w.gamma.emb_left[a]
                for xn in range(nn):
                    gb = w.gamma.emb_right[xn] if next_grp else 0
                    gp[(xp, xn)] = w.gamma.mul(ga, gb)
            self._pair.append(gp)
        self.identity_string = tuple(0 for _ in self.active)

    def _sector_group_of(self, j):
        """Group of sector j (0..k), None if inactive."""
        if self.cyclic:
            j = j % self.k
            return self.sector_groups[j]
        if j in self.sector_groups:
            return self.sector_groups[j]
        return None

    def _strand_gammas(self, s):
        """Per-strand gamma indices for the string tuple s."""
        # s is indexed by self.active
        sval = {j: s[idx] for idx, j in enumerate(self.active)}
        def sector_val(j):
            if self.cyclic:
                return sval[j % self.k]
            return sval.get(j, 0)
        out = []
        for i in range(self.k):
            xp = sector_val(i)       # sector before strand i+1 is sector i
            xn = sector_val(i + 1)
            out.append(self._pair[i][(xp, xn)])
        return out

    # -- category structure -------------------------------------------------

    def strings(self):
        ranges = [range(self._sector_group_of(j).order) for j in self.active]
        return itertools.product(*ranges)

    def generators(self):
        out = []
        for idx, j in enumerate(self.active):
            grp = self._sector_group_of(j)
            for x in range(1, grp.order):
                s = [0] * len(self.active)
                s[idx] = x
                out.append(tuple(s))
        return out

    def act_obj(self, s, obj):
        gs = self._strand_gammas(s)
        return tuple(self.walls[i].act[gs[i]][obj[i]] for i in range(self.k))

    def compose_strings(self, s2, s1):
        """String tuple of B_{s2} o B_{s1} (s1 first): per sector s1 * s2."""
        out = []
        for idx, j in enumerate(self.active):
            grp = self._sector_group_of(j)
            out.append(grp.mul(s1[idx], s2[idx]))
        return tuple(out)

    def scalar(self, s2, s1, obj) -> Fraction:
        """Phase of B_{s2} o B_{s1} = e^{2 pi i q} B_{s''} at source obj."""
        g2 = self._strand_gammas(s2)
        g1 = self._strand_gammas(s1)
        q = Fraction(0)
        for i in range(self.k):
            q += self.walls[i].psi(g2[i], g1[i], obj[i])
        return phase(q)

    def inverse_string(self, s):
        out = []
        for idx, j in enumerate(self.active):
            grp = self._sector_group_of(j)
            out.append(grp.inv(s[idx]))
        return tuple(out)

    # -- translation action of the outer pair (a, c) -------------------------
    # a acts on the left category of strand 1, c on the right category of the
    # last strand (used by the ladder to carry the fused-wall actions).

    def translation_gammas(self, a: int, c: int):
        gs = []
        for i in range(self.k):
            w = self.walls[i]
            if i == 0 and i == self.k - 1:
                gs.append(w.gamma.mul(w.gamma.emb_left[a], w.gamma.emb_right[c]))
            elif i == 0:
                gs.append(w.gamma.emb_left[a])
            elif i == self.k - 1:
                gs.append(w.gamma.emb_right[c])
            else:
                gs.append(0)
        return gs

    def act_translation(self, a: int, c: int, obj):
        gs = self.translation_gammas(a, c)
        return tuple(self.walls[i].act[gs[i]][obj[i]] for i in range(self.k))

    def transport_phase(self, a: int, c: int, s, obj) -> Fraction:
        """Phase mu with T_{(a,c)}(B_s at obj) = e^{2 pi i mu} B_s at (a,c).obj.

        T is conjugation by the translation; the phase is the difference of
        the two composition routes through the combined action.
        """
        gt = self.translation_gammas(a, c)
        gs = self._strand_gammas(s)
        q = Fraction(0)
        for i in range(self.k):
            w = self.walls[i]
            q += w.psi(gt[i], gs[i], obj[i]) - w.psi(gs[i], gt[i], obj[i])
        return phase(q)

    # -- orbits ---------------------------------------------------------------

    def orbits(self):
        """Partition of objects under the string action; reps are lex-min."""
        gens = self.generators()
        seen = set()
        orbits = []
        for o in self.objects:
            if o in seen:
                continue
            frontier = [o]
            orb = {o}
            while frontier:
                cur = frontier.pop()
                for s in gens:
                    nxt = self.act_obj(s, cur)
                    if nxt not in orb:
                        orb.add(nxt)
                        frontier.append(nxt)
            orb = sorted(orb)
            seen.update(orb)
            orbits.append(orb)
        return orbits

    def stabilizer_strings(self, obj):
        return [s for s in self.strings() if self.act_obj(s, obj) == obj]

    def end_algebra(self, obj):
        from .algebra import StructuredAlgebra

        labels = self.stabilizer_strings(obj)
        index = {s: i for i, s in enumerate(labels)}

        def mult(i, j):
            # basis product b_i . b_j = (b_i after b_j)
            s = self.compose_strings(labels[i], labels[j])
            q = self.scalar(labels[i], labels[j], obj)
            return {index[s]: _phase_cyclo(q)}

        unit = {index[self.identity_string]: cyclo(1)}
        return StructuredAlgebra(labels, mult, unit, check_assoc=False,
                                 name=f"End{obj}")

    def conductor_hint(self) -> int:
        from math import lcm

        n = 12
        for w in self.walls:
            n = lcm(n, w.left_cat.group.exponent())
        return n

    # -- morphisms (dict string-tuple -> coefficient, at fixed src/dst) -----

    def compose_mor(self, m2, src2, m1, src1):
        """(m2 at src2) o (m1 at src1); src2 must be m1's target."""
        out = {}
        for s1, c1 in m1.items():
            for s2, c2 in m2.items():
                s = self.compose_strings(s2, s1)
                coeff = c1 * c2 * _phase_cyclo(self.scalar(s2, s1, src1))
                acc = out.get(s, cyclo(0)) + coeff
                if acc.is_zero():
                    out.pop(s, None)
                else:
                    out[s] = acc
        return out

    def transport_mor(self, a, c, m, src):
        """Apply the translation functor T_{(a,c)} to (m at src)."""
        out = {}
        for s, coeff in m.items():
            q = self.transport_phase(a, c, s, src)
            out[s] = coeff * _phase_cyclo(q)
        return out

    def mor_inverse_basis(self, s, obj):
        """(B_s at obj)^{-1} as (string, coeff) with source act(s, obj)."""
        sbar = self.inverse_string(s)
        q = self.scalar(sbar, s, obj)
        return sbar, _phase_cyclo(-q)


def ladder_category(M: BimoduleData, N: BimoduleData) -> StrandCategory:
    if M.right_cat.group != N.left_cat.group:
        raise FaceMismatch("middle categories do not match")
    return StrandCategory([M, N], cyclic=False)


def annular_category(strands) -> StrandCategory:
    """strands: list of (BimoduleData, orientation) with 'in' or 'out'."""
    walls = []
    for w, orient in strands:
        if orient == "out":
            walls.append(w.flip())
        elif orient == "in":
            walls.append(w)
        else:
            raise ValueError(f"bad orientation {orient!r}")
    return StrandCategory(walls, cyclic=True)

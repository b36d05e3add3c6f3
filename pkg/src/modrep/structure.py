"""The algebra-level structure pipeline.

Stages, each consuming the certified output of the one before:
simples (chop of the regular module, count certified against the p-regular
class count), Jacobson radical (annihilator of the simples), primitive
orthogonal idempotents (split the identity in A/rad, lift, re-orthogonalize),
PIMs (spun left ideals), Cartan matrix (computed twice, by Hom dimensions
and by chopping each PIM, and compared entrywise).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ChopInstability,
    IncompleteSimpleSet,
    MethodDisagreement,
    NoConvergence,
    NotIdempotentModRad,
    SplitStall,
    SplittingFieldRequired,
)
from .fieldcore import Poly, poly_factor
from .linalg import Mat, Subspace, _add_arr, _nullspace_arr, _rref_arr
from .modalg import (
    AlgebraElem,
    GroupAlgebra,
    LoewyData,
    Module,
    SeedLike,
    _rng,
    chop,
    dual_module,
    factor_multiset,
    hom_dim,
    modules_isomorphic,
    radical_and_socle_series,
    regular_module,
    spin,
    sub_quotient,
)
from .permgroup import conjugacy_data


def _conv_rows(a: GroupAlgebra, vec: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Products vec * r for every row r, as rows of the result."""
    k = a.field
    out = np.zeros_like(rows)
    for g in np.nonzero(vec)[0]:
        idx = a.group.mult[int(g)]
        out[:, idx] = _add_arr(k, out[:, idx], k.MUL[int(vec[g])][rows])
    return out


@dataclass
class SimpleSet:
    """All simple modules up to isomorphism, in (dim, discovery) order."""

    simples: list[Module]
    endo_dims: list[int]
    p_regular_classes: int
    splitting_field_required: bool

    @property
    def splits(self) -> bool:
        return not self.splitting_field_required

    def trivial_index(self) -> int:
        for i, s in enumerate(self.simples):
            if s.dim == 1 and all(g.a[0, 0] == 1 for g in s.gen_action):
                return i
        raise IncompleteSimpleSet("no trivial module among the simples")


def find_simples(a: GroupAlgebra, seed: SeedLike = 0) -> SimpleSet:
    """Chop the regular module and keep one representative per iso class.

    Over a splitting field the number of classes must equal the number of
    p-regular conjugacy classes; disagreement after 5 reseeds is an error.
    """
    rng = _rng(seed)
    _, p_reg = conjugacy_data(a.group, a.field.char)
    reg = regular_module(a)
    last_count = -1
    for _ in range(5):
        factors = chop(reg, rng)
        reps: list[Module] = []
        for f in factors:
            if not any(modules_isomorphic(f, r, rng) for r in reps):
                reps.append(f)
        reps.sort(key=lambda m: m.dim)
        for i, r in enumerate(reps):
            r.label = f"S{i + 1}"
        endo = [hom_dim(r, r) for r in reps]
        splits = all(e == 1 for e in endo)
        if not splits or len(reps) == p_reg:
            return SimpleSet(
                simples=reps,
                endo_dims=endo,
                p_regular_classes=p_reg,
                splitting_field_required=not splits,
            )
        last_count = len(reps)
    raise ChopInstability(
        f"found {last_count} simples but {p_reg} p-regular classes after 5 reseeds"
    )


def jacobson_radical(a: GroupAlgebra, s: SimpleSet) -> Subspace:
    """rad A as the joint annihilator {x : x.S = 0 for every simple S}.

    Certified complete two ways: dim rad = |G| - sum (dim S)^2 / dim End(S)
    (the Wedderburn count; catches duplicated or bogus entries) and
    nilpotency of the annihilator (a missing simple leaves an idempotent in
    it, so the power chain would never reach zero).
    """
    k = a.field
    n = a.dim
    cols = []
    for g in range(n):
        col = np.concatenate([m.element_mat(g).a.reshape(-1) for m in s.simples])
        cols.append(col)
    mat = np.stack(cols, axis=1)  # (sum d_i^2) x |G|
    rad = Subspace(k, n, Mat(k, _nullspace_arr(k, mat)))
    expected = n - sum(
        (m.dim * m.dim) // e for m, e in zip(s.simples, s.endo_dims)
    )
    if any((m.dim * m.dim) % e for m, e in zip(s.simples, s.endo_dims)):
        raise IncompleteSimpleSet("endomorphism dimension does not divide (dim S)^2")
    if rad.dim != expected:
        raise IncompleteSimpleSet(
            f"dim rad = {rad.dim} but the dimension identity gives {expected}"
        )
    try:
        _ideal_nilpotency_index(a, rad)
    except NoConvergence:
        raise IncompleteSimpleSet(
            "annihilator is not nilpotent; the simple set misses a class"
        ) from None
    return rad


def _ideal_nilpotency_index(a: GroupAlgebra, rad: Subspace) -> int:
    """Least m with rad^m = 0, by powering the ideal's basis."""
    k = a.field
    if rad.dim == 0:
        return 1
    current = rad
    m = 1
    while current.dim > 0:
        if m > a.dim:
            raise NoConvergence("ideal power chain failed to reach zero")
        products = np.vstack(
            [_conv_rows(a, r, rad.basis.a) for r in current.basis.a]
        )
        current = Subspace(k, a.dim, Mat(k, products))
        m += 1
    return m


def lift_idempotent(a: GroupAlgebra, e_bar: AlgebraElem, rad: Subspace) -> AlgebraElem:
    """Exact idempotent congruent to e_bar mod rad, by f <- 3f^2 - 2f^3.

    Each step squares the defect f^2 - f inside the nilpotent ideal, so
    ceil(log2(nilpotency index)) + 1 iterations suffice; over GF(2) the
    update degenerates to f <- f^2.
    """
    defect = e_bar * e_bar - e_bar
    if not rad.contains(defect.coeffs):
        raise NotIdempotentModRad("e^2 - e does not lie in the given radical")
    nil = _ideal_nilpotency_index(a, rad)
    iters = max(1, int(np.ceil(np.log2(nil))) + 1)
    three = a.field.scalar_from_int(3)
    two = a.field.scalar_from_int(2)
    f = e_bar
    for _ in range(iters):
        f2 = f * f
        f = f2.scale(three) - (f2 * f).scale(two)
        if f.is_idempotent():
            break
    if not f.is_idempotent():
        raise NoConvergence("lifting iteration did not reach an exact idempotent")
    if not rad.contains((f - e_bar).coeffs):
        raise NoConvergence("lift drifted away from e_bar modulo rad")
    return f


class _QuotientAlgebra:
    """A/rad with multiplication through canonical complement coordinates."""

    def __init__(self, a: GroupAlgebra, rad: Subspace):
        self.a = a
        self.k = a.field
        self.rad = rad
        piv = rad.pivots()
        self.nonpiv = [c for c in range(a.dim) if c not in piv]
        self.dim = len(self.nonpiv)

    def project(self, vec: np.ndarray) -> np.ndarray:
        return self.rad.reduce(vec)[self.nonpiv]

    def lift(self, coords: np.ndarray) -> np.ndarray:
        out = np.zeros(self.a.dim, dtype=self.k.dtype)
        out[self.nonpiv] = coords
        return out

    def one(self) -> np.ndarray:
        return self.project(self.a.one().coeffs)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.project(self.a.conv(self.lift(x), self.lift(y)))


def _min_poly(qa: _QuotientAlgebra, x: np.ndarray, unit: np.ndarray) -> Poly:
    """Minimal polynomial of x in the corner algebra with identity `unit`."""
    k = qa.k
    powers = [unit.copy()]
    while True:
        nxt = qa.mul(powers[-1], x)
        mat = np.array(powers, dtype=k.dtype)
        aug = np.vstack([mat, nxt[None, :]])
        _, rank, _ = _rref_arr(k, aug)
        if rank < len(powers) + 1:
            # nxt is a combination of earlier powers: solve for coefficients
            sol = _solve_combo(k, mat, nxt)
            coeffs = [k.neg(int(c)) for c in sol] + [1]
            return Poly(k, coeffs)
        powers.append(nxt)
        if len(powers) > qa.dim + 1:
            raise SplitStall("minimal polynomial search exceeded the algebra dimension")


def _solve_combo(k, rows: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Coefficients expressing target as a combination of the given rows."""
    aug = np.hstack([rows.T.copy(), target[:, None]])
    r, rank, pivots = _rref_arr(k, aug)
    n = rows.shape[0]
    sol = np.zeros(n, dtype=k.dtype)
    for row_idx, pc in enumerate(pivots):
        if pc == n:
            raise SplitStall("inconsistent combination while splitting")
        sol[pc] = r[row_idx, n]
    return sol


def _poly_of(qa: _QuotientAlgebra, f: Poly, x: np.ndarray, unit: np.ndarray) -> np.ndarray:
    """Evaluate f at x inside the corner algebra (constant term times unit)."""
    acc = np.zeros(qa.dim, dtype=qa.k.dtype)
    for c in reversed(f.coeffs):
        acc = qa.mul(acc, x)
        if c:
            acc = _add_arr(qa.k, acc, qa.k.MUL[c][unit])
    return acc


def _corner_basis(qa: _QuotientAlgebra, e: np.ndarray) -> np.ndarray:
    """Basis of e (A/rad) e."""
    k = qa.k
    rows = []
    for i in range(qa.dim):
        unit_vec = np.zeros(qa.dim, dtype=k.dtype)
        unit_vec[i] = 1
        rows.append(qa.mul(qa.mul(e, unit_vec), e))
    r, rank, _ = _rref_arr(k, np.array(rows, dtype=k.dtype))
    return r[:rank]


def _split_identity(
    qa: _QuotientAlgebra, seed: SeedLike
) -> list[np.ndarray]:
    """Primitive orthogonal idempotents of A/rad summing to 1.

    Repeatedly splits a non-primitive piece e via the minimal polynomial of a
    random element of the corner algebra e(A/rad)e; dim e(A/rad)e = 1 is the
    primitivity certificate.
    """
    rng = _rng(seed)
    k = qa.k
    done: list[np.ndarray] = []
    queue = [qa.one()]
    stall = 0
    while queue:
        e = queue.pop()
        corner = _corner_basis(qa, e)
        if corner.shape[0] <= 1:
            done.append(e)
            continue
        split = None
        for _ in range(200):
            coeffs = rng.integers(0, k.order, size=corner.shape[0])
            x = np.zeros(qa.dim, dtype=k.dtype)
            for i, c in enumerate(coeffs):
                if c:
                    x = _add_arr(k, x, k.MUL[int(c)][corner[i]])
            m = _min_poly(qa, x, e)
            factors = poly_factor(m)
            if len(factors) < 2:
                continue
            if any(mult > 1 for _, mult in factors):
                continue  # semisimple corner: squarefree expected; retry
            pieces = []
            ok = True
            for fpoly, _ in factors:
                cof = m.divmod(fpoly)[0]
                # invert cof modulo fpoly: extended euclid
                inv = _poly_inverse_mod(cof, fpoly)
                if inv is None:
                    ok = False
                    break
                h = (inv * cof) % m
                piece = _poly_of(qa, h, x, e)
                pieces.append(piece)
            if not ok:
                continue
            total = np.zeros(qa.dim, dtype=k.dtype)
            for p in pieces:
                total = _add_arr(k, total, p)
            if not np.array_equal(total, e):
                continue
            good = all(np.array_equal(qa.mul(p, p), p) for p in pieces)
            ortho = all(
                not qa.mul(pieces[i], pieces[j]).any()
                for i in range(len(pieces))
                for j in range(len(pieces))
                if i != j
            )
            if good and ortho:
                split = pieces
                break
        if split is None:
            stall += 1
            if stall > 8:
                raise SplitStall("idempotent splitting stalled; reseed exhausted")
            queue.append(e)
            continue
        queue.extend(split)
    return done


def _poly_inverse_mod(a: Poly, mod: Poly) -> Optional[Poly]:
    """Inverse of a modulo mod, or None when gcd != 1."""
    k = a.ctx
    r0, r1 = mod, a % mod
    s0, s1 = Poly(k, []), Poly(k, [1])
    while not r1.is_zero():
        q, r2 = r0.divmod(r1)
        r0, r1 = r1, r2
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        return None
    inv_lead = k.inv(r0.coeffs[0])
    return s0.scale(inv_lead) % mod


@dataclass
class PimSet:
    """Primitive orthogonal idempotents with their spun projective covers."""

    idempotents: list[AlgebraElem]
    assignment: list[int]  # idempotent index -> simple index
    pims: list[Module]  # one per idempotent, aligned
    representative: list[int]  # simple index -> lowest idempotent index

    def pim_for_simple(self, i: int) -> Module:
        return self.pims[self.representative[i]]

    def multiplicities(self, nsimples: int) -> list[int]:
        out = [0] * nsimples
        for s in self.assignment:
            out[s] += 1
        return out


def primitive_decomposition(
    a: GroupAlgebra, s: SimpleSet, rad: Subspace, seed: SeedLike = 0
) -> PimSet:
    """Orthogonal primitive idempotents f_1..f_N with Sum f_i = 1 and PIMs.

    Splits 1 in A/rad, lifts each piece, then re-orthogonalizes sequentially
    inside the corner (1 - sum f_j) A (1 - sum f_j); the last idempotent is
    the exact complement, so the sum is exactly 1.
    """
    if not s.splits:
        raise SplittingFieldRequired(
            "primitive decomposition needs all End(S) = k; extend the field"
        )
    rng = _rng(seed)
    k = a.field
    qa = _QuotientAlgebra(a, rad)
    bars = _split_identity(qa, rng)
    expected = sum(m.dim for m in s.simples)
    if len(bars) != expected:
        raise SplitStall(f"split produced {len(bars)} pieces, expected {expected}")

    # deterministic order: assign each bar to its simple, then sort stably
    def bar_assignment(bar: np.ndarray) -> int:
        elem = AlgebraElem(a, qa.lift(bar))
        hits = [
            i
            for i, m in enumerate(s.simples)
            if not m.action_of(elem).is_zero()
        ]
        if len(hits) != 1:
            raise SplitStall(f"lifted piece acts nonzero on {len(hits)} simples")
        return hits[0]

    order = sorted(range(len(bars)), key=lambda i: (bar_assignment(bars[i]), i))
    bars = [bars[i] for i in order]

    lifted: list[AlgebraElem] = []
    for i, bar in enumerate(bars):
        if i == len(bars) - 1:
            f = a.one()
            for g in lifted:
                f = f - g
            if not f.is_idempotent():
                raise NoConvergence("complement idempotent failed f^2 = f")
        else:
            u = a.one()
            for g in lifted:
                u = u - g
            cand = AlgebraElem(a, qa.lift(bar))
            g0 = u * cand * u
            f = lift_idempotent(a, g0, rad)
        if not np.array_equal(qa.project(f.coeffs), bar):
            raise NoConvergence("lift does not reduce to its piece modulo rad")
        lifted.append(f)

    # verify pairwise orthogonality and the unit sum
    total = a.zero()
    for f in lifted:
        total = total + f
    if total != a.one():
        raise NoConvergence("idempotents do not sum to 1")
    for i in range(len(lifted)):
        for j in range(len(lifted)):
            if i != j and not (lifted[i] * lifted[j]).is_zero():
                raise NoConvergence("lifted idempotents are not orthogonal")

    reg = regular_module(a)
    assignment = []
    pims = []
    for f in lifted:
        hits = [i for i, m in enumerate(s.simples) if not m.action_of(f).is_zero()]
        if len(hits) != 1:
            raise SplitStall(f"idempotent acts nonzero on {len(hits)} simples")
        si = hits[0]
        assignment.append(si)
        space = spin(reg, [f.coeffs])
        pim, _ = sub_quotient(reg, space)
        pim.label = f"P{si + 1}"
        pims.append(pim)
    representative = []
    for i in range(len(s.simples)):
        rep = next((j for j, si in enumerate(assignment) if si == i), None)
        if rep is None:
            raise SplitStall(f"no idempotent assigned to simple {i}")
        representative.append(rep)
    return PimSet(lifted, assignment, pims, representative)


@dataclass
class CartanMatrix:
    entries: list[list[int]]  # C[i][j] = multiplicity of S_i in P_j

    def is_symmetric(self) -> bool:
        n = len(self.entries)
        return all(
            self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(n)
        )


def cartan_both(
    a: GroupAlgebra, s: SimpleSet, pims: PimSet, seed: SeedLike = 0
) -> tuple[list[list[int]], list[list[int]]]:
    """The Cartan matrix twice: via Hom dimensions and via chopping each PIM."""
    if not s.splits:
        raise SplittingFieldRequired("Cartan invariants computed over splitting fields")
    rng = _rng(seed)
    n = len(s.simples)
    reps = [pims.pim_for_simple(i) for i in range(n)]
    via_hom = [[hom_dim(reps[i], reps[j]) for j in range(n)] for i in range(n)]
    via_chop = [[0] * n for _ in range(n)]
    for j in range(n):
        counts = factor_multiset(reps[j], s.simples, rng)
        for i in range(n):
            via_chop[i][j] = counts[i]
    return via_hom, via_chop


def cartan_matrix(
    a: GroupAlgebra, s: SimpleSet, pims: PimSet, seed: SeedLike = 0
) -> CartanMatrix:
    """C[i][j] = multiplicity of S_i in P_j; both computation routes must agree."""
    via_hom, via_chop = cartan_both(a, s, pims, seed)
    if via_hom != via_chop:
        raise MethodDisagreement(
            f"Cartan via Hom {via_hom} disagrees with Cartan via chop {via_chop}"
        )
    return CartanMatrix(via_hom)


@dataclass
class PimReport:
    """Per-PIM structure: layers plus head/socle/divisibility/dual certificates."""

    simple_index: int
    dim: int
    loewy: LoewyData
    head_index: Optional[int]
    socle_index: Optional[int]
    head_iso_socle: bool
    dim_divisible_by_group_p_part: bool
    dual_partner: Optional[int]  # simple index S* with (P_S)* iso P_{S*}
    dual_pairing_ok: bool

    def layer_mults(self) -> list[tuple[int, ...]]:
        return [layer.mults for layer in self.loewy.radical_layers]


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _unique_simple_of_layer(layer_mults: Sequence[int]) -> Optional[int]:
    hits = [i for i, m in enumerate(layer_mults) if m]
    if len(hits) == 1 and layer_mults[hits[0]] == 1:
        return hits[0]
    return None


def pim_structure_report(
    a: GroupAlgebra,
    s: SimpleSet,
    pims: PimSet,
    rad: Subspace,
    seed: SeedLike = 0,
) -> list[PimReport]:
    """Loewy layers and certificates for one PIM per simple.

    Certificate failures are reported in the dataclass, never raised.
    """
    rng = _rng(seed)
    n = len(s.simples)
    gp = _p_part(a.group.order, a.field.char)
    reports = []
    for i in range(n):
        pim = pims.pim_for_simple(i)
        data = radical_and_socle_series(pim, rad, s.simples, s.endo_dims)
        head = _unique_simple_of_layer(data.radical_layers[0].mults)
        socle = _unique_simple_of_layer(data.socle_layers[0].mults)
        head_iso_socle = head is not None and head == socle
        d = dual_module(pim)
        partner = None
        for j in range(n):
            if modules_isomorphic(d, pims.pim_for_simple(j), rng):
                partner = j
                break
        reports.append(
            PimReport(
                simple_index=i,
                dim=pim.dim,
                loewy=data,
                head_index=head,
                socle_index=socle,
                head_iso_socle=head_iso_socle,
                dim_divisible_by_group_p_part=pim.dim % gp == 0,
                dual_partner=partner,
                dual_pairing_ok=False,
            )
        )
    # dual simples: S* is the simple isomorphic to the dual of S
    dual_simple: list[Optional[int]] = []
    for i in range(n):
        ds = dual_module(s.simples[i])
        dual_simple.append(
            next((j for j in range(n) if modules_isomorphic(ds, s.simples[j], rng)), None)
        )
    for i, rep in enumerate(reports):
        rep.dual_pairing_ok = (
            rep.dual_partner is not None and rep.dual_partner == dual_simple[i]
        )
    return reports

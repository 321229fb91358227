"""Exact character tables via the class-matrix eigenvalue method.

Pipeline: class-multiplication constants -> prime choice -> simultaneous
eigenvectors of the class matrices over F_p (these realize the central
characters lambda_ij = r_j chi_i(g_j) / n_i) -> degree recovery from the
row orthogonality relation -> lifting of eigenvalue multiplicities to exact
cyclotomic values by a mod-p discrete Fourier transform over each element
order.  Everything downstream of the prime field is exact.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import _modp as mp
from .classfun import ClassFunction
from .cyclo import Cyclo, _reduce
from .permgroup import PermGroup, Perm, ResourceCapError

SPLIT_SEED = 0x5EED
PRIME_LIMIT = 2**31


class TableConstructionError(RuntimeError):
    """Internal failure in the table pipeline (bad split, lift, or degree)."""


class ClassConstants:
    """Class-multiplication constants a[j][k][l] with c_j c_k = sum_l a_jkl c_l."""

    def __init__(self, h: int, a: list[list[list[int]]],
                 sizes: tuple[int, ...], inverse_class: list[int]):
        self.h = h
        self.a = a
        self.sizes = sizes
        self.inverse_class = inverse_class

    def class_matrix(self, j: int) -> mp.Matrix:
        return [[self.a[j][k][l] for l in range(self.h)] for k in range(self.h)]


def class_constants(g: PermGroup) -> ClassConstants:
    """a_jkl = #{x in C_j : x^-1 g_l in C_k}, by membership lookup."""
    data = g.conjugacy_classes()
    h = len(data)
    index = data.member_index
    a = [[[0] * h for _ in range(h)] for _ in range(h)]
    for l, cl_l in enumerate(data.classes):
        g_l = cl_l.representative
        for j, cl_j in enumerate(data.classes):
            row = a[j]
            for x in cl_j.members:
                k = index[x.inv() * g_l]
                row[k][l] += 1
    return ClassConstants(h, a, data.sizes, list(data.inverse_class))


def choose_prime(g: PermGroup) -> int:
    """Smallest prime p with p = 1 (mod exponent) and p > 2 sqrt(|G|)."""
    e = g.exponent
    order = g.order
    p = e + 1 if e > 1 else 2
    step = e if e > 1 else 1
    while p <= PRIME_LIMIT:
        if p * p > 4 * order and mp.is_prime(p):
            return p
        p += step
    raise ResourceCapError(f"no suitable prime found below cap {PRIME_LIMIT}")


def _split_space(rows: mp.Matrix, pivots: list[int], mat_t: mp.Matrix,
                 p: int) -> list[tuple[mp.Matrix, list[int]]]:
    """Refine an invariant subspace (row basis in RREF) into eigenspaces of
    one class matrix; returns the space unchanged when it does not split."""
    d = len(rows)
    image = mp.mat_mul(rows, mat_t, p)
    coords = [[image[r][c] for c in pivots] for r in range(d)]
    minpoly = mp.minimal_polynomial(coords, p)
    eigvals = [x for x in range(p) if mp.poly_eval(minpoly, x, p) == 0]
    if len(eigvals) <= 1:
        return [(rows, pivots)]
    out = []
    total_dim = 0
    for lam in eigvals:
        shifted = [
            [(coords[i][j] - (lam if i == j else 0)) % p for j in range(d)]
            for i in range(d)
        ]
        coord_rows = mp.nullspace_rows(shifted, p)
        if not coord_rows:
            continue
        sub = mp.mat_mul(coord_rows, rows, p)
        sub_rref, sub_pivots = mp.rref(sub, p)
        total_dim += len(sub_rref)
        out.append((sub_rref, sub_pivots))
    if total_dim != d:
        raise TableConstructionError(
            "class matrix not diagonalizable over F_p (bad prime)"
        )
    return out


def _refine_spaces(spaces, mat: mp.Matrix, p: int):
    mat_t = mp.transpose(mat)
    out = []
    for rows, pivots in spaces:
        if len(rows) == 1:
            out.append((rows, pivots))
        else:
            out.extend(_split_space(rows, pivots, mat_t, p))
    return out


def _random_split_phase(spaces, cc: ClassConstants, p: int):
    """Refine by seeded pseudo-random integer combinations of the class
    matrices until every subspace is a line; a generic combination separates
    the commuting family, but small fields can collide eigenvalues, hence
    the retry loop."""
    rng = random.Random(SPLIT_SEED)
    h = cc.h
    attempts = 0
    while any(len(rows) > 1 for rows, _ in spaces) and attempts < 32:
        coeffs = [rng.randrange(p) for _ in range(h)]
        combined = [
            [sum(coeffs[j] * cc.a[j][k][l] for j in range(h)) % p for l in range(h)]
            for k in range(h)
        ]
        spaces = _refine_spaces(spaces, combined, p)
        attempts += 1
    return spaces


def modp_eigenbasis(cc: ClassConstants, p: int) -> list[list[int]]:
    """Simultaneous eigenvectors of all class matrices over F_p, each
    normalized so its identity-class coordinate is 1."""
    h = cc.h
    start, start_piv = mp.rref(mp.identity(h), p)
    spaces = [(start, start_piv)]

    for j in range(1, h):
        if all(len(rows) == 1 for rows, _ in spaces):
            break
        spaces = _refine_spaces(spaces, cc.class_matrix(j), p)

    spaces = _random_split_phase(spaces, cc, p)
    if any(len(rows) > 1 for rows, _ in spaces):
        raise TableConstructionError("failed to separate eigenspaces (bad prime)")

    vectors = []
    for rows, _ in spaces:
        v = rows[0]
        if v[0] == 0:
            raise TableConstructionError(
                "eigenvector vanishes on the identity class"
            )
        inv = pow(v[0], p - 2, p)
        vectors.append([x * inv % p for x in v])
    return vectors


def degrees_from_eigen(vectors: list[list[int]], cc: ClassConstants,
                       p: int, order: int) -> list[int]:
    """Recover each degree from n_i^2 = |G| / sum_j lambda_ij lambda_ij* / r_j,
    taking the residue square root in (0, p/2)."""
    degrees = []
    for v in vectors:
        s = 0
        for j in range(cc.h):
            r_inv = pow(cc.sizes[j] % p, p - 2, p)
            s = (s + v[j] * v[cc.inverse_class[j]] % p * r_inv) % p
        if s == 0:
            raise TableConstructionError("degenerate orthogonality sum")
        n_sq = order % p * pow(s, p - 2, p) % p
        root = mp.sqrt_mod(n_sq, p)
        if root is None or root == 0:
            raise TableConstructionError(f"degree residue {n_sq} has no square root")
        degrees.append(min(root, p - root))
    if sum(n * n for n in degrees) != order:
        raise TableConstructionError(
            f"recovered degrees {sorted(degrees)} violate sum of squares = {order}"
        )
    return degrees


def _row_sort_key(values: tuple[Cyclo, ...]):
    key = [int(values[0].as_rational())]
    for v in values:
        fv = v.to_float()
        key.append((-int(round(fv.real * 1e9)), -int(round(fv.imag * 1e9))))
    return tuple(key)


class CharacterTable:
    """The square table of irreducible characters in canonical order:
    rows by ascending degree (ties by descending value key), columns in the
    group's canonical class order."""

    def __init__(self, group: PermGroup, rows: list[ClassFunction]):
        data = group.conjugacy_classes()
        if len(rows) != len(data):
            raise TableConstructionError(
                f"table is not square: {len(rows)} rows, {len(data)} classes"
            )
        self.group = group
        self.class_data = data
        self.rows = sorted(rows, key=lambda r: _row_sort_key(r.values))
        self.degrees = tuple(int(r.values[0].as_rational()) for r in self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def value_matrix(self) -> list[tuple[Cyclo, ...]]:
        return [row.values for row in self.rows]

    def same_abstract_table(self, other: "CharacterTable") -> bool:
        """Abstract-table equality: canonical value matrices and class-size
        vectors agree.  Does not imply the groups are isomorphic."""
        if self.class_data.sizes != other.class_data.sizes:
            return False
        if len(self.rows) != len(other.rows):
            return False
        return all(
            a == b
            for ra, rb in zip(self.value_matrix(), other.value_matrix())
            for a, b in zip(ra, rb)
        )

    def to_json(self) -> dict:
        return {
            "group": self.group.spec,
            "order": self.group.order,
            "classes": [
                {
                    "rep_cycles": cl.representative.cycle_string(),
                    "size": cl.size,
                    "element_order": cl.element_order,
                }
                for cl in self.class_data.classes
            ],
            "characters": [
                {
                    "degree": self.degrees[i],
                    "values": [v.to_json() for v in row.values],
                }
                for i, row in enumerate(self.rows)
            ],
        }

    def __repr__(self) -> str:
        return f"CharacterTable({self.group.spec}, {len(self.rows)}x{len(self.rows)})"


def lift_characters(group: PermGroup, vectors: list[list[int]],
                    degrees: list[int], p: int) -> CharacterTable:
    """Lift mod-p character values to exact cyclotomics.

    For each row and class, the multiplicities of the e-th roots of unity
    among the eigenvalues of the representing matrix are recovered by an
    inverse DFT of chi mod p along the power map of the class, using a fixed
    element z of order e in F_p; the exact value is then sum_k m_k zeta_e^k.
    """
    data = group.conjugacy_classes()
    e = group.exponent
    h = len(data)
    z = mp.element_of_order(e, p)
    size_inv = [pow(cl.size % p, p - 2, p) for cl in data.classes]
    rows = []
    for i, v in enumerate(vectors):
        n_i = degrees[i]
        values = []
        for j in range(h):
            d = data.classes[j].element_order
            zd_inv = pow(z, (e // d) * (p - 2), p)  # inverse of the order-d root
            chibar = [
                n_i * v[data.power_class[j][s]] % p * size_inv[data.power_class[j][s]] % p
                for s in range(d)
            ]
            d_inv = pow(d, p - 2, p)
            exps = [Fraction(0)] * e
            total = 0
            for t in range(d):
                step = pow(zd_inv, t, p)
                acc = 0
                w = 1
                for s in range(d):
                    acc = (acc + chibar[s] * w) % p
                    w = w * step % p
                m = acc * d_inv % p
                if m > n_i:
                    raise TableConstructionError(
                        f"lifted multiplicity {m} exceeds degree {n_i}"
                    )
                if m:
                    exps[t * (e // d) % e] += m
                    total += m
            if total != n_i:
                raise TableConstructionError(
                    f"multiplicities sum to {total}, expected degree {n_i}"
                )
            values.append(Cyclo(e, _reduce(e, exps)))
        rows.append(ClassFunction(group, values))
    return CharacterTable(group, rows)


def build_character_table(g: PermGroup) -> CharacterTable:
    """Full pipeline: constants -> prime -> eigenbasis -> degrees -> lift."""
    cc = class_constants(g)
    p = choose_prime(g)
    vectors = modp_eigenbasis(cc, p)
    degrees = degrees_from_eigen(vectors, cc, p, g.order)
    return lift_characters(g, vectors, degrees, p)


def linear_characters(g: PermGroup) -> list[ClassFunction]:
    """All degree-1 characters, lifted from the abelian quotient G/G'.

    The quotient is peeled into a chain of cyclic extensions; each partial
    character extends in exactly d ways per relative order d, so the count
    is the quotient order [G:G'].
    """
    derived = g.commutator_subgroup()
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for el in g.elements:
        if el in coset_of:
            continue
        idx = len(reps)
        members = [el * t for t in derived.elements]
        for m in members:
            coset_of[m] = idx
        reps.append(min(members))
    n_q = len(reps)

    def qmul(a: int, b: int) -> int:
        return coset_of[reps[a] * reps[b]]

    def qorder(x: int) -> int:
        s, cur = 1, x
        while cur != 0:
            cur = qmul(cur, x)
            s += 1
        return s

    exponent = 1
    for x in range(n_q):
        exponent = math.lcm(exponent, qorder(x))

    covered = [0]
    covered_set = {0}
    chars: list[dict[int, int]] = [{0: 0}]
    while len(covered) < n_q:
        x = next(c for c in range(n_q) if c not in covered_set)
        xpow = [0]
        cur = x
        while cur not in covered_set:
            xpow.append(cur)
            cur = qmul(cur, x)
        d = len(xpow)  # relative order of x; xpow[a] = x^a for a < d
        landing = cur  # x^d, already covered
        new_chars = []
        for chi in chars:
            c = chi[landing]
            if c % d != 0:
                raise TableConstructionError("character extension is unsolvable")
            for t in range(d):
                k = (c // d + t * (exponent // d)) % exponent
                ext = dict(chi)
                for a in range(1, d):
                    for hcoset in covered:
                        ext[qmul(hcoset, xpow[a])] = (chi[hcoset] + a * k) % exponent
                new_chars.append(ext)
        chars = new_chars
        new_covered = list(covered)
        for a in range(1, d):
            for hcoset in covered:
                new_covered.append(qmul(hcoset, xpow[a]))
        covered = new_covered
        covered_set = set(covered)

    data = g.conjugacy_classes()
    out = []
    for chi in chars:
        values = []
        for cl in data.classes:
            k = chi[coset_of[cl.representative]]
            num = [Fraction(0)] * exponent
            num[k % exponent] = Fraction(1)
            values.append(Cyclo(exponent, _reduce(exponent, num)))
        out.append(ClassFunction(g, values))
    out.sort(key=lambda f: _row_sort_key(f.values))
    return out

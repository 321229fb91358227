"""Number theory and dense linear algebra over a prime field F_p.

Everything here is plain Gaussian elimination and trial-division number
theory; matrices are lists of lists of ints reduced mod p.  Sizes are tiny
(class counts at desk scale), so clarity wins over asymptotics.
"""

from __future__ import annotations



def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, {prime: multiplicity}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group mod prime p."""
    if p == 2:
        return 1
    factors = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root found mod {p}")


def element_of_order(e: int, p: int) -> int:
    """A fixed element of exact multiplicative order e mod p (requires e | p-1)."""
    if (p - 1) % e != 0:
        raise ValueError(f"{e} does not divide {p}-1")
    return pow(primitive_root(p), (p - 1) // e, p)


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod odd prime p via Tonelli-Shanks, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


# -- matrices over F_p ----------------------------------------------------------

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik == 0:
                continue
            bk = b[k]
            for j in range(cols):
                oi[j] = (oi[j] + aik * bk[j]) % p
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(a: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices; zero rows dropped."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] % p != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % p != 0:
                factor = m[i][c]
                m[i] = [(x - factor * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def nullspace_rows(a: Matrix, p: int) -> Matrix:
    """Rows v with v @ a = 0 (a basis of the left null space, in RREF)."""
    reduced, pivots = rref(transpose(a), p)
    n = len(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-reduced[r][f]) % p
        basis.append(v)
    reduced_basis, _ = rref(basis, p) if basis else ([], [])
    return reduced_basis


def poly_mod_trim(a: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(num: list[int], den: list[int], p: int):
    num = [x % p for x in num]
    den = poly_mod_trim(den, p)
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    deg_d = len(den) - 1
    if len(num) - 1 < deg_d:
        return [0], poly_mod_trim(num, p)
    inv_lead = pow(den[-1], p - 2, p)
    quot = [0] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i] * inv_lead % p
        if c == 0:
            continue
        quot[i - deg_d] = c
        for j, dj in enumerate(den):
            num[i - deg_d + j] = (num[i - deg_d + j] - c * dj) % p
    return poly_mod_trim(quot, p), poly_mod_trim(num, p)


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = poly_mod_trim(a, p), poly_mod_trim(b, p)
    while b != [0]:
        _, r = poly_divmod(a, b, p)
        a, b = b, r
    if a != [0]:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def poly_lcm(a: list[int], b: list[int], p: int) -> list[int]:
    g = poly_gcd(a, b, p)
    q, _ = poly_divmod(poly_mul(a, b, p), g, p)
    return q


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return poly_mod_trim(out, p)


def poly_eval(a: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def minimal_polynomial(a: Matrix, p: int) -> list[int]:
    """Minimal polynomial of the square matrix a over F_p (monic, ascending).

    Computed as the lcm of the annihilators of the standard basis vectors
    under the Krylov iteration v, vA, vA^2, ...
    """
    n = len(a)
    result = [1]
    for start in range(n):
        v = [1 if i == start else 0 for i in range(n)]
        krylov = [v[:]]
        while True:
            nxt = [sum(krylov[-1][k] * a[k][j] for k in range(n)) % p for j in range(n)]
            # test linear dependence of nxt on the krylov rows
            stacked = krylov + [nxt]
            reduced, pivots = rref(stacked, p)
            if len(reduced) == len(krylov):
                # dependent: solve for coefficients of the annihilator
                coeffs = _solve_dependence(krylov, nxt, p)
                ann = [(-c) % p for c in coeffs] + [1]
                result = poly_lcm(result, ann, p)
                break
            krylov.append(nxt)
        if len(result) == n + 1:
            break
    return result


def _solve_dependence(rows: Matrix, target: list[int], p: int) -> list[int]:
    """Coefficients c with sum c_i rows[i] = target (rows independent)."""
    k = len(rows)
    n = len(target)
    aug = [[rows[i][j] for i in range(k)] + [target[j]] for j in range(n)]
    reduced, pivots = rref(aug, p)
    coeffs = [0] * k
    for r, c in enumerate(pivots):
        if c < k:
            coeffs[c] = reduced[r][k]
        else:
            raise ValueError("target not in span")
    return coeffs

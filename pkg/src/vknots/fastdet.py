"""Exact determinants of Laurent-polynomial matrices via modular evaluation.

The fraction-free Bareiss routine in :mod:`vknots.matrix` is the reference
implementation, but its intermediate swell makes large relation matrices
slow.  This module computes the same determinants exactly by a standard
evaluation/interpolation scheme:

* shift each row by a monomial so all exponents are nonnegative (the
  determinant picks up a known monomial factor),
* bound the degree (sum of per-row maxima) and the coefficient l1-norm
  (product of per-row entry-norm sums),
* evaluate the matrix at enough integer points modulo several primes,
  run batched Gaussian elimination in numpy, interpolate the coefficients
  with a cached inverse Vandermonde matrix, and
* lift by the Chinese remainder theorem with symmetric representatives.

Gaussian-integer coefficients are handled with primes p = 1 (mod 4): the
two ring maps i -> +/- sqrt(-1) (mod p) give conjugate evaluations whose
half-sum and half-difference separate the real and imaginary parts.

Every step is exact; no floating point is involved anywhere.
"""

from __future__ import annotations

import numpy as np

from .laurent import LaurentPoly, LaurentPoly2
from .quaternion import GaussianLaurent

_PRIME_START = 15_000_000
_prime_cache: list[tuple[int, int]] = []  # (p, sqrt(-1) mod p)
_vand_cache: dict[tuple[int, int], np.ndarray] = {}


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sqrt_minus_one(p):
    for a in range(2, p):
        r = pow(a, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return r
    raise ArithmeticError(f"no sqrt(-1) mod {p}")


def _primes(count):
    """First `count` cached primes p = 1 (mod 4), each with sqrt(-1)."""
    n = _prime_cache[-1][0] + 4 if _prime_cache else _PRIME_START + 1
    while n % 4 != 1:
        n += 1
    while len(_prime_cache) < count:
        if _is_prime(n):
            _prime_cache.append((n, _sqrt_minus_one(n)))
        n += 4
    return _prime_cache[:count]


def _num_primes_for(bound):
    """How many ~15e6 primes are needed so their product exceeds 2*bound."""
    need = 2 * bound + 1
    prod, k = 1, 0
    while prod < need:
        prod *= _PRIME_START
        k += 1
    return max(k, 1)


def _modpow(base, e, p):
    result = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


def _batch_det_mod(a, p):
    """Determinants mod p of a stack of square int64 matrices (B, n, n)."""
    a = np.array(a, dtype=np.int64) % p
    B, n, _ = a.shape
    det = np.ones(B, dtype=np.int64)
    for k in range(n):
        col = a[:, k:, k]
        nz = col != 0
        has = nz.any(axis=1)
        det[~has] = 0
        piv_rel = nz.argmax(axis=1)
        swap = (piv_rel > 0) & has
        idx = np.nonzero(swap)[0]
        if idx.size:
            rk = piv_rel[idx] + k
            tmp = a[idx, k, :].copy()
            a[idx, k, :] = a[idx, rk, :]
            a[idx, rk, :] = tmp
            det[idx] = (p - det[idx]) % p
        piv = a[:, k, k]
        det = det * piv % p
        if k + 1 < n:
            inv = _modpow(np.where(piv == 0, 1, piv), p - 2, p)
            factors = a[:, k + 1 :, k] * inv[:, None] % p
            a[:, k + 1 :, k:] = (
                a[:, k + 1 :, k:] - factors[..., None] * a[:, None, k, k:]
            ) % p
    return det


def _vand_inv(npoints, p):
    """Inverse mod p of the Vandermonde matrix at points 1..npoints."""
    key = (p, npoints)
    cached = _vand_cache.get(key)
    if cached is not None:
        return cached
    m = npoints
    V = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        x = i + 1
        acc = 1
        for j in range(m):
            V[i, j] = acc
            acc = acc * x % p
    A = np.concatenate([V, np.eye(m, dtype=np.int64)], axis=1)
    for k in range(m):
        if A[k, k] == 0:
            for r in range(k + 1, m):
                if A[r, k]:
                    A[[k, r]] = A[[r, k]]
                    break
        inv = pow(int(A[k, k]), p - 2, p)
        A[k] = A[k] * inv % p
        for r in range(m):
            if r != k and A[r, k]:
                A[r] = (A[r] - A[r, k] * A[k]) % p
    out = A[:, m:]
    _vand_cache[key] = out
    return out


def _crt_symmetric(residues, primes):
    """Symmetric-range integer from residues modulo pairwise-coprime primes."""
    x, M = 0, 1
    for r, p in zip(residues, primes):
        t = (r - x) * pow(M, -1, p) % p
        x += M * t
        M *= p
    if x > M // 2:
        x -= M
    return x


def _point_powers(npoints, maxdeg, p):
    XP = np.empty((npoints, maxdeg + 1), dtype=np.int64)
    for i in range(npoints):
        x = i + 1
        acc = 1
        for j in range(maxdeg + 1):
            XP[i, j] = acc
            acc = acc * x % p
    return XP


def det_gaussian_many(mats, var="t"):
    """Exact determinants of matrices over Z[i][t, t^-1].

    Returns one GaussianLaurent per input matrix, batching all evaluation
    work across matrices and primes.
    """
    results: list = [None] * len(mats)
    zero = GaussianLaurent(LaurentPoly({}, var), LaurentPoly({}, var))
    jobs = []  # (idx, n, re_coeffs, im_coeffs, entry_deg, total_shift)
    D, Lmax = 0, 1
    for idx, mat in enumerate(mats):
        n = len(mat)
        if n == 0:
            results[idx] = GaussianLaurent.const(1, 0, var)
            continue
        shifted, total_shift, degsum, L = [], 0, 0, 1
        ok = True
        for row in mat:
            nz = [e for e in row if e]
            if not nz:
                ok = False
                break
            v = min(e.min_exp() for e in nz)
            total_shift += v
            srow = [e.shift(-v) for e in row]
            shifted.append(srow)
            degsum += max(e.max_exp() for e in srow if e)
            L *= sum(e.l1_norm() for e in srow)
        if not ok:
            results[idx] = zero
            continue
        ed = max(
            (e.max_exp() for row in shifted for e in row if e), default=0
        )
        rc = [
            [[e.re.terms.get(d, 0) for d in range(ed + 1)] for e in row]
            for row in shifted
        ]
        ic = [
            [[e.im.terms.get(d, 0) for d in range(ed + 1)] for e in row]
            for row in shifted
        ]
        jobs.append((idx, n, rc, ic, ed, total_shift))
        D = max(D, degsum)
        Lmax = max(Lmax, L)
    if not jobs:
        return results

    P = D + 1
    primes = _primes(_num_primes_for(Lmax))
    # residue coefficient arrays per job: lists over primes
    job_res = {j[0]: ([], []) for j in jobs}  # idx -> (re per prime, im)
    for p, root in primes:
        Vinv = _vand_inv(P, p)
        inv2 = pow(2, p - 2, p)
        inv2r = pow(2 * root % p, p - 2, p)
        # build evaluation batches grouped by size
        groups: dict[int, list] = {}
        for idx, n, rc, ic, ed, _sh in jobs:
            XP = _point_powers(P, ed, p)
            Cre = np.array(rc, dtype=object) % p
            Cim = np.array(ic, dtype=object) % p
            Cre = Cre.astype(np.int64)
            Cim = Cim.astype(np.int64)
            vre = np.tensordot(Cre, XP, axes=([2], [1])) % p  # (n, n, P)
            vim = np.tensordot(Cim, XP, axes=([2], [1])) % p
            mplus = (vre + root * vim) % p  # i -> +root
            mminus = (vre - root * vim) % p  # i -> -root
            stack = np.concatenate(
                [np.moveaxis(mplus, 2, 0), np.moveaxis(mminus, 2, 0)]
            )  # (2P, n, n)
            groups.setdefault(n, []).append((idx, stack))
        for n, items in groups.items():
            big = np.concatenate([s for _, s in items])
            # cap working-set size: eliminate in chunks of ~2e6 entries
            chunk = max(1, 2_000_000 // (n * n))
            dets = np.concatenate(
                [
                    _batch_det_mod(big[i : i + chunk], p)
                    for i in range(0, len(big), chunk)
                ]
            )
            for pos, (idx, _s) in enumerate(items):
                seg = dets[pos * 2 * P : (pos + 1) * 2 * P]
                vplus, vminus = seg[:P], seg[P:]
                revals = (vplus + vminus) * inv2 % p
                imvals = (vplus - vminus) * inv2r % p
                recoef = Vinv @ revals % p
                imcoef = Vinv @ imvals % p
                job_res[idx][0].append(recoef)
                job_res[idx][1].append(imcoef)

    plist = [p for p, _ in primes]
    for idx, n, _rc, _ic, _ed, total_shift in jobs:
        relists, imlists = job_res[idx]
        rterms, iterms = {}, {}
        for d in range(P):
            c = _crt_symmetric([int(a[d]) for a in relists], plist)
            if c:
                rterms[d] = c
            c = _crt_symmetric([int(a[d]) for a in imlists], plist)
            if c:
                iterms[d] = c
        g = GaussianLaurent(
            LaurentPoly(rterms, var), LaurentPoly(iterms, var)
        ).shift(total_shift)
        results[idx] = g
    return results


def det_gaussian_submatrices(mat, selections, var="t"):
    """Exact determinants of many square submatrices of one matrix over
    Z[i][t, t^-1].

    selections is a list of (rows, cols) index tuples (equal lengths).
    The base matrix is evaluated once per prime and each submatrix is a
    slice of the evaluated stack, so the cost of many overlapping minors
    (as in codimension-1 gcds) stays near the cost of one determinant.
    """
    m = len(mat)
    zero = GaussianLaurent(LaurentPoly({}, var), LaurentPoly({}, var))
    if m == 0:
        return [GaussianLaurent.const(1, 0, var) for _ in selections]
    shifts = [0] * m
    rowmax = [0] * m
    rowl1 = [1] * m
    zero_rows = set()
    shifted = []
    for r, row in enumerate(mat):
        nz = [e for e in row if e]
        if not nz:
            zero_rows.add(r)
            shifted.append(list(row))
            continue
        v = min(e.min_exp() for e in nz)
        shifts[r] = v
        srow = [e.shift(-v) for e in row]
        shifted.append(srow)
        rowmax[r] = max(e.max_exp() for e in srow if e)
        rowl1[r] = sum(e.l1_norm() for e in srow)
    live = [
        (i, sel)
        for i, sel in enumerate(selections)
        if not (set(sel[0]) & zero_rows)
    ]
    results = [zero] * len(selections)
    if not live:
        return results
    D = max(sum(rowmax[r] for r in sel[0]) for _i, sel in live)
    Lmax = max(
        max((_prod(rowl1[r] for r in sel[0]) for _i, sel in live)), 1
    )
    P = D + 1
    ed = max((e.max_exp() for row in shifted for e in row if e), default=0)
    Cre = np.array(
        [[[e.re.terms.get(d, 0) for d in range(ed + 1)] for e in row] for row in shifted],
        dtype=np.int64,
    )
    Cim = np.array(
        [[[e.im.terms.get(d, 0) for d in range(ed + 1)] for e in row] for row in shifted],
        dtype=np.int64,
    )
    primes = _primes(_num_primes_for(Lmax))
    per_sel = {i: ([], []) for i, _sel in live}
    for p, root in primes:
        Vinv = _vand_inv(P, p)
        inv2 = pow(2, p - 2, p)
        inv2r = pow(2 * root % p, p - 2, p)
        XP = _point_powers(P, ed, p)
        vre = np.tensordot(Cre % p, XP, axes=([2], [1])) % p
        vim = np.tensordot(Cim % p, XP, axes=([2], [1])) % p
        stack = np.concatenate(
            [
                np.moveaxis((vre + root * vim) % p, 2, 0),
                np.moveaxis((vre - root * vim) % p, 2, 0),
            ]
        )  # (2P, m, m): i -> +root then i -> -root
        groups: dict[int, list] = {}
        for i, (rows, cols) in live:
            groups.setdefault(len(rows), []).append((i, rows, cols))
        for k, items in groups.items():
            subs = [
                stack[:, rows, :][:, :, cols] for _i, rows, cols in items
            ]
            big = np.concatenate(subs)
            chunk = max(1, 2_000_000 // max(k * k, 1))
            dets = np.concatenate(
                [
                    _batch_det_mod(big[i : i + chunk], p)
                    for i in range(0, len(big), chunk)
                ]
            )
            for pos, (i, _rows, _cols) in enumerate(items):
                seg = dets[pos * 2 * P : (pos + 1) * 2 * P]
                vplus, vminus = seg[:P], seg[P:]
                per_sel[i][0].append(Vinv @ ((vplus + vminus) * inv2 % p) % p)
                per_sel[i][1].append(Vinv @ ((vplus - vminus) * inv2r % p) % p)
    plist = [p for p, _ in primes]
    for i, (rows, _cols) in live:
        relists, imlists = per_sel[i]
        rterms, iterms = {}, {}
        for d in range(P):
            c = _crt_symmetric([int(a[d]) for a in relists], plist)
            if c:
                rterms[d] = c
            c = _crt_symmetric([int(a[d]) for a in imlists], plist)
            if c:
                iterms[d] = c
        corr = sum(shifts[r] for r in rows)
        results[i] = GaussianLaurent(
            LaurentPoly(rterms, var), LaurentPoly(iterms, var)
        ).shift(corr)
    return results


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


def det_laurent_many(mats, var="t"):
    """Exact determinants of matrices over Z[t, t^-1]."""
    gmats = [
        [[GaussianLaurent.from_poly(e) for e in row] for row in mat]
        for mat in mats
    ]
    out = []
    for g in det_gaussian_many(gmats, var=var):
        if not g.im.is_zero():
            raise ArithmeticError("real determinant came out complex")
        out.append(g.re)
    return out


def det_laurent2(mat):
    """Exact determinant of a matrix over Z[s, s^-1, t, t^-1]."""
    n = len(mat)
    if n == 0:
        return LaurentPoly2.const(1)
    shifted, tshift, sshift = [], 0, 0
    Ds = Dt = 0
    L = 1
    for row in mat:
        nz = [e for e in row if e]
        if not nz:
            return LaurentPoly2({})
        vs = min(e.min_exps()[0] for e in nz)
        vt = min(e.min_exps()[1] for e in nz)
        sshift += vs
        tshift += vt
        srow = [e.shift(-vs, -vt) for e in row]
        shifted.append(srow)
        Ds += max(e.max_exps()[0] for e in srow if e)
        Dt += max(e.max_exps()[1] for e in srow if e)
        L *= sum(e.l1_norm() for e in srow)
    eds = max((e.max_exps()[0] for row in shifted for e in row if e), default=0)
    edt = max((e.max_exps()[1] for row in shifted for e in row if e), default=0)
    coeffs = [
        [
            [
                [e.terms.get((a, b), 0) for b in range(edt + 1)]
                for a in range(eds + 1)
            ]
            for e in row
        ]
        for row in shifted
    ]
    Ps, Pt = Ds + 1, Dt + 1
    primes = _primes(_num_primes_for(L))
    grids = []
    for p, _root in primes:
        C = (np.array(coeffs, dtype=object) % p).astype(np.int64)
        XS = _point_powers(Ps, eds, p)
        XT = _point_powers(Pt, edt, p)
        # vals[r, c, a, b] = sum_{i,j} C[r,c,i,j] * s_a^i * t_b^j
        v = np.tensordot(C, XT, axes=([3], [1])) % p  # (n, n, eds+1, Pt)
        v = np.tensordot(v, XS, axes=([2], [1])) % p  # (n, n, Pt, Ps)
        stack = np.empty((Ps * Pt, n, n), dtype=np.int64)
        for a in range(Ps):
            for b in range(Pt):
                stack[a * Pt + b] = v[:, :, b, a]
        dets = _batch_det_mod(stack, p).reshape(Ps, Pt)
        Vsinv = _vand_inv(Ps, p)
        Vtinv = _vand_inv(Pt, p)
        grid = Vsinv @ dets % p
        grid = grid @ Vtinv.T % p
        grids.append(grid)
    plist = [p for p, _ in primes]
    terms = {}
    for a in range(Ps):
        for b in range(Pt):
            c = _crt_symmetric([int(g[a, b]) for g in grids], plist)
            if c:
                terms[(a, b)] = c
    return LaurentPoly2(terms).shift(sshift, tshift)

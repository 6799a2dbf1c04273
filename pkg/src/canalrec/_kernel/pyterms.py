"""Pure-Python reference implementation of the hot polynomial kernels.

Terms are dicts mapping exponent tuples (one entry per variable) to
nonzero coefficients.  Coefficients may be ints, Fractions, or any ring
element supporting +, *, / and truth testing; the kernels never assume a
particular numeric type.  The compiled twin in ``_cyterms.pyx`` must stay
behaviourally identical: ``tests/test_kernel.py`` cross-checks both.
"""

BACKEND = "python"


class KernelDivisionError(ArithmeticError):
    """Raised when terms_divexact is asked for a non-exact quotient."""


def terms_mul(A, B):
    """Multiply two term dicts, dropping coefficients that cancel to zero."""
    if len(A) > len(B):
        A, B = B, A
    out = {}
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            acc = out.get(e)
            if acc is None:
                if c:
                    out[e] = c
            else:
                acc = acc + c
                if acc:
                    out[e] = acc
                else:
                    del out[e]
    return out


def _coeff_divexact(c, d):
    if type(c) is int and type(d) is int:
        q, r = divmod(c, d)
        if r:
            raise KernelDivisionError("coefficient not divisible")
        return q
    return c / d


def terms_divexact(A, B):
    """Exact division of term dicts; raises KernelDivisionError otherwise.

    Uses plain lexicographic order on exponent tuples.  If B divides A in
    the polynomial ring the division terminates with remainder zero.
    """
    if not B:
        raise KernelDivisionError("division by zero polynomial")
    if not A:
        return {}
    eb = max(B)
    cb = B[eb]
    rem = dict(A)
    out = {}
    while rem:
        ea = max(rem)
        ca = rem[ea]
        e = tuple(x - y for x, y in zip(ea, eb))
        if any(x < 0 for x in e):
            raise KernelDivisionError("monomial not divisible")
        q = _coeff_divexact(ca, cb)
        out[e] = q
        for eb2, cb2 in B.items():
            e2 = tuple(x + y for x, y in zip(e, eb2))
            c2 = q * cb2
            acc = rem.get(e2)
            if acc is None:
                if c2:
                    rem[e2] = -c2
            else:
                acc = acc - c2
                if acc:
                    rem[e2] = acc
                else:
                    del rem[e2]
    return out


def dense_mul(a, b):
    """Convolution of dense univariate coefficient lists (low degree first)."""
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if not cb:
                continue
            c = ca * cb
            acc = out[i + j]
            out[i + j] = c if acc is None else acc + c
    zero = a[0] * 0
    return [zero if c is None else c for c in out]

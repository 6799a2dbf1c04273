# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of pyterms: sparse term products, exact division and
dense univariate convolution.  Coefficients stay generic Python objects
(exact rationals, big ints, algebraic extension elements); the win over
the pure version is the loop and tuple machinery, not coefficient math.
"""

BACKEND = "cython"


class KernelDivisionError(ArithmeticError):
    pass


def terms_mul(dict A, dict B):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, c, acc
    cdef Py_ssize_t i, n
    if len(A) > len(B):
        A, B = B, A
    for ea, ca in A.items():
        for eb, cb in B.items():
            n = len(ea)
            e = tuple([ea[i] + eb[i] for i in range(n)])
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


cdef object _coeff_divexact(object c, object d):
    cdef object q, r
    if type(c) is int and type(d) is int:
        q, r = divmod(c, d)
        if r:
            raise KernelDivisionError("coefficient not divisible")
        return q
    return c / d


def terms_divexact(dict A, dict B):
    cdef dict rem, out
    cdef tuple ea, eb, e, e2, eb2
    cdef object ca, cb, q, cb2, c2, acc
    cdef Py_ssize_t i, n
    cdef bint neg
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
        n = len(ea)
        neg = False
        e = tuple([ea[i] - eb[i] for i in range(n)])
        for i in range(n):
            if e[i] < 0:
                neg = True
                break
        if neg:
            raise KernelDivisionError("monomial not divisible")
        q = _coeff_divexact(ca, cb)
        out[e] = q
        for eb2, cb2 in B.items():
            e2 = tuple([e[i] + eb2[i] for i in range(n)])
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


def dense_mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j
    cdef object ca, cb, c, acc, zero
    if la == 0 or lb == 0:
        return []
    cdef list out = [None] * (la + lb - 1)
    for i in range(la):
        ca = a[i]
        if not ca:
            continue
        for j in range(lb):
            cb = b[j]
            if not cb:
                continue
            c = ca * cb
            acc = out[i + j]
            out[i + j] = c if acc is None else acc + c
    zero = a[0] * 0
    for i in range(la + lb - 1):
        if out[i] is None:
            out[i] = zero
    return out

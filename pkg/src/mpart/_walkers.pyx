# cython: boundscheck=False, wraparound=False
"""Compiled walkers for the hot counting loops.

Same functions, arguments, results, and cap semantics as the pure-Python
module mpart._walkers_py; each returns a count, or -1 once the running
step counter would exceed ``cap``.  Callers (mpart.kernels) only route
inputs here when every intermediate value fits in 64-bit arithmetic.
"""


cdef long long _nb(long long m, long long* alpha, int t, long long bound,
                   long long cap, long long* steps) noexcept:
    cdef long long total = 0, k, sub, count
    if t == 1:
        count = bound + 1
        steps[0] += count
        if steps[0] > cap:
            return -1
        return count
    for k in range(bound + 1):
        sub = _nb(m, alpha, t - 1, alpha[t - 1] + m * k, cap, steps)
        if sub < 0:
            return -1
        total += sub
    return total


def nested_sum_b(m, alpha, cap):
    cdef long long c_alpha[64]
    cdef int j = len(alpha) - 1
    cdef long long steps = 0
    cdef int i
    if j == 0:
        return 1
    for i in range(j + 1):
        c_alpha[i] = alpha[i]
    return _nb(m, c_alpha, j, c_alpha[j], cap, &steps)


cdef long long _nc(long long m, long long* alpha, long long* chi, int t,
                   long long bound, long long cap, long long* steps) noexcept:
    cdef long long total = 0, k, sub, count
    cdef long long lo = chi[t]
    if bound < lo:
        return 0
    if t == 1:
        count = bound - lo + 1
        steps[0] += count
        if steps[0] > cap:
            return -1
        return count
    for k in range(lo, bound + 1):
        sub = _nc(m, alpha, chi, t - 1, alpha[t - 1] - 1 + m * k, cap, steps)
        if sub < 0:
            return -1
        total += sub
    return total


def nested_sum_c(m, alpha, chi, tops, cap):
    cdef long long c_alpha[64]
    cdef long long c_chi[64]
    cdef int j = len(alpha) - 1
    cdef long long steps = 0, total = 0, sub
    cdef int i, r
    for i in range(j + 1):
        c_alpha[i] = alpha[i]
    c_chi[0] = 0
    for i in range(j):
        c_chi[i + 1] = chi[i]
    for r in range(1, j + 1):
        sub = _nc(m, c_alpha, c_chi, r, tops[r - 1], cap, &steps)
        if sub < 0:
            return -1
        total += sub
    return total


cdef long long _wp(long long* powers, int t, long long rem,
                   long long cap, long long* steps) noexcept:
    cdef long long total = 0, lam, sub
    if t == 0:
        steps[0] += 1
        if steps[0] > cap:
            return -1
        return 1
    for lam in range(rem // powers[t], -1, -1):
        sub = _wp(powers, t - 1, rem - lam * powers[t], cap, steps)
        if sub < 0:
            return -1
        total += sub
    return total


def walk_partitions(m, n, cap):
    cdef long long powers[64]
    cdef long long c_m = m, c_n = n, steps = 0
    cdef int j = 0
    powers[0] = 1
    while powers[j] <= c_n // c_m:
        powers[j + 1] = powers[j] * c_m
        j += 1
    return _wp(powers, j, c_n, cap, &steps)


cdef long long _wg(long long m, long long* powers, long long* need, int t,
                   long long rem, bint started, long long cap,
                   long long* steps) noexcept:
    cdef long long total = 0, lam, sub
    if t == 0:
        if started and rem == 0:
            return 0
        steps[0] += 1
        if steps[0] > cap:
            return -1
        return 1
    for lam in range((rem - need[t]) // powers[t], 0, -1):
        sub = _wg(m, powers, need, t - 1, rem - lam * powers[t], True, cap, steps)
        if sub < 0:
            return -1
        total += sub
    if not started:
        sub = _wg(m, powers, need, t - 1, rem, False, cap, steps)
        if sub < 0:
            return -1
        total += sub
    return total


def walk_gapfree(m, n, cap):
    cdef long long powers[64]
    cdef long long need[64]
    cdef long long c_m = m, c_n = n, steps = 0
    cdef int j = 0, t
    powers[0] = 1
    while powers[j] <= c_n // c_m:
        powers[j + 1] = powers[j] * c_m
        j += 1
    for t in range(j + 1):
        need[t] = (powers[t] - 1) // (c_m - 1)
    return _wg(c_m, powers, need, j, c_n, False, cap, &steps)

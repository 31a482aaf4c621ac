# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled construction kernels. Same API and outputs as ``_pykernels``."""

from libc.stdint cimport int64_t, uint64_t
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.utility cimport pair
from cython.operator cimport dereference as deref

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef uint64_t MOD = (<uint64_t>1 << 61) - 1


cdef vector[int64_t] _load(seq) except *:
    cdef vector[int64_t] out
    out.reserve(len(seq))
    for c in seq:
        out.push_back(c)
    return out


cdef inline bint _less(const int64_t* s, Py_ssize_t a, Py_ssize_t la,
                       Py_ssize_t b, Py_ssize_t lb) noexcept nogil:
    cdef Py_ssize_t k = 0
    cdef Py_ssize_t m = la if la < lb else lb
    while k < m:
        if s[a + k] != s[b + k]:
            return s[a + k] < s[b + k]
        k += 1
    return la < lb


def lyndon_tree(seq):
    cdef vector[int64_t] s = _load(seq)
    cdef Py_ssize_t n = s.size()
    cdef vector[Py_ssize_t] start, length, left, right, stack
    cdef Py_ssize_t i, cur, top, node
    start.reserve(2 * n)
    length.reserve(2 * n)
    left.reserve(2 * n)
    right.reserve(2 * n)
    with nogil:
        i = n - 1
        while i >= 0:
            cur = start.size()
            start.push_back(i)
            length.push_back(1)
            left.push_back(-1)
            right.push_back(-1)
            while stack.size() > 0:
                top = stack.back()
                if not _less(s.data(), i, length[cur], start[top], length[top]):
                    break
                stack.pop_back()
                node = start.size()
                start.push_back(i)
                length.push_back(length[cur] + length[top])
                left.push_back(cur)
                right.push_back(top)
                cur = node
            stack.push_back(cur)
            i -= 1
    roots = [stack[k] for k in range(<Py_ssize_t>stack.size() - 1, -1, -1)]
    return list(start), list(length), list(left), list(right), roots


def lyndon_slp(seq):
    cdef vector[int64_t] s = _load(seq)
    cdef Py_ssize_t n = s.size()
    cdef vector[int64_t] left, right, chr_, length
    cdef vector[pair[Py_ssize_t, int64_t]] stack
    cdef unordered_map[int64_t, int64_t] terminals
    cdef unordered_map[uint64_t, int64_t] pairs
    cdef unordered_map[uint64_t, bint] memo
    cdef unordered_map[int64_t, int64_t].iterator tit
    cdef unordered_map[uint64_t, int64_t].iterator pit
    cdef unordered_map[uint64_t, bint].iterator mit
    cdef Py_ssize_t i, top_start
    cdef int64_t c, cur, top, var
    cdef uint64_t key
    cdef bint less
    left.push_back(0)
    right.push_back(0)
    chr_.push_back(-1)
    length.push_back(0)
    with nogil:
        i = n - 1
        while i >= 0:
            c = s[i]
            tit = terminals.find(c)
            if tit == terminals.end():
                cur = left.size()
                terminals[c] = cur
                left.push_back(0)
                right.push_back(0)
                chr_.push_back(c)
                length.push_back(1)
            else:
                cur = deref(tit).second
            while stack.size() > 0:
                top_start = stack.back().first
                top = stack.back().second
                if cur == top:
                    break
                key = (<uint64_t>cur << 32) | <uint64_t>top
                mit = memo.find(key)
                if mit == memo.end():
                    less = _less(s.data(), i, length[cur], top_start, length[top])
                    memo[key] = less
                else:
                    less = deref(mit).second
                if not less:
                    break
                stack.pop_back()
                pit = pairs.find(key)
                if pit == pairs.end():
                    var = left.size()
                    pairs[key] = var
                    left.push_back(cur)
                    right.push_back(top)
                    chr_.push_back(-1)
                    length.push_back(length[cur] + length[top])
                else:
                    var = deref(pit).second
                cur = var
            stack.push_back(pair[Py_ssize_t, int64_t](i, cur))
            i -= 1
    roots = [stack[k].second for k in range(<Py_ssize_t>stack.size() - 1, -1, -1)]
    return list(left), list(right), list(chr_), list(length), roots


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b) noexcept nogil:
    cdef u128 r = <u128>a * <u128>b
    cdef uint64_t lo = <uint64_t>(r & MOD)
    cdef uint64_t hi = <uint64_t>(r >> 61)
    cdef uint64_t x = lo + hi
    if x >= MOD:
        x -= MOD
    if x >= MOD:
        x -= MOD
    return x


def fingerprints(left, right, chars, length, base):
    cdef Py_ssize_t g = len(left)
    cdef vector[int64_t] l = _load(left)
    cdef vector[int64_t] r = _load(right)
    cdef vector[int64_t] ch = _load(chars)
    cdef vector[uint64_t] fp, pw
    cdef uint64_t b = base % MOD
    cdef Py_ssize_t x
    cdef uint64_t v
    fp.assign(g, 0)
    pw.assign(g, 1)
    with nogil:
        for x in range(1, g):
            if ch[x] >= 0:
                fp[x] = <uint64_t>ch[x] % MOD
                pw[x] = b
            else:
                v = _mulmod(fp[l[x]], pw[r[x]]) + fp[r[x]]
                if v >= MOD:
                    v -= MOD
                fp[x] = v
                pw[x] = _mulmod(pw[l[x]], pw[r[x]])
    return list(fp), list(pw)

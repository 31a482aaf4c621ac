"""Pure-Python construction kernels; fallback for :mod:`lyndex._ckernels`.

Both modules expose the same functions with identical outputs.
"""

MERSENNE_61 = (1 << 61) - 1


def _less(seq, a, la, b, lb):
    """seq[a:a+la] < seq[b:b+lb] lexicographically (proper prefix is smaller)."""
    k = 0
    m = la if la < lb else lb
    while k < m:
        x = seq[a + k]
        y = seq[b + k]
        if x != y:
            return x < y
        k += 1
    return la < lb


def lyndon_tree(seq):
    """Right-to-left stack construction of the Lyndon forest of ``seq``.

    Returns ``(start, length, left, right, roots)``: node arrays (0-based
    starts, ``-1`` for missing children) and the root ids of the stack from
    left to right. A Lyndon input yields exactly one root.
    """
    n = len(seq)
    start = []
    length = []
    left = []
    right = []
    stack = []
    for i in range(n - 1, -1, -1):
        cur = len(start)
        start.append(i)
        length.append(1)
        left.append(-1)
        right.append(-1)
        while stack:
            top = stack[-1]
            if not _less(seq, i, length[cur], start[top], length[top]):
                break
            stack.pop()
            node = len(start)
            start.append(i)
            length.append(length[cur] + length[top])
            left.append(cur)
            right.append(top)
            cur = node
        stack.append(cur)
    stack.reverse()
    return start, length, left, right, stack


def lyndon_slp(seq):
    """Online Lyndon SLP construction with a reverse dictionary.

    Variable ids are 1-based in creation order; slot 0 of every returned
    array is padding. Returns ``(left, right, char, length, roots)`` where
    ``char`` is ``-1`` for binary rules and ``left``/``right`` are ``0`` for
    terminal rules; ``roots`` lists the variables left on the stack.
    """
    left = [0]
    right = [0]
    char = [-1]
    length = [0]
    terminals = {}
    pairs = {}
    cmp_memo = {}
    # Stack entries: (start, variable).
    stack = []
    for i in range(len(seq) - 1, -1, -1):
        c = seq[i]
        cur = terminals.get(c)
        if cur is None:
            cur = len(left)
            terminals[c] = cur
            left.append(0)
            right.append(0)
            char.append(c)
            length.append(1)
        while stack:
            top_start, top = stack[-1]
            if cur == top:
                break
            key = (cur, top)
            less = cmp_memo.get(key)
            if less is None:
                less = _less(seq, i, length[cur], top_start, length[top])
                cmp_memo[key] = less
            if not less:
                break
            stack.pop()
            var = pairs.get(key)
            if var is None:
                var = len(left)
                pairs[key] = var
                left.append(cur)
                right.append(top)
                char.append(-1)
                length.append(length[cur] + length[top])
            cur = var
        stack.append((i, cur))
    roots = [v for _, v in reversed(stack)]
    return left, right, char, length, roots


def fingerprints(left, right, char, length, base):
    """Per-variable Karp-Rabin fingerprints and ``base ** length`` mod 2^61-1.

    Variables are processed in id order, which is topological.
    """
    g = len(left)
    fp = [0] * g
    pw = [1] * g
    mod = MERSENNE_61
    for x in range(1, g):
        c = char[x]
        if c >= 0:
            fp[x] = c % mod
            pw[x] = base % mod
        else:
            l = left[x]
            r = right[x]
            fp[x] = (fp[l] * pw[r] + fp[r]) % mod
            pw[x] = pw[l] * pw[r] % mod
    return fp, pw

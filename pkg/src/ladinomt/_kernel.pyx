# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled respelling engine; semantic twin of ladinomt._kernel_py.

The rule sweep is the hottest loop in the pipeline: it runs for every
out-of-vocabulary token and every conjugated form, millions of times during
corpus augmentation.
"""

CTX_NONE = 0
CTX_WORD_INITIAL = 1
CTX_WORD_FINAL = 2
CTX_BEFORE_AOU = 3
CTX_BEFORE_EI = 4
CTX_INTERVOCALIC = 5
CTX_STANDALONE = 6

MAX_SWEEPS = 32
MAX_WORD_LENGTH = 4096

cdef unicode _VOWELS = u"aeiouáéíóúü"
cdef unicode _VOWELS_AOU = u"aouáóú"
cdef unicode _VOWELS_EI = u"eiéí"


cdef inline bint _in_set(Py_UCS4 ch, unicode charset):
    cdef Py_ssize_t k
    for k in range(len(charset)):
        if charset[k] == ch:
            return True
    return False


cdef inline bint _context_ok(unicode word, Py_ssize_t start, Py_ssize_t end,
                             int ctx, Py_ssize_t n):
    if ctx == 0:
        return True
    if ctx == 1:
        return start == 0
    if ctx == 2:
        return end == n
    if ctx == 3:
        return end < n and _in_set(word[end], _VOWELS_AOU)
    if ctx == 4:
        return end < n and _in_set(word[end], _VOWELS_EI)
    if ctx == 5:
        return (start > 0 and end < n
                and _in_set(word[start - 1], _VOWELS)
                and _in_set(word[end], _VOWELS))
    if ctx == 6:
        return start == 0 and end == n
    raise ValueError(f"unknown context code: {ctx}")


cdef unicode _sweep(unicode word, unicode pattern, unicode replacement, int ctx):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t m = len(pattern)
    cdef Py_ssize_t i = 0, j
    cdef bint hit
    if m == 0 or m > n:
        return word
    chunks = []
    while i < n:
        hit = i + m <= n
        if hit:
            for j in range(m):
                if word[i + j] != pattern[j]:
                    hit = False
                    break
        if hit and _context_ok(word, i, i + m, ctx, n):
            chunks.append(replacement)
            i += m
        else:
            chunks.append(word[i])
            i += 1
    return u"".join(chunks)


def apply_rules(unicode word, list rules):
    """Apply compiled respelling rules to a single lowercase word."""
    cdef unicode pattern, replacement, swept
    cdef int ctx, sweeps
    for pattern, replacement, ctx in rules:
        for sweeps in range(32):  # MAX_SWEEPS
            if len(word) > 4096:  # MAX_WORD_LENGTH
                break
            swept = _sweep(word, pattern, replacement, ctx)
            if swept == word:
                break
            word = swept
    return word

"""Reference multiplication by literal word rewriting.

Elements are flattened into words over the letters y_i, x_i, concatenated,
and then normal-ordered by applying one adjacent swap at a time:

    x_i y_i -> y_i x_i + 1
    x_i y_j -> y_j x_i          (i != j)
    y_j y_i -> y_i y_j,  x_j x_i -> x_i x_j   (j > i)

Nothing here shares code with the closed-form product in ``homweyl.weyl``;
it exists so the fast product can be checked against it.
"""

from homweyl.weyl import WeylElement, YPoly, _same_n

# a letter is (kind, index) with kind 0 for y and 1 for x, so sorting a
# word letter-wise puts it in normal order
Y, X = 0, 1


def _to_words(p: WeylElement):
    words = {}
    for xexp, f in p.terms.items():
        xs = tuple((X, i) for i, e in enumerate(xexp) for _ in range(e))
        for yexp, c in f.terms.items():
            ys = tuple((Y, i) for i, e in enumerate(yexp) for _ in range(e))
            words[ys + xs] = words.get(ys + xs, 0) + c
    return words


def _first_violation(word):
    for pos in range(len(word) - 1):
        if word[pos] > word[pos + 1]:
            return pos
    return None


def _normal_order(words):
    done = {}
    pending = dict(words)
    while pending:
        word, c = pending.popitem()
        if not c:
            continue
        pos = _first_violation(word)
        if pos is None:
            done[word] = done.get(word, 0) + c
            continue
        a, b = word[pos], word[pos + 1]
        swapped = word[:pos] + (b, a) + word[pos + 2:]
        pending[swapped] = pending.get(swapped, 0) + c
        if a[0] == X and b[0] == Y and a[1] == b[1]:
            dropped = word[:pos] + word[pos + 2:]
            pending[dropped] = pending.get(dropped, 0) + c
    return done


def _from_words(n, words):
    terms = {}
    for word, c in words.items():
        if not c:
            continue
        yexp, xexp = [0] * n, [0] * n
        for kind, i in word:
            (yexp if kind == Y else xexp)[i] += 1
        slot = terms.setdefault(tuple(xexp), {})
        slot[tuple(yexp)] = slot.get(tuple(yexp), 0) + c
    return WeylElement(n, {x: YPoly(n, ys) for x, ys in terms.items()})


def mul_rewrite_oracle(a: WeylElement, b: WeylElement) -> WeylElement:
    n = _same_n(a, b)
    product = {}
    for wa, ca in _to_words(a).items():
        for wb, cb in _to_words(b).items():
            product[wa + wb] = product.get(wa + wb, 0) + ca * cb
    return _from_words(n, _normal_order(product))

import itertools

from biposet import Diamond, Rel


def diamond(n, pairs1, pairs2):
    return Diamond(Rel.from_pairs(n, pairs1), Rel.from_pairs(n, pairs2))


def reflexive(n, pairs1, pairs2):
    loops = [(i, i) for i in range(n)]
    return diamond(n, list(pairs1) + loops, list(pairs2) + loops)


def all_diamonds(n):
    """The complete diamond space at size n, reflexive or not."""
    codes = range(1 << (n * n))
    for c1, c2 in itertools.product(codes, codes):
        r1 = Rel(n, tuple((c1 >> (i * n)) & ((1 << n) - 1) for i in range(n)))
        r2 = Rel(n, tuple((c2 >> (i * n)) & ((1 << n) - 1) for i in range(n)))
        yield Diamond(r1, r2)


def all_reflexive_diamonds(n):
    mask = (1 << n) - 1
    rels = []
    for code in range(1 << (n * n)):
        rows = tuple((code >> (i * n)) & mask for i in range(n))
        if all((rows[i] >> i) & 1 for i in range(n)):
            rels.append(Rel(n, rows))
    for r1 in rels:
        for r2 in rels:
            yield Diamond(r1, r2)

#!/usr/bin/env python3
"""Regenerate the bundled OEIS b-file prefixes under fixtures/oeis/.

Each sequence is rebuilt from its published OEIS definition, independently of
the Rust crate. Sequences whose definition could not be reconstructed without
network access are not bundled; fetch them with `spinfib --online oeis check`.
"""
import pathlib

TERMS = 60
OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "oeis"


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def a000045():
    return 0, [fib(n) for n in range(TERMS + 40)]


def a000032():
    seq = [2, 1]
    while len(seq) < TERMS:
        seq.append(seq[-1] + seq[-2])
    return 0, seq


def a001629():
    # Fibonacci numbers convolved with themselves.
    return 0, [sum(fib(k) * fib(n - k) for k in range(n + 1)) for n in range(TERMS)]


def series(num, den, count):
    # Power series quotient of integer polynomials (den[0] == 1).
    out = []
    for n in range(count):
        acc = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc)
    return out


def mul(p, q):
    r = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            r[i + j] += x * y
    return r


FIB_DEN_SQ_ONE_MINUS_X = mul(mul([1, -1, -1], [1, -1, -1]), [1, -1])


def a002940():
    # Arrays of dumbbells: g.f. (1+x)/((1-x)(1-x-x^2)^2).
    return 0, series([1, 1], FIB_DEN_SQ_ONE_MINUS_X, TERMS)


def a006478():
    # g.f. x^2/((1-x)(1-x-x^2)^2); listed from its first nonzero term.
    return 2, series([1], FIB_DEN_SQ_ONE_MINUS_X, TERMS)


def a010049():
    # Second-order Fibonacci numbers: a(n) = a(n-1) + a(n-2) + F(n-2).
    seq = [0, 1]
    while len(seq) < TERMS:
        n = len(seq)
        seq.append(seq[-1] + seq[-2] + fib(n - 2))
    return 0, seq


def a014286():
    # a(n) = Sum_{j=1..n} j*F(j).
    return 0, [sum(j * fib(j) for j in range(1, n + 1)) for n in range(TERMS)]


def a178523():
    # Path length of the Fibonacci tree of order n.
    nodes = [1, 1]
    length = [0, 0]
    while len(length) < TERMS:
        n = len(length)
        nodes.append(nodes[n - 1] + nodes[n - 2] + 1)
        length.append(length[n - 1] + length[n - 2] + nodes[n - 1] + nodes[n - 2])
    return 0, length


SEQUENCES = {
    "A000032": a000032,
    "A000045": a000045,
    "A001629": a001629,
    "A002940": a002940,
    "A006478": a006478,
    "A010049": a010049,
    "A014286": a014286,
    "A178523": a178523,
}

if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for anum, gen in SEQUENCES.items():
        offset, terms = gen()
        lines = [f"# {anum} (regenerated from the sequence definition)"]
        lines += [f"{offset + i} {t}" for i, t in enumerate(terms)]
        (OUT / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")

"""Independent oracles for the test suite.

Everything here recomputes results from first principles with its own
arithmetic (plain ints, shift and xor), so a bug in the package cannot
hide inside the oracle that is supposed to catch it.
"""

import random


def o_mul(a: int, b: int) -> int:
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def o_divmod(f: int, g: int) -> tuple[int, int]:
    q = 0
    dg = g.bit_length() - 1
    while f and f.bit_length() - 1 >= dg:
        sh = f.bit_length() - 1 - dg
        q ^= 1 << sh
        f ^= g << sh
    return q, f


def o_irreducibles(max_deg: int) -> list[int]:
    """Sieve by marking every product of two nonconstant polynomials."""
    limit = 1 << (max_deg + 1)
    composite = set()
    for a in range(2, limit):
        da = a.bit_length() - 1
        if da > max_deg - 1:
            break
        for b in range(a, limit):
            if da + b.bit_length() - 1 > max_deg:
                break
            composite.add(o_mul(a, b))
    return [p for p in range(2, limit) if p not in composite]


IRR6 = o_irreducibles(6)


def oracle_distinct_count(bits: int) -> int:
    """Distinct irreducible factors by trial division; exact to degree 12.

    A leftover with no factor of degree <= 6 and degree <= 12 must itself
    be irreducible, which is the only fact the degree cap rests on.
    """
    if bits.bit_length() - 1 > 12:
        raise ValueError("oracle only exact up to degree 12")
    count = 0
    for q in IRR6:
        if o_divmod(bits, q)[1] == 0:
            count += 1
            while o_divmod(bits, q)[1] == 0:
                bits = o_divmod(bits, q)[0]
    if bits.bit_length() - 1 > 0:
        count += 1
    return count


def oracle_multiplicity_count(bits: int) -> int:
    if bits.bit_length() - 1 > 12:
        raise ValueError("oracle only exact up to degree 12")
    total = 0
    for q in IRR6:
        while o_divmod(bits, q)[1] == 0:
            total += 1
            bits = o_divmod(bits, q)[0]
    if bits.bit_length() - 1 > 0:
        total += 1
    return total


def oracle_trace(bits: int, i: int) -> int:
    """Tr(x^i) in F2[x]/f as the trace of the multiplication operator.

    Column j of the operator is x^(i+j) mod f; the trace sums the j-th
    coefficient of each column, mod 2.
    """
    n = bits.bit_length() - 1
    acc = 0
    for j in range(n):
        _, r = o_divmod(1 << (i + j), bits)
        acc ^= (r >> j) & 1
    return acc


def cofactor_det(rows) -> int:
    """Laplace expansion along the first row; exponential, fine to 6x6."""
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * head * cofactor_det(minor)
    return total


def random_bits(rng: random.Random, degree: int) -> int:
    """Uniform polynomial of the exact degree."""
    return (1 << degree) | rng.getrandbits(degree)


def o_derivative(bits: int) -> int:
    deriv = 0
    v, e = bits, 0
    while v:
        if (v & 1) and e % 2:
            deriv |= 1 << (e - 1)
        v >>= 1
        e += 1
    return deriv


def random_squarefree_bits(rng: random.Random, degree: int) -> int:
    """Rejection-sample a squarefree polynomial using oracle arithmetic."""
    while True:
        bits = random_bits(rng, degree)
        deriv = o_derivative(bits)
        if deriv == 0:
            continue
        a, b = bits, deriv
        while b:
            a, b = b, o_divmod(a, b)[1]
        if a == 1:
            return bits

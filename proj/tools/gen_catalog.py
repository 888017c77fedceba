#!/usr/bin/env python3
"""Generates the group catalog and character tables under data/.

Groups are emitted as permutation generators; groups without a small natural
action use the regular representation of an explicit element/multiplication
model.  Character tables: abelian duals come from the cyclic-factor structure,
dihedral/quaternion-type tables from the linear characters plus the regular
character, and the symmetric/alternating tables are the classical ones keyed
by cycle type.
"""

import itertools
import json
import math
import os
import sys
from fractions import Fraction

OUT = sys.argv[1] if len(sys.argv) > 1 else "data"


# ---------- permutation helpers ----------

def pmul(a, b):  # (a*b)(x) = a(b(x))
    return tuple(a[b[x]] for x in range(len(a)))


def pinv(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def close(degree, gens):
    ident = tuple(range(degree))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        for g in gens:
            n = pmul(g, elems[i])
            if n not in seen:
                seen.add(n)
                elems.append(n)
        i += 1
    return elems


def order_of(p):
    ident = tuple(range(len(p)))
    q, n = p, 1
    while q != ident:
        q = pmul(q, p)
        n += 1
    return n


def conj_classes(elems):
    index = {e: i for i, e in enumerate(elems)}
    cls_of = [-1] * len(elems)
    classes = []
    for s, e in enumerate(elems):
        if cls_of[s] != -1:
            continue
        cid = len(classes)
        todo = [e]
        cls_of[s] = cid
        members = [s]
        while todo:
            x = todo.pop()
            for g in elems:
                c = pmul(pmul(g, x), pinv(g))
                ci = index[c]
                if cls_of[ci] == -1:
                    cls_of[ci] = cid
                    members.append(ci)
                    todo.append(c)
        classes.append(sorted(members))
    return classes, cls_of


# ---------- abstract models realized by the regular representation ----------

def regular(elements, mul, gens):
    index = {e: i for i, e in enumerate(elements)}
    perms = []
    for g in gens:
        perms.append(tuple(index[mul(g, e)] for e in elements))
    return len(elements), perms


def cyclic(n):
    return n, [tuple(list(range(1, n)) + [0])] if n > 1 else (1, [])


def product_group(*factors):
    """Direct product of cyclic groups as disjoint cycles."""
    degree = sum(factors)
    gens = []
    off = 0
    for n in factors:
        img = list(range(degree))
        for k in range(n):
            img[off + k] = off + (k + 1) % n
        gens.append(tuple(img))
        off += n
    return degree, gens


def dihedral(n):
    """Symmetries of the n-gon, order 2n, on n points."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return n, [rot, ref]


def dicyclic(n):
    """<a,b | a^(2n)=1, b^2=a^n, bab^-1=a^-1>, order 4n (n=2: Q8, n=4: Q16)."""
    elements = [(k, j) for j in range(2) for k in range(2 * n)]

    def mul(x, y):
        (k1, j1), (k2, j2) = x, y
        if j1 == 0:
            return ((k1 + k2) % (2 * n), j2)
        if j2 == 0:
            return ((k1 - k2) % (2 * n), 1)
        return ((k1 - k2 + n) % (2 * n), 0)

    return regular(elements, mul, [(1, 0), (0, 1)])


def pauli16():
    """Central product C4 . D4: i^a X^b Z^c with ZX = i^2 XZ."""
    elements = [(a, b, c) for a in range(4) for b in range(2) for c in range(2)]

    def mul(x, y):
        (a1, b1, c1), (a2, b2, c2) = x, y
        return ((a1 + a2 + 2 * c1 * b2) % 4, (b1 + b2) % 2, (c1 + c2) % 2)

    return regular(elements, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def c4_semi_c4():
    """<a,b | a^4, b^4, bab^-1 = a^-1>."""
    elements = [(k, m) for k in range(4) for m in range(4)]

    def mul(x, y):
        (k1, m1), (k2, m2) = x, y
        sign = -1 if m1 % 2 else 1
        return ((k1 + sign * k2) % 4, (m1 + m2) % 4)

    return regular(elements, mul, [(1, 0), (0, 1)])


def c2c2_semi_c4():
    """(C2 x C2) : C4 with the generator of C4 swapping the two C2 factors."""
    elements = [(u, v, m) for u in range(2) for v in range(2) for m in range(4)]

    def mul(x, y):
        (u1, v1, m1), (u2, v2, m2) = x, y
        if m1 % 2:
            u2, v2 = v2, u2
        return ((u1 + u2) % 2, (v1 + v2) % 2, (m1 + m2) % 4)

    return regular(elements, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def symmetric(n):
    t = tuple([1, 0] + list(range(2, n)))
    c = tuple(list(range(1, n)) + [0])
    return n, [t, c]


def alternating(n):
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2 == 1:
        c = tuple(list(range(1, n)) + [0])
        return n, [three, c]
    c = tuple([0] + list(range(2, n)) + [1])  # (1 2 ... n-1), even for n even
    return n, [three, c]


def direct(g1, g2):
    d1, gen1 = g1
    d2, gen2 = g2
    degree = d1 + d2
    gens = []
    for g in gen1:
        gens.append(tuple(list(g) + list(range(d1, degree))))
    for g in gen2:
        gens.append(tuple(list(range(d1)) + [d1 + v for v in g]))
    return degree, gens


GROUPS = {
    "trivial": (1, []),
    "c2": cyclic(2), "c3": cyclic(3), "c4": cyclic(4), "c5": cyclic(5),
    "c6": cyclic(6), "c7": cyclic(7), "c8": cyclic(8), "c9": cyclic(9),
    "c10": cyclic(10), "c11": cyclic(11), "c12": cyclic(12), "c13": cyclic(13),
    "c14": cyclic(14), "c15": cyclic(15), "c16": cyclic(16),
    "c2xc2": product_group(2, 2),
    "c4xc2": product_group(4, 2),
    "c2xc2xc2": product_group(2, 2, 2),
    "c3xc3": product_group(3, 3),
    "c6xc2": product_group(6, 2),
    "c8xc2": product_group(8, 2),
    "c4xc4": product_group(4, 4),
    "c4xc2xc2": product_group(4, 2, 2),
    "c2xc2xc2xc2": product_group(2, 2, 2, 2),
    "s3": symmetric(3), "s4": symmetric(4), "s5": symmetric(5),
    "s6": symmetric(6), "s7": symmetric(7),
    "a4": alternating(4), "a5": alternating(5),
    "d4": dihedral(4), "d5": dihedral(5), "d6": dihedral(6),
    "d7": dihedral(7), "d8": dihedral(8),
    "q8": dicyclic(2), "dic3": dicyclic(3), "q16": dicyclic(4),
    "sd16": (8, [tuple((i + 1) % 8 for i in range(8)),
                 tuple(3 * i % 8 for i in range(8))]),
    "m4_2": (8, [tuple((i + 1) % 8 for i in range(8)),
                 tuple(5 * i % 8 for i in range(8))]),
    "d4xc2": direct(dihedral(4), cyclic(2)),
    "q8xc2": direct(dicyclic(2), cyclic(2)),
    "pauli16": pauli16(),
    "c4sc4": c4_semi_c4(),
    "c2c2sc4": c2c2_semi_c4(),
}

EXPECTED_ORDER = {
    "trivial": 1, "c2": 2, "c3": 3, "c4": 4, "c5": 5, "c6": 6, "c7": 7,
    "c8": 8, "c9": 9, "c10": 10, "c11": 11, "c12": 12, "c13": 13, "c14": 14,
    "c15": 15, "c16": 16, "c2xc2": 4, "c4xc2": 8, "c2xc2xc2": 8, "c3xc3": 9,
    "c6xc2": 12, "c8xc2": 16, "c4xc4": 16, "c4xc2xc2": 16, "c2xc2xc2xc2": 16,
    "s3": 6, "s4": 24, "s5": 120, "s6": 720, "s7": 5040, "a4": 12, "a5": 60,
    "d4": 8, "d5": 10, "d6": 12, "d7": 14, "d8": 16,
    "q8": 8, "dic3": 12, "q16": 16, "sd16": 16, "m4_2": 16,
    "d4xc2": 16, "q8xc2": 16, "pauli16": 16, "c4sc4": 16, "c2c2sc4": 16,
}

ORDER16 = ["c16", "c8xc2", "c4xc4", "c4xc2xc2", "c2xc2xc2xc2", "d8", "q16",
           "sd16", "m4_2", "d4xc2", "q8xc2", "pauli16", "c4sc4", "c2c2sc4"]


def derived_subgroup(degree, gens, elems):
    der = {tuple(range(degree))}
    todo = []
    for a in gens:
        for b in gens:
            c = pmul(pmul(a, b), pmul(pinv(a), pinv(b)))
            if c not in der:
                der.add(c)
                todo.append(c)
    while todo:
        x = todo.pop()
        for g in list(der):
            p = pmul(x, g)
            if p not in der:
                der.add(p)
                todo.append(p)
        for g in elems:
            c = pmul(pmul(g, x), pinv(g))
            if c not in der:
                der.add(c)
                todo.append(c)
    return der


def group_invariants(degree, gens):
    elems = close(degree, gens)
    classes, _ = conj_classes(elems)
    orders = sorted(order_of(e) for e in elems)
    centrals = sum(1 for c in classes if len(c) == 1)
    # order statistics of the abelianization distinguish the remaining pairs
    der = derived_subgroup(degree, gens, elems)
    coset_of = {}
    reps = []
    for e in elems:
        if e in coset_of:
            continue
        cid = len(reps)
        reps.append(e)
        for k in der:
            coset_of[pmul(e, k)] = cid

    def cmul(a, b):
        return coset_of[pmul(reps[a], reps[b])]

    ident = coset_of[tuple(range(degree))]
    ab_orders = []
    for c in range(len(reps)):
        n, acc = 1, c
        while acc != ident:
            acc = cmul(acc, c)
            n += 1
        ab_orders.append(n)
    return (len(elems), tuple(orders), len(classes), centrals, tuple(sorted(ab_orders)))


def write_groups():
    os.makedirs(f"{OUT}/groups", exist_ok=True)
    for name, (degree, gens) in sorted(GROUPS.items()):
        elems = close(degree, gens)
        assert len(elems) == EXPECTED_ORDER[name], (name, len(elems))
        doc = {
            "name": name,
            "degree": degree,
            "order": len(elems),
            "generators": [list(g) for g in gens],
        }
        with open(f"{OUT}/groups/{name}.json", "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
    # the fourteen groups of order 16 must be pairwise non-isomorphic
    invs = [group_invariants(*GROUPS[n]) for n in ORDER16]
    assert len(set(invs)) == len(ORDER16), "order-16 catalog has a duplicate"
    print(f"wrote {len(GROUPS)} groups")


# ---------- character tables ----------

def fmt_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_root(num, den):
    """e^(2 pi i num/den) as an exact string when real, else 12-digit floats."""
    num %= den
    if num * 2 % den == 0:
        return fmt_rational(1 if num == 0 else -1)
    ang = 2 * math.pi * num / den
    return {"re": round(math.cos(ang), 12), "im": round(math.sin(ang), 12)}


def abelian_table(name, factors, degree, gens):
    """Character table of a direct product of cyclic groups.

    The permutation generators must be the cyclic factor generators in order.
    """
    elems = close(degree, gens)
    index = {e: i for i, e in enumerate(elems)}
    ident = tuple(range(degree))

    # coordinates of every element in the factor basis
    coords = {ident: tuple([0] * len(factors))}
    frontier = [ident]
    while frontier:
        e = frontier.pop()
        for fi, g in enumerate(gens):
            n = pmul(g, e)
            if n not in coords:
                c = list(coords[e])
                c[fi] = (c[fi] + 1) % factors[fi]
                coords[n] = tuple(c)
                frontier.append(n)
    classes, _ = conj_classes(elems)
    assert all(len(c) == 1 for c in classes)

    chars = []
    for t in itertools.product(*[range(f) for f in factors]):
        values = []
        for c in classes:
            v = coords[elems[c[0]]]
            num = sum(t[i] * v[i] * (math.lcm(*factors) // factors[i])
                      for i in range(len(factors)))
            values.append(fmt_root(num, math.lcm(*factors)))
        chars.append(values)
    return {
        "group": {"degree": degree, "generators": [list(g) for g in gens]},
        "classes": [{"rep": list(elems[c[0]]), "size": len(c)} for c in classes],
        "characters": [
            {"label": f"chi{k}", "values": v} for k, v in enumerate(chars)
        ],
    }


def lin_plus_regular_table(name, degree, gens):
    """Tables for groups whose irreducibles are all linear except one."""
    elems = close(degree, gens)
    index = {e: i for i, e in enumerate(elems)}
    classes, cls_of = conj_classes(elems)

    # derived subgroup: normal closure of commutators
    der = {tuple(range(degree))}
    todo = []
    for a in gens:
        for b in gens:
            c = pmul(pmul(a, b), pmul(pinv(a), pinv(b)))
            if c not in der:
                der.add(c)
                todo.append(c)
    while todo:
        x = todo.pop()
        for g in list(der):
            for p in (pmul(x, g),):
                if p not in der:
                    der.add(p)
                    todo.append(p)
        for g in elems:
            c = pmul(pmul(g, x), pinv(g))
            if c not in der:
                der.add(c)
                todo.append(c)

    # cosets and the structure of the abelian quotient
    coset_of = {}
    reps = []
    for e in elems:
        if e in coset_of:
            continue
        cid = len(reps)
        reps.append(e)
        for k in der:
            coset_of[pmul(e, k)] = cid
    q = len(reps)

    def cmul(a, b):
        return coset_of[pmul(reps[a], reps[b])]

    # dual of the quotient by brute force: all homomorphisms into roots of unity
    exps = []
    for c in range(q):
        n, acc = 1, c
        while acc != coset_of[tuple(range(degree))]:
            acc = cmul(acc, c)
            n += 1
        exps.append(n)
    m = max(exps) if exps else 1  # exponent of the quotient
    linear = []
    for assignment in itertools.product(range(m), repeat=len(gens)):
        ok = True
        val = {}
        # propagate: value of every element from generator assignments
        frontier = [tuple(range(degree))]
        val[tuple(range(degree))] = 0
        while frontier and ok:
            e = frontier.pop()
            for gi, g in enumerate(gens):
                ng = pmul(g, e)
                v = (assignment[gi] + val[e]) % m
                if ng in val:
                    if val[ng] != v:
                        ok = False
                        break
                else:
                    val[ng] = v
                    frontier.append(ng)
        if ok and len(val) == len(elems):
            row = tuple(val[elems[c[0]]] for c in classes)
            if row not in [r for r, _ in linear]:
                linear.append((row, assignment))
    assert len(linear) == q, (name, len(linear), q)

    d2 = len(elems) - q
    d = int(round(math.sqrt(d2)))
    assert d * d == d2 and len(classes) == q + 1, name

    chars = []
    for row, _ in sorted(linear):
        chars.append([fmt_root(v, m) for v in row])
    # put the trivial character first
    chars.sort(key=lambda vals: vals != [fmt_rational(1)] * len(classes))
    big = []
    for ci, c in enumerate(classes):
        reg = len(elems) if elems[c[0]] == tuple(range(degree)) else 0
        s = 0
        for vals in chars:
            v = vals[ci]
            assert isinstance(v, str), (name, "needs exact linear characters")
            s += Fraction(v)
        big.append(fmt_rational(Fraction(reg - s, d)))
    chars.append(big)
    return {
        "group": {"degree": degree, "generators": [list(g) for g in gens]},
        "classes": [{"rep": list(elems[c[0]]), "size": len(c)} for c in classes],
        "characters": [
            {"label": f"chi{k}", "values": v} for k, v in enumerate(chars)
        ],
    }


def cycle_type(p):
    seen = [False] * len(p)
    t = []
    for s in range(len(p)):
        if seen[s]:
            continue
        n, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            n += 1
        t.append(n)
    return tuple(sorted(t, reverse=True))


# classical tables keyed by cycle type
SYM_TABLES = {
    "s3": {
        (1, 1, 1): [1, 1, 2],
        (2, 1): [1, -1, 0],
        (3,): [1, 1, -1],
    },
    "s4": {
        (1, 1, 1, 1): [1, 1, 2, 3, 3],
        (2, 1, 1): [1, -1, 0, 1, -1],
        (2, 2): [1, 1, 2, -1, -1],
        (3, 1): [1, 1, -1, 0, 0],
        (4,): [1, -1, 0, -1, 1],
    },
    "s5": {
        (1, 1, 1, 1, 1): [1, 1, 4, 4, 5, 5, 6],
        (2, 1, 1, 1): [1, -1, 2, -2, 1, -1, 0],
        (2, 2, 1): [1, 1, 0, 0, 1, 1, -2],
        (3, 1, 1): [1, 1, 1, 1, -1, -1, 0],
        (3, 2): [1, -1, -1, 1, 1, -1, 0],
        (4, 1): [1, -1, 0, 0, -1, 1, 0],
        (5,): [1, 1, -1, -1, 0, 0, 1],
    },
}
SYM_LABELS = {
    "s3": ["triv", "sgn", "std"],
    "s4": ["triv", "sgn", "part22", "std", "stdsgn"],
    "s5": ["triv", "sgn", "std", "stdsgn", "five_a", "five_b", "six"],
}


def symmetric_table(name, degree, gens):
    elems = close(degree, gens)
    classes, _ = conj_classes(elems)
    table = SYM_TABLES[name]
    chars = []
    for k in range(len(table[cycle_type(elems[0])])):
        vals = []
        for c in classes:
            vals.append(fmt_rational(table[cycle_type(elems[c[0]])][k]))
        chars.append(vals)
    return {
        "group": {"degree": degree, "generators": [list(g) for g in gens]},
        "classes": [{"rep": list(elems[c[0]]), "size": len(c)} for c in classes],
        "characters": [
            {"label": SYM_LABELS[name][k], "values": v} for k, v in enumerate(chars)
        ],
    }


def a4_table():
    degree, gens = GROUPS["a4"]
    elems = close(degree, gens)
    classes, _ = conj_classes(elems)
    assert len(classes) == 4
    # identify: identity, double transpositions, and the two 3-cycle classes
    def kind(c):
        p = elems[c[0]]
        t = cycle_type(p)
        if t == (1, 1, 1, 1):
            return "id"
        if t == (2, 2):
            return "dt"
        # the two 3-cycle classes are distinguished by containing (0 1 2) or not
        target = (1, 2, 0, 3)
        return "r1" if any(elems[i] == target for i in c) else "r2"

    w, w2 = fmt_root(1, 3), fmt_root(2, 3)
    rows = {
        "triv": {"id": "1", "dt": "1", "r1": "1", "r2": "1"},
        "omega": {"id": "1", "dt": "1", "r1": w, "r2": w2},
        "omegabar": {"id": "1", "dt": "1", "r1": w2, "r2": w},
        "std": {"id": "3", "dt": "-1", "r1": "0", "r2": "0"},
    }
    chars = []
    for label in ["triv", "omega", "omegabar", "std"]:
        chars.append({"label": label,
                      "values": [rows[label][kind(c)] for c in classes]})
    return {
        "group": {"degree": degree, "generators": [list(g) for g in gens]},
        "classes": [{"rep": list(elems[c[0]]), "size": len(c)} for c in classes],
        "characters": chars,
    }


ABELIAN_FACTORS = {
    "trivial": [], "c2": [2], "c3": [3], "c4": [4], "c5": [5], "c6": [6],
    "c7": [7], "c8": [8], "c9": [9], "c10": [10], "c11": [11], "c12": [12],
    "c13": [13], "c14": [14], "c15": [15], "c16": [16],
    "c2xc2": [2, 2], "c4xc2": [4, 2], "c2xc2xc2": [2, 2, 2], "c3xc3": [3, 3],
    "c6xc2": [6, 2], "c8xc2": [8, 2], "c4xc4": [4, 4], "c4xc2xc2": [4, 2, 2],
    "c2xc2xc2xc2": [2, 2, 2, 2],
}


def check_orthogonality(doc):
    classes = doc["classes"]
    order = sum(c["size"] for c in classes)

    def as_complex(v):
        if isinstance(v, str):
            return complex(Fraction(v))
        return complex(v["re"], v.get("im", 0.0))

    chars = [[as_complex(v) for v in ch["values"]] for ch in doc["characters"]]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            ip = sum(classes[c]["size"] * a[c] * b[c].conjugate()
                     for c in range(len(classes))) / order
            want = 1.0 if i == j else 0.0
            assert abs(ip - want) < 1e-9, (doc, i, j, ip)


def write_tables():
    os.makedirs(f"{OUT}/chartab", exist_ok=True)
    n = 0
    for name, factors in sorted(ABELIAN_FACTORS.items()):
        if name == "trivial":
            degree, gens = GROUPS[name]
            doc = {
                "group": {"degree": degree, "generators": []},
                "classes": [{"rep": [0], "size": 1}],
                "characters": [{"label": "chi0", "values": ["1"]}],
            }
        else:
            degree, gens = GROUPS[name]
            doc = abelian_table(name, factors, degree, gens)
        check_orthogonality(doc)
        with open(f"{OUT}/chartab/{name}.json", "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
        n += 1
    for name in ["d4", "q8"]:
        doc = lin_plus_regular_table(name, *GROUPS[name])
        check_orthogonality(doc)
        with open(f"{OUT}/chartab/{name}.json", "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
        n += 1
    for name in ["s3", "s4", "s5"]:
        doc = symmetric_table(name, *GROUPS[name])
        check_orthogonality(doc)
        with open(f"{OUT}/chartab/{name}.json", "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
        n += 1
    doc = a4_table()
    check_orthogonality(doc)
    with open(f"{OUT}/chartab/a4.json", "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    n += 1
    print(f"wrote {n} character tables")


def write_laws():
    os.makedirs(f"{OUT}/laws", exist_ok=True)
    jordan = {
        "elements": ["e", "z", "h"],
        "table": [
            {"left": "e", "right": "e", "out": ["e"]},
            {"left": "e", "right": "h", "out": ["h"]},
            {"left": "z", "right": "z", "out": ["z"]},
            {"left": "z", "right": "h", "out": ["h"]},
            {"left": "h", "right": "e", "out": ["h"]},
            {"left": "h", "right": "z", "out": ["h"]},
            {"left": "h", "right": "h", "out": ["e", "z"]},
        ],
    }
    ising = {
        "elements": ["e", "z", "q", "t"],
        "table": [
            {"left": "e", "right": "e", "out": ["e"]},
            {"left": "e", "right": "q", "out": ["q"]},
            {"left": "e", "right": "t", "out": ["t"]},
            {"left": "z", "right": "z", "out": ["z"]},
            {"left": "z", "right": "q", "out": ["q"]},
            {"left": "z", "right": "t", "out": ["t"]},
            {"left": "q", "right": "e", "out": ["q"]},
            {"left": "q", "right": "z", "out": ["q"]},
            {"left": "q", "right": "q", "out": ["e", "z"]},
            {"left": "q", "right": "t", "out": ["t"]},
            {"left": "t", "right": "e", "out": ["t"]},
            {"left": "t", "right": "z", "out": ["t"]},
            {"left": "t", "right": "q", "out": ["t"]},
            {"left": "t", "right": "t", "out": ["e", "z", "q"]},
        ],
    }
    z2 = {
        "elements": ["0", "1"],
        "table": [
            {"left": "0", "right": "0", "out": ["0"]},
            {"left": "0", "right": "1", "out": ["1"]},
            {"left": "1", "right": "0", "out": ["1"]},
            {"left": "1", "right": "1", "out": ["0"]},
        ],
    }
    for name, doc in [("jordan", jordan), ("ising", ising), ("z2", z2)]:
        with open(f"{OUT}/laws/{name}.json", "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
    # morphism file: the finest grading of the Jordan law
    morph = {"target": z2, "map": {"e": "0", "z": "0", "h": "1"}}
    os.makedirs(f"{OUT}/examples", exist_ok=True)
    with open(f"{OUT}/examples/jordan_to_z2.json", "w") as f:
        json.dump(morph, f, indent=1)
        f.write("\n")
    print("wrote laws")


if __name__ == "__main__":
    write_groups()
    write_tables()
    write_laws()

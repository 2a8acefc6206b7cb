#!/usr/bin/env python3
"""Regenerate the example corpus under data/examples."""

import argparse
import itertools
from pathlib import Path


def compose(a, b):
    return tuple(a[b[k]] for k in range(len(a)))


class Group:
    def __init__(self, name, elements):
        # elements: list of (name, permutation)
        self.name = name
        self.names = [n for n, _ in elements]
        self.perms = [p for _, p in elements]
        self.index = {p: k for k, p in enumerate(self.perms)}

    def mul(self, a, b):
        return self.names[self.index[compose(self.perms[self.names.index(a)], self.perms[self.names.index(b)])]]

    def inverse(self, a):
        p = self.perms[self.names.index(a)]
        inv = [0] * len(p)
        for k, v in enumerate(p):
            inv[v] = k
        return self.names[self.index[tuple(inv)]]

    def identity(self):
        return self.names[self.index[tuple(range(len(self.perms[0])))]]

    def text(self):
        lines = [f"group {self.name}", "elements " + " ".join(self.names), "table"]
        for a in self.names:
            lines.append(" ".join(self.mul(a, b) for b in self.names))
        return "\n".join(lines) + "\n"


def cyclic(n, name, names):
    gen = tuple((k + 1) % n for k in range(n))
    elems, p = [], tuple(range(n))
    for k in range(n):
        elems.append((names[k], p))
        p = compose(gen, p)
    return Group(name, elems)


def s3():
    e, c, t = (0, 1, 2), (1, 2, 0), (1, 0, 2)
    cc = compose(c, c)
    return Group("S3", [("e", e), ("c", c), ("cc", cc), ("t", t), ("ct", compose(c, t)), ("cct", compose(cc, t))])


def one_line(p):
    return "p" + "".join(str(v + 1) for v in p)


def s4():
    return Group("S4", [(one_line(p), p) for p in itertools.permutations(range(4))])


D4_NAMES = ["p1234", "p2341", "p3412", "p4123", "p3214", "p1432", "p2143", "p4321"]
C3_IN_S4 = ["p1234", "p2314", "p3124"]


def group_algebra(g, name, elements=None, comment=None):
    elements = elements or g.names
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines += [f"hopf {name}", "backend vec", f"dim {len(elements)}", "basis " + " ".join(elements)]
    for a in elements:
        for b in elements:
            ab = g.mul(a, b)
            assert ab in elements, "not a subgroup"
            lines.append(f"mul {a} {b} -> {ab} 1")
    lines.append(f"unit -> {g.identity()} 1")
    for a in elements:
        lines.append(f"comul {a} -> {a} {a} 1")
    for a in elements:
        lines.append(f"counit {a} -> 1")
    for a in elements:
        lines.append(f"antipode {a} -> {g.inverse(a)} 1")
    return "\n".join(lines) + "\n"


def sweedler():
    names = ["1", "g", "x", "gx"]

    def elem(a, b):
        return names[a + 2 * b]

    lines = ["# Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, x is (g,1)-primitive",
             "hopf H4", "backend vec", "dim 4", "basis 1 g x gx"]
    for i, j in itertools.product(range(4), repeat=2):
        a, b, c, d = i % 2, i // 2, j % 2, j // 2
        if b + d < 2:
            sign = -1 if (b * c) % 2 else 1
            lines.append(f"mul {names[i]} {names[j]} -> {elem((a + c) % 2, b + d)} {sign}")
    lines.append("unit -> 1 1")
    lines += ["comul 1 -> 1 1 1", "comul g -> g g 1",
              "comul x -> x 1 1", "comul x -> g x 1",
              "comul gx -> gx g 1", "comul gx -> 1 gx 1"]
    lines += ["counit 1 -> 1", "counit g -> 1"]
    lines += ["antipode 1 -> 1 1", "antipode g -> g 1", "antipode x -> gx -1", "antipode gx -> x 1"]
    return "\n".join(lines) + "\n"


def sweedler_c2():
    return ("# group-like part of H4\n"
            "hopf H4_C2\nbackend vec\ndim 2\nbasis 1 g\n"
            "mul 1 1 -> 1 1\nmul 1 g -> g 1\nmul g 1 -> g 1\nmul g g -> 1 1\n"
            "unit -> 1 1\ncomul 1 -> 1 1 1\ncomul g -> g g 1\n"
            "counit 1 -> 1\ncounit g -> 1\nantipode 1 -> 1 1\nantipode g -> g 1\n")


def exterior(name, backend_lines, extra):
    body = [f"hopf {name}"] + backend_lines + ["dim 2", "basis 1 x"] + extra
    body += ["mul 1 1 -> 1 1", "mul 1 x -> x 1", "mul x 1 -> x 1", "unit -> 1 1",
             "comul 1 -> 1 1 1", "comul x -> x 1 1", "comul x -> 1 x 1",
             "counit 1 -> 1", "antipode 1 -> 1 1", "antipode x -> x -1"]
    return "\n".join(body) + "\n"


def triangular():
    return ("# dual of the upper triangular 2x2 matrices\n"
            "coalgebra triangular\nbackend vec\ndim 3\nbasis e11 e12 e22\n"
            "comul e11 -> e11 e11 1\ncomul e12 -> e11 e12 1\ncomul e12 -> e12 e22 1\n"
            "comul e22 -> e22 e22 1\ncounit e11 -> 1\ncounit e22 -> 1\n")


def yd_regular(g):
    lines = [f"# regular Yetter-Drinfeld module over {g.name}: deg x = x, h.x = h x h^-1",
             f"object {g.name}_regular", f"backend yd {g.name}", f"dim {len(g.names)}",
             "basis " + " ".join(g.names)]
    for x in g.names:
        lines.append(f"grade {x} -> {x}")
    for h in g.names:
        if h == g.identity():
            continue
        for x in g.names:
            lines.append(f"action {h} {x} -> {g.mul(g.mul(h, x), g.inverse(h))} 1")
    return "\n".join(lines) + "\n"


def yd_c2_objects():
    sign = ("# YD(C2): an even line and a line of degree g where g acts by -1\n"
            "object C2_sign\nbackend yd C2\ndim 2\nbasis u v\n"
            "grade u -> e\ngrade v -> g\naction g v -> v -1\n")
    swap = ("# YD(C2): two lines of degree e swapped by g\n"
            "object C2_swap\nbackend yd C2\ndim 2\nbasis a b\n"
            "grade a -> e\ngrade b -> e\naction g a -> b 1\naction g b -> a 1\n")
    return sign, swap


def super_objects():
    return ("# a super vector space with one even and two odd basis vectors\n"
            "object super_mixed\nbackend super\ndim 3\nbasis p q r\n"
            "grade p -> even\ngrade q -> odd\ngrade r -> odd\n")


def identity_map(names):
    return "".join(f"map {n} -> {n} 1\n" for n in names)


def inclusion_map(names):
    return identity_map(names)


def factor_projection(g, transversal, sub):
    # g = k h with k in the transversal, h in sub; send g to h
    lines = []
    for x in g.names:
        hits = [(k, h) for k in transversal for h in sub if g.mul(k, h) == x]
        assert len(hits) == 1
        lines.append(f"map {x} -> {hits[0][1]} 1")
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "examples")
    args = parser.parse_args()
    out = args.out
    out.mkdir(parents=True, exist_ok=True)

    c2 = cyclic(2, "C2", ["e", "g"])
    c3 = cyclic(3, "C3", ["e", "c", "cc"])
    c4 = cyclic(4, "C4", ["e", "a", "aa", "aaa"])
    g3 = s3()
    g4 = s4()

    files = {}
    for g in (c2, c3, c4, g3, g4):
        files[f"{g.name}.grp"] = g.text()
        files[f"k{g.name}.alg"] = group_algebra(g, f"k{g.name}", comment=f"group algebra of {g.name}")
    files["kS3_C2.alg"] = group_algebra(g3, "kS3_C2", ["e", "t"], "the subgroup {e, t} of S3")
    files["kS3_C3.alg"] = group_algebra(g3, "kS3_C3", ["e", "c", "cc"], "the rotations of S3")
    files["kS4_D4.alg"] = group_algebra(g4, "kS4_D4", D4_NAMES, "dihedral subgroup of S4")
    files["kS4_C3.alg"] = group_algebra(g4, "kS4_C3", C3_IN_S4, "3-cycles fixing 4 in S4")

    files["H4.alg"] = sweedler()
    files["H4_C2.alg"] = sweedler_c2()
    files["lambda_super.alg"] = exterior("lambda_super", ["# exterior algebra on one odd primitive", "backend super"],
                                         ["grade 1 -> even", "grade x -> odd"])
    files["lambda_vec.alg"] = exterior("lambda_vec", ["# the same structure constants with the plain flip",
                                                      "backend vec"], [])
    files["lambda_yd.alg"] = exterior("lambda_yd", ["# exterior algebra in YD(C2)", "backend yd C2"],
                                      ["grade 1 -> e", "grade x -> g", "action g x -> x -1"])
    files["triangular.alg"] = triangular()
    files["S3_regular.obj"] = yd_regular(g3)
    files["C2_sign.obj"], files["C2_swap.obj"] = yd_c2_objects()
    files["super_mixed.obj"] = super_objects()

    files["H4_sigma.map"] = inclusion_map(["1", "g"])
    files["H4_pi.map"] = "map 1 -> 1 1\nmap g -> g 1\n"
    files["H4_id.map"] = identity_map(["1", "g", "x", "gx"])
    files["kS3_C2_sigma.map"] = inclusion_map(["e", "t"])
    files["kS3_C2_pi.map"] = factor_projection(g3, ["e", "c", "cc"], ["e", "t"])
    files["kS3_C3_sigma.map"] = inclusion_map(["e", "c", "cc"])
    files["kS3_C3_pi.map"] = factor_projection(g3, ["e", "t"], ["e", "c", "cc"])

    for name, text in sorted(files.items()):
        (out / name).write_text(text)
    print(f"wrote {len(files)} files to {out}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Independent cross-check of the ideal-theoretic fixture values frozen into
tests/gb_oracle_values.hpp. Uses sympy's Groebner bases and its agca module
(local orderings, syzygy modules). Run manually: python3 cas_oracle.py"""
from sympy import symbols, groebner, QQ, expand, gcd

x, y, z, t = symbols("x y z t")


def intersect(f_gens, g_gens, gens):
    aux = [t * f for f in f_gens] + [(1 - t) * g for g in g_gens]
    gb = groebner(aux, t, *gens, order="lex")
    return [p for p in gb.exprs if not p.has(t)]


def show(name, value):
    print(f"{name}: {value}")


show("gb(x^2, x*y+y^2) grevlex", groebner([x**2, x*y + y**2], x, y, order="grevlex").exprs)
show("gb(x)", groebner([x], x, y, order="grevlex").exprs)
show("(y-x) cap (y+x)", intersect([y - x], [y + x], [x, y]))
show("(x) cap (y)", intersect([x], [y], [x, y]))
show("(x) cap (x)", intersect([x], [x], [x, y]))
# quotient (I : f) = (I cap (f)) / f
for label, I, f in [("(xy):x", [x*y], x), ("(x):y", [x], y), ("(x^2):x", [x**2], x),
                    ("(y,x^2):x", [y, x**2], x), ("(x+x^2):x", [x + x**2], x)]:
    K = intersect(I, [f], [x, y])
    show(label, [expand(k / f) for k in K])
show("gcd(x^2-y^2, x-y)", gcd(x**2 - y**2, x - y))

# local ring Q[x,y]_(x,y) via a local ordering
L = QQ.old_poly_ring(x, y, order="ilex")
show("local: x in (x+x^2)", L.ideal(x + x**2).contains(x))
show("local: x in (y, x^2)", L.ideal(y, x**2).contains(x))
show("local: (x+x^2) == (x)", L.ideal(x + x**2) == L.ideal(x))
show("local: adj entry x in (y-x^2, y+x^2)", L.ideal(y - x**2, y + x**2).contains(x))

# syzygy modules
P = QQ.old_poly_ring(x, y, z)
show("syz of columns of [x y]", P.free_module(1).submodule([x], [y]).syzygy_module())
show("syz of columns of [[x,y,0],[0,0,z]]",
     P.free_module(2).submodule([x, 0], [y, 0], [0, z]).syzygy_module())
show("syz of columns of [[x,0],[0,y]]", P.free_module(2).submodule([x, 0], [0, y]).syzygy_module())
show("syz of columns of [[x,0,0],[0,y,z]]",
     P.free_module(2).submodule([x, 0], [0, y], [0, z]).syzygy_module())

# m^k containment
M = QQ.old_poly_ring(x, y)
J = M.ideal(x, y**2)
show("x^2,xy,y^2 in (x,y^2); y in (x,y^2)", [J.contains(m) for m in (x**2, x*y, y**2, y)])
show("x^4 in (xy)", M.ideal(x*y).contains(x**4))
